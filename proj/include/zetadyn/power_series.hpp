#pragma once

#include "zetadyn/rational.hpp"

#include <span>
#include <vector>

namespace zetadyn {

/// Truncated formal power series c_0 + c_1 z + ... + c_N z^N over Q.
/// The order N is inclusive; binary operations truncate to the smaller order.
class PowerSeries {
public:
    explicit PowerSeries(int order = 0);
    /// Shorter coefficient lists are zero-padded, longer ones truncated.
    PowerSeries(int order, std::vector<Rational> coeffs);

    static PowerSeries one(int order);
    static PowerSeries monomial(int order, const Rational& c, int degree);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    PowerSeries truncated(int order) const;
    /// f(z^m).
    PowerSeries substitute_power(int m) const;
    /// f(a z).
    PowerSeries scale_argument(const Rational& a) const;

    PowerSeries& operator+=(const PowerSeries& g);
    PowerSeries& operator-=(const PowerSeries& g);
    PowerSeries& operator*=(const Rational& s);

    friend bool operator==(const PowerSeries& f, const PowerSeries& g) { return f.coeffs_ == g.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

enum class SeriesOp { add, mul, div };

PowerSeries series_arith(const PowerSeries& f, const PowerSeries& g, SeriesOp op);

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator/(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator*(const Rational& s, PowerSeries f);

PowerSeries series_exp(const PowerSeries& f);
PowerSeries series_log(const PowerSeries& f);
/// f^e for f(0) = 1 and any rational e.
PowerSeries series_pow(const PowerSeries& f, const Rational& e);
/// z f'(z).
PowerSeries series_z_derivative(const PowerSeries& f);

/// (1 - c z^m)^e.
PowerSeries binom_factor_power(const Rational& c, int m, const Rational& e, int order);

/// One factor (1 - coeff z^degree)^(-exponent) of an Euler-type product.
struct EulerFactor {
    Rational coeff;
    int degree = 1;
    Rational exponent;
};

/// log of the product, i.e. sum of -exponent * log(1 - coeff z^degree).
PowerSeries euler_log(std::span<const EulerFactor> factors, int order);
PowerSeries euler_product(std::span<const EulerFactor> factors, int order);

/// scalar * z^degree, degree may be negative.
struct Monomial {
    Rational scalar{1};
    int degree = 0;
};

enum class PartitionKind { P, Q };

/// Q(w; arg) = prod_{n>=1} (1 - w arg^n)^(-1); for kind P the weight is ignored
/// and the result is P(arg) = Q(1; arg).
PowerSeries partition_series(PartitionKind kind, const Monomial& w, const Monomial& arg, int order);

} // namespace zetadyn
