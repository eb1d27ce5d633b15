#pragma once

#include "zetadyn/power_series.hpp"
#include "zetadyn/rational.hpp"

#include <optional>
#include <vector>

namespace zetadyn {

/// Truncated Dirichlet series sum_{n=1}^{N} a(n) n^{-z}.
class DirichletSeries {
public:
    explicit DirichletSeries(int bound = 1);
    /// coeffs[0] is a(1).
    explicit DirichletSeries(std::vector<Rational> coeffs);

    /// zeta(z - shift), i.e. a(n) = n^shift.
    static DirichletSeries zeta(int bound, int shift = 0);
    /// The unit: a(1) = 1, all other coefficients zero.
    static DirichletSeries identity(int bound);
    /// c * n^{-z}.
    static DirichletSeries term(int bound, long n, const Rational& c);

    int bound() const noexcept { return static_cast<int>(coeffs_.size()); }
    const Rational& operator()(int n) const { return coeffs_.at(static_cast<std::size_t>(n - 1)); }
    Rational& at(int n) { return coeffs_.at(static_cast<std::size_t>(n - 1)); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// f(kz): a(n) moves to n^k.
    DirichletSeries dilate(int k) const;
    /// f(z + s): a(n) becomes a(n) n^{-s}; s may be negative.
    DirichletSeries shift(int s) const;

    DirichletSeries& operator+=(const DirichletSeries& g);
    DirichletSeries& operator*=(const Rational& s);

    friend bool operator==(const DirichletSeries& f, const DirichletSeries& g) { return f.coeffs_ == g.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

DirichletSeries operator+(DirichletSeries f, const DirichletSeries& g);
DirichletSeries operator*(const Rational& s, DirichletSeries f);

DirichletSeries dirichlet_convolve(const DirichletSeries& a, const DirichletSeries& b);
DirichletSeries dirichlet_divide(const DirichletSeries& a, const DirichletSeries& b);
/// z -> z + 1.
DirichletSeries dirichlet_shift_plus_one(const DirichletSeries& a);

/// b(n) with a(n) = sum_{d|n} d b(d); requires a(1) = 1.
DirichletSeries delta_coeffs(const DirichletSeries& a);
/// Inverse of delta_coeffs.
DirichletSeries counts_from_delta(const DirichletSeries& b);

struct IntegralityCheck {
    bool integral = true;
    /// n for Dirichlet series (1-based), the power of z for power series.
    std::optional<int> first_failure;
};

IntegralityCheck is_integer_series(const DirichletSeries& a);
IntegralityCheck is_integer_series(const PowerSeries& f);

} // namespace zetadyn
