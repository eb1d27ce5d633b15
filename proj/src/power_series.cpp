#include "zetadyn/power_series.hpp"

#include "zetadyn/error.hpp"

#include <algorithm>
#include <utility>

namespace zetadyn {

namespace {

void check_order(int order)
{
    if (order < 0)
        throw Error("negative truncation order");
}

// -log(1 - c z^m) = sum_k c^k z^{mk} / k, accumulated with weight b.
void add_log_factor(std::vector<Rational>& acc, const Rational& c, int m, const Rational& b)
{
    const int order = static_cast<int>(acc.size()) - 1;
    Rational power = c;
    for (int k = 1; static_cast<long>(m) * k <= order; ++k) {
        acc[static_cast<std::size_t>(m * k)] += b * power / k;
        power *= c;
    }
}

} // namespace

PowerSeries::PowerSeries(int order)
{
    check_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    check_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries PowerSeries::one(int order)
{
    PowerSeries f(order);
    f[0] = 1;
    return f;
}

PowerSeries PowerSeries::monomial(int order, const Rational& c, int degree)
{
    PowerSeries f(order);
    if (degree < 0)
        throw Error("negative monomial degree");
    if (degree <= order)
        f[degree] = c;
    return f;
}

PowerSeries PowerSeries::truncated(int order) const
{
    return PowerSeries(order, std::vector<Rational>(coeffs_.begin(),
                                                    coeffs_.begin() + std::min<std::ptrdiff_t>(order + 1, std::ssize(coeffs_))));
}

PowerSeries PowerSeries::substitute_power(int m) const
{
    if (m < 1)
        throw Error("substitution power must be positive");
    PowerSeries r(order());
    for (int k = 0; static_cast<long>(k) * m <= order(); ++k)
        r[k * m] = (*this)[k];
    return r;
}

PowerSeries PowerSeries::scale_argument(const Rational& a) const
{
    PowerSeries r(order());
    Rational power = 1;
    for (int k = 0; k <= order(); ++k) {
        r[k] = (*this)[k] * power;
        power *= a;
    }
    return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& g)
{
    return *this = *this + g;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& g)
{
    return *this = *this - g;
}

PowerSeries& PowerSeries::operator*=(const Rational& s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

PowerSeries series_arith(const PowerSeries& f, const PowerSeries& g, SeriesOp op)
{
    const int n = std::min(f.order(), g.order());
    PowerSeries r(n);
    switch (op) {
    case SeriesOp::add:
        for (int k = 0; k <= n; ++k)
            r[k] = f[k] + g[k];
        break;
    case SeriesOp::mul:
        for (int i = 0; i <= n; ++i) {
            if (f[i] == 0)
                continue;
            for (int j = 0; i + j <= n; ++j)
                r[i + j] += f[i] * g[j];
        }
        break;
    case SeriesOp::div: {
        if (g[0] == 0)
            throw Error("non-unit divisor");
        const Rational inv = 1 / g[0];
        for (int k = 0; k <= n; ++k) {
            Rational acc = f[k];
            for (int j = 1; j <= k; ++j)
                acc -= g[j] * r[k - j];
            r[k] = acc * inv;
        }
        break;
    }
    }
    return r;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) { return series_arith(f, g, SeriesOp::add); }
PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return series_arith(f, Rational(-1) * g, SeriesOp::add); }
PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) { return series_arith(f, g, SeriesOp::mul); }
PowerSeries operator/(const PowerSeries& f, const PowerSeries& g) { return series_arith(f, g, SeriesOp::div); }

PowerSeries operator*(const Rational& s, PowerSeries f)
{
    f *= s;
    return f;
}

PowerSeries series_exp(const PowerSeries& f)
{
    if (f[0] != 0)
        throw Error("exp requires zero constant term");
    const int n = f.order();
    PowerSeries g(n);
    g[0] = 1;
    // n g_n = sum_{k=1}^{n} k f_k g_{n-k}
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 1; k <= m; ++k)
            if (f[k] != 0)
                acc += k * f[k] * g[m - k];
        g[m] = acc / m;
    }
    return g;
}

PowerSeries series_log(const PowerSeries& f)
{
    if (f[0] != 1)
        throw Error("log requires constant term 1");
    const int n = f.order();
    PowerSeries h(n);
    // n h_n = n f_n - sum_{k=1}^{n-1} k h_k f_{n-k}
    for (int m = 1; m <= n; ++m) {
        Rational acc = m * f[m];
        for (int k = 1; k < m; ++k)
            if (f[m - k] != 0)
                acc -= k * h[k] * f[m - k];
        h[m] = acc / m;
    }
    return h;
}

PowerSeries series_pow(const PowerSeries& f, const Rational& e)
{
    return series_exp(e * series_log(f));
}

PowerSeries series_z_derivative(const PowerSeries& f)
{
    PowerSeries r(f.order());
    for (int k = 1; k <= f.order(); ++k)
        r[k] = k * f[k];
    return r;
}

PowerSeries binom_factor_power(const Rational& c, int m, const Rational& e, int order)
{
    if (m < 1)
        throw Error("factor degree must be positive");
    check_order(order);
    std::vector<Rational> acc(static_cast<std::size_t>(order) + 1, Rational(0));
    // log(1 - c z^m)^e = -e * sum c^k z^{mk}/k
    add_log_factor(acc, c, m, -e);
    return series_exp(PowerSeries(order, std::move(acc)));
}

PowerSeries euler_log(std::span<const EulerFactor> factors, int order)
{
    check_order(order);
    std::vector<Rational> acc(static_cast<std::size_t>(order) + 1, Rational(0));
    for (const auto& f : factors) {
        if (f.degree <= 0)
            throw Error("non-positive degree factor");
        if (f.degree > order || f.exponent == 0 || f.coeff == 0)
            continue;
        add_log_factor(acc, f.coeff, f.degree, f.exponent);
    }
    return PowerSeries(order, std::move(acc));
}

PowerSeries euler_product(std::span<const EulerFactor> factors, int order)
{
    return series_exp(euler_log(factors, order));
}

PowerSeries partition_series(PartitionKind kind, const Monomial& w, const Monomial& arg, int order)
{
    const Monomial weight = kind == PartitionKind::P ? Monomial{} : w;
    if (arg.degree < 1 || weight.degree + arg.degree < 1)
        throw Error("non-positive degree factor");
    std::vector<EulerFactor> factors;
    Rational scalar = weight.scalar * arg.scalar;
    for (int n = 1; weight.degree + static_cast<long>(n) * arg.degree <= order; ++n) {
        factors.push_back({scalar, weight.degree + n * arg.degree, Rational(1)});
        scalar *= arg.scalar;
    }
    return euler_product(factors, order);
}

} // namespace zetadyn
