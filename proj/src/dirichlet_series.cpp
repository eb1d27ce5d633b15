#include "zetadyn/dirichlet_series.hpp"

#include "zetadyn/error.hpp"

#include <utility>

namespace zetadyn {

namespace {

void check_bounds(const DirichletSeries& a, const DirichletSeries& b)
{
    if (a.bound() != b.bound())
        throw Error("Dirichlet series bounds differ");
}

} // namespace

DirichletSeries::DirichletSeries(int bound)
{
    if (bound < 1)
        throw Error("Dirichlet bound must be positive");
    coeffs_.assign(static_cast<std::size_t>(bound), Rational(0));
}

DirichletSeries::DirichletSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw Error("Dirichlet bound must be positive");
}

DirichletSeries DirichletSeries::zeta(int bound, int shift)
{
    DirichletSeries z(bound);
    for (int n = 1; n <= bound; ++n)
        z.at(n) = rpow(Rational(n), shift);
    return z;
}

DirichletSeries DirichletSeries::identity(int bound)
{
    return term(bound, 1, Rational(1));
}

DirichletSeries DirichletSeries::term(int bound, long n, const Rational& c)
{
    if (n < 1)
        throw Error("Dirichlet term index must be positive");
    DirichletSeries t(bound);
    if (n <= bound)
        t.at(static_cast<int>(n)) = c;
    return t;
}

DirichletSeries DirichletSeries::dilate(int k) const
{
    if (k < 1)
        throw Error("dilation factor must be positive");
    DirichletSeries r(bound());
    for (int n = 1; n <= bound(); ++n) {
        long long p = 1;
        for (int i = 0; i < k && p <= bound(); ++i)
            p *= n;
        if (p > bound())
            break;
        r.at(static_cast<int>(p)) = (*this)(n);
    }
    return r;
}

DirichletSeries DirichletSeries::shift(int s) const
{
    DirichletSeries r(bound());
    for (int n = 1; n <= bound(); ++n)
        r.at(n) = (*this)(n) * rpow(Rational(n), -s);
    return r;
}

DirichletSeries& DirichletSeries::operator+=(const DirichletSeries& g)
{
    check_bounds(*this, g);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += g.coeffs_[i];
    return *this;
}

DirichletSeries& DirichletSeries::operator*=(const Rational& s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

DirichletSeries operator+(DirichletSeries f, const DirichletSeries& g)
{
    f += g;
    return f;
}

DirichletSeries operator*(const Rational& s, DirichletSeries f)
{
    f *= s;
    return f;
}

DirichletSeries dirichlet_convolve(const DirichletSeries& a, const DirichletSeries& b)
{
    check_bounds(a, b);
    const int N = a.bound();
    DirichletSeries c(N);
    for (int d = 1; d <= N; ++d) {
        if (a(d) == 0)
            continue;
        for (int e = 1; d * e <= N; ++e)
            c.at(d * e) += a(d) * b(e);
    }
    return c;
}

DirichletSeries dirichlet_divide(const DirichletSeries& a, const DirichletSeries& b)
{
    check_bounds(a, b);
    if (b(1) == 0)
        throw Error("non-invertible Dirichlet series");
    const int N = a.bound();
    // Accumulate q(d) b(e) into the running residual once q(d) is known.
    std::vector<Rational> residual = a.coeffs();
    DirichletSeries q(N);
    const Rational inv = 1 / b(1);
    for (int n = 1; n <= N; ++n) {
        q.at(n) = residual[static_cast<std::size_t>(n - 1)] * inv;
        if (q(n) == 0)
            continue;
        for (int e = 2; n * e <= N; ++e)
            residual[static_cast<std::size_t>(n * e - 1)] -= q(n) * b(e);
    }
    return q;
}

DirichletSeries dirichlet_shift_plus_one(const DirichletSeries& a)
{
    return a.shift(1);
}

DirichletSeries delta_coeffs(const DirichletSeries& a)
{
    if (a(1) != 1)
        throw Error("a(1) must equal 1");
    const int N = a.bound();
    std::vector<Rational> residual = a.coeffs();
    DirichletSeries b(N);
    for (int n = 1; n <= N; ++n) {
        b.at(n) = residual[static_cast<std::size_t>(n - 1)] / n;
        for (int e = 2; n * e <= N; ++e)
            residual[static_cast<std::size_t>(n * e - 1)] -= n * b(n);
    }
    return b;
}

DirichletSeries counts_from_delta(const DirichletSeries& b)
{
    const int N = b.bound();
    DirichletSeries a(N);
    for (int d = 1; d <= N; ++d)
        for (int e = 1; d * e <= N; ++e)
            a.at(d * e) += d * b(d);
    return a;
}

IntegralityCheck is_integer_series(const DirichletSeries& a)
{
    for (int n = 1; n <= a.bound(); ++n)
        if (!is_integer(a(n)))
            return {false, n};
    return {};
}

IntegralityCheck is_integer_series(const PowerSeries& f)
{
    for (int k = 0; k <= f.order(); ++k)
        if (!is_integer(f[k]))
            return {false, k};
    return {};
}

} // namespace zetadyn
