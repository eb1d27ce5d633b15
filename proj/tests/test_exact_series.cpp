#include "doctest.h"

#include "zetadyn/dirichlet_series.hpp"
#include "zetadyn/error.hpp"
#include "zetadyn/power_series.hpp"

#include <random>

using namespace zetadyn;

namespace {

PowerSeries series(std::initializer_list<Rational> c)
{
    return PowerSeries(static_cast<int>(c.size()) - 1, std::vector<Rational>(c));
}

DirichletSeries dseries(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return DirichletSeries(v);
}

PowerSeries random_series(std::mt19937& rng, int order, bool unit)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    PowerSeries f(order);
    for (int k = 1; k <= order; ++k)
        f[k] = make_rational(num(rng), den(rng));
    f[0] = unit ? 1 : 0;
    return f;
}

} // namespace

TEST_CASE("rationals")
{
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(rpow(make_rational(2, 3), -2) == make_rational(9, 4));
}

TEST_CASE("power series arithmetic")
{
    const int N = 6;
    const PowerSeries one_plus = PowerSeries(N, {1, 1});
    const PowerSeries one_minus = PowerSeries(N, {1, -1});
    CHECK(one_plus * one_minus == PowerSeries(N, {1, 0, -1}));
    const PowerSeries geo = PowerSeries::one(N) / one_minus;
    for (int k = 0; k <= N; ++k)
        CHECK(geo[k] == 1);
    CHECK_THROWS_WITH_AS(PowerSeries::one(N) / PowerSeries::monomial(N, 1, 1), "non-unit divisor", Error);
    // mixed orders truncate to the smaller one
    CHECK((PowerSeries(3, {1, 1}) * PowerSeries(8, {1, 1})).order() == 3);
}

TEST_CASE("exp and log")
{
    const int N = 7;
    CHECK(series_exp(PowerSeries(N)) == PowerSeries::one(N));
    CHECK(series_log(PowerSeries::one(N)) == PowerSeries(N));

    PowerSeries harmonic(N);
    for (int n = 1; n <= N; ++n)
        harmonic[n] = make_rational(1, n);
    PowerSeries geo(N);
    for (int n = 0; n <= N; ++n)
        geo[n] = 1;
    CHECK(series_exp(harmonic) == geo);
    CHECK(series_log(geo) == harmonic);

    PowerSeries z_over(4);
    for (int n = 1; n <= 4; ++n)
        z_over[n] = 1;
    CHECK(series_exp(z_over) == series({1, 1, make_rational(3, 2), make_rational(13, 6), make_rational(73, 24)}));

    const PowerSeries inv_sqrt = binom_factor_power(1, 2, make_rational(-1, 2), 6);
    CHECK(series_log(inv_sqrt) == series({0, 0, make_rational(1, 2), 0, make_rational(1, 4), 0, make_rational(1, 6)}));
    CHECK_THROWS_WITH_AS(series_exp(PowerSeries::one(3)), "exp requires zero constant term", Error);
    CHECK_THROWS_AS(series_log(PowerSeries(3)), Error);
}

TEST_CASE("binomial factors")
{
    CHECK(binom_factor_power(2, 1, -1, 3) == series({1, 2, 4, 8}));
    CHECK(binom_factor_power(1, 2, make_rational(-1, 2), 6)
          == series({1, 0, make_rational(1, 2), 0, make_rational(3, 8), 0, make_rational(5, 16)}));
    CHECK(binom_factor_power(1, 1, 1, 3) == series({1, -1, 0, 0}));
    CHECK(series_pow(binom_factor_power(1, 1, -1, 5), make_rational(1, 2)) == binom_factor_power(1, 1, make_rational(-1, 2), 5));
}

TEST_CASE("dinf closed form from the series suite")
{
    const int N = 7;
    PowerSeries z_over(N);
    for (int n = 1; n <= N; ++n)
        z_over[n] = 1;
    const PowerSeries s = binom_factor_power(1, 2, make_rational(-1, 2), N) * series_exp(z_over);
    CHECK(s == series({1, 1, 2, make_rational(8, 3), make_rational(25, 6), make_rational(169, 30), make_rational(361, 45),
                       make_rational(3364, 315)}));
}

TEST_CASE("Euler products and partition series")
{
    const int N = 6;
    std::vector<EulerFactor> ones, weighted;
    for (int n = 1; n <= N; ++n) {
        ones.push_back({1, n, 1});
        weighted.push_back({Rational(1 << n), n, 1});
    }
    CHECK(euler_product(ones, N) == series({1, 1, 2, 3, 5, 7, 11}));
    CHECK(euler_product(weighted, 4) == series({1, 2, 8, 24, 80}));
    const std::vector<EulerFactor> single{{2, 1, 1}};
    CHECK(euler_product(single, 4) == binom_factor_power(2, 1, -1, 4));

    CHECK(partition_series(PartitionKind::P, {}, {1, 1}, 4) == series({1, 1, 2, 3, 5}));
    CHECK(partition_series(PartitionKind::Q, {1, 0}, {1, 1}, 10) == partition_series(PartitionKind::P, {}, {1, 1}, 10));
    const PowerSeries q = partition_series(PartitionKind::Q, {2, 0}, {2, 2}, 4);
    CHECK(q[0] == 1);
    CHECK(q[1] == 0);
    CHECK(q[2] == 4);
    // (1 - 4z^2)^-1 (1 - 8z^4)^-1 contributes 16 + 8 at z^4
    CHECK(q[4] == 24);
    CHECK_THROWS_WITH_AS(partition_series(PartitionKind::Q, {1, -2}, {1, 1}, 4), "non-positive degree factor", Error);
    CHECK_THROWS_WITH_AS(partition_series(PartitionKind::P, {}, {1, 0}, 4), "non-positive degree factor", Error);
}

TEST_CASE("Dirichlet convolution and division")
{
    const int N = 6;
    const auto zeta = DirichletSeries::zeta(N);
    CHECK(dirichlet_convolve(zeta, zeta) == dseries({1, 2, 2, 3, 2, 4}));
    CHECK(dirichlet_convolve(zeta, DirichletSeries::identity(N)) == zeta);
    CHECK(dirichlet_convolve(zeta, DirichletSeries::zeta(N, 1))(4) == 7);
    CHECK(dirichlet_divide(zeta, zeta) == DirichletSeries::identity(N));
    CHECK(dirichlet_divide(DirichletSeries::identity(N), zeta) == dseries({1, -1, -1, 0, -1, 1}));
    const auto phi_ratio = dirichlet_divide(zeta, dirichlet_shift_plus_one(zeta));
    CHECK(phi_ratio(1) == 1);
    CHECK(phi_ratio(2) == make_rational(1, 2));
    CHECK(phi_ratio(3) == make_rational(2, 3));
    CHECK_THROWS_WITH_AS(dirichlet_divide(zeta, DirichletSeries(N)), "non-invertible Dirichlet series", Error);
}

TEST_CASE("Dirichlet shift")
{
    const int N = 6;
    const auto shifted = dirichlet_shift_plus_one(DirichletSeries::zeta(N));
    for (int n = 1; n <= N; ++n)
        CHECK(shifted(n) == make_rational(1, n));
    CHECK(dirichlet_shift_plus_one(DirichletSeries::identity(N)) == DirichletSeries::identity(N));
    CHECK(dirichlet_shift_plus_one(DirichletSeries::zeta(N, 1)) == DirichletSeries::zeta(N));
}

TEST_CASE("delta coefficients")
{
    CHECK(delta_coeffs(dseries({1, 3, 4, 7, 6, 12})) == dseries({1, 1, 1, 1, 1, 1}));
    const auto dinf = delta_coeffs(dseries({1, 3, 3, 5, 5, 7}));
    CHECK(dinf == DirichletSeries({1, 1, make_rational(2, 3), make_rational(1, 2), make_rational(4, 5), make_rational(1, 3)}));
    CHECK(delta_coeffs(dseries({1, 1, 4, 1, 1, 4})) == dseries({1, 0, 1, 0, 0, 0}));
    CHECK_THROWS_AS(delta_coeffs(dseries({2, 1})), Error);

    const auto check = is_integer_series(dinf);
    CHECK_FALSE(check.integral);
    CHECK(check.first_failure == 3);
    CHECK(is_integer_series(dseries({1, 3, 1, 3, 1, 3})).integral);
}

TEST_CASE("exp/log round trip on random series")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        const PowerSeries f = random_series(rng, 8, true);
        const PowerSeries g = random_series(rng, 8, false);
        CHECK(series_exp(series_log(f)) == f);
        CHECK(series_log(series_exp(g)) == g);
    }
}

TEST_CASE("Euler product logarithmic derivative is a Lambert series")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-4, 6);
    const int N = 12;
    for (int t = 0; t < 20; ++t) {
        std::vector<EulerFactor> f;
        std::vector<long> b(N + 1);
        for (int n = 1; n <= N; ++n) {
            b[n] = dist(rng);
            f.push_back({1, n, Rational(b[n])});
        }
        const PowerSeries lhs = series_z_derivative(series_log(euler_product(f, N)));
        PowerSeries rhs(N);
        for (int n = 1; n <= N; ++n)
            for (int k = n; k <= N; k += n)
                rhs[k] += n * b[n];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("delta round trip on random sequences")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dist(-5, 5);
    const int N = 30;
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> b(N);
        b[0] = 1;
        for (int n = 2; n <= N; ++n)
            b[n - 1] = make_rational(dist(rng), 1 + (n % 3));
        const DirichletSeries bs(b);
        const auto a = counts_from_delta(bs);
        CHECK(delta_coeffs(a) == bs);
        // a(n) = sum_{d|n} d b(d), i.e. a = zeta * (n b(n))
        CHECK(dirichlet_convolve(DirichletSeries::zeta(N), bs.shift(-1)) == a);
    }
}
