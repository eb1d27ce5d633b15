#include "doctest.h"

#include "zetadyn/error.hpp"
#include "zetadyn/zeta.hpp"

#include <cmath>
#include <random>

using namespace zetadyn;

namespace {

PowerSeries series(std::initializer_list<Rational> c)
{
    return PowerSeries(static_cast<int>(c.size()) - 1, std::vector<Rational>(c));
}

PowerSeries P(int degree, int order) { return partition_series(PartitionKind::P, {}, {1, degree}, order); }

ActionModel dinf_torus()
{
    return ActionModel::toral(GroupModel::dinf(), {{"a", IntMatrix{{-2, 3}, {1, -2}}}, {"b", IntMatrix{{7, -12}, {4, -7}}}});
}

ActionModel zx3_torus()
{
    return ActionModel::toral(GroupModel::z_x_cyclic(3), {{"a", IntMatrix{{1, 2, 1, 0}, {-2, 3, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}},
                                                          {"b", IntMatrix{{0, -1, 0, 0}, {1, -1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, -1}}}});
}

void check_methods_agree(const LatticeSlice& s, const FixTable& fix, int order)
{
    const auto d = zeta_def(s, fix, order).series;
    CHECK(zeta_product_thm1(s, fix, order).series == d);
    CHECK(zeta_iso_class_product(s, fix, order).series == d);
}

} // namespace

TEST_CASE("definition on basic actions")
{
    CHECK(zeta_def(ActionModel::full_shift(GroupModel::z(), 2), 4).series == series({1, 2, 4, 8, 16}));
    const auto dinf = zeta_def(ActionModel::full_shift(GroupModel::dinf(), 1), 5);
    CHECK(dinf.series == series({1, 1, 2, make_rational(8, 3), make_rational(25, 6), make_rational(169, 30)}));
    CHECK_FALSE(dinf.integer_coefficients);
    CHECK(zeta_def(ActionModel::full_shift(GroupModel::pm(), 1), 12).series == P(1, 12) * P(2, 12) * P(2, 12));
}

TEST_CASE("orbit classes of the full shift on Z")
{
    const LatticeSlice s(GroupModel::z(), 4);
    const auto classes = orbit_classes(s, fix_table(ActionModel::full_shift(GroupModel::z(), 2), 4));
    std::vector<long> mult;
    for (const auto& c : classes)
        mult.push_back(c.multiplicity.get_si());
    CHECK(mult == std::vector<long>{2, 1, 2, 3});
    CHECK(zeta_product_thm1(ActionModel::full_shift(GroupModel::z(), 2), 4).series == series({1, 2, 4, 8, 16}));
}

TEST_CASE("product formulae on the torus examples")
{
    for (const auto& [a, N] : {std::pair{dinf_torus(), 10}, std::pair{zx3_torus(), 15}}) {
        const LatticeSlice s(a.group(), N);
        check_methods_agree(s, fix_table(a, N), N);
    }
}

TEST_CASE("Z x Z/3 torus zeta is the rational product")
{
    const int N = 24;
    const ActionModel a = zx3_torus();
    const IntMatrix& A = a.representation().at("a");
    const IntMatrix& B = a.representation().at("b");
    PowerSeries log_t(N);
    for (int j = 1; 3 * j <= N; ++j) {
        BigInt s = 0;
        for (int k = 1; k <= 3; ++k)
            s += abs((A.pow(j) - B.pow(k)).determinant());
        log_t[3 * j] = (make_rational(s, 3) - 2) / j;
    }
    const PowerSeries want = binom_factor_power(1, 1, -1, N) * binom_factor_power(1, 8, -1, N) * binom_factor_power(1, 3, -2, N)
                             * series_exp(log_t);
    CHECK(zeta_def(a, N).series == want);
    CHECK(series_exp(log_t)[3] == 7);
}

TEST_CASE("full shifts")
{
    CHECK(zeta_full_shift(GroupModel::z_d(2), 2, 4).series == series({1, 2, 8, 24, 80}));
    const auto zx = zeta_full_shift(GroupModel::z_x_cyclic(3), 2, 9).series;
    CHECK(zx == binom_factor_power(2, 1, -1, 9) * binom_factor_power(8, 3, -1, 9));
    CHECK(zeta_full_shift(GroupModel::cm(), 1, 14).series == P(1, 14) * P(4, 14));
}

TEST_CASE("Heisenberg full shift")
{
    // prod_{l,m,n} P(z^{l^2 m^2 n^3})^{m mu(n)}
    const int N = 12;
    const long mu[] = {0, 1, -1, -1};
    PowerSeries want = PowerSeries::one(N);
    for (int l = 1; l * l <= N; ++l)
        for (int m = 1; l * l * m * m <= N; ++m)
            for (int n = 1; n <= 3 && l * l * m * m * n * n * n <= N; ++n)
                if (mu[n] != 0)
                    want = want * series_pow(P(l * l * m * m * n * n * n, N), Rational(m * mu[n]));
    CHECK(zeta_full_shift(GroupModel::heisenberg(), 1, N).series == want);
}

TEST_CASE("trivial zeta of isomorphism types")
{
    const int N = 10;
    PowerSeries geo(N);
    for (int k = 1; k <= N; ++k)
        geo[k] = 1;
    const PowerSeries dinf = binom_factor_power(1, 2, make_rational(-1, 2), N) * series_exp(geo);
    CHECK(zeta_trivial(iso_class_of_group(GroupModel::dinf()), N) == dinf);
    CHECK(zeta_trivial(iso_class_of_group(GroupModel::z()), N) == binom_factor_power(1, 1, -1, N));
    CHECK(zeta_trivial(iso_class_of_group(GroupModel::pm()), N) == P(1, N) * P(2, N) * P(2, N));
    for (const auto& g : {GroupModel::pg(), GroupModel::cm(), GroupModel::z_d(2), GroupModel::z_x_cyclic(5), GroupModel::p2()})
        CHECK_MESSAGE(zeta_trivial(iso_class_of_group(g), N) == zeta_full_shift(g, 1, N).series, g.name());
}

TEST_CASE("method agreement on catalog actions")
{
    const int N = 20;
    const std::vector<ActionModel> actions{
        ActionModel::full_shift(GroupModel::z(), 2),        ActionModel::full_shift(GroupModel::dinf(), 2),
        ActionModel::full_shift(GroupModel::z_d(2), 1),     ActionModel::full_shift(GroupModel::z_x_cyclic(3), 2),
        ActionModel::full_shift(GroupModel::pm(), 2),       ActionModel::projected_shift(GroupModel::z_x_cyclic(3), 2),
        ActionModel::pm_projected(2),
    };
    for (const auto& a : actions) {
        const int order = a.group() == GroupModel::pm() || a.group() == GroupModel::z_d(2) ? 14 : N;
        const LatticeSlice s(a.group(), order);
        const FixTable fix = fix_table(a, order);
        check_methods_agree(s, fix, order);
        if (a.kind() == ActionKind::full_shift)
            CHECK(zeta_full_shift(a.group(), a.alphabet(), order).series == zeta_def(s, fix, order).series);
    }
}

TEST_CASE("method agreement on random consistent actions")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> mult(0, 2);
    const std::vector<GroupModel> groups{GroupModel::z(), GroupModel::dinf(), GroupModel::z_d(2), GroupModel::z_x_cyclic(3), GroupModel::pm()};
    std::vector<LatticeSlice> slices;
    for (const auto& g : groups)
        slices.emplace_back(g, 12);
    for (int t = 0; t < 200; ++t) {
        const LatticeSlice& s = slices[static_cast<std::size_t>(t) % slices.size()];
        const int N = 4 + t % 9;
        RationalTable O;
        for (const auto& cls : s.classes()) {
            const Rational v(mult(rng) * (rng() % 3 == 0 ? 1 : 0));
            for (auto i : cls)
                O[s.node(i)] = v;
        }
        FixTable fix;
        for (const auto& [L, F] : fix_from_orbits(s, O))
            fix[L] = F.get_num();
        check_methods_agree(s, fix, N);
    }
}

TEST_CASE("orbit-type product formulae")
{
    SUBCASE("pm: P(z^|Y|), extra P(z^{4|Y|}) for cm and P(z^{2|Y|})^2 for pm stabilizers")
    {
        const int N = 14;
        const ActionModel a = ActionModel::pm_projected(2);
        const LatticeSlice s(a.group(), N);
        const FixTable fix = fix_table(a, N);
        PowerSeries want = PowerSeries::one(N);
        for (const auto& oc : orbit_classes(s, fix)) {
            const int y = static_cast<int>(oc.orbit_size);
            PowerSeries f = P(y, N);
            if (oc.iso.tag == "cm")
                f = f * P(4 * y, N);
            if (oc.iso.tag == "pm")
                f = f * P(2 * y, N) * P(2 * y, N);
            want = want * series_pow(f, Rational(oc.multiplicity));
        }
        CHECK(zeta_def(s, fix, N).series == want);
    }
    SUBCASE("D_inf: dihedral and cyclic orbit factors")
    {
        const int N = 12;
        const ActionModel a = dinf_torus();
        const LatticeSlice s(a.group(), N);
        const FixTable fix = fix_table(a, N);
        PowerSeries want = PowerSeries::one(N);
        for (const auto& oc : orbit_classes(s, fix)) {
            const int y = static_cast<int>(oc.orbit_size);
            PowerSeries f(N);
            if (oc.iso.tag == "dinf") {
                PowerSeries g(N);
                for (int k = y; k <= N; k += y)
                    g[k] = 1;
                f = binom_factor_power(1, 2 * y, make_rational(-1, 2), N) * series_exp(g);
            } else {
                f = binom_factor_power(1, y, -1, N);
            }
            want = want * series_pow(f, Rational(oc.multiplicity));
        }
        CHECK(zeta_def(s, fix, N).series == want);
    }
    SUBCASE("one fixed point under Z")
    {
        const LatticeSlice s(GroupModel::z(), 6);
        FixTable fix;
        for (const auto& L : s.nodes())
            fix[L] = 1;
        CHECK(zeta_product_thm1(s, fix, 6).series == binom_factor_power(1, 1, -1, 6));
    }
}

TEST_CASE("conjugacy invariance of the assembled zeta")
{
    const ActionModel a = ActionModel::pm_projected(3);
    const LatticeSlice s(a.group(), 12);
    for (const auto& cls : s.classes())
        for (auto i : cls) {
            CHECK(iso_class(s.node(i)) == iso_class(s.node(cls.front())));
            CHECK(s.node(i).index() == s.node(cls.front()).index());
        }
    check_methods_agree(s, fix_table(a, 12), 12);
}

TEST_CASE("alphabet scaling")
{
    for (const auto& g : {GroupModel::z(), GroupModel::dinf(), GroupModel::pm(), GroupModel::pg(), GroupModel::cm(), GroupModel::z_d(3),
                          GroupModel::heisenberg(), GroupModel::z_x_d8(), GroupModel::z_x_ut33(), GroupModel::p2()})
        for (long A : {2L, 3L})
            CHECK_MESSAGE(zeta_full_shift(g, A, 14).series == zeta_full_shift(g, 1, 14).series.scale_argument(Rational(A)), g.name());
}

TEST_CASE("integer coefficients follow from integer Delta")
{
    for (const auto& g : {GroupModel::pm(), GroupModel::pg(), GroupModel::cm(), GroupModel::z_d(2), GroupModel::z_d(3), GroupModel::heisenberg(),
                          GroupModel::z_x_cyclic(2), GroupModel::z_x_cyclic(3), GroupModel::z_x_cyclic(5), GroupModel::z_x_d8(), GroupModel::z_x_ut33()}) {
        REQUIRE(is_integer_series(delta_series(g, 24)).integral);
        for (long A : {1L, 2L})
            CHECK_MESSAGE(zeta_full_shift(g, A, 24).integer_coefficients, g.name());
    }
}

TEST_CASE("growth estimates")
{
    const auto full = growth_estimate(ActionModel::full_shift(GroupModel::z(), 2), 20);
    CHECK(std::abs(full.estimate - std::log(2.0)) < 1e-12);
    const ActionModel p = ActionModel::projected_shift(GroupModel::z_x_cyclic(3), 2);
    const auto proj = growth_estimate(p, 30);
    CHECK(std::abs(proj.estimate - std::log(2.0)) < 1e-9);
    CHECK(*p.declared_entropy() == make_rational(1, 3));
    CHECK(growth_estimate(ActionModel::full_shift(GroupModel::dinf(), 1), 12).estimate == 0);
    const auto projected = zeta_def(p, 20).series;
    CHECK(projected == binom_factor_power(2, 1, -1, 20) * binom_factor_power(2, 3, -1, 20));
}

TEST_CASE("rational fit")
{
    const auto s = binom_factor_power(2, 1, -1, 12) * binom_factor_power(8, 3, -1, 12);
    const auto fit = rational_fit(s);
    REQUIRE(fit.success);
    CHECK(fit.factors == std::vector<RationalFactor>{{2, 1, -1}, {8, 3, -1}});
    CHECK(expand_factors(fit.factors, 12) == s);

    const auto one = rational_fit(PowerSeries::one(10));
    CHECK(one.success);
    CHECK(one.factors.empty());

    CHECK_FALSE(rational_fit(P(1, 24)).success);
    CHECK_FALSE(rational_fit(zeta_full_shift(GroupModel::dinf(), 1, 10).series).success);

    const auto d8 = rational_fit(zeta_full_shift(GroupModel::z_x_d8(), 3, 16).series);
    REQUIRE(d8.success);
    CHECK(d8.factors == std::vector<RationalFactor>{{3, 1, -1}, {9, 2, -3}, {81, 4, -3}, {6561, 8, -1}});
}

TEST_CASE("integrality report")
{
    const auto pm = integrality_report(GroupModel::pm(), 20);
    CHECK(pm.delta.integral);
    CHECK(pm.zeta.integral);
    const auto p2 = integrality_report(GroupModel::p2(), 20);
    CHECK_FALSE(p2.delta.integral);
    CHECK(p2.delta.first_failure == 3);
    CHECK(delta_series(GroupModel::p2(), 3)(3) == make_rational(11, 3));
    const auto dinf = integrality_report(GroupModel::dinf(), 20);
    CHECK_FALSE(dinf.delta.integral);
    CHECK(dinf.delta.first_failure == 3);
    CHECK_FALSE(dinf.zeta.integral);
}

TEST_CASE("method names")
{
    CHECK(parse_method("def") == ZetaMethod::definition);
    CHECK(parse_method("iso") == ZetaMethod::iso_class_product);
    CHECK_THROWS_AS(parse_method("bogus"), Error);
}
