#include "doctest.h"

#include "zetadyn/actions.hpp"
#include "zetadyn/error.hpp"
#include "zetadyn/lattice.hpp"
#include "zetadyn/oracle.hpp"

#include <random>

using namespace zetadyn;

namespace {

long classical_mu(long n)
{
    long r = 1;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            r = -r;
        }
    return n > 1 ? -r : r;
}

SubgroupHandle zsub(long n) { return {GroupModel::z(), ZSubgroup{n}}; }
SubgroupHandle dihedral(long n, long k) { return {GroupModel::dinf(), DinfSubgroup{DinfSubgroup::Kind::dihedral, n, k}}; }

ActionModel dinf_torus()
{
    return ActionModel::toral(GroupModel::dinf(), {{"a", IntMatrix{{-2, 3}, {1, -2}}}, {"b", IntMatrix{{7, -12}, {4, -7}}}});
}

// Random non-negative orbit multiplicities, constant on conjugacy classes.
RationalTable random_orbits(const LatticeSlice& s, std::mt19937& rng)
{
    std::uniform_int_distribution<int> dist(0, 3);
    RationalTable O;
    for (const auto& cls : s.classes()) {
        const Rational v(dist(rng));
        for (auto i : cls)
            O[s.node(i)] = v;
    }
    return O;
}

} // namespace

TEST_CASE("slice sizes")
{
    const LatticeSlice z(GroupModel::z(), 6);
    CHECK(z.size() == 6);
    CHECK(z.leq(z.position(zsub(6)), z.position(zsub(3))));
    CHECK_FALSE(z.leq(z.position(zsub(6)), z.position(zsub(4))));
    CHECK(z.up_edges(z.position(zsub(6))).size() == 3);
    CHECK(LatticeSlice(GroupModel::dinf(), 6).size() == 24);
    CHECK(LatticeSlice(GroupModel::z_d(2), 4).size() == 15);
}

TEST_CASE("Moebius values")
{
    const LatticeSlice z(GroupModel::z(), 100);
    CHECK(z.moebius(zsub(6), zsub(6)) == 1);
    CHECK(z.moebius(zsub(6), zsub(1)) == 1);
    CHECK(z.moebius(zsub(4), zsub(1)) == 0);
    for (long n = 1; n <= 100; ++n)
        for (long m = 1; m <= n; ++m)
            if (n % m == 0)
                CHECK(z.moebius(zsub(n), zsub(m)) == classical_mu(n / m));
}

TEST_CASE("Moebius row sums vanish on random intervals")
{
    std::mt19937 rng(7);
    const std::vector<LatticeSlice> slices{LatticeSlice(GroupModel::z(), 36), LatticeSlice(GroupModel::dinf(), 16),
                                           LatticeSlice(GroupModel::z_d(2), 12), LatticeSlice(GroupModel::z_x_cyclic(3), 18),
                                           LatticeSlice(GroupModel::pm(), 12)};
    int tested = 0;
    while (tested < 1000) {
        const auto& s = slices[static_cast<std::size_t>(tested) % slices.size()];
        std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
        const std::size_t L = pick(rng);
        const auto& ups = s.up_edges(L);
        if (ups.empty())
            continue;
        const std::size_t K = ups[std::uniform_int_distribution<std::size_t>(0, ups.size() - 1)(rng)];
        long sum = 0;
        for (std::size_t M = 0; M < s.size(); ++M)
            if (s.leq(L, M) && s.leq(M, K))
                sum += s.moebius(L, M);
        CHECK(sum == 0);
        ++tested;
    }
}

TEST_CASE("orbit counts from fixed points")
{
    SUBCASE("full shift on Z")
    {
        const LatticeSlice s(GroupModel::z(), 4);
        const FixTable fix = fix_table(ActionModel::full_shift(GroupModel::z(), 2), 4);
        const auto O = orbit_counts_from_fix(s, fix);
        CHECK(O.at(zsub(1)) == 2);
        CHECK(O.at(zsub(2)) == 1);
        CHECK(O.at(zsub(3)) == 2);
        CHECK(O.at(zsub(4)) == 3);
        CHECK(pi_alpha(s, fix, 3) == 5);
        CHECK(pi_alpha(s, fix, 4) == 8);
    }
    SUBCASE("D_inf torus, against the grid oracle")
    {
        const ActionModel a = dinf_torus();
        const LatticeSlice s(a.group(), 6);
        const FixTable fix = fix_table(a, 6);
        const auto O = orbit_counts_from_fix(s, fix);
        CHECK(O.at(dihedral(1, 0)) == 2);
        // orbits through the 1/30 grid with stabilizer exactly <a^6,b>
        long with_L = 0;
        for (const auto& orbit : oracle::brute_toral_orbits(a, 30))
            for (const auto& st : orbit.stabilizers)
                with_L += st == dihedral(6, 0) ? 1 : 0;
        // each such orbit has a block of [L]/[N(L)] = 2 points with stabilizer L
        CHECK(O.at(dihedral(6, 0)) == with_L / 2);
        const auto F = fix_from_orbits(s, O);
        CHECK(F.at(dihedral(6, 0)) == fix.at(dihedral(6, 0)));
        CHECK(fix.at(dihedral(6, 0)) == 60);
    }
    SUBCASE("single orbit on G")
    {
        const LatticeSlice s(GroupModel::dinf(), 6);
        RationalTable O;
        for (const auto& L : s.nodes())
            O[L] = 0;
        O[dihedral(1, 0)] = 1;
        for (const auto& [L, F] : fix_from_orbits(s, O))
            CHECK(F == 1);
    }
    SUBCASE("three fixed points under Z")
    {
        const LatticeSlice s(GroupModel::z(), 3);
        RationalTable O{{zsub(1), 2}, {zsub(2), 0}, {zsub(3), 2}};
        CHECK(fix_from_orbits(s, O).at(zsub(3)) == 8);
    }
}

TEST_CASE("inconsistent data is rejected")
{
    const LatticeSlice s(GroupModel::z(), 4);
    FixTable fix{{zsub(1), 2}, {zsub(2), 3}, {zsub(3), 8}, {zsub(4), 16}};
    CHECK_THROWS_WITH_AS(orbit_counts_from_fix(s, fix), doctest::Contains("inconsistent fixed-point data"), Error);
    FixTable negative{{zsub(1), 5}, {zsub(2), 1}, {zsub(3), 5}, {zsub(4), 5}};
    CHECK_THROWS_AS(orbit_counts_from_fix(s, negative), Error);
}

TEST_CASE("inversion round trip on random orbit maps")
{
    std::mt19937 rng(19);
    const std::vector<GroupModel> groups{GroupModel::z(), GroupModel::dinf(), GroupModel::z_d(2), GroupModel::z_x_cyclic(3), GroupModel::pm()};
    for (const auto& g : groups) {
        const LatticeSlice s(g, 12);
        for (int t = 0; t < 10; ++t) {
            const RationalTable O = random_orbits(s, rng);
            const RationalTable F = fix_from_orbits(s, O);
            CHECK(orbit_counts_from_fix(s, F) == O);
        }
    }
}

TEST_CASE("pi against brute-force orbit enumeration")
{
    for (long A : {1L, 2L, 3L}) {
        const ActionModel a = ActionModel::full_shift(GroupModel::z(), A);
        const LatticeSlice s(a.group(), 12);
        const FixTable fix = fix_table(a, 12);
        const auto sizes = oracle::brute_orbit_sizes(a, 12);
        BigInt running = 0;
        for (long n = 1; n <= 12; ++n) {
            running += sizes.count(n) ? sizes.at(n) : BigInt(0);
            CHECK(pi_alpha(s, fix, n) == running);
        }
    }
    {
        const ActionModel a = ActionModel::projected_shift(GroupModel::z_x_cyclic(3), 2);
        const LatticeSlice s(a.group(), 12);
        const FixTable fix = fix_table(a, 12);
        const auto sizes = oracle::brute_orbit_sizes(a, 12);
        BigInt total = 0;
        for (const auto& [n, c] : sizes)
            total += c;
        CHECK(pi_alpha(s, fix, 12) == total);
    }
    for (const auto& [a, N] : {std::pair{dinf_torus(), 8L},
                               std::pair{ActionModel::toral(GroupModel::z(), {{"a", IntMatrix{{2, 1}, {1, 1}}}}), 12L}}) {
        const LatticeSlice s(a.group(), N);
        const FixTable fix = fix_table(a, N);
        const auto sizes = oracle::brute_orbit_sizes(a, N);
        BigInt running = 0;
        for (long n = 1; n <= N; ++n) {
            running += sizes.count(n) ? sizes.at(n) : BigInt(0);
            CHECK_MESSAGE(pi_alpha(s, fix, n) == running, a.description() << " N=" << n);
        }
    }
}

TEST_CASE("main term diagnostic")
{
    const LatticeSlice s(GroupModel::z(), 8);
    const FixTable fix = fix_table(ActionModel::full_shift(GroupModel::z(), 2), 8);
    const auto r = main_term_diagnostic(s, fix, 8);
    Rational main = 0;
    for (long n = 1; n <= 8; ++n)
        main += make_rational(BigInt(1) << n, n);
    CHECK(r.main_term == main);
    CHECK(r.error_term == Rational(r.pi) - main);
    CHECK(std::abs(r.ratio) < 1);
    CHECK(r.s_G == 8);
    CHECK(r.f_N == 256);
    CHECK(r.f_half == 16);

    const FixTable trivial = fix_table(ActionModel::full_shift(GroupModel::z(), 1), 4);
    const auto t = main_term_diagnostic(LatticeSlice(GroupModel::z(), 4), trivial, 4);
    CHECK(t.pi == 1);
    CHECK(t.main_term == 1 + make_rational(1, 2) + make_rational(1, 3) + make_rational(1, 4));
}
