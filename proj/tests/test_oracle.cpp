#include "doctest.h"

#include "verify.hpp"
#include "zetadyn/error.hpp"
#include "zetadyn/lattice.hpp"
#include "zetadyn/oracle.hpp"

#include <algorithm>
#include <set>

using namespace zetadyn;
using namespace zetadyn::oracle;

TEST_CASE("necklaces")
{
    CHECK(necklace_orbit_count(2, 1) == 2);
    CHECK(necklace_orbit_count(2, 4) == 3);
    CHECK(necklace_orbit_count(3, 6) == 116);
    for (long A : {1L, 2L, 3L}) {
        const LatticeSlice s(GroupModel::z(), 16);
        const auto O = orbit_counts_from_fix(s, fix_table(ActionModel::full_shift(GroupModel::z(), A), 16));
        for (long n = 1; n <= 16; ++n)
            CHECK(O.at(SubgroupHandle(GroupModel::z(), ZSubgroup{n})) == Rational(necklace_orbit_count(A, n)));
    }
}

TEST_CASE("sublattice enumeration")
{
    CHECK(hnf_sublattices(2, 2).size() == 3);
    CHECK(hnf_sublattices(1, 5).size() == 1);
    CHECK(hnf_sublattices(2, 4).size() == 7);
    CHECK(hnf_sublattices(3, 2).size() == 7);
    CHECK_THROWS_WITH_AS(hnf_sublattices(4, 2), doctest::Contains("oracle scale exceeded"), Error);
    CHECK(column_hnf(2, {{2, 0}, {1, 1}}) == std::vector<long>{2, 1, 0, 1});
}

TEST_CASE("pm window sampling")
{
    const GroupModel pm = GroupModel::pm();
    const SubgroupHandle whole(pm, PmSubgroup{PmFamily::pm3, 1, 1, 0});
    CHECK(*pm_quotient_sample(whole, 2, 4).value == 2);
    for (const auto& L : subgroups_up_to_index(pm, 8)) {
        const auto sample = pm_quotient_sample(L, 2, 64);
        CHECK_MESSAGE(sample.value == ActionModel::pm_projected(2).fix(L).value, L.label());
    }
    const SubgroupHandle big(pm, PmSubgroup{PmFamily::p1, 4, 4, 0});
    CHECK_THROWS_WITH_AS(pm_quotient_sample(big, 2, 8), doctest::Contains("increase depth"), Error);
}

TEST_CASE("toral grid orbits")
{
    const ActionModel a = cli::builtin_dinf_torus();
    const auto orbits = brute_toral_orbits(a, 30);
    std::size_t points = 0;
    for (const auto& o : orbits)
        points += o.points.size();
    CHECK(points == 900);

    const auto zero = std::find_if(orbits.begin(), orbits.end(), [](const OracleOrbit& o) {
        return o.points.front().to_string() == "0,0";
    });
    REQUIRE(zero != orbits.end());
    CHECK(zero->points.size() == 1);
    CHECK(zero->stabilizers.front() == SubgroupHandle(GroupModel::dinf(), DinfSubgroup{DinfSubgroup::Kind::dihedral, 1, 0}));

    // a listed orbit of size 6: the stabilizers form two conjugacy blocks
    std::set<std::string> six;
    for (const auto& o : orbits)
        for (const auto& p : o.points)
            if (p.to_string() == "1/15,29/30")
                for (const auto& q : o.points)
                    six.insert(q.to_string());
    CHECK(six.size() == 6);

    CHECK_THROWS_WITH_AS(brute_toral_orbits(a, 61), doctest::Contains("oracle scale exceeded"), Error);
}

TEST_CASE("brute orbit sizes")
{
    const auto z = brute_orbit_sizes(ActionModel::full_shift(GroupModel::z(), 2), 6);
    CHECK(z.at(1) == 2);
    CHECK(z.at(6) == 9);
    const auto proj = brute_orbit_sizes(ActionModel::projected_shift(GroupModel::z_x_cyclic(3), 2), 6);
    CHECK(proj.at(1) == 2);
    CHECK_THROWS_WITH_AS(brute_orbit_sizes(cli::builtin_zx3_torus(), 20, 1000), doctest::Contains("oracle scale exceeded"), Error);
}
