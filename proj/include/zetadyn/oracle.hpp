#pragma once

#include "zetadyn/actions.hpp"
#include "zetadyn/group_catalog.hpp"

#include <map>
#include <string>
#include <vector>

namespace zetadyn::oracle {

/// A point of the torus with coordinates num[i]/D taken mod 1.
struct TorusPoint {
    std::vector<long> num;
    long D = 1;

    Rational coordinate(std::size_t i) const { return make_rational(num[i], D); }
    /// "p/q,p/q,..." with each coordinate in lowest terms.
    std::string to_string() const;
    auto operator<=>(const TorusPoint&) const = default;
};

struct OracleOrbit {
    std::vector<TorusPoint> points;
    std::vector<SubgroupHandle> stabilizers; ///< one per point
    std::vector<std::size_t> block;          ///< block id within the orbit, one per point
};

/// Every orbit of the toral action on the (1/D)-grid of the torus, with the
/// stabilizer of each point identified among subgroups of matching index.
std::vector<OracleOrbit> brute_toral_orbits(const ActionModel& a, long D);

/// Orbits of size exactly n in the A-letter full shift on Z.
BigInt necklace_orbit_count(long A, long n);

/// Index-n sublattices of Z^d (d <= 3), by closure search over lattices
/// between n Z^d and Z^d.
std::vector<ZdSubgroup> hnf_sublattices(int d, long n);

/// Column-style Hermite form of the lattice spanned by full-rank columns.
std::vector<long> column_hnf(int d, std::vector<std::vector<long>> cols);

/// Fixed colourings of the pm projected shift for L, counted as A^(cycles)
/// of L's coset action on the finite window Z^2 / (L ∩ Z^2). depth bounds
/// the window size.
FixCount pm_quotient_sample(const SubgroupHandle& L, long A, long depth);

/// Number of orbits of each size <= N found by direct enumeration.
/// Supports full shifts of z, projected shifts, and toral actions whose
/// periodic sets stay below point_cap.
std::map<long, BigInt> brute_orbit_sizes(const ActionModel& a, long N, long point_cap = 400000);

} // namespace zetadyn::oracle
