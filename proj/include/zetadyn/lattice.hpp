#pragma once

#include "zetadyn/group_catalog.hpp"
#include "zetadyn/rational.hpp"

#include <map>
#include <vector>

namespace zetadyn {

using FixTable = std::map<SubgroupHandle, BigInt>;
using RationalTable = std::map<SubgroupHandle, Rational>;

/// All subgroups of index <= bound, with strict-supergroup edges, conjugacy
/// classes and the interval Moebius function. Immutable once built.
class LatticeSlice {
public:
    LatticeSlice(const GroupModel& g, long bound);

    const GroupModel& group() const noexcept { return group_; }
    long bound() const noexcept { return bound_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const std::vector<SubgroupHandle>& nodes() const noexcept { return nodes_; }
    const SubgroupHandle& node(std::size_t i) const { return nodes_.at(i); }
    /// Position of L in nodes(); throws if L is not in the slice.
    std::size_t position(const SubgroupHandle& L) const;

    /// Strict supergroups of node i, by decreasing index.
    const std::vector<std::size_t>& up_edges(std::size_t i) const { return up_.at(i); }
    bool leq(std::size_t L, std::size_t K) const;

    /// Conjugacy class id of node i, and the classes themselves.
    std::size_t class_of(std::size_t i) const { return class_of_.at(i); }
    const std::vector<std::vector<std::size_t>>& classes() const noexcept { return classes_; }
    long normalizer_index(std::size_t i) const { return static_cast<long>(classes_.at(class_of_.at(i)).size()); }

    long moebius(std::size_t L, std::size_t K) const;
    long moebius(const SubgroupHandle& L, const SubgroupHandle& K) const;
    /// (K, mu(L,K)) for every K >= L, starting with (L, 1).
    const std::vector<std::pair<std::size_t, long>>& moebius_row(std::size_t L) const { return mu_.at(L); }

private:
    GroupModel group_;
    long bound_;
    std::vector<SubgroupHandle> nodes_;
    std::map<SubgroupHandle, std::size_t> position_;
    std::vector<std::vector<std::size_t>> up_;
    std::vector<std::vector<std::size_t>> up_sorted_;
    std::vector<std::size_t> class_of_;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::vector<std::pair<std::size_t, long>>> mu_;
};

/// O(L) = ([N(L)]/[L]) sum_{K>=L} mu(L,K) F(K). With require_integral, a
/// negative or fractional value raises "inconsistent fixed-point data".
RationalTable orbit_counts_from_fix(const LatticeSlice& slice, const FixTable& fix, bool require_integral = true);
RationalTable orbit_counts_from_fix(const LatticeSlice& slice, const RationalTable& fix, bool require_integral = false);

/// F(L) = sum_{K>=L} ([K]/[N(K)]) O(K).
RationalTable fix_from_orbits(const LatticeSlice& slice, const RationalTable& orbits);

/// Number of orbits of size <= N (N defaults to the slice bound).
BigInt pi_alpha(const LatticeSlice& slice, const FixTable& fix, long N = 0);

struct MainTermReport {
    long N = 0;
    BigInt pi;
    Rational main_term;
    Rational error_term;
    double ratio = 0; ///< error_term / main_term
    BigInt f_N;       ///< max F(L) over [L] <= N
    BigInt f_half;    ///< max F(L) over [L] <= N/2
    long s_G = 0;     ///< number of subgroups of index <= N
    Rational m_G;     ///< max |mu(L,K)|/[L] over [L] <= N and K > L
};

MainTermReport main_term_diagnostic(const LatticeSlice& slice, const FixTable& fix, long N = 0);

} // namespace zetadyn
