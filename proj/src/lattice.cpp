#include "zetadyn/lattice.hpp"

#include "zetadyn/error.hpp"

#include <algorithm>

namespace zetadyn {

LatticeSlice::LatticeSlice(const GroupModel& g, long bound) : group_(g), bound_(bound)
{
    if (!g.enumerable())
        throw Error("enumeration unavailable; use delta_closed_form");
    if (bound < 1)
        throw Error("slice bound must be positive");
    nodes_ = subgroups_up_to_index(g, bound);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        position_.emplace(nodes_[i], i);

    const std::size_t n = nodes_.size();
    up_.resize(n);
    up_sorted_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        // nodes_ is sorted by index, so candidates come in increasing index order
        for (std::size_t j = 0; j < n; ++j) {
            if (nodes_[j].index() >= nodes_[i].index())
                break;
            if (contains(nodes_[i], nodes_[j]))
                up_[i].push_back(j);
        }
        std::reverse(up_[i].begin(), up_[i].end());
        up_sorted_[i] = up_[i];
        std::sort(up_sorted_[i].begin(), up_sorted_[i].end());
    }

    class_of_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (class_of_[i] != n)
            continue;
        std::vector<std::size_t> members;
        for (const auto& h : conjugacy_class(nodes_[i]))
            members.push_back(position(h));
        std::sort(members.begin(), members.end());
        for (auto m : members)
            class_of_[m] = classes_.size();
        classes_.push_back(std::move(members));
    }

    // mu(L,L) = 1, mu(L,K) = -sum_{L <= M < K} mu(L,M); up_ lists K nearest-first.
    mu_.resize(n);
    for (std::size_t L = 0; L < n; ++L) {
        auto& row = mu_[L];
        row.emplace_back(L, 1);
        for (std::size_t K : up_[L]) {
            long s = 0;
            for (const auto& [M, v] : row)
                if (leq(M, K))
                    s += v;
            row.emplace_back(K, -s);
        }
    }
}

std::size_t LatticeSlice::position(const SubgroupHandle& L) const
{
    const auto it = position_.find(L);
    if (it == position_.end())
        throw Error("subgroup " + L.label() + " is not in the slice");
    return it->second;
}

bool LatticeSlice::leq(std::size_t L, std::size_t K) const
{
    if (L == K)
        return true;
    const auto& ups = up_sorted_.at(L);
    return std::binary_search(ups.begin(), ups.end(), K);
}

long LatticeSlice::moebius(std::size_t L, std::size_t K) const
{
    for (const auto& [M, v] : mu_.at(L))
        if (M == K)
            return v;
    throw Error("moebius requires comparable subgroups L <= K");
}

long LatticeSlice::moebius(const SubgroupHandle& L, const SubgroupHandle& K) const
{
    return moebius(position(L), position(K));
}

namespace {

template <class Table>
Rational lookup(const LatticeSlice& slice, const Table& t, std::size_t i)
{
    const auto it = t.find(slice.node(i));
    if (it == t.end())
        throw Error("no value for subgroup " + slice.node(i).label());
    return Rational(it->second);
}

template <class Table>
RationalTable orbit_counts_impl(const LatticeSlice& slice, const Table& fix, bool require_integral)
{
    RationalTable out;
    for (std::size_t L = 0; L < slice.size(); ++L) {
        Rational s = 0;
        for (const auto& [K, mu] : slice.moebius_row(L))
            if (mu != 0)
                s += mu * lookup(slice, fix, K);
        s *= make_rational(slice.normalizer_index(L), slice.node(L).index());
        if (require_integral && (!is_integer(s) || s < 0))
            throw Error("inconsistent fixed-point data at " + slice.node(L).label() + ": O = " + to_string(s));
        out.emplace(slice.node(L), s);
    }
    return out;
}

} // namespace

RationalTable orbit_counts_from_fix(const LatticeSlice& slice, const FixTable& fix, bool require_integral)
{
    return orbit_counts_impl(slice, fix, require_integral);
}

RationalTable orbit_counts_from_fix(const LatticeSlice& slice, const RationalTable& fix, bool require_integral)
{
    return orbit_counts_impl(slice, fix, require_integral);
}

RationalTable fix_from_orbits(const LatticeSlice& slice, const RationalTable& orbits)
{
    RationalTable out;
    for (std::size_t L = 0; L < slice.size(); ++L) {
        Rational s = lookup(slice, orbits, L) * make_rational(slice.node(L).index(), slice.normalizer_index(L));
        for (std::size_t K : slice.up_edges(L)) {
            s += make_rational(slice.node(K).index(), slice.normalizer_index(K)) * lookup(slice, orbits, K);
        }
        out.emplace(slice.node(L), s);
    }
    return out;
}

BigInt pi_alpha(const LatticeSlice& slice, const FixTable& fix, long N)
{
    if (N <= 0)
        N = slice.bound();
    if (N > slice.bound())
        throw Error("orbit bound exceeds the slice bound");
    Rational total = 0;
    for (std::size_t L = 0; L < slice.size(); ++L) {
        if (slice.node(L).index() > N)
            break;
        Rational s = 0;
        for (const auto& [K, mu] : slice.moebius_row(L))
            if (mu != 0)
                s += mu * lookup(slice, fix, K);
        total += s / slice.node(L).index();
    }
    if (!is_integer(total) || total < 0)
        throw Error("inconsistent data: orbit count " + to_string(total));
    return total.get_num();
}

MainTermReport main_term_diagnostic(const LatticeSlice& slice, const FixTable& fix, long N)
{
    if (N <= 0)
        N = slice.bound();
    MainTermReport r;
    r.N = N;
    r.pi = pi_alpha(slice, fix, N);
    r.main_term = 0;
    r.m_G = 0;
    for (std::size_t L = 0; L < slice.size(); ++L) {
        const long idx = slice.node(L).index();
        if (idx > N)
            break;
        const Rational F = lookup(slice, fix, L);
        r.main_term += F / idx;
        ++r.s_G;
        if (F > r.f_N)
            r.f_N = F.get_num();
        if (2 * idx <= N && F > r.f_half)
            r.f_half = F.get_num();
        for (const auto& [K, mu] : slice.moebius_row(L)) {
            if (K == L)
                continue;
            const Rational v = make_rational(std::abs(mu), idx);
            if (v > r.m_G)
                r.m_G = v;
        }
    }
    r.error_term = Rational(r.pi) - r.main_term;
    r.ratio = r.main_term == 0 ? 0.0 : Rational(r.error_term / r.main_term).get_d();
    return r;
}

} // namespace zetadyn
