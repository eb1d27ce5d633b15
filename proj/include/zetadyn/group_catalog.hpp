#pragma once

#include "zetadyn/dirichlet_series.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace zetadyn {

enum class GroupFamily { z, z_d, dinf, z_x_cyclic, pm, pg, cm, heisenberg, z_x_d8, z_x_ut33, p2 };

class GroupModel {
public:
    /// Accepts "name" or "name:param", e.g. "z_d:3", "z_x_cyclic:5".
    static GroupModel parse(std::string_view text);

    static GroupModel z() { return {GroupFamily::z, 0}; }
    static GroupModel z_d(int d);
    static GroupModel dinf() { return {GroupFamily::dinf, 0}; }
    static GroupModel z_x_cyclic(int p);
    static GroupModel pm() { return {GroupFamily::pm, 0}; }
    static GroupModel pg() { return {GroupFamily::pg, 0}; }
    static GroupModel cm() { return {GroupFamily::cm, 0}; }
    static GroupModel heisenberg() { return {GroupFamily::heisenberg, 0}; }
    static GroupModel z_x_d8() { return {GroupFamily::z_x_d8, 0}; }
    static GroupModel z_x_ut33() { return {GroupFamily::z_x_ut33, 0}; }
    static GroupModel p2() { return {GroupFamily::p2, 0}; }

    GroupFamily family() const noexcept { return family_; }
    /// d for z_d, p for z_x_cyclic, otherwise 0.
    int param() const noexcept { return param_; }

    std::string name() const;
    int hirsch_length() const;
    bool enumerable() const;
    /// Generator names; group elements are written in the normal form
    /// g_1^{e_1} g_2^{e_2} ... over these generators.
    std::vector<std::string> generators() const;

    auto operator<=>(const GroupModel&) const = default;

private:
    GroupModel(GroupFamily f, int p) : family_(f), param_(p) {}

    GroupFamily family_ = GroupFamily::z;
    int param_ = 0;
};

/// Every accepted group name, for error messages.
std::vector<std::string> catalog_names();

struct ZSubgroup {
    long n = 1;
    auto operator<=>(const ZSubgroup&) const = default;
};

/// Column-style Hermite normal form, row-major: upper triangular, positive
/// diagonal, entries right of the diagonal reduced modulo the diagonal entry of their row.
struct ZdSubgroup {
    int d = 1;
    std::vector<long> hnf;
    long at(int r, int c) const { return hnf[static_cast<std::size_t>(r * d + c)]; }
    auto operator<=>(const ZdSubgroup&) const = default;
};

/// cyclic: <a^n> (k unused, 0); dihedral: <a^n, a^k b> with 0 <= k < n.
struct DinfSubgroup {
    enum class Kind { cyclic, dihedral };
    Kind kind = Kind::dihedral;
    long n = 1;
    long k = 0;
    auto operator<=>(const DinfSubgroup&) const = default;
};

/// split: L(n,k) = <(n,0), (kn/p,1)>, 0 <= k < p (k > 0 needs p | n);
/// diagonal: L(n) = <(n/p,0)> (needs p | n).
struct ZxCyclicSubgroup {
    enum class Kind { split, diagonal };
    Kind kind = Kind::split;
    long n = 1;
    long k = 0;
    auto operator<=>(const ZxCyclicSubgroup&) const = default;
};

enum class PmFamily { pm1, pm2, pm3, pg1, pg2, pg3, cm1, cm2, p1 };

/// A subgroup of pm = <a,b,c : [a,b]=[a,c]=c^2=1, bc=cb^-1> in one of the
/// nine conjugacy families. For p1, j in [0,k) is the lattice offset of
/// <a^k, a^j b^m>. For the other families j selects the member of the
/// conjugacy class (0 is the family representative), with 0 <= j < m, or
/// 0 <= j < 2m-1 for pm3 and pg3.
struct PmSubgroup {
    PmFamily family = PmFamily::pm1;
    long k = 1;
    long m = 1;
    long j = 0;
    auto operator<=>(const PmSubgroup&) const = default;
};

using SubgroupData = std::variant<ZSubgroup, ZdSubgroup, DinfSubgroup, ZxCyclicSubgroup, PmSubgroup>;

/// Canonical handle: two handles compare equal iff they name the same subgroup.
class SubgroupHandle {
public:
    /// Validates the parameters against the group.
    SubgroupHandle(GroupModel group, SubgroupData data);

    const GroupModel& group() const noexcept { return group_; }
    const SubgroupData& data() const noexcept { return data_; }
    long index() const noexcept { return index_; }

    /// Short label such as "dihedral(6,0)", "L(3,1)", "pm1(2,1;0)".
    std::string label() const;

    /// Orders by group, then index, then parameters.
    auto operator<=>(const SubgroupHandle&) const = default;

private:
    GroupModel group_;
    long index_ = 1;
    SubgroupData data_;
};

std::string family_name(PmFamily f);
PmFamily parse_pm_family(std::string_view name);

/// Isomorphism type of a subgroup. model is the catalog group realising it
/// (z_d:2 for the tag p1).
struct IsoClass {
    std::string tag;
    GroupModel model = GroupModel::z();
    auto operator<=>(const IsoClass&) const = default;
};

IsoClass iso_class_of_group(const GroupModel& g);

std::vector<SubgroupHandle> subgroups_of_index(const GroupModel& g, long n);
/// All subgroups of index <= bound, ordered by index.
std::vector<SubgroupHandle> subgroups_up_to_index(const GroupModel& g, long bound);
long subgroup_count(const GroupModel& g, long n);

/// b_G(1..bound) from the closed form only.
DirichletSeries delta_closed_form(const GroupModel& g, int bound);
/// b_G(1..bound); enumerable groups are cross-checked against enumeration.
DirichletSeries delta_series(const GroupModel& g, int bound);

long normalizer_index(const SubgroupHandle& L);
std::vector<SubgroupHandle> conjugacy_class(const SubgroupHandle& L);
/// Conjugate of L by the generator with the given position in generators().
SubgroupHandle conjugate_by_generator(const SubgroupHandle& L, int generator);
IsoClass iso_class(const SubgroupHandle& L);
bool contains(const SubgroupHandle& L, const SubgroupHandle& K);

/// Exponent vector over the group's generators, in normal form.
using GroupElement = std::vector<long>;

/// A generating set of L in normal form.
std::vector<GroupElement> generator_elements(const SubgroupHandle& L);
bool is_member(const SubgroupHandle& L, const GroupElement& g);

} // namespace zetadyn
