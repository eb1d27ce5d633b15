#pragma once

#include "zetadyn/group_catalog.hpp"
#include "zetadyn/int_matrix.hpp"
#include "zetadyn/lattice.hpp"

#include <map>
#include <optional>
#include <string>

namespace zetadyn {

enum class ActionKind { full_shift, projected_shift, toral, pm_projected };

std::string kind_name(ActionKind k);

/// Number of points fixed by a subgroup; empty value means infinitely many.
struct FixCount {
    std::optional<BigInt> value;

    static FixCount infinite() { return {}; }
    bool finite() const noexcept { return value.has_value(); }
};

class ActionModel {
public:
    /// A-letter full shift on A^G; A = 1 is the trivial action on a point.
    static ActionModel full_shift(const GroupModel& g, long alphabet);
    /// G = Z x Z/p acting on A^Z through the projection onto Z.
    static ActionModel projected_shift(const GroupModel& g, long alphabet);
    /// Matrices keyed by generator name; relations of g are checked here.
    static ActionModel toral(const GroupModel& g, std::map<std::string, IntMatrix> matrices);
    /// pm acting on A^{Z^2} by a, b translations and c the reflection j -> -j.
    static ActionModel pm_projected(long alphabet);

    ActionKind kind() const noexcept { return kind_; }
    const GroupModel& group() const noexcept { return group_; }
    long alphabet() const noexcept { return alphabet_; }
    int dimension() const noexcept { return dimension_; }
    const std::map<std::string, IntMatrix>& representation() const noexcept { return matrices_; }
    /// Entropy as a multiple of log A; metadata only.
    const std::optional<Rational>& declared_entropy() const noexcept { return entropy_; }
    std::string description() const;

    FixCount fix(const SubgroupHandle& L) const;
    /// rho(g) for g in normal form over the group's generators (toral only).
    IntMatrix element_matrix(const GroupElement& g) const;

private:
    ActionModel(ActionKind k, GroupModel g, long alphabet) : kind_(k), group_(g), alphabet_(alphabet) {}

    ActionKind kind_;
    GroupModel group_;
    long alphabet_ = 1;
    int dimension_ = 0;
    std::map<std::string, IntMatrix> matrices_;
    std::vector<IntMatrix> gens_;
    std::vector<IntMatrix> inverses_;
    std::optional<Rational> entropy_;
};

FixCount full_shift_fix(const ActionModel& a, const SubgroupHandle& L);
FixCount projected_shift_fix(const ActionModel& a, const SubgroupHandle& L);
FixCount toral_fix(const ActionModel& a, const SubgroupHandle& L);
FixCount pm_projected_fix(const ActionModel& a, const SubgroupHandle& L);

/// F for every subgroup of index <= N. Throws "action not F-finite on slice"
/// naming the offending subgroups if any count is infinite.
FixTable fix_table(const ActionModel& a, long N, int jobs = 1);

} // namespace zetadyn
