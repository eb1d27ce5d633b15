#include "zetadyn/actions.hpp"

#include "zetadyn/error.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace zetadyn {

namespace {

void require_kind(const ActionModel& a, ActionKind k)
{
    if (a.kind() != k)
        throw Error("action is " + kind_name(a.kind()) + ", expected " + kind_name(k));
}

BigInt power(long base, long exponent)
{
    return ipow(BigInt(base), static_cast<unsigned long>(exponent));
}

void check_relation(bool ok, const std::string& relation)
{
    if (!ok)
        throw Error("toral representation violates " + relation);
}

void validate_relations(const GroupModel& g, const std::vector<IntMatrix>& m, const std::vector<IntMatrix>& inv)
{
    const int d = m.front().rows();
    const IntMatrix I = IntMatrix::identity(d);
    switch (g.family()) {
    case GroupFamily::z:
        break;
    case GroupFamily::z_d:
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                check_relation(m[i] * m[j] == m[j] * m[i], "commutativity");
        break;
    case GroupFamily::dinf:
        check_relation(m[1] * m[1] == I, "B^2 = I");
        check_relation(m[0] * m[1] == m[1] * inv[0], "AB = BA^-1");
        break;
    case GroupFamily::z_x_cyclic:
        check_relation(m[0] * m[1] == m[1] * m[0], "AB = BA");
        check_relation(m[1].pow(g.param()) == I, "B^p = I");
        break;
    case GroupFamily::pm:
        check_relation(m[0] * m[1] == m[1] * m[0], "AB = BA");
        check_relation(m[0] * m[2] == m[2] * m[0], "AC = CA");
        check_relation(m[2] * m[2] == I, "C^2 = I");
        check_relation(m[1] * m[2] == m[2] * inv[1], "BC = CB^-1");
        break;
    default:
        throw Error("toral actions need an enumerable group");
    }
}

} // namespace

std::string kind_name(ActionKind k)
{
    switch (k) {
    case ActionKind::full_shift: return "full_shift";
    case ActionKind::projected_shift: return "projected_shift";
    case ActionKind::toral: return "toral";
    case ActionKind::pm_projected: return "pm_projected";
    }
    return "?";
}

ActionModel ActionModel::full_shift(const GroupModel& g, long alphabet)
{
    if (alphabet < 1)
        throw Error("alphabet size must be positive");
    ActionModel a(ActionKind::full_shift, g, alphabet);
    a.entropy_ = Rational(1);
    return a;
}

ActionModel ActionModel::projected_shift(const GroupModel& g, long alphabet)
{
    if (alphabet < 1)
        throw Error("alphabet size must be positive");
    if (g.family() != GroupFamily::z_x_cyclic)
        throw Error("projected shift is implemented for z_x_cyclic:p only");
    ActionModel a(ActionKind::projected_shift, g, alphabet);
    a.entropy_ = make_rational(1, g.param());
    return a;
}

ActionModel ActionModel::pm_projected(long alphabet)
{
    if (alphabet < 1)
        throw Error("alphabet size must be positive");
    return {ActionKind::pm_projected, GroupModel::pm(), alphabet};
}

ActionModel ActionModel::toral(const GroupModel& g, std::map<std::string, IntMatrix> matrices)
{
    ActionModel a(ActionKind::toral, g, 1);
    const auto names = g.generators();
    if (names.empty())
        throw Error("toral actions need an enumerable group");
    for (const auto& [name, mat] : matrices)
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw Error("no generator named '" + name + "' in " + g.name());
    for (const auto& name : names) {
        const auto it = matrices.find(name);
        if (it == matrices.end())
            throw Error("missing matrix for generator '" + name + "'");
        const IntMatrix& m = it->second;
        if (!m.square() || m.rows() == 0)
            throw Error("matrix for '" + name + "' must be square");
        if (a.dimension_ == 0)
            a.dimension_ = m.rows();
        if (m.rows() != a.dimension_)
            throw Error("matrices differ in dimension");
        const BigInt det = m.determinant();
        if (det != 1 && det != -1)
            throw Error("matrix for '" + name + "' is not invertible over the integers");
        a.gens_.push_back(m);
        a.inverses_.push_back(m.inverse());
    }
    validate_relations(g, a.gens_, a.inverses_);
    a.matrices_ = std::move(matrices);
    return a;
}

std::string ActionModel::description() const
{
    switch (kind_) {
    case ActionKind::full_shift: return "full shift of " + group_.name() + " on " + std::to_string(alphabet_) + " letters";
    case ActionKind::projected_shift: return "projected shift of " + group_.name() + " on " + std::to_string(alphabet_) + " letters";
    case ActionKind::toral: return "toral action of " + group_.name() + " on T^" + std::to_string(dimension_);
    case ActionKind::pm_projected: return "projected shift of pm on " + std::to_string(alphabet_) + " letters";
    }
    return "?";
}

IntMatrix ActionModel::element_matrix(const GroupElement& g) const
{
    require_kind(*this, ActionKind::toral);
    if (g.size() != gens_.size())
        throw Error("element has the wrong number of coordinates");
    IntMatrix r = IntMatrix::identity(dimension_);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0)
            continue;
        r = r * (g[i] > 0 ? gens_[i].pow(g[i]) : inverses_[i].pow(-g[i]));
    }
    return r;
}

FixCount ActionModel::fix(const SubgroupHandle& L) const
{
    if (L.group() != group_)
        throw Error("subgroup of " + L.group().name() + " used with an action of " + group_.name());
    switch (kind_) {
    case ActionKind::full_shift: return full_shift_fix(*this, L);
    case ActionKind::projected_shift: return projected_shift_fix(*this, L);
    case ActionKind::toral: return toral_fix(*this, L);
    case ActionKind::pm_projected: return pm_projected_fix(*this, L);
    }
    return FixCount::infinite();
}

FixCount full_shift_fix(const ActionModel& a, const SubgroupHandle& L)
{
    require_kind(a, ActionKind::full_shift);
    return {power(a.alphabet(), L.index())};
}

FixCount projected_shift_fix(const ActionModel& a, const SubgroupHandle& L)
{
    require_kind(a, ActionKind::projected_shift);
    // [Z : phi(L)] is the gcd of the Z-coordinates of L's generators.
    long step = 0;
    for (const auto& g : generator_elements(L))
        step = std::gcd(step, g[0]);
    return {power(a.alphabet(), step)};
}

FixCount toral_fix(const ActionModel& a, const SubgroupHandle& L)
{
    require_kind(a, ActionKind::toral);
    const IntMatrix I = IntMatrix::identity(a.dimension());
    std::vector<IntMatrix> blocks;
    for (const auto& g : generator_elements(L))
        blocks.push_back(a.element_matrix(g) - I);
    const auto inv = smith_invariants(stack_rows(blocks));
    if (static_cast<int>(inv.size()) < a.dimension())
        return FixCount::infinite();
    BigInt product = 1;
    for (const auto& d : inv)
        product *= d;
    return {product};
}

FixCount pm_projected_fix(const ActionModel& a, const SubgroupHandle& L)
{
    require_kind(a, ActionKind::pm_projected);
    const auto* s = std::get_if<PmSubgroup>(&L.data());
    if (!s)
        throw Error("pm_projected needs a pm subgroup");
    const long k = s->k, m = s->m;
    long e = 0;
    switch (s->family) {
    case PmFamily::pm1:
    case PmFamily::cm1: e = k * (m + 1); break;
    case PmFamily::pm2:
    case PmFamily::cm2:
    case PmFamily::pm3:
    case PmFamily::p1: e = k * m; break;
    case PmFamily::pg1:
    case PmFamily::pg2: e = 2 * k * m; break;
    case PmFamily::pg3: e = k * (2 * m - 1); break;
    }
    return {power(a.alphabet(), e)};
}

FixTable fix_table(const ActionModel& a, long N, int jobs)
{
    const auto nodes = subgroups_up_to_index(a.group(), N);
    std::vector<FixCount> values(nodes.size());
    const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1) {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            values[i] = a.fix(nodes[i]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < nodes.size(); i += workers)
                        values[i] = a.fix(nodes[i]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool)
            t.join();
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }
    FixTable table;
    std::string bad;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!values[i].finite())
            bad += " " + nodes[i].label();
        else
            table.emplace(nodes[i], *values[i].value);
    }
    if (!bad.empty())
        throw Error("action not F-finite on slice:" + bad);
    return table;
}

} // namespace zetadyn
