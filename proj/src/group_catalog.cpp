#include "zetadyn/group_catalog.hpp"

#include "pm_geometry.hpp"
#include "zetadyn/error.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

namespace zetadyn {

namespace {

constexpr int kMaxClosedFormBound = 100000;
// Enumeration cross-check of delta_series stops here; beyond it the closed
// form alone is used (Z^3 and pm enumerations grow quickly).
constexpr int kEnumerationCheckBound = 64;

long floor_mod(long a, long n)
{
    const long r = a % n;
    return r < 0 ? r + n : r;
}

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

int parse_int(std::string_view text, std::string_view what)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error("malformed " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

void require_same_group(const SubgroupHandle& L, const SubgroupHandle& K)
{
    if (L.group() != K.group())
        throw Error("handles belong to different groups");
}

void require_enumerable(const GroupModel& g)
{
    if (!g.enumerable())
        throw Error("enumeration unavailable; use delta_closed_form");
}

long checked_index(const GroupModel& g, const SubgroupData& data)
{
    switch (g.family()) {
    case GroupFamily::z: {
        const auto* s = std::get_if<ZSubgroup>(&data);
        if (!s)
            break;
        if (s->n < 1)
            throw Error("subgroup index must be positive");
        return s->n;
    }
    case GroupFamily::z_d: {
        const auto* s = std::get_if<ZdSubgroup>(&data);
        if (!s)
            break;
        const int d = g.param();
        if (s->d != d || s->hnf.size() != static_cast<std::size_t>(d * d))
            throw Error("HNF has the wrong dimension");
        long idx = 1;
        for (int r = 0; r < d; ++r) {
            const long diag = s->at(r, r);
            if (diag < 1)
                throw Error("HNF diagonal must be positive");
            idx *= diag;
            for (int c = 0; c < d; ++c) {
                const long v = s->at(r, c);
                if (c < r && v != 0)
                    throw Error("HNF must be upper triangular");
                if (c > r && (v < 0 || v >= diag))
                    throw Error("HNF off-diagonal entry not reduced");
            }
        }
        return idx;
    }
    case GroupFamily::dinf: {
        const auto* s = std::get_if<DinfSubgroup>(&data);
        if (!s)
            break;
        if (s->n < 1)
            throw Error("dinf subgroup parameter must be positive");
        if (s->kind == DinfSubgroup::Kind::cyclic) {
            if (s->k != 0)
                throw Error("cyclic dinf subgroup takes no offset");
            return 2 * s->n;
        }
        if (s->k < 0 || s->k >= s->n)
            throw Error("dihedral offset out of range");
        return s->n;
    }
    case GroupFamily::z_x_cyclic: {
        const auto* s = std::get_if<ZxCyclicSubgroup>(&data);
        if (!s)
            break;
        const long p = g.param();
        if (s->n < 1)
            throw Error("subgroup index must be positive");
        if (s->kind == ZxCyclicSubgroup::Kind::diagonal) {
            if (s->n % p != 0 || s->k != 0)
                throw Error("L(n) requires p | n");
        } else if (s->k < 0 || s->k >= p || (s->k != 0 && s->n % p != 0)) {
            throw Error("L(n,k) requires 0 <= k < p, and p | n when k > 0");
        }
        return s->n;
    }
    case GroupFamily::pm: {
        const auto* s = std::get_if<PmSubgroup>(&data);
        if (!s)
            break;
        detail::pm_validate(*s);
        return detail::pm_index(*s);
    }
    default:
        throw Error("enumeration unavailable; use delta_closed_form");
    }
    throw Error("subgroup parameters do not match group " + g.name());
}

// ---- Z^d Hermite forms ----------------------------------------------------

void enumerate_hnf(int d, long n, std::vector<SubgroupHandle>& out, const GroupModel& g)
{
    std::vector<long> h(static_cast<std::size_t>(d * d), 0);
    auto at = [&](int r, int c) -> long& { return h[static_cast<std::size_t>(r * d + c)]; };
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < d; ++r)
        for (int c = r + 1; c < d; ++c)
            cells.emplace_back(r, c);
    // Diagonal first, then every reduced choice for the entries above it.
    auto fill = [&](auto&& self, std::size_t i) -> void {
        if (i == cells.size()) {
            out.emplace_back(g, ZdSubgroup{d, h});
            return;
        }
        const auto [r, c] = cells[i];
        for (long v = 0; v < at(r, r); ++v) {
            at(r, c) = v;
            self(self, i + 1);
        }
        at(r, c) = 0;
    };
    auto split = [&](auto&& self, int i, long rest) -> void {
        if (i == d - 1) {
            at(i, i) = rest;
            fill(fill, 0);
            return;
        }
        for (long q = 1; q <= rest; ++q)
            if (rest % q == 0) {
                at(i, i) = q;
                self(self, i + 1, rest / q);
            }
    };
    split(split, 0, n);
}

bool hnf_member(const ZdSubgroup& s, const GroupElement& v)
{
    const int d = s.d;
    std::vector<long> coef(static_cast<std::size_t>(d), 0);
    for (int i = d - 1; i >= 0; --i) {
        long r = v[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            r -= s.at(i, j) * coef[static_cast<std::size_t>(j)];
        if (r % s.at(i, i) != 0)
            return false;
        coef[static_cast<std::size_t>(i)] = r / s.at(i, i);
    }
    return true;
}

// z_d closed form: prod_{k=0}^{d-2} zeta(z - k).
DirichletSeries zd_delta(int d, int bound)
{
    DirichletSeries r = DirichletSeries::identity(bound);
    for (int k = 0; k <= d - 2; ++k)
        r = dirichlet_convolve(r, DirichletSeries::zeta(bound, k));
    return r;
}

} // namespace

// ---- GroupModel ----------------------------------------------------------

GroupModel GroupModel::z_d(int d)
{
    if (d < 1 || d > 26)
        throw Error("z_d requires 1 <= d <= 26");
    return {GroupFamily::z_d, d};
}

GroupModel GroupModel::z_x_cyclic(int p)
{
    if (!is_prime(p))
        throw Error("z_x_cyclic requires a prime parameter, got " + std::to_string(p));
    return {GroupFamily::z_x_cyclic, p};
}

GroupModel GroupModel::parse(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string_view base = text.substr(0, colon);
    const bool has_param = colon != std::string_view::npos;
    auto param = [&](std::string_view what) {
        if (!has_param)
            throw Error("group '" + std::string(base) + "' needs a parameter, e.g. " + std::string(base) + ":" + std::string(what));
        return parse_int(text.substr(colon + 1), "group parameter");
    };
    auto plain = [&](GroupModel g) {
        if (has_param)
            throw Error("group '" + std::string(base) + "' takes no parameter");
        return g;
    };
    if (base == "z")
        return plain(z());
    if (base == "z_d")
        return z_d(param("2"));
    if (base == "dinf")
        return plain(dinf());
    if (base == "z_x_cyclic")
        return z_x_cyclic(param("3"));
    if (base == "pm")
        return plain(pm());
    if (base == "pg")
        return plain(pg());
    if (base == "cm")
        return plain(cm());
    if (base == "heisenberg")
        return plain(heisenberg());
    if (base == "z_x_d8")
        return plain(z_x_d8());
    if (base == "z_x_ut33")
        return plain(z_x_ut33());
    if (base == "p2")
        return plain(p2());
    std::string msg = "unknown group '" + std::string(text) + "'; catalog:";
    for (const auto& n : catalog_names())
        msg += " " + n;
    throw Error(msg);
}

std::vector<std::string> catalog_names()
{
    return {"z", "z_d:<d>", "dinf", "z_x_cyclic:<p>", "pm", "pg", "cm", "heisenberg", "z_x_d8", "z_x_ut33", "p2"};
}

std::string GroupModel::name() const
{
    switch (family_) {
    case GroupFamily::z: return "z";
    case GroupFamily::z_d: return "z_d:" + std::to_string(param_);
    case GroupFamily::dinf: return "dinf";
    case GroupFamily::z_x_cyclic: return "z_x_cyclic:" + std::to_string(param_);
    case GroupFamily::pm: return "pm";
    case GroupFamily::pg: return "pg";
    case GroupFamily::cm: return "cm";
    case GroupFamily::heisenberg: return "heisenberg";
    case GroupFamily::z_x_d8: return "z_x_d8";
    case GroupFamily::z_x_ut33: return "z_x_ut33";
    case GroupFamily::p2: return "p2";
    }
    return "?";
}

int GroupModel::hirsch_length() const
{
    switch (family_) {
    case GroupFamily::z_d: return param_;
    case GroupFamily::pm:
    case GroupFamily::pg:
    case GroupFamily::cm:
    case GroupFamily::p2: return 2;
    case GroupFamily::heisenberg: return 3;
    default: return 1;
    }
}

bool GroupModel::enumerable() const
{
    switch (family_) {
    case GroupFamily::z:
    case GroupFamily::z_d:
    case GroupFamily::dinf:
    case GroupFamily::z_x_cyclic:
    case GroupFamily::pm: return true;
    default: return false;
    }
}

std::vector<std::string> GroupModel::generators() const
{
    switch (family_) {
    case GroupFamily::z: return {"a"};
    case GroupFamily::z_d: {
        std::vector<std::string> g;
        for (int i = 0; i < param_; ++i)
            g.emplace_back(1, static_cast<char>('a' + i));
        return g;
    }
    case GroupFamily::dinf:
    case GroupFamily::z_x_cyclic: return {"a", "b"};
    case GroupFamily::pm: return {"a", "b", "c"};
    default: return {};
    }
}

// ---- handles --------------------------------------------------------------

SubgroupHandle::SubgroupHandle(GroupModel group, SubgroupData data)
    : group_(group), index_(checked_index(group, data)), data_(std::move(data))
{
}

std::string family_name(PmFamily f)
{
    switch (f) {
    case PmFamily::pm1: return "pm1";
    case PmFamily::pm2: return "pm2";
    case PmFamily::pm3: return "pm3";
    case PmFamily::pg1: return "pg1";
    case PmFamily::pg2: return "pg2";
    case PmFamily::pg3: return "pg3";
    case PmFamily::cm1: return "cm1";
    case PmFamily::cm2: return "cm2";
    case PmFamily::p1: return "p1";
    }
    return "?";
}

PmFamily parse_pm_family(std::string_view name)
{
    for (auto f : {PmFamily::pm1, PmFamily::pm2, PmFamily::pm3, PmFamily::pg1, PmFamily::pg2, PmFamily::pg3,
                   PmFamily::cm1, PmFamily::cm2, PmFamily::p1})
        if (family_name(f) == name)
            return f;
    throw Error("unknown pm family '" + std::string(name) + "'");
}

std::string SubgroupHandle::label() const
{
    std::ostringstream os;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ZSubgroup>) {
                os << '(' << s.n << ')';
            } else if constexpr (std::is_same_v<T, ZdSubgroup>) {
                os << "hnf[";
                for (std::size_t i = 0; i < s.hnf.size(); ++i)
                    os << (i ? "," : "") << s.hnf[i];
                os << ']';
            } else if constexpr (std::is_same_v<T, DinfSubgroup>) {
                if (s.kind == DinfSubgroup::Kind::cyclic)
                    os << "cyclic(" << s.n << ')';
                else
                    os << "dihedral(" << s.n << ',' << s.k << ')';
            } else if constexpr (std::is_same_v<T, ZxCyclicSubgroup>) {
                if (s.kind == ZxCyclicSubgroup::Kind::diagonal)
                    os << "L(" << s.n << ')';
                else
                    os << "L(" << s.n << ',' << s.k << ')';
            } else {
                os << family_name(s.family) << '(' << s.k << ',' << s.m;
                os << (s.family == PmFamily::p1 ? "," : ";") << s.j << ')';
            }
        },
        data_);
    return os.str();
}

// ---- enumeration ------------------------------------------------------------

std::vector<SubgroupHandle> subgroups_of_index(const GroupModel& g, long n)
{
    require_enumerable(g);
    if (n < 1)
        throw Error("subgroup index must be positive");
    std::vector<SubgroupHandle> out;
    switch (g.family()) {
    case GroupFamily::z:
        out.emplace_back(g, ZSubgroup{n});
        break;
    case GroupFamily::z_d:
        enumerate_hnf(g.param(), n, out, g);
        break;
    case GroupFamily::dinf:
        for (long k = 0; k < n; ++k)
            out.emplace_back(g, DinfSubgroup{DinfSubgroup::Kind::dihedral, n, k});
        if (n % 2 == 0)
            out.emplace_back(g, DinfSubgroup{DinfSubgroup::Kind::cyclic, n / 2, 0});
        break;
    case GroupFamily::z_x_cyclic: {
        const long p = g.param();
        out.emplace_back(g, ZxCyclicSubgroup{ZxCyclicSubgroup::Kind::split, n, 0});
        if (n % p == 0) {
            for (long k = 1; k < p; ++k)
                out.emplace_back(g, ZxCyclicSubgroup{ZxCyclicSubgroup::Kind::split, n, k});
            out.emplace_back(g, ZxCyclicSubgroup{ZxCyclicSubgroup::Kind::diagonal, n, 0});
        }
        break;
    }
    case GroupFamily::pm:
        for (const auto& s : detail::pm_subgroups_of_index(n))
            out.emplace_back(g, s);
        break;
    default:
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SubgroupHandle> subgroups_up_to_index(const GroupModel& g, long bound)
{
    std::vector<SubgroupHandle> out;
    for (long n = 1; n <= bound; ++n) {
        auto level = subgroups_of_index(g, n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

long subgroup_count(const GroupModel& g, long n)
{
    if (n < 1)
        throw Error("subgroup index must be positive");
    if (g.enumerable())
        return static_cast<long>(subgroups_of_index(g, n).size());
    if (n > kMaxClosedFormBound)
        throw Error("index " + std::to_string(n) + " exceeds the Dirichlet bound " + std::to_string(kMaxClosedFormBound));
    const auto a = counts_from_delta(delta_closed_form(g, static_cast<int>(n)));
    return a(static_cast<int>(n)).get_num().get_si();
}

// ---- Delta data -------------------------------------------------------------

DirichletSeries delta_closed_form(const GroupModel& g, int bound)
{
    using DS = DirichletSeries;
    const DS one = DS::identity(bound);
    const DS zeta = DS::zeta(bound);
    switch (g.family()) {
    case GroupFamily::z:
        return one;
    case GroupFamily::z_d:
        return zd_delta(g.param(), bound);
    case GroupFamily::dinf:
        return DS::term(bound, 2, Rational(1, 2)) + dirichlet_divide(zeta, zeta.shift(1));
    case GroupFamily::z_x_cyclic:
        return one + DS::term(bound, g.param(), Rational(1));
    case GroupFamily::pm:
        return dirichlet_convolve(one + DS::term(bound, 2, Rational(2)), zeta);
    case GroupFamily::pg:
        return zeta;
    case GroupFamily::cm:
        return dirichlet_convolve(one + DS::term(bound, 4, Rational(1)), zeta);
    case GroupFamily::heisenberg: {
        DS num = dirichlet_convolve(dirichlet_convolve(zeta, zeta.dilate(2)), DS::zeta(bound, 1).dilate(2));
        return dirichlet_divide(num, zeta.dilate(3));
    }
    case GroupFamily::z_x_d8:
        return one + DS::term(bound, 2, Rational(3)) + DS::term(bound, 4, Rational(3)) + DS::term(bound, 8, Rational(1));
    case GroupFamily::z_x_ut33:
        return one + DS::term(bound, 3, Rational(4)) + DS::term(bound, 9, Rational(5)) + DS::term(bound, 27, Rational(1));
    case GroupFamily::p2: {
        DS first = dirichlet_divide(dirichlet_convolve(zeta, DS::zeta(bound, 1)), zeta.shift(1));
        return first + dirichlet_convolve(DS::term(bound, 2, Rational(1, 2)), zeta);
    }
    }
    throw Error("no closed form for " + g.name());
}

DirichletSeries delta_series(const GroupModel& g, int bound)
{
    DirichletSeries closed = delta_closed_form(g, bound);
    if (!g.enumerable())
        return closed;
    const int check = std::min(bound, kEnumerationCheckBound);
    DirichletSeries a(check);
    for (int n = 1; n <= check; ++n)
        a.at(n) = static_cast<long>(subgroups_of_index(g, n).size());
    const DirichletSeries b = delta_coeffs(a);
    for (int n = 1; n <= check; ++n)
        if (b(n) != closed(n))
            throw Error("enumerated and closed-form Delta disagree for " + g.name() + " at n=" + std::to_string(n));
    return closed;
}

IsoClass iso_class_of_group(const GroupModel& g)
{
    return {g.name(), g};
}

// ---- conjugation ------------------------------------------------------------

SubgroupHandle conjugate_by_generator(const SubgroupHandle& L, int generator)
{
    const GroupModel& g = L.group();
    require_enumerable(g);
    if (generator < 0 || generator >= static_cast<int>(g.generators().size()))
        throw Error("generator index out of range");
    if (const auto* s = std::get_if<DinfSubgroup>(&L.data())) {
        if (s->kind == DinfSubgroup::Kind::cyclic)
            return L;
        const long k = generator == 0 ? floor_mod(s->k + 2, s->n) : floor_mod(-s->k, s->n);
        return {g, DinfSubgroup{s->kind, s->n, k}};
    }
    if (const auto* s = std::get_if<PmSubgroup>(&L.data()))
        return {g, detail::pm_classify(detail::pm_conjugate(detail::pm_geometry(*s), generator))};
    return L; // abelian groups
}

std::vector<SubgroupHandle> conjugacy_class(const SubgroupHandle& L)
{
    require_enumerable(L.group());
    const int gens = static_cast<int>(L.group().generators().size());
    std::set<SubgroupHandle> seen{L};
    std::deque<SubgroupHandle> todo{L};
    while (!todo.empty()) {
        const SubgroupHandle cur = todo.front();
        todo.pop_front();
        for (int i = 0; i < gens; ++i) {
            SubgroupHandle next = conjugate_by_generator(cur, i);
            if (seen.insert(next).second)
                todo.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

long normalizer_index(const SubgroupHandle& L)
{
    return static_cast<long>(conjugacy_class(L).size());
}

IsoClass iso_class(const SubgroupHandle& L)
{
    const GroupModel& g = L.group();
    require_enumerable(g);
    if (const auto* s = std::get_if<DinfSubgroup>(&L.data()))
        return s->kind == DinfSubgroup::Kind::cyclic ? iso_class_of_group(GroupModel::z()) : iso_class_of_group(g);
    if (const auto* s = std::get_if<ZxCyclicSubgroup>(&L.data())) {
        const bool torsion = s->kind == ZxCyclicSubgroup::Kind::split && s->k == 0;
        return torsion ? iso_class_of_group(g) : iso_class_of_group(GroupModel::z());
    }
    if (const auto* s = std::get_if<PmSubgroup>(&L.data())) {
        switch (s->family) {
        case PmFamily::pm1:
        case PmFamily::pm2:
        case PmFamily::pm3: return iso_class_of_group(GroupModel::pm());
        case PmFamily::pg1:
        case PmFamily::pg2:
        case PmFamily::pg3: return iso_class_of_group(GroupModel::pg());
        case PmFamily::cm1:
        case PmFamily::cm2: return iso_class_of_group(GroupModel::cm());
        case PmFamily::p1: return {"p1", GroupModel::z_d(2)};
        }
    }
    return iso_class_of_group(g);
}

// ---- membership -------------------------------------------------------------

std::vector<GroupElement> generator_elements(const SubgroupHandle& L)
{
    const GroupModel& g = L.group();
    return std::visit(
        [&](const auto& s) -> std::vector<GroupElement> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ZSubgroup>) {
                return {{s.n}};
            } else if constexpr (std::is_same_v<T, ZdSubgroup>) {
                std::vector<GroupElement> cols;
                for (int c = 0; c < s.d; ++c) {
                    GroupElement v(static_cast<std::size_t>(s.d));
                    for (int r = 0; r < s.d; ++r)
                        v[static_cast<std::size_t>(r)] = s.at(r, c);
                    cols.push_back(v);
                }
                return cols;
            } else if constexpr (std::is_same_v<T, DinfSubgroup>) {
                if (s.kind == DinfSubgroup::Kind::cyclic)
                    return {{s.n, 0}};
                return {{s.n, 0}, {s.k, 1}};
            } else if constexpr (std::is_same_v<T, ZxCyclicSubgroup>) {
                const long p = g.param();
                if (s.kind == ZxCyclicSubgroup::Kind::diagonal)
                    return {{s.n / p, 0}};
                return {{s.n, 0}, {s.k * s.n / p, 1}};
            } else {
                const auto geo = detail::pm_geometry(s);
                std::vector<GroupElement> gens{{geo.tk, 0, 0}, {geo.tj, geo.tm, 0}};
                if (geo.has_c)
                    gens.push_back({geo.gx, geo.gy, 1});
                return gens;
            }
        },
        L.data());
}

bool is_member(const SubgroupHandle& L, const GroupElement& x)
{
    const GroupModel& g = L.group();
    if (x.size() != g.generators().size())
        throw Error("element has the wrong number of coordinates");
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ZSubgroup>) {
                return x[0] % s.n == 0;
            } else if constexpr (std::is_same_v<T, ZdSubgroup>) {
                return hnf_member(s, x);
            } else if constexpr (std::is_same_v<T, DinfSubgroup>) {
                const bool reflection = floor_mod(x[1], 2) == 1;
                if (s.kind == DinfSubgroup::Kind::cyclic)
                    return !reflection && x[0] % s.n == 0;
                return floor_mod(x[0] - (reflection ? s.k : 0), s.n) == 0;
            } else if constexpr (std::is_same_v<T, ZxCyclicSubgroup>) {
                const long p = g.param();
                const long y = floor_mod(x[1], p);
                if (s.kind == ZxCyclicSubgroup::Kind::diagonal)
                    return y == 0 && x[0] % (s.n / p) == 0;
                if (s.k == 0)
                    return x[0] % s.n == 0;
                const long step = s.n / p;
                return x[0] % step == 0 && floor_mod(x[0] / step - y * s.k, p) == 0;
            } else {
                return detail::pm_member(detail::pm_geometry(s), x[0], x[1], x[2]);
            }
        },
        L.data());
}

bool contains(const SubgroupHandle& L, const SubgroupHandle& K)
{
    require_same_group(L, K);
    require_enumerable(L.group());
    if (K.index() > L.index() || L.index() % K.index() != 0)
        return false;
    for (const auto& x : generator_elements(L))
        if (!is_member(K, x))
            return false;
    return true;
}

} // namespace zetadyn
