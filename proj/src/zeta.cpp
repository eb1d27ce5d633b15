#include "zetadyn/zeta.hpp"

#include "zetadyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace zetadyn {

namespace {

PowerSeries def_series(const FixTable& fix, int order)
{
    PowerSeries sum(order);
    for (const auto& [L, F] : fix)
        if (L.index() <= order)
            sum[static_cast<int>(L.index())] += make_rational(F, L.index());
    return series_exp(sum);
}

ZetaResult finish(PowerSeries s, ZetaMethod m, std::string radius = {})
{
    const bool integral = is_integer_series(s).integral;
    return {std::move(s), m, integral, std::move(radius)};
}

std::string radius_from(const FixTable& fix, int order)
{
    return growth_estimate(fix, order).radius_text;
}

PowerSeries geometric_product(std::initializer_list<std::pair<int, int>> factors, int order)
{
    // prod (1 - z^m)^{-b}
    std::vector<EulerFactor> f;
    for (const auto& [m, b] : factors)
        f.push_back({Rational(1), m, Rational(b)});
    return euler_product(f, order);
}

PowerSeries partitions(int degree, int order)
{
    return partition_series(PartitionKind::P, {}, {Rational(1), degree}, order);
}

// Small trial division; any cofactor left over is treated as prime.
std::vector<BigInt> positive_divisors(const BigInt& n)
{
    std::vector<std::pair<BigInt, int>> primes;
    BigInt rest = abs(n);
    for (unsigned long p = 2; p < 100000 && BigInt(p) * p <= rest; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++e;
        }
        if (e)
            primes.emplace_back(BigInt(p), e);
    }
    if (rest > 1)
        primes.emplace_back(rest, 1);
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : primes) {
        const std::size_t count = divs.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < count; ++j)
                divs.push_back(divs[j] * pk);
        }
        if (divs.size() > 20000)
            break;
    }
    return divs;
}

} // namespace

std::string method_name(ZetaMethod m)
{
    switch (m) {
    case ZetaMethod::definition: return "definition";
    case ZetaMethod::product_thm1: return "product_thm1";
    case ZetaMethod::full_shift_product: return "full_shift_product";
    case ZetaMethod::iso_class_product: return "iso_class_product";
    }
    return "?";
}

ZetaMethod parse_method(std::string_view name)
{
    if (name == "def" || name == "definition")
        return ZetaMethod::definition;
    if (name == "product" || name == "product_thm1")
        return ZetaMethod::product_thm1;
    if (name == "full-shift" || name == "full_shift_product")
        return ZetaMethod::full_shift_product;
    if (name == "iso" || name == "iso_class_product")
        return ZetaMethod::iso_class_product;
    throw Error("unknown method '" + std::string(name) + "' (def, product, full-shift, iso)");
}

ZetaResult zeta_def(const ActionModel& a, int order)
{
    const FixTable fix = fix_table(a, order);
    return finish(def_series(fix, order), ZetaMethod::definition, radius_from(fix, order));
}

ZetaResult zeta_def(const LatticeSlice& slice, const FixTable& fix, int order)
{
    if (order > slice.bound())
        throw Error("order exceeds the slice bound");
    return finish(def_series(fix, order), ZetaMethod::definition, radius_from(fix, order));
}

std::vector<OrbitClass> orbit_classes(const LatticeSlice& slice, const FixTable& fix)
{
    const RationalTable O = orbit_counts_from_fix(slice, fix, true);
    std::vector<OrbitClass> out;
    for (std::size_t c = 0; c < slice.classes().size(); ++c) {
        const auto& members = slice.classes()[c];
        const SubgroupHandle& rep = slice.node(members.front());
        const Rational& mult = O.at(rep);
        for (auto m : members)
            if (O.at(slice.node(m)) != mult)
                throw Error("inconsistent data: orbit counts differ across a conjugacy class");
        if (mult == 0)
            continue;
        out.push_back({rep, rep.index(), mult.get_num(), iso_class(rep), c});
    }
    return out;
}

ZetaResult zeta_product_thm1(const LatticeSlice& slice, const FixTable& fix, int order)
{
    if (order > slice.bound())
        throw Error("order exceeds the slice bound");
    std::map<IsoClass, DirichletSeries> deltas;
    std::vector<EulerFactor> factors;
    for (const auto& oc : orbit_classes(slice, fix)) {
        if (oc.orbit_size > order)
            continue;
        auto it = deltas.find(oc.iso);
        if (it == deltas.end())
            it = deltas.emplace(oc.iso, delta_closed_form(oc.iso.model, order)).first;
        const DirichletSeries& b = it->second;
        for (long n = 1; oc.orbit_size * n <= order; ++n)
            factors.push_back({Rational(1), static_cast<int>(oc.orbit_size * n), Rational(oc.multiplicity) * b(static_cast<int>(n))});
    }
    return finish(euler_product(factors, order), ZetaMethod::product_thm1, radius_from(fix, order));
}

ZetaResult zeta_product_thm1(const ActionModel& a, int order)
{
    const LatticeSlice slice(a.group(), order);
    return zeta_product_thm1(slice, fix_table(a, order), order);
}

PowerSeries zeta_trivial(const IsoClass& iso, int order)
{
    const GroupModel& g = iso.model;
    switch (g.family()) {
    case GroupFamily::z:
        return geometric_product({{1, 1}}, order);
    case GroupFamily::z_x_cyclic:
        return geometric_product({{1, 1}, {g.param(), 1}}, order);
    case GroupFamily::z_x_d8:
        return geometric_product({{1, 1}, {2, 3}, {4, 3}, {8, 1}}, order);
    case GroupFamily::z_x_ut33:
        return geometric_product({{1, 1}, {3, 4}, {9, 5}, {27, 1}}, order);
    case GroupFamily::dinf: {
        // (1 - z^2)^{-1/2} exp(z/(1-z))
        PowerSeries geo(order);
        for (int k = 1; k <= order; ++k)
            geo[k] = 1;
        return binom_factor_power(Rational(1), 2, Rational(-1, 2), order) * series_exp(geo);
    }
    case GroupFamily::pm: {
        const PowerSeries p2 = partitions(2, order);
        return partitions(1, order) * p2 * p2;
    }
    case GroupFamily::pg:
        return partitions(1, order);
    case GroupFamily::cm:
        return partitions(1, order) * partitions(4, order);
    case GroupFamily::z_d:
        if (g.param() == 2)
            return partitions(1, order);
        [[fallthrough]];
    default: {
        // exp sum a(n)/n z^n
        PowerSeries sum(order);
        if (order >= 1) {
            const DirichletSeries a = counts_from_delta(delta_closed_form(g, order));
            for (int n = 1; n <= order; ++n)
                sum[n] = a(n) / n;
        }
        return series_exp(sum);
    }
    }
}

ZetaResult zeta_iso_class_product(const LatticeSlice& slice, const FixTable& fix, int order)
{
    if (order > slice.bound())
        throw Error("order exceeds the slice bound");
    std::map<std::pair<IsoClass, long>, PowerSeries> logs;
    PowerSeries total(order);
    for (const auto& oc : orbit_classes(slice, fix)) {
        if (oc.orbit_size > order)
            continue;
        const auto key = std::make_pair(oc.iso, oc.orbit_size);
        auto it = logs.find(key);
        if (it == logs.end()) {
            const int inner = static_cast<int>(order / oc.orbit_size);
            PowerSeries lg = series_log(zeta_trivial(oc.iso, inner));
            PowerSeries widened(order);
            for (int k = 0; k <= inner; ++k)
                widened[static_cast<int>(k * oc.orbit_size)] = lg[k];
            it = logs.emplace(key, std::move(widened)).first;
        }
        total += Rational(oc.multiplicity) * it->second;
    }
    return finish(series_exp(total), ZetaMethod::iso_class_product, radius_from(fix, order));
}

ZetaResult zeta_iso_class_product(const ActionModel& a, int order)
{
    const LatticeSlice slice(a.group(), order);
    return zeta_iso_class_product(slice, fix_table(a, order), order);
}

ZetaResult zeta_full_shift(const GroupModel& g, long alphabet, int order)
{
    if (alphabet < 1)
        throw Error("alphabet size must be positive");
    const DirichletSeries b = delta_series(g, std::max(order, 1));
    std::vector<EulerFactor> factors;
    for (int n = 1; n <= order; ++n)
        factors.push_back({Rational(ipow(BigInt(alphabet), static_cast<unsigned long>(n))), n, b(n)});
    return finish(euler_product(factors, order), ZetaMethod::full_shift_product, to_decimal(1.0 / static_cast<double>(alphabet)));
}

GrowthReport growth_estimate(const FixTable& fix, long N, long window_lo)
{
    GrowthReport r;
    r.window_hi = N;
    r.window_lo = window_lo > 0 ? window_lo : (N + 1) / 2;
    bool any = false;
    for (const auto& [L, F] : fix) {
        if (L.index() < r.window_lo || L.index() > N || F <= 0)
            continue;
        const double v = log_of(F) / static_cast<double>(L.index());
        if (!any || v > r.estimate)
            r.estimate = v;
        any = true;
    }
    r.estimate_text = to_decimal(r.estimate);
    r.radius_text = to_decimal(std::exp(-r.estimate));
    return r;
}

GrowthReport growth_estimate(const ActionModel& a, long N, long window_lo)
{
    return growth_estimate(fix_table(a, N), N, window_lo);
}

PowerSeries expand_factors(const std::vector<RationalFactor>& factors, int order)
{
    std::vector<EulerFactor> f;
    for (const auto& x : factors) {
        if (x.m > order)
            continue;
        f.push_back({Rational(x.c), static_cast<int>(x.m), Rational(-x.e)});
    }
    return euler_product(f, order);
}

RationalFit rational_fit(const PowerSeries& s, std::optional<int> max_factors)
{
    const int N = s.order();
    RationalFit fit;
    if (s[0] != 1) {
        fit.label = "constant term is not 1";
        return fit;
    }
    if (!is_integer_series(s).integral) {
        fit.label = "non-integer coefficients";
        return fit;
    }
    const std::size_t budget = static_cast<std::size_t>(max_factors.value_or(N / 2));
    // Ghost coefficients R_n = n [z^n] log s; a factor (1 - c z^m)^e adds -e m c^k at n = mk.
    const PowerSeries ghost = series_z_derivative(s) / s;
    std::vector<BigInt> R(static_cast<std::size_t>(N) + 1);
    for (int n = 1; n <= N; ++n)
        R[static_cast<std::size_t>(n)] = ghost[n].get_num();

    for (;;) {
        int n = 1;
        while (n <= N && R[static_cast<std::size_t>(n)] == 0)
            ++n;
        if (n > N)
            break;
        if (fit.factors.size() >= budget) {
            fit.label = "no finite product within " + std::to_string(budget) + " factors up to order " + std::to_string(N);
            return fit;
        }
        const BigInt& v = R[static_cast<std::size_t>(n)];
        if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(n))) {
            fit.label = "ghost coefficient at z^" + std::to_string(n) + " not divisible by " + std::to_string(n);
            return fit;
        }
        const BigInt w = -v / n; // e * c
        using Score = std::tuple<int, BigInt, int, BigInt>; // (-matches, |e|, sign rank, |c|)
        std::optional<std::pair<Score, RationalFactor>> best;
        for (const auto& d : positive_divisors(w)) {
            for (int sign : {1, -1}) {
                const BigInt c = sign * d;
                const BigInt e = w / c;
                int matches = 0;
                BigInt ck = 1;
                for (int k = 1; static_cast<long>(k) * n <= N; ++k) {
                    ck *= c;
                    if (R[static_cast<std::size_t>(k * n)] == -e * n * ck)
                        ++matches;
                }
                Score score{-matches, abs(e), sign > 0 ? 0 : 1, d};
                if (!best || score < best->first)
                    best.emplace(score, RationalFactor{c, n, e});
            }
        }
        const RationalFactor f = best->second;
        BigInt ck = 1;
        for (int k = 1; static_cast<long>(k) * n <= N; ++k) {
            ck *= f.c;
            R[static_cast<std::size_t>(k * n)] += f.e * n * ck;
        }
        fit.factors.push_back(f);
    }
    if (!(expand_factors(fit.factors, N) == s)) {
        fit.factors.clear();
        fit.label = "factor expansion does not reproduce the series";
        return fit;
    }
    fit.success = true;
    for (const auto& f : fit.factors) {
        if (!fit.label.empty())
            fit.label += " ";
        fit.label += "(1 - " + (f.c == 1 ? std::string() : to_string(f.c)) + "z" + (f.m == 1 ? "" : "^" + std::to_string(f.m)) + ")^"
                     + to_string(f.e);
    }
    if (fit.label.empty())
        fit.label = "1";
    return fit;
}

IntegralityReport integrality_report(const GroupModel& g, int order)
{
    IntegralityReport r;
    r.group = g.name();
    r.delta = is_integer_series(delta_series(g, order));
    r.zeta = is_integer_series(zeta_full_shift(g, 1, order).series);
    return r;
}

} // namespace zetadyn
