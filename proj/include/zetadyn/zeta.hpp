#pragma once

#include "zetadyn/actions.hpp"
#include "zetadyn/lattice.hpp"
#include "zetadyn/power_series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zetadyn {

enum class ZetaMethod { definition, product_thm1, full_shift_product, iso_class_product };

std::string method_name(ZetaMethod m);
ZetaMethod parse_method(std::string_view name);

struct ZetaResult {
    PowerSeries series;
    ZetaMethod method = ZetaMethod::definition;
    bool integer_coefficients = false;
    /// exp(-g) from growth_estimate; empty when no fixed-point data was used.
    std::string radius_estimate;
};

/// exp sum_{[L] <= N} F(L)/[L] z^[L].
ZetaResult zeta_def(const ActionModel& a, int order);
ZetaResult zeta_def(const LatticeSlice& slice, const FixTable& fix, int order);

/// Orbits grouped by the conjugacy class of their stabilizers.
struct OrbitClass {
    SubgroupHandle representative;
    long orbit_size = 0;
    BigInt multiplicity;
    IsoClass iso;
    std::size_t class_id = 0;
};

/// Orbit multiplicities from fixed-point data by Moebius inversion.
std::vector<OrbitClass> orbit_classes(const LatticeSlice& slice, const FixTable& fix);

/// prod over orbits Y of prod_n (1 - z^{|Y| n})^{-b_{L(Y)}(n)}.
ZetaResult zeta_product_thm1(const ActionModel& a, int order);
ZetaResult zeta_product_thm1(const LatticeSlice& slice, const FixTable& fix, int order);

/// prod over orbits Y of zeta_tau(L(Y))(z^{|Y|}).
ZetaResult zeta_iso_class_product(const ActionModel& a, int order);
ZetaResult zeta_iso_class_product(const LatticeSlice& slice, const FixTable& fix, int order);

/// prod_n (1 - A^n z^n)^{-b_G(n)}.
ZetaResult zeta_full_shift(const GroupModel& g, long alphabet, int order);

/// zeta of the trivial action of an isomorphism type, from its closed form.
PowerSeries zeta_trivial(const IsoClass& iso, int order);

struct GrowthReport {
    double estimate = 0;
    std::string estimate_text;
    std::string radius_text;
    long window_lo = 0;
    long window_hi = 0;
};

/// Finite-N stand-in for the growth rate: max of log F(L)/[L] over the
/// window lo <= [L] <= N (lo defaults to ceil(N/2)).
GrowthReport growth_estimate(const FixTable& fix, long N, long window_lo = 0);
GrowthReport growth_estimate(const ActionModel& a, long N, long window_lo = 0);

/// (1 - c z^m)^e.
struct RationalFactor {
    BigInt c;
    long m = 1;
    BigInt e;
    friend bool operator==(const RationalFactor&, const RationalFactor&) = default;
};

struct RationalFit {
    bool success = false;
    std::vector<RationalFactor> factors;
    std::string label;
};

/// Greedy integer factorisation of s into factors (1 - c z^m)^e. The budget
/// defaults to order/2 factors.
RationalFit rational_fit(const PowerSeries& s, std::optional<int> max_factors = std::nullopt);
PowerSeries expand_factors(const std::vector<RationalFactor>& factors, int order);

struct IntegralityReport {
    std::string group;
    IntegralityCheck delta;
    IntegralityCheck zeta;
};

IntegralityReport integrality_report(const GroupModel& g, int order);

} // namespace zetadyn
