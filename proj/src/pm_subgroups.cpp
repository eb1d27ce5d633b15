#include "pm_geometry.hpp"

#include "zetadyn/error.hpp"

namespace zetadyn::detail {

namespace {

long floor_mod(long a, long n)
{
    const long r = a % n;
    return r < 0 ? r + n : r;
}

// Reduce the translation (u, v) modulo the lattice T.
void reduce(const PmGeometry& geo, long& u, long& v)
{
    const long vr = floor_mod(v, geo.tm);
    const long q = (v - vr) / geo.tm;
    v = vr;
    u = floor_mod(u - q * geo.tj, geo.tk);
}

PmGeometry with_coset(long tk, long tj, long tm, long gx, long gy)
{
    PmGeometry geo{tk, tj, tm, true, gx, gy};
    reduce(geo, geo.gx, geo.gy);
    return geo;
}

} // namespace

long pm_index(const PmSubgroup& s)
{
    switch (s.family) {
    case PmFamily::pm1:
    case PmFamily::pm2:
    case PmFamily::cm1:
    case PmFamily::cm2:
    case PmFamily::p1:
        return 2 * s.k * s.m;
    case PmFamily::pm3:
        return s.k * (2 * s.m - 1);
    case PmFamily::pg1:
    case PmFamily::pg2:
        return 4 * s.k * s.m;
    case PmFamily::pg3:
        return 2 * s.k * (2 * s.m - 1);
    }
    return 0;
}

void pm_validate(const PmSubgroup& s)
{
    if (s.k < 1 || s.m < 1)
        throw Error("pm subgroup parameters k, m must be positive");
    long limit = s.m;
    if (s.family == PmFamily::pm3 || s.family == PmFamily::pg3)
        limit = 2 * s.m - 1;
    if (s.family == PmFamily::p1)
        limit = s.k;
    if (s.j < 0 || s.j >= limit)
        throw Error("pm subgroup parameter j out of range for " + family_name(s.family));
}

PmGeometry pm_geometry(const PmSubgroup& s)
{
    const long k = s.k, m = s.m, t = s.j;
    const long even_y = 2 * t;
    const long odd_y = floor_mod(2 * t - 1, 2 * m);
    switch (s.family) {
    case PmFamily::pm1: return with_coset(k, 0, 2 * m, 0, even_y);
    case PmFamily::pm2: return with_coset(k, 0, 2 * m, 0, odd_y);
    case PmFamily::pm3: return with_coset(k, 0, 2 * m - 1, 0, t);
    case PmFamily::pg1: return with_coset(2 * k, 0, 2 * m, k, even_y);
    case PmFamily::pg2: return with_coset(2 * k, 0, 2 * m, k, odd_y);
    case PmFamily::pg3: return with_coset(2 * k, 0, 2 * m - 1, k, t);
    case PmFamily::cm1: return with_coset(2 * k, k, m, 0, even_y);
    case PmFamily::cm2: return with_coset(2 * k, k, m, 0, odd_y);
    case PmFamily::p1: return PmGeometry{k, t, m, false, 0, 0};
    }
    return {};
}

PmSubgroup pm_classify(PmGeometry geo)
{
    if (!geo.has_c)
        return {PmFamily::p1, geo.tk, geo.tm, geo.tj};
    reduce(geo, geo.gx, geo.gy);
    const long K = geo.tk, M = geo.tm;
    if (geo.tj == 0) {
        const bool mirror = geo.gx == 0;
        if (!mirror && 2 * geo.gx != K)
            throw Error("pm coset does not square into its lattice");
        const long k = mirror ? K : K / 2;
        if (M % 2 == 0) {
            const long m = M / 2;
            if (geo.gy % 2 == 0)
                return {mirror ? PmFamily::pm1 : PmFamily::pg1, k, m, geo.gy / 2};
            return {mirror ? PmFamily::pm2 : PmFamily::pg2, k, m, floor_mod((geo.gy + 1) / 2, m)};
        }
        return {mirror ? PmFamily::pm3 : PmFamily::pg3, k, (M + 1) / 2, geo.gy};
    }
    if (2 * geo.tj != K)
        throw Error("pm lattice is not reflection invariant");
    const long y = geo.gx == 0 ? geo.gy : geo.gy + M;
    if (geo.gx != 0 && 2 * geo.gx != K)
        throw Error("pm coset does not square into its lattice");
    if (y % 2 == 0)
        return {PmFamily::cm1, K / 2, M, y / 2};
    return {PmFamily::cm2, K / 2, M, floor_mod((y + 1) / 2, M)};
}

std::vector<PmSubgroup> pm_subgroups_of_index(long n)
{
    std::vector<PmSubgroup> out;
    for (long K = 1; K <= n; ++K) {
        if (n % K != 0)
            continue;
        const long M = n / K;
        // Rectangular lattice K x M with a mirror or a glide coset.
        for (long y = 0; y < M; ++y) {
            out.push_back(pm_classify(with_coset(K, 0, M, 0, y)));
            if (K % 2 == 0)
                out.push_back(pm_classify(with_coset(K, 0, M, K / 2, y)));
        }
        // Rhombic lattice <(K,0), (K/2,M)>.
        if (K % 2 == 0)
            for (long y = 0; y < 2 * M; ++y)
                out.push_back(pm_classify(with_coset(K, K / 2, M, 0, y)));
    }
    // Translation subgroups: index 2 K M.
    if (n % 2 == 0)
        for (long K = 1; K <= n / 2; ++K) {
            if ((n / 2) % K != 0)
                continue;
            for (long j = 0; j < K; ++j)
                out.push_back({PmFamily::p1, K, n / 2 / K, j});
        }
    return out;
}

bool pm_member(const PmGeometry& geo, long x, long y, long e)
{
    if (floor_mod(e, 2) == 1) {
        if (!geo.has_c)
            return false;
        x -= geo.gx;
        y -= geo.gy;
    }
    reduce(geo, x, y);
    return x == 0 && y == 0;
}

PmGeometry pm_conjugate(const PmGeometry& geo, int generator)
{
    PmGeometry r = geo;
    switch (generator) {
    case 0:
        break;
    case 1:
        if (r.has_c)
            r.gy += 2;
        break;
    case 2:
        r.tj = floor_mod(-r.tj, r.tk);
        r.gy = -r.gy;
        break;
    default:
        throw Error("pm has three generators");
    }
    if (r.has_c)
        reduce(r, r.gx, r.gy);
    return r;
}

} // namespace zetadyn::detail
