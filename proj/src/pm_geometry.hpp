#pragma once

#include "zetadyn/group_catalog.hpp"

#include <vector>

namespace zetadyn::detail {

/// Coordinates for a subgroup L of pm with elements a^x b^y c^e.
/// T = L ∩ <a,b> has basis rows (tk,0), (tj,tm) in Hermite form (0 <= tj < tk).
/// When has_c, L = T ∪ (g c)T with g = a^gx b^gy reduced modulo T.
struct PmGeometry {
    long tk = 1;
    long tj = 0;
    long tm = 1;
    bool has_c = false;
    long gx = 0;
    long gy = 0;
};

PmGeometry pm_geometry(const PmSubgroup& s);
/// Maps a valid geometry to its handle parameters; throws if g does not square into T.
PmSubgroup pm_classify(PmGeometry geo);
std::vector<PmSubgroup> pm_subgroups_of_index(long n);
bool pm_member(const PmGeometry& geo, long x, long y, long e);
/// generator: 0 = a, 1 = b, 2 = c.
PmGeometry pm_conjugate(const PmGeometry& geo, int generator);
long pm_index(const PmSubgroup& s);
void pm_validate(const PmSubgroup& s);

} // namespace zetadyn::detail
