#include "zetadyn/oracle.hpp"

#include "zetadyn/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace zetadyn::oracle {

namespace {

long floor_mod(long a, long n)
{
    const long r = a % n;
    return r < 0 ? r + n : r;
}

long moebius_classic(long n)
{
    long result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

std::vector<std::vector<long>> matrix_mod(const IntMatrix& m, long D)
{
    std::vector<std::vector<long>> r(static_cast<std::size_t>(m.rows()), std::vector<long>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            BigInt v;
            mpz_fdiv_r_ui(v.get_mpz_t(), m(i, j).get_mpz_t(), static_cast<unsigned long>(D));
            r[i][j] = v.get_si();
        }
    return r;
}

std::vector<long> apply_mod(const std::vector<std::vector<long>>& m, const std::vector<long>& x, long D)
{
    std::vector<long> y(x.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        long s = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            s = (s + m[i][j] * x[j]) % D;
        y[i] = s;
    }
    return y;
}

using RatPoint = std::vector<Rational>;

RatPoint reduce_mod_one(RatPoint p)
{
    for (auto& c : p) {
        BigInt f;
        mpz_fdiv_q(f.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
        c -= f;
    }
    return p;
}

RatPoint apply_rational(const IntMatrix& m, const RatPoint& x)
{
    RatPoint y(x.size(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            y[static_cast<std::size_t>(i)] += m(i, j) * x[static_cast<std::size_t>(j)];
    return reduce_mod_one(std::move(y));
}

// Fix(M) = M^{-1} Z^d / Z^d as the closure of the columns of M^{-1} mod 1.
void add_fixed_set(const IntMatrix& M, std::set<RatPoint>& out, long cap)
{
    const int d = M.rows();
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(2 * d)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
            a[i][j] = M(i, j);
        a[i][d + i] = 1;
    }
    for (int col = 0; col < d; ++col) {
        int piv = col;
        while (piv < d && a[piv][col] == 0)
            ++piv;
        if (piv == d)
            throw Error("oracle scale exceeded: infinite fixed set");
        std::swap(a[col], a[piv]);
        const Rational inv = 1 / a[col][col];
        for (auto& v : a[col])
            v *= inv;
        for (int i = 0; i < d; ++i)
            if (i != col && a[i][col] != 0) {
                const Rational f = a[i][col];
                for (int j = 0; j < 2 * d; ++j)
                    a[i][j] -= f * a[col][j];
            }
    }
    std::vector<RatPoint> gens;
    for (int j = 0; j < d; ++j) {
        RatPoint g(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            g[static_cast<std::size_t>(i)] = a[i][d + j];
        gens.push_back(reduce_mod_one(std::move(g)));
    }
    std::set<RatPoint> local{RatPoint(static_cast<std::size_t>(d), Rational(0))};
    std::deque<RatPoint> todo{*local.begin()};
    while (!todo.empty()) {
        const RatPoint p = todo.front();
        todo.pop_front();
        for (const auto& g : gens) {
            RatPoint q(p.size());
            for (std::size_t i = 0; i < p.size(); ++i)
                q[i] = p[i] + g[i];
            q = reduce_mod_one(std::move(q));
            if (local.insert(q).second) {
                if (static_cast<long>(local.size()) > cap)
                    throw Error("oracle scale exceeded: more than " + std::to_string(cap) + " periodic points");
                todo.push_back(std::move(q));
            }
        }
    }
    out.insert(local.begin(), local.end());
}

long minimal_period(const std::vector<int>& w)
{
    const long n = static_cast<long>(w.size());
    for (long p = 1; p <= n; ++p) {
        if (n % p)
            continue;
        bool ok = true;
        for (long i = p; i < n && ok; ++i)
            ok = w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(i - p)];
        if (ok)
            return p;
    }
    return n;
}

} // namespace

std::string TorusPoint::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (i)
            s += ',';
        s += zetadyn::to_string(coordinate(i));
    }
    return s;
}

std::vector<OracleOrbit> brute_toral_orbits(const ActionModel& a, long D)
{
    if (a.kind() != ActionKind::toral)
        throw Error("brute_toral_orbits needs a toral action");
    if (D < 1 || D > 60)
        throw Error("oracle scale exceeded: D must lie in [1, 60]");
    const int d = a.dimension();
    const GroupModel& g = a.group();
    const std::size_t ngen = g.generators().size();
    std::vector<std::vector<std::vector<long>>> gens;
    for (std::size_t i = 0; i < ngen; ++i) {
        GroupElement e(ngen, 0);
        e[i] = 1;
        gens.push_back(matrix_mod(a.element_matrix(e), D));
    }

    long total = 1;
    for (int i = 0; i < d; ++i)
        total *= D;
    auto encode = [&](const std::vector<long>& x) {
        long code = 0;
        for (long c : x)
            code = code * D + c;
        return code;
    };
    auto decode = [&](long code) {
        std::vector<long> x(static_cast<std::size_t>(d));
        for (int i = d - 1; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = code % D;
            code /= D;
        }
        return x;
    };

    std::map<GroupElement, std::vector<std::vector<long>>> word_cache;
    auto fixes = [&](const GroupElement& w, const std::vector<long>& x) {
        auto it = word_cache.find(w);
        if (it == word_cache.end())
            it = word_cache.emplace(w, matrix_mod(a.element_matrix(w), D)).first;
        return apply_mod(it->second, x, D) == x;
    };

    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    std::vector<OracleOrbit> orbits;
    for (long start = 0; start < total; ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<long> members{start};
        seen[static_cast<std::size_t>(start)] = 1;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const auto x = decode(members[i]);
            for (const auto& m : gens) {
                const long y = encode(apply_mod(m, x, D));
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    members.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        OracleOrbit orbit;
        const auto candidates = subgroups_of_index(g, static_cast<long>(members.size()));
        std::map<SubgroupHandle, std::size_t> block_ids;
        for (long code : members) {
            const auto x = decode(code);
            std::vector<SubgroupHandle> hits;
            for (const auto& L : candidates) {
                bool all = true;
                for (const auto& w : generator_elements(L))
                    if (!fixes(w, x)) {
                        all = false;
                        break;
                    }
                if (all)
                    hits.push_back(L);
            }
            if (hits.size() != 1)
                throw Error("stabilizer of " + TorusPoint{x, D}.to_string() + " not identified");
            const auto [it, fresh] = block_ids.emplace(hits.front(), block_ids.size());
            orbit.points.push_back({x, D});
            orbit.stabilizers.push_back(hits.front());
            orbit.block.push_back(it->second);
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

BigInt necklace_orbit_count(long A, long n)
{
    if (n < 1)
        throw Error("necklace length must be positive");
    BigInt total = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0)
            total += moebius_classic(d) * ipow(BigInt(A), static_cast<unsigned long>(n / d));
    return total / n;
}

std::vector<long> column_hnf(int d, std::vector<std::vector<long>> cols)
{
    std::vector<long> h(static_cast<std::size_t>(d * d), 0);
    for (int row = d - 1; row >= 0; --row) {
        // Euclid on row entries until a single column is nonzero there.
        for (;;) {
            int best = -1;
            for (int c = 0; c < static_cast<int>(cols.size()); ++c)
                if (cols[c][row] != 0 && (best < 0 || std::labs(cols[c][row]) < std::labs(cols[best][row])))
                    best = c;
            if (best < 0)
                throw Error("column_hnf needs a full-rank generating set");
            bool single = true;
            for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
                if (c == best || cols[c][row] == 0)
                    continue;
                const long q = cols[c][row] / cols[best][row];
                for (int i = 0; i < d; ++i)
                    cols[c][i] -= q * cols[best][i];
                single = single && cols[c][row] == 0;
            }
            if (single) {
                std::vector<long> piv = cols[best];
                if (piv[row] < 0)
                    for (auto& v : piv)
                        v = -v;
                for (int i = 0; i < d; ++i)
                    h[static_cast<std::size_t>(i * d + row)] = piv[i];
                cols.erase(cols.begin() + best);
                break;
            }
        }
    }
    for (int row = d - 1; row >= 0; --row) {
        const long diag = h[static_cast<std::size_t>(row * d + row)];
        for (int c = row + 1; c < d; ++c) {
            const long v = h[static_cast<std::size_t>(row * d + c)];
            const long q = (v - floor_mod(v, diag)) / diag;
            if (q == 0)
                continue;
            for (int i = 0; i <= row; ++i)
                h[static_cast<std::size_t>(i * d + c)] -= q * h[static_cast<std::size_t>(i * d + row)];
        }
    }
    return h;
}

std::vector<ZdSubgroup> hnf_sublattices(int d, long n)
{
    if (d < 1 || d > 3)
        throw Error("oracle scale exceeded");
    if (n < 1)
        throw Error("sublattice index must be positive");
    auto det = [d](const std::vector<long>& h) {
        long p = 1;
        for (int i = 0; i < d; ++i)
            p *= h[static_cast<std::size_t>(i * d + i)];
        return p;
    };
    auto columns = [d](const std::vector<long>& h) {
        std::vector<std::vector<long>> cols;
        for (int c = 0; c < d; ++c) {
            std::vector<long> v(static_cast<std::size_t>(d));
            for (int r = 0; r < d; ++r)
                v[static_cast<std::size_t>(r)] = h[static_cast<std::size_t>(r * d + c)];
            cols.push_back(v);
        }
        return cols;
    };
    long vectors = 1;
    for (int i = 0; i < d; ++i)
        vectors *= n;

    std::vector<long> start(static_cast<std::size_t>(d * d), 0);
    for (int i = 0; i < d; ++i)
        start[static_cast<std::size_t>(i * d + i)] = n;
    std::set<std::vector<long>> seen{start};
    std::set<std::vector<long>> found;
    std::deque<std::vector<long>> todo{start};
    while (!todo.empty()) {
        const auto cur = todo.front();
        todo.pop_front();
        if (det(cur) == n) {
            found.insert(cur);
            continue;
        }
        for (long code = 1; code < vectors; ++code) {
            std::vector<long> v(static_cast<std::size_t>(d));
            long c = code;
            for (int i = 0; i < d; ++i) {
                v[static_cast<std::size_t>(i)] = c % n;
                c /= n;
            }
            auto cols = columns(cur);
            cols.push_back(v);
            auto next = column_hnf(d, std::move(cols));
            const long dn = det(next);
            if (dn < n || dn % n != 0 || dn == det(cur))
                continue;
            if (seen.insert(next).second)
                todo.push_back(std::move(next));
        }
    }
    std::vector<ZdSubgroup> out;
    for (const auto& h : found)
        out.push_back({d, h});
    return out;
}

FixCount pm_quotient_sample(const SubgroupHandle& L, long A, long depth)
{
    if (L.group().family() != GroupFamily::pm)
        throw Error("pm_quotient_sample needs a pm subgroup");
    std::vector<std::vector<long>> translations;
    std::vector<GroupElement> glides;
    for (const auto& g : generator_elements(L)) {
        if (floor_mod(g[2], 2) == 0)
            translations.push_back({g[0], g[1]});
        else
            glides.push_back(g);
    }
    // Twice a glide is a translation in L as well.
    for (const auto& g : glides)
        translations.push_back({2 * g[0], 0});
    const auto h = column_hnf(2, translations); // [[p, q], [0, r]] spans L ∩ Z^2
    const long p = h[0], q = h[1], r = h[3];
    if (p * r > depth)
        throw Error("increase depth");
    auto reduce = [&](long i, long j) {
        // subtract multiples of (q, r) then of (p, 0)
        const long jr = floor_mod(j, r);
        const long t = (j - jr) / r;
        return std::make_pair(floor_mod(i - t * q, p), jr);
    };
    const long cells = p * r;
    std::vector<long> parent(static_cast<std::size_t>(cells));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](long x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& g : glides) {
        // a^x b^y c sends the colour at (i + x, -j - y) to (i, j).
        for (long i = 0; i < p; ++i)
            for (long j = 0; j < r; ++j) {
                const auto [i2, j2] = reduce(i + g[0], -j - g[1]);
                const long u = find(i * r + j), v = find(i2 * r + j2);
                if (u != v)
                    parent[static_cast<std::size_t>(u)] = v;
            }
    }
    long cycles = 0;
    for (long x = 0; x < cells; ++x)
        if (find(x) == x)
            ++cycles;
    return {ipow(BigInt(A), static_cast<unsigned long>(cycles))};
}

std::map<long, BigInt> brute_orbit_sizes(const ActionModel& a, long N, long point_cap)
{
    std::map<long, BigInt> sizes;
    const bool words = (a.kind() == ActionKind::full_shift && a.group().family() == GroupFamily::z)
                       || a.kind() == ActionKind::projected_shift;
    if (words) {
        // Both act through the shift on A^Z: count words by least period.
        for (long n = 1; n <= N; ++n) {
            BigInt exact = 0;
            std::vector<int> w(static_cast<std::size_t>(n), 0);
            for (;;) {
                if (minimal_period(w) == n)
                    ++exact;
                long i = 0;
                while (i < n && ++w[static_cast<std::size_t>(i)] == a.alphabet())
                    w[static_cast<std::size_t>(i++)] = 0;
                if (i == n)
                    break;
            }
            const BigInt orbits = exact / n;
            if (orbits != 0)
                sizes[n] = orbits;
        }
        return sizes;
    }
    if (a.kind() != ActionKind::toral)
        throw Error("no brute-force orbit enumeration for " + a.description());
    const GroupModel& g = a.group();
    if (g.family() != GroupFamily::z && g.family() != GroupFamily::dinf && g.family() != GroupFamily::z_x_cyclic)
        throw Error("no brute-force orbit enumeration for " + a.description());
    // Every subgroup of index n in these groups contains a^n, so points in
    // orbits of size <= N are fixed by some a^n with n <= N.
    const std::size_t ngen = g.generators().size();
    GroupElement first(ngen, 0);
    first[0] = 1;
    const IntMatrix A = a.element_matrix(first);
    const IntMatrix I = IntMatrix::identity(a.dimension());
    std::set<RatPoint> points;
    for (long n = 1; n <= N; ++n)
        add_fixed_set(A.pow(n) - I, points, point_cap);
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0; i < ngen; ++i) {
        GroupElement e(ngen, 0);
        e[i] = 1;
        gens.push_back(a.element_matrix(e));
    }
    std::set<RatPoint> done;
    for (const auto& p : points) {
        if (done.count(p))
            continue;
        std::vector<RatPoint> orbit{p};
        done.insert(p);
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& m : gens) {
                RatPoint q = apply_rational(m, orbit[i]);
                if (done.insert(q).second)
                    orbit.push_back(std::move(q));
            }
        const long s = static_cast<long>(orbit.size());
        if (s <= N)
            sizes[s] += 1;
    }
    return sizes;
}

} // namespace zetadyn::oracle
