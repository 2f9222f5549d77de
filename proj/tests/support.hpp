#pragma once

// Shared test helpers: a seeded RNG, small reference groups, and brute-force
// oracles that avoid the library's own algorithms.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "percount/config.hpp"
#include "percount/fixture.hpp"
#include "percount/gf.hpp"
#include "percount/grp.hpp"
#include "percount/p1dyn.hpp"
#include "percount/system.hpp"

namespace testing {

using namespace percount;

// SplitMix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t s_;
};

inline DynSystem reference_system(std::uint64_t p) { return build_system(parse_config(fixture::reference_config(p))); }

struct GroupCase {
    std::string name;
    std::uint64_t p;
    std::vector<MobiusAut> gens;
    std::size_t order;
};

// Mobius realizations of small groups, all of order <= 16.
inline std::vector<GroupCase> small_groups() {
    auto m = [](std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        return MobiusAut::make(p, a, b, c, d);
    };
    return {
        {"trivial", 5, {}, 1},
        {"C2", 5, {m(5, -1, 0, 0, 1)}, 2},
        {"C4", 5, {m(5, 2, 0, 0, 1)}, 4},
        {"V4", 5, {m(5, -1, 0, 0, 1), m(5, 0, 1, 1, 0)}, 4},
        {"C5", 5, {m(5, 1, 1, 0, 1)}, 5},
        {"C6", 7, {m(7, 3, 0, 0, 1)}, 6},
        {"S3", 7, {m(7, 0, 1, 1, 0), m(7, -1, 1, 0, 1)}, 6},
        {"D8", 17, {m(17, 4, 0, 0, 1), m(17, 0, 1, 1, 0)}, 8},
        {"A4", 3, {m(3, 1, 1, 0, 1), m(3, 0, -1, 1, 0)}, 12},
        {"D16", 17, {m(17, 2, 0, 0, 1), m(17, 0, 1, 1, 0)}, 16},
    };
}

inline AutGroup close(const GroupCase& c) { return AutGroup::close_generators(c.p, c.gens); }

namespace oracle {

using Poly = std::vector<std::int64_t>;

inline std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
    a = md(a, p);
    for (std::int64_t x = 1; x < p; ++x) {
        if (a * x % p == 1) return x;
    }
    return 0;
}

inline Poly rem(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    const std::int64_t lead_inv = inverse(b.back(), p);
    while (a.size() >= b.size()) {
        const std::int64_t c = md(a.back() * lead_inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = md(a[shift + i] - c * b[i], p);
        trim(a);
    }
    return a;
}

inline Poly gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly from_code(std::uint64_t code, std::uint64_t p, std::size_t len) {
    Poly f(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        f[i] = static_cast<std::int64_t>(code % p);
        code /= p;
    }
    return f;
}

// Monic f of degree n is irreducible iff no monic g with 1 <= deg g <= n/2
// divides it.
inline bool irreducible_by_trial_division(const Poly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g = from_code(code, p, d);
            g.push_back(1);
            if (rem(f, g, static_cast<std::int64_t>(p)).empty()) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree n by code order (x for n = 1).
inline Poly smallest_irreducible(std::uint64_t p, std::size_t n) {
    if (n == 1) return {0, 1};
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f = from_code(code, p, n);
        f.push_back(1);
        if (irreducible_by_trial_division(f, p)) return f;
    }
    return {};
}

// Schoolbook product in F_p[x]/(modulus).
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::int64_t p) {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = md(prod[i + j] + a[i] * b[j], p);
    }
    Poly r = rem(prod, modulus, p);
    r.resize(modulus.size() - 1, 0);
    return r;
}

inline std::vector<ProjPoint> all_points(const FieldContext& ctx) {
    std::vector<ProjPoint> pts;
    for (std::uint64_t c = 0; c < ctx.size(); ++c) pts.push_back(ProjPoint::affine(ctx, ctx.from_code(c)));
    pts.push_back(ProjPoint::infinity(ctx));
    return pts;
}

// Eventual image of the map: iterate S -> map(S) until it stops shrinking.
inline std::vector<std::uint8_t> periodic_flags(const FieldContext& ctx, const RationalMap& map) {
    const std::vector<ProjPoint> pts = all_points(ctx);
    std::vector<std::uint64_t> succ(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) succ[i] = point_code(ctx, eval(ctx, map, pts[i]));
    std::vector<std::uint8_t> in(pts.size(), 1);
    std::size_t size = pts.size();
    while (true) {
        std::vector<std::uint8_t> next(pts.size(), 0);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (in[i]) next[succ[i]] = 1;
        }
        const std::size_t next_size = static_cast<std::size_t>(std::count(next.begin(), next.end(), 1));
        in = std::move(next);
        if (next_size == size) break;
        size = next_size;
    }
    return in;
}

// Galois-stable H-orbits over F_{q^n}, found by scanning P^1(F_{q^(n e)}) in a
// freshly built field. Returns {all orbits, periodic orbits}.
inline std::pair<std::uint64_t, std::uint64_t> quotient_counts(const DynSystem& sys, const Subgroup& h,
                                                               std::size_t n) {
    const AutGroup& g = sys.group();
    const std::size_t deg = n * exponent(g, h);
    const FieldContext ctx = FieldContext::make(sys.p(), deg);
    const auto flags = periodic_flags(ctx, sys.map());
    std::set<std::vector<std::uint64_t>> seen;
    std::uint64_t all = 0, per = 0;
    for (const ProjPoint& q : all_points(ctx)) {
        std::vector<std::uint64_t> orb;
        for (std::size_t k : h.members) orb.push_back(point_code(ctx, eval(ctx, g.element(k), q)));
        std::sort(orb.begin(), orb.end());
        orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
        std::vector<std::uint64_t> img;
        for (std::uint64_t c : orb) img.push_back(point_code(ctx, frobenius_point(ctx, point_from_code(ctx, c), n)));
        std::sort(img.begin(), img.end());
        if (img != orb || !seen.insert(orb).second) continue;
        ++all;
        if (flags[orb.front()]) ++per;
    }
    return {all, per};
}

// Rank of an integer matrix by rational elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const mpq_class f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

// Every subset of the group closed under composition and containing the
// identity (finite, so closure under composition suffices).
inline std::set<std::vector<std::size_t>> subgroups_by_subset_scan(const AutGroup& g) {
    std::set<std::vector<std::size_t>> out;
    const std::size_t n = g.order();
    for (std::uint64_t mask = 1; mask < (1ULL << n); mask += 2) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) s.push_back(i);
        }
        bool closed = true;
        for (std::size_t a : s) {
            for (std::size_t b : s) {
                if (!(mask >> g.mul(a, b) & 1)) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed) out.insert(s);
    }
    return out;
}

}  // namespace oracle

}  // namespace testing
