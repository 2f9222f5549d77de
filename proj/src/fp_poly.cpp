#include "percount/fp_poly.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

#include "percount/error.hpp"

namespace percount::fp {

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
    Residue result = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1U) result = mul_mod(result, a, p);
        a = mul_mod(a, a, p);
        e >>= 1U;
    }
    return result;
}

Residue inv_mod(Residue a, Residue p) {
    a %= p;
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p));
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    return reduce(t0, p);
}

Residue reduce(std::int64_t v, Residue p) {
    auto sp = static_cast<std::int64_t>(p);
    std::int64_t r = v % sp;
    if (r < 0) r += sp;
    return static_cast<Residue>(r);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g, Residue p) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = add_mod(r[i], g[i], p);
    trim(r);
    return r;
}

Poly sub(const Poly& f, const Poly& g, Residue p) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = sub_mod(r[i], g[i], p);
    trim(r);
    return r;
}

Poly mul(const Poly& f, const Poly& g, Residue p) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            r[i + j] = add_mod(r[i + j], mul_mod(f[i], g[j], p), p);
        }
    }
    trim(r);
    return r;
}

Poly scale(const Poly& f, Residue c, Residue p) {
    Poly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mul_mod(f[i], c, p);
    trim(r);
    return r;
}

void divmod(const Poly& f, const Poly& g, Residue p, Poly& q, Poly& r) {
    if (g.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    r = f;
    trim(r);
    const int dg = degree(g);
    if (degree(r) < dg) {
        q.clear();
        return;
    }
    q.assign(static_cast<std::size_t>(degree(r) - dg + 1), 0);
    const Residue lead_inv = inv_mod(g.back(), p);
    while (degree(r) >= dg) {
        const int shift = degree(r) - dg;
        const Residue c = mul_mod(r.back(), lead_inv, p);
        q[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= dg; ++i) {
            auto idx = static_cast<std::size_t>(i + shift);
            r[idx] = sub_mod(r[idx], mul_mod(c, g[static_cast<std::size_t>(i)], p), p);
        }
        trim(r);
    }
    trim(q);
}

Poly mod(const Poly& f, const Poly& g, Residue p) {
    Poly q, r;
    divmod(f, g, p, q, r);
    return r;
}

Poly make_monic(const Poly& f, Residue p) {
    if (f.empty()) return f;
    return scale(f, inv_mod(f.back(), p), p);
}

Poly gcd(Poly f, Poly g, Residue p) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly r = mod(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(f, p);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, Residue p) {
    Poly result = mod(Poly{1}, m, p);
    Poly b = mod(base, m, p);
    while (e > 0) {
        if (e & 1U) result = mod(mul(result, b, p), m, p);
        b = mod(mul(b, b, p), m, p);
        e >>= 1U;
    }
    return result;
}

namespace {

// x^(p^k) mod f by k successive p-th powers.
Poly frobenius_power_of_x(std::uint64_t k, const Poly& f, Residue p) {
    Poly x = mod(Poly{0, 1}, f, p);
    for (std::uint64_t i = 0; i < k; ++i) x = powmod(x, p, f, p);
    return x;
}

}  // namespace

bool is_irreducible(const Poly& f_in, Residue p) {
    Poly f = f_in;
    trim(f);
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly x{0, 1};
    if (sub(frobenius_power_of_x(static_cast<std::uint64_t>(n), f, p), mod(x, f, p), p).size() != 0) {
        return false;
    }
    int m = n;
    for (int r = 2; r <= m; ++r) {
        if (m % r != 0) continue;
        while (m % r == 0) m /= r;
        Poly h = sub(frobenius_power_of_x(static_cast<std::uint64_t>(n / r), f, p), x, p);
        if (degree(gcd(h, f, p)) != 0) return false;
    }
    return true;
}

Residue determinant(std::vector<std::vector<Residue>> m, Residue p) {
    const std::size_t n = m.size();
    Residue det = 1 % p;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = sub_mod(0, det, p);
        }
        det = mul_mod(det, m[col][col], p);
        const Residue inv = inv_mod(m[col][col], p);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Residue factor = mul_mod(m[row][col], inv, p);
            for (std::size_t k = col; k < n; ++k) {
                m[row][k] = sub_mod(m[row][k], mul_mod(factor, m[col][k], p), p);
            }
        }
    }
    return det;
}

}  // namespace percount::fp
