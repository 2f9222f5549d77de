#include "percount/gf.hpp"

#include <algorithm>
#include <string>

#include "percount/error.hpp"

namespace percount {

using fp::Residue;

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.begin() + n_, [](std::uint32_t v) { return v == 0; });
}

std::uint64_t checked_power(std::uint64_t p, std::size_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > cap / p) return 0;
        r *= p;
    }
    return r <= cap ? r : 0;
}

FieldContext FieldContext::make(std::uint64_t p, std::size_t degree, std::uint64_t cap) {
    if (!fp::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (degree == 0) fail(ErrorCode::InvalidArgument, "field degree must be positive");
    const std::uint64_t size = checked_power(p, degree, cap);
    if (degree > kMaxFieldDegree || p > UINT32_MAX || size == 0) {
        fail(ErrorCode::FieldTooLarge, "F_" + std::to_string(p) + "^" + std::to_string(degree) +
                                           " exceeds the field cap " + std::to_string(cap));
    }

    FieldContext ctx;
    ctx.p_ = p;
    ctx.n_ = degree;
    ctx.size_ = size;
    ctx.cap_ = cap;

    if (degree == 1) {
        ctx.modulus_ = {0, 1};
    } else {
        for (std::uint64_t c = 0; c < size; ++c) {
            fp::Poly f(degree + 1, 0);
            std::uint64_t rest = c;
            for (std::size_t i = 0; i < degree; ++i) {
                f[i] = rest % p;
                rest /= p;
            }
            f[degree] = 1;
            if (fp::is_irreducible(f, p)) {
                ctx.modulus_ = std::move(f);
                break;
            }
        }
    }

    // Column i of the Frobenius matrix is x^(i p) mod modulus.
    const std::size_t n = degree;
    ctx.frob_.assign(n, std::vector<std::uint32_t>(n * n, 0));
    for (std::size_t i = 0; i < n; ++i) ctx.frob_[0][i * n + i] = 1;
    if (n > 1) {
        const fp::Poly xp = fp::powmod(fp::Poly{0, 1}, p, ctx.modulus_, p);
        fp::Poly col{1};
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < col.size(); ++j) {
                ctx.frob_[1][j * n + i] = static_cast<std::uint32_t>(col[j]);
            }
            col = fp::mod(fp::mul(col, xp, p), ctx.modulus_, p);
        }
        for (std::size_t e = 2; e < n; ++e) {
            for (std::size_t i = 0; i < n; ++i) {
                FieldElement prev = ctx.blank();
                for (std::size_t j = 0; j < n; ++j) prev.c_[j] = ctx.frob_[e - 1][j * n + i];
                const FieldElement next = ctx.apply_matrix(ctx.frob_[1], prev);
                for (std::size_t j = 0; j < n; ++j) ctx.frob_[e][j * n + i] = next.c_[j];
            }
        }
    }
    return ctx;
}

FieldElement FieldContext::blank() const {
    FieldElement e;
    e.n_ = static_cast<std::uint8_t>(n_);
    return e;
}

FieldElement FieldContext::zero() const { return blank(); }

FieldElement FieldContext::one() const { return from_residue(1); }

FieldElement FieldContext::from_residue(std::int64_t r) const {
    FieldElement e = blank();
    e.c_[0] = static_cast<std::uint32_t>(fp::reduce(r, p_));
    return e;
}

FieldElement FieldContext::from_coeffs(std::span<const std::int64_t> coeffs) const {
    fp::Poly f;
    f.reserve(coeffs.size());
    for (std::int64_t c : coeffs) f.push_back(fp::reduce(c, p_));
    fp::trim(f);
    f = fp::mod(f, modulus_, p_);
    FieldElement e = blank();
    for (std::size_t i = 0; i < f.size(); ++i) e.c_[i] = static_cast<std::uint32_t>(f[i]);
    return e;
}

FieldElement FieldContext::generator() const {
    const std::int64_t x[] = {0, 1};
    return from_coeffs(x);
}

std::uint64_t FieldContext::code(const FieldElement& a) const {
    std::uint64_t c = 0;
    for (std::size_t i = n_; i-- > 0;) c = c * p_ + a.c_[i];
    return c;
}

FieldElement FieldContext::from_code(std::uint64_t code) const {
    FieldElement e = blank();
    for (std::size_t i = 0; i < n_; ++i) {
        e.c_[i] = static_cast<std::uint32_t>(code % p_);
        code /= p_;
    }
    return e;
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = blank();
    for (std::size_t i = 0; i < n_; ++i) r.c_[i] = static_cast<std::uint32_t>(fp::add_mod(a.c_[i], b.c_[i], p_));
    return r;
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = blank();
    for (std::size_t i = 0; i < n_; ++i) r.c_[i] = static_cast<std::uint32_t>(fp::sub_mod(a.c_[i], b.c_[i], p_));
    return r;
}

FieldElement FieldContext::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FieldContext::scale(const FieldElement& a, std::uint64_t residue) const {
    FieldElement r = blank();
    residue %= p_;
    for (std::size_t i = 0; i < n_; ++i) r.c_[i] = static_cast<std::uint32_t>(fp::mul_mod(a.c_[i], residue, p_));
    return r;
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
    std::array<Residue, 2 * kMaxFieldDegree> t{};
    for (std::size_t i = 0; i < n_; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            t[i + j] = fp::add_mod(t[i + j], fp::mul_mod(a.c_[i], b.c_[j], p_), p_);
        }
    }
    // Reduce by the monic modulus from the top down.
    for (std::size_t k = 2 * n_ - 1; k-- > n_;) {
        const Residue c = t[k];
        if (c == 0) continue;
        t[k] = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            t[k - n_ + i] = fp::sub_mod(t[k - n_ + i], fp::mul_mod(c, modulus_[i], p_), p_);
        }
    }
    FieldElement r = blank();
    if (n_ == 1) {
        // modulus x: x reduces to 0, so only the constant term survives.
        r.c_[0] = static_cast<std::uint32_t>(t[0]);
        return r;
    }
    for (std::size_t i = 0; i < n_; ++i) r.c_[i] = static_cast<std::uint32_t>(t[i]);
    return r;
}

FieldElement FieldContext::inv(const FieldElement& a) const {
    if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero field element");
    if (n_ == 1) return from_residue(static_cast<std::int64_t>(fp::inv_mod(a.c_[0], p_)));
    // Extended Euclid: s*a + t*modulus = 1.
    fp::Poly r0 = modulus_;
    fp::Poly r1(a.c_.begin(), a.c_.begin() + n_);
    fp::trim(r1);
    fp::Poly s0, s1{1};
    while (!r1.empty()) {
        fp::Poly q, r;
        fp::divmod(r0, r1, p_, q, r);
        fp::Poly s = fp::sub(s0, fp::mul(q, s1, p_), p_);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant since the modulus is irreducible.
    const Residue c = fp::inv_mod(r0[0], p_);
    s0 = fp::mod(fp::scale(s0, c, p_), modulus_, p_);
    FieldElement e = blank();
    for (std::size_t i = 0; i < s0.size(); ++i) e.c_[i] = static_cast<std::uint32_t>(s0[i]);
    return e;
}

FieldElement FieldContext::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

FieldElement FieldContext::pow(const FieldElement& a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), mpz_class(-e));
    FieldElement result = one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mul(result, result);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
    }
    return result;
}

FieldElement FieldContext::pow(const FieldElement& a, std::uint64_t e) const {
    FieldElement result = one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

FieldElement FieldContext::apply_matrix(const std::vector<std::uint32_t>& m, const FieldElement& a) const {
    FieldElement r = blank();
    for (std::size_t j = 0; j < n_; ++j) {
        Residue acc = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            acc = fp::add_mod(acc, fp::mul_mod(m[j * n_ + i], a.c_[i], p_), p_);
        }
        r.c_[j] = static_cast<std::uint32_t>(acc);
    }
    return r;
}

FieldElement FieldContext::frobenius(const FieldElement& a, std::uint64_t e) const {
    const std::size_t k = static_cast<std::size_t>(e % n_);
    if (k == 0) return a;
    return apply_matrix(frob_[k], a);
}

void FieldContext::require_divisor(std::size_t m) const {
    if (m == 0 || n_ % m != 0) {
        fail(ErrorCode::NotADivisor,
             std::to_string(m) + " does not divide the field degree " + std::to_string(n_));
    }
}

bool FieldContext::in_subfield(const FieldElement& a, std::size_t m) const {
    require_divisor(m);
    return frobenius(a, m) == a;
}

std::vector<FieldElement> FieldContext::enumerate_subfield(std::size_t m) const {
    require_divisor(m);
    if (checked_power(p_, m, cap_) == 0) {
        fail(ErrorCode::FieldTooLarge, "subfield of degree " + std::to_string(m) + " exceeds the field cap");
    }
    // F_{p^m} is the kernel of (Frob^m - I), an m-dimensional F_p-subspace.
    const std::size_t n = n_;
    std::vector<std::vector<Residue>> a(n, std::vector<Residue>(n, 0));
    const auto& f = frob_[m % n];
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            a[j][i] = fp::sub_mod(f[j * n + i], i == j ? 1 : 0, p_);
        }
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        const Residue inv = fp::inv_mod(a[row][col], p_);
        for (auto& v : a[row]) v = fp::mul_mod(v, inv, p_);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Residue factor = a[r][col];
            for (std::size_t k = 0; k < n; ++k) a[r][k] = fp::sub_mod(a[r][k], fp::mul_mod(factor, a[row][k], p_), p_);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<FieldElement> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        FieldElement v = blank();
        v.c_[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
            v.c_[pivot_cols[r]] = static_cast<std::uint32_t>(fp::sub_mod(0, a[r][free], p_));
        }
        basis.push_back(v);
    }
    if (basis.size() != m) fail(ErrorCode::InvariantViolation, "Frobenius fixed space has the wrong dimension");

    std::vector<FieldElement> out;
    const std::uint64_t count = checked_power(p_, m, cap_);
    out.reserve(count);
    std::vector<std::uint64_t> digits(m, 0);
    FieldElement cur = zero();
    for (std::uint64_t k = 0; k < count; ++k) {
        out.push_back(cur);
        // Odometer step: add basis[i] and carry.
        for (std::size_t i = 0; i < m; ++i) {
            cur = add(cur, basis[i]);
            if (++digits[i] < p_) break;
            digits[i] = 0;
        }
    }
    std::sort(out.begin(), out.end(),
              [this](const FieldElement& x, const FieldElement& y) { return code(x) < code(y); });
    return out;
}

}  // namespace percount
