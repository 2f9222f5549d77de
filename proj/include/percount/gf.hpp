#pragma once

// Arithmetic in F_p and in a working extension F_{p^N}. Every subfield
// F_{p^m} (m | N) is handled inside the working field as the fixed set of the
// m-th Frobenius power; there are no embedding maps.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "percount/fp_poly.hpp"

namespace percount {

inline constexpr std::size_t kMaxFieldDegree = 32;
inline constexpr std::uint64_t kDefaultFieldCap = 10'000'000;

class FieldContext;

// Element of F_{p^N}: N residues in [0, p), ascending powers of the generator.
class FieldElement {
public:
    FieldElement() = default;

    std::size_t degree() const { return n_; }
    std::span<const std::uint32_t> coeffs() const { return {c_.data(), n_}; }
    std::uint32_t operator[](std::size_t i) const { return c_[i]; }
    bool is_zero() const;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    friend class FieldContext;
    std::array<std::uint32_t, kMaxFieldDegree> c_{};
    std::uint8_t n_ = 0;
};

class FieldContext {
public:
    // Builds F_{p^N} with the smallest monic irreducible modulus, where
    // candidates are ordered by their code sum c_i p^i (the coefficient of
    // x^(N-1) is most significant). For N = 1 the modulus is x.
    static FieldContext make(std::uint64_t p, std::size_t degree,
                             std::uint64_t cap = kDefaultFieldCap);

    std::uint64_t p() const { return p_; }
    std::size_t degree() const { return n_; }
    std::uint64_t cap() const { return cap_; }
    // p^N
    std::uint64_t size() const { return size_; }
    // Monic, ascending, length N + 1.
    const fp::Poly& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_residue(std::int64_t r) const;
    FieldElement from_coeffs(std::span<const std::int64_t> coeffs) const;
    // The class of x in F_p[x]/(modulus).
    FieldElement generator() const;

    // Bijection with [0, p^N): code = sum c_i p^i.
    std::uint64_t code(const FieldElement& a) const;
    FieldElement from_code(std::uint64_t code) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement scale(const FieldElement& a, std::uint64_t residue) const;
    // Throws DivisionByZero.
    FieldElement inv(const FieldElement& a) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(const FieldElement& a, const mpz_class& e) const;
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;

    // a^(p^e); e is reduced mod N.
    FieldElement frobenius(const FieldElement& a, std::uint64_t e) const;

    // True iff a^(p^m) = a. Throws NotADivisor unless m | N.
    bool in_subfield(const FieldElement& a, std::size_t m) const;
    // The p^m elements of F_{p^m}, sorted by code. Throws NotADivisor,
    // FieldTooLarge.
    std::vector<FieldElement> enumerate_subfield(std::size_t m) const;

    // Throws NotADivisor unless m | N.
    void require_divisor(std::size_t m) const;

private:
    FieldContext() = default;
    FieldElement blank() const;
    FieldElement apply_matrix(const std::vector<std::uint32_t>& m, const FieldElement& a) const;

    std::uint64_t p_ = 0;
    std::size_t n_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t cap_ = kDefaultFieldCap;
    fp::Poly modulus_;
    // frob_[e] is the N x N matrix (row-major) of a -> a^(p^e), e in [0, N).
    std::vector<std::vector<std::uint32_t>> frob_;
};

// p^e, or 0 if it exceeds cap (or overflows).
std::uint64_t checked_power(std::uint64_t p, std::size_t e, std::uint64_t cap);

}  // namespace percount
