#pragma once

// Dense univariate polynomials over a prime field F_p. Coefficients are stored
// ascending (constant term first) and always reduced into [0, p). The zero
// polynomial is the empty vector.

#include <cstdint>
#include <vector>

namespace percount::fp {

using Residue = std::uint64_t;
using Poly = std::vector<Residue>;

inline Residue mul_mod(Residue a, Residue b, Residue p) {
    return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % p);
}
inline Residue add_mod(Residue a, Residue b, Residue p) {
    Residue s = a + b;
    return s >= p ? s - p : s;
}
inline Residue sub_mod(Residue a, Residue b, Residue p) {
    return a >= b ? a - b : a + p - b;
}
Residue pow_mod(Residue a, std::uint64_t e, Residue p);
// Throws DivisionByZero for a == 0 (mod p).
Residue inv_mod(Residue a, Residue p);
// Reduces an arbitrary signed integer into [0, p).
Residue reduce(std::int64_t v, Residue p);

bool is_prime(std::uint64_t n);

void trim(Poly& f);
// Degree of a trimmed polynomial; -1 for zero.
int degree(const Poly& f);

Poly add(const Poly& f, const Poly& g, Residue p);
Poly sub(const Poly& f, const Poly& g, Residue p);
Poly mul(const Poly& f, const Poly& g, Residue p);
Poly scale(const Poly& f, Residue c, Residue p);
// f = q*g + r with deg r < deg g. g must be nonzero.
void divmod(const Poly& f, const Poly& g, Residue p, Poly& q, Poly& r);
Poly mod(const Poly& f, const Poly& g, Residue p);
Poly make_monic(const Poly& f, Residue p);
// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly f, Poly g, Residue p);
// base^e mod m, exponent as a small integer.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, Residue p);

// Rabin's test: f of degree n is irreducible iff x^(p^n) = x mod f and
// gcd(x^(p^(n/r)) - x, f) = 1 for every prime r dividing n.
bool is_irreducible(const Poly& f, Residue p);

// Determinant of a square matrix over F_p (row-major, consumed).
Residue determinant(std::vector<std::vector<Residue>> m, Residue p);

}  // namespace percount::fp
