#pragma once

// Point and periodic-point counts on the quotients P^1/H over F_{q^n}.
//
// A point of (P^1/H)(F_{q^n}) is an H-orbit mapped onto itself by sigma^n. If
// Q^(sigma^n) = h(Q) then Q lies in F_{q^(n ord h)}, so every such orbit lives
// in P^1(F_{q^(n e)}) with e the exponent of H.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "percount/gring.hpp"
#include "percount/system.hpp"

namespace percount {

enum class CountMode { Periodic, AllPoints };

std::string_view mode_name(CountMode mode);

struct StableOrbit {
    std::uint64_t representative;  // smallest point code in the search field
    std::size_t size;
    std::size_t stabilizer_order;
    bool periodic;
};

struct OrbitScan {
    std::size_t search_degree;  // n * exponent(H)
    std::vector<StableOrbit> orbits;
};

// All sigma^n-stable H-orbits in P^1(F_{q^(n e)}). Throws FieldTooLarge, and
// InvariantViolation if an orbit mixes periodic and non-periodic points.
OrbitScan stable_orbits(const DynSystem& sys, const Subgroup& h, std::size_t n);

// |(P^1/H)(F_{q^n})|
std::uint64_t quotient_points(const DynSystem& sys, const Subgroup& h, std::size_t n);
// |Per(P^1/H)(F_{q^n})|
std::uint64_t quotient_periodic(const DynSystem& sys, const Subgroup& h, std::size_t n);
std::uint64_t quotient_count(const DynSystem& sys, const Subgroup& h, std::size_t n, CountMode mode);

struct CountTable {
    CountMode mode;
    std::size_t nmax;
    // entries[(subgroup index, n)]
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> entries;

    std::uint64_t at(std::size_t subgroup, std::size_t n) const { return entries.at({subgroup, n}); }
};

CountTable count_table(const DynSystem& sys, const std::vector<Subgroup>& subgroups, std::size_t nmax, CountMode mode);

// residual(n) = sum_H n_H * count(H, n) for n = 1..nmax.
std::vector<mpz_class> verify_relation(const DynSystem& sys, const std::vector<Subgroup>& subgroups,
                                       const RelationVector& r, std::size_t nmax, CountMode mode);
std::vector<mpz_class> relation_residuals(const CountTable& table, const RelationVector& r);

struct ExplicitCheck {
    std::uint64_t explicit_count;
    std::uint64_t orbit_count;
    bool agrees() const { return explicit_count == orbit_count; }
};

// Periodic points of a user-supplied model of the induced map on P^1/H ~ P^1,
// over F_{q^n}, against the orbit count.
ExplicitCheck compare_explicit(const DynSystem& sys, const RationalMap& explicit_map, const Subgroup& h,
                               std::size_t n);
// As compare_explicit, but throws Mismatch (with both counts) on disagreement.
bool cross_check_explicit(const DynSystem& sys, const RationalMap& explicit_map, const Subgroup& h,
                          std::size_t n);

}  // namespace percount
