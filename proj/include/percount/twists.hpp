#pragma once

// G-twists of P^1 for abelian G. With trivial Galois action a cocycle is a
// homomorphism from the procyclic Galois group, fixed by the image c of the
// Frobenius generator; the twist's rational points are the Q with
// Q = c(Q^sigma). Twisted varieties are never built explicitly.

#include <cstdint>
#include <vector>

#include "percount/quotcount.hpp"
#include "percount/system.hpp"

namespace percount {

struct Twist {
    std::size_t chi_image;  // group element index
};

// One twist per group element, in element order. Throws NotAbelian.
std::vector<Twist> enumerate_twists(const AutGroup& group);

// Points Q of P^1 over F_{q^(n ord c)} with Q = c(Q^(sigma^n)); in Periodic
// mode only periodic Q count. n > 1 treats F_{q^n} as the ground field.
std::uint64_t twisted_count(const DynSystem& sys, const Twist& t, std::size_t n = 1,
                            CountMode mode = CountMode::Periodic);
std::uint64_t twisted_periodic_count(const DynSystem& sys, const Twist& t, std::size_t n = 1);

struct TwistTerm {
    Twist twist;
    std::uint64_t count;
};

struct TwistAverageReport {
    std::size_t n;
    CountMode mode;
    std::uint64_t quotient_count;  // |Per((V/G)(F_{q^n}))| or |(V/G)(F_{q^n})|
    std::vector<TwistTerm> terms;
    std::uint64_t twist_sum;
    std::size_t group_order;
    bool holds() const { return twist_sum == quotient_count * group_order; }
};

// Both sides of |Per((V/G)(F_q))| = |G|^-1 sum_chi |Per(V^chi(F_q))|.
// Throws NotAbelian; InvariantViolation if the twist sum is not divisible by
// |G| or a twisted count disagrees with per_fix.
TwistAverageReport verify_theorem1(const DynSystem& sys, std::size_t n = 1, CountMode mode = CountMode::Periodic);

struct OrbitIncidence {
    std::uint64_t representative;
    std::size_t orbit_size;
    std::size_t stabilizer_order;
    bool periodic;
    // Twists for which each orbit member is a rational point, in member order.
    std::vector<std::size_t> per_member;
    std::size_t total;
    bool consistent;  // every member hits |G_Q| twists and total == |G|
};

struct IncidenceReport {
    std::size_t n;
    std::size_t search_degree;
    std::size_t group_order;
    std::vector<OrbitIncidence> orbits;
    bool all_consistent() const;
};

// For every Galois-stable G-orbit over F_{q^n}: each member is rational on
// exactly |G_Q| twists, and the orbit total is |G|. Throws NotAbelian.
IncidenceReport incidence_check(const DynSystem& sys, std::size_t n = 1);

}  // namespace percount
