#pragma once

// The bundled reference system: phi(x) = (x^3 + 2x)/(2x^2 + 1) with the Klein
// four group generated by sigma: x -> -x and tau: x -> 1/x, over F_5 and F_7.
// Published values are kept here verbatim so commands can compare against them.

#include <cstdint>
#include <string>
#include <vector>

#include "percount/gring.hpp"
#include "percount/system.hpp"

namespace percount::fixture {

inline constexpr std::uint64_t kPrimes[] = {5, 7};

// Config text for p = 5 or 7 (other primes are accepted; the map and group are
// the same integer data).
std::string reference_config(std::uint64_t p);

// Model of the induced map on P^1/H ~ P^1 in the given coordinate.
struct ExplicitQuotient {
    std::string subgroup;    // row name, e.g. "H_sigma"
    std::string coordinate;  // e.g. "u = x^2"
    std::vector<std::int64_t> numerator;    // ascending
    std::vector<std::int64_t> denominator;  // ascending
};

// H_sigma, H_sigmatau, H_tau, G in that order.
const std::vector<ExplicitQuotient>& explicit_quotients();

struct PublishedRow {
    std::string subgroup;
    std::string rational_set;  // quoted only, never computed
    std::size_t rational_count;
    std::vector<std::string> f5_set;
    std::size_t f5_count;
    std::vector<std::string> f7_set;
    std::size_t f7_count;
};

// Rows H_id, H_sigma, H_sigmatau, H_tau, G.
const std::vector<PublishedRow>& published_table();

// The quoted residual of the reference relation on the rational column.
inline constexpr int kRationalResidual = 2;

// Positions of the published rows within `subgroups` (normally
// all_subgroups(sys.group())). Throws InvalidArgument if sys does not have
// generators named sigma and tau generating a Klein four group.
std::vector<std::size_t> row_indices(const DynSystem& sys, const std::vector<Subgroup>& subgroups);

// 2 e_G - e_sigma - e_sigmatau - e_tau + e_id, aligned with `subgroups`.
RelationVector reference_relation(const DynSystem& sys, const std::vector<Subgroup>& subgroups);

// Row coefficients of the reference relation: (1, -1, -1, -1, 2).
inline constexpr int kRelationRowCoeffs[] = {1, -1, -1, -1, 2};

}  // namespace percount::fixture
