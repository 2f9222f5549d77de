#pragma once

// System configuration files. The grammar is line based:
//
//   # comment
//   [field]
//   p = 5
//   [map]
//   numerator = [0, 2, 0, 1]      # ascending: x^3 + 2x
//   denominator = [1, 0, 2]       # 2x^2 + 1
//   [group]
//   sigma = [[4, 0], [0, 1]]      # x -> (4x + 0)/(0x + 1)
//   tau = [[0, 1], [1, 0]]
//   [options]
//   nmax = 3
//   zeta_order = 3
//   field_cap = 10000000
//   group_cap = 64
//
// `numerator = identity` (without a denominator) selects the identity map.
// Integers only; negative values are reduced mod p. Generator order in [group]
// is preserved and names become labels.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "percount/system.hpp"
#include "percount/zeta.hpp"

namespace percount {

inline constexpr std::size_t kDefaultNmax = 3;

struct GeneratorSpec {
    std::string name;
    std::array<std::int64_t, 4> matrix;  // a, b, c, d
};

struct SystemConfig {
    std::uint64_t p = 0;
    bool identity_map = false;
    std::vector<std::int64_t> numerator;
    std::vector<std::int64_t> denominator;
    std::vector<GeneratorSpec> generators;
    std::size_t nmax = kDefaultNmax;
    std::size_t zeta_order = kDefaultZetaOrder;
    std::uint64_t field_cap = kDefaultFieldCap;
    std::size_t group_cap = kDefaultGroupCap;

    // Filled in by validate_config.
    std::size_t group_order = 0;
    std::size_t group_exponent = 0;
    // nmax * exponent(G): the largest field any count needs.
    std::size_t working_degree = 0;
};

// Syntax only; throws ParseError with a line number.
SystemConfig parse_config_syntax(std::string_view text);
// Builds the system once to surface NotPrime, NotAMorphism, GroupTooLarge,
// MapDoesNotCommute and FieldTooLarge, and fills the derived fields.
void validate_config(SystemConfig& cfg);
// parse_config_syntax followed by validate_config.
SystemConfig parse_config(std::string_view text);

RationalMap build_map(const SystemConfig& cfg);
DynSystem build_system(const SystemConfig& cfg);

}  // namespace percount
