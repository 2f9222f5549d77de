#pragma once

// A dynamical system (P^1, phi, G): a map over F_p together with a finite
// group of automorphisms commuting with it. Field contexts and periodic tables
// are built on demand per field degree and shared between callers.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "percount/gf.hpp"
#include "percount/grp.hpp"
#include "percount/p1dyn.hpp"

namespace percount {

struct SystemLimits {
    std::uint64_t field_cap = kDefaultFieldCap;
    std::size_t group_cap = kDefaultGroupCap;
};

class DynSystem {
public:
    // Throws NotPrime, MapDoesNotCommute, GroupTooLarge.
    DynSystem(RationalMap map, std::vector<MobiusAut> generators, std::vector<std::string> names = {},
              SystemLimits limits = {});

    std::uint64_t p() const { return map_.p(); }
    const RationalMap& map() const { return map_; }
    const std::vector<MobiusAut>& generators() const { return generators_; }
    const std::vector<std::string>& generator_names() const { return names_; }
    const AutGroup& group() const { return group_; }
    const SystemLimits& limits() const { return limits_; }

    // F_{p^degree}; throws FieldTooLarge.
    std::shared_ptr<const FieldContext> field(std::size_t degree) const;
    // Functional graph of the map on all of P^1(F_{p^degree}).
    std::shared_ptr<const PeriodicTable> periodic_table(std::size_t degree) const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::size_t, std::shared_ptr<const FieldContext>> fields;
        std::map<std::size_t, std::shared_ptr<const PeriodicTable>> tables;
    };

    RationalMap map_;
    std::vector<MobiusAut> generators_;
    std::vector<std::string> names_;
    SystemLimits limits_;
    AutGroup group_;
    std::shared_ptr<Cache> cache_;
};

// |PerFix(g sigma^n)|: periodic Q with g(Q^(sigma^n)) = Q (Frobenius first,
// then g). Searches P^1(F_{q^(n ord g)}), which contains every solution.
std::uint64_t per_fix(const DynSystem& sys, std::size_t element, std::size_t n);
std::uint64_t per_fix(const DynSystem& sys, const MobiusAut& g, std::size_t n);

}  // namespace percount
