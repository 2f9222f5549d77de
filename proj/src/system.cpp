#include "percount/system.hpp"

#include "percount/error.hpp"

namespace percount {

namespace {

AutGroup build_group(const RationalMap& map, const std::vector<MobiusAut>& gens,
                     const std::vector<std::string>& names, const SystemLimits& limits) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].p() != map.p()) fail(ErrorCode::InvalidArgument, "generator over a different prime");
        if (!commutes(map, gens[i])) {
            const std::string name = i < names.size() ? names[i] : "g" + std::to_string(i + 1);
            fail(ErrorCode::MapDoesNotCommute,
                 "map " + map.to_string() + " does not commute with generator " + name + " " + gens[i].to_string());
        }
    }
    return AutGroup::close_generators(map.p(), gens, names, limits.group_cap);
}

}  // namespace

DynSystem::DynSystem(RationalMap map, std::vector<MobiusAut> generators, std::vector<std::string> names,
                     SystemLimits limits)
    : map_(std::move(map)),
      generators_(std::move(generators)),
      names_(std::move(names)),
      limits_(limits),
      group_(build_group(map_, generators_, names_, limits_)),
      cache_(std::make_shared<Cache>()) {}

std::shared_ptr<const FieldContext> DynSystem::field(std::size_t degree) const {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->fields.find(degree);
    if (it != cache_->fields.end()) return it->second;
    auto ctx = std::make_shared<const FieldContext>(FieldContext::make(p(), degree, limits_.field_cap));
    cache_->fields.emplace(degree, ctx);
    return ctx;
}

std::shared_ptr<const PeriodicTable> DynSystem::periodic_table(std::size_t degree) const {
    auto ctx = field(degree);
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->tables.find(degree);
        if (it != cache_->tables.end()) return it->second;
    }
    auto table = std::make_shared<const PeriodicTable>(*ctx, map_);
    std::lock_guard lock(cache_->mutex);
    return cache_->tables.emplace(degree, std::move(table)).first->second;
}

std::uint64_t per_fix(const DynSystem& sys, std::size_t element, std::size_t n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "per_fix needs n >= 1");
    const std::size_t degree = n * sys.group().element_order(element);
    const auto ctx = sys.field(degree);
    const auto table = sys.periodic_table(degree);
    const MobiusAut& g = sys.group().element(element);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code <= ctx->size(); ++code) {
        if (!table->is_periodic(code)) continue;
        const ProjPoint q = point_from_code(*ctx, code);
        if (eval(*ctx, g, frobenius_point(*ctx, q, n)) == q) ++count;
    }
    return count;
}

std::uint64_t per_fix(const DynSystem& sys, const MobiusAut& g, std::size_t n) {
    const auto idx = sys.group().index_of(g);
    if (!idx) fail(ErrorCode::InvalidArgument, "automorphism " + g.to_string() + " is not in the group");
    return per_fix(sys, *idx, n);
}

}  // namespace percount
