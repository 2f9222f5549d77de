#pragma once

// Finite groups of Mobius automorphisms: closure of generators, composition
// table, subgroup lattice, conjugacy classes, and the action on points.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "percount/gf.hpp"
#include "percount/p1dyn.hpp"

namespace percount {

inline constexpr std::size_t kDefaultGroupCap = 64;

// Sorted indices into AutGroup elements; always contains the identity (0).
struct Subgroup {
    std::vector<std::size_t> members;

    std::size_t order() const { return members.size(); }
    bool contains(std::size_t g) const;
    friend bool operator==(const Subgroup&, const Subgroup&) = default;
    friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

struct ConjClass {
    std::vector<std::size_t> members;
};

class AutGroup {
public:
    // BFS closure: identity first, then new elements s o e for each generator s
    // in order. Names label the generators (default g1, g2, ...).
    // Throws GroupTooLarge if the closure exceeds cap.
    static AutGroup close_generators(std::uint64_t p, std::span<const MobiusAut> gens,
                                     std::span<const std::string> names = {},
                                     std::size_t cap = kDefaultGroupCap);

    std::uint64_t p() const { return p_; }
    std::size_t order() const { return elements_.size(); }
    const MobiusAut& element(std::size_t i) const { return elements_[i]; }
    const std::vector<MobiusAut>& elements() const { return elements_; }
    // Word in the generator names; "." is composition, "id" the identity.
    const std::string& label(std::size_t i) const { return labels_[i]; }
    std::optional<std::size_t> index_of(const MobiusAut& g) const;

    // Index of element(i) o element(j).
    std::size_t mul(std::size_t i, std::size_t j) const { return table_[i][j]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }
    std::size_t inverse(std::size_t i) const { return inverse_[i]; }

    std::size_t element_order(std::size_t i) const { return orders_[i]; }
    bool is_abelian() const;
    std::size_t exponent() const;

    // Classes ordered by smallest member; the identity class comes first.
    const std::vector<ConjClass>& conjugacy_classes() const { return classes_; }
    std::size_t class_of(std::size_t i) const { return class_of_[i]; }

    Subgroup trivial_subgroup() const { return Subgroup{{0}}; }
    Subgroup full_subgroup() const;
    Subgroup generated_by(std::span<const std::size_t> gens) const;

private:
    AutGroup() = default;

    std::uint64_t p_ = 0;
    std::vector<MobiusAut> elements_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> orders_;
    std::vector<ConjClass> classes_;
    std::vector<std::size_t> class_of_;
};

// Every subgroup exactly once, ordered by order and then by member indices.
std::vector<Subgroup> all_subgroups(const AutGroup& group);

bool is_subgroup(const AutGroup& group, const Subgroup& h);
bool is_abelian(const AutGroup& group, const Subgroup& h);
// lcm of the element orders of h.
std::size_t exponent(const AutGroup& group, const Subgroup& h);
// "1" for the trivial subgroup, "G" for the whole group, otherwise "<a,b>"
// with a short generating set.
std::string subgroup_label(const AutGroup& group, const Subgroup& h);

// Orbit of pt under h, sorted by point code.
std::vector<ProjPoint> orbit(const FieldContext& ctx, const AutGroup& group, const ProjPoint& pt,
                             const Subgroup& h);
Subgroup stabilizer(const FieldContext& ctx, const AutGroup& group, const ProjPoint& pt, const Subgroup& h);

// x h x^-1 for x in the group.
Subgroup conjugate(const AutGroup& group, const Subgroup& h, std::size_t x);

}  // namespace percount
