#include "percount/grp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "percount/error.hpp"

namespace percount {

bool Subgroup::contains(std::size_t g) const { return std::binary_search(members.begin(), members.end(), g); }

AutGroup AutGroup::close_generators(std::uint64_t p, std::span<const MobiusAut> gens,
                                    std::span<const std::string> names, std::size_t cap) {
    AutGroup g;
    g.p_ = p;
    std::vector<std::string> gen_names;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        gen_names.push_back(i < names.size() ? names[i] : "g" + std::to_string(i + 1));
        if (gens[i].p() != p) fail(ErrorCode::InvalidArgument, "generator over a different prime");
    }

    std::map<MobiusAut, std::size_t> index;
    g.elements_.push_back(MobiusAut::identity(p));
    g.labels_.push_back("id");
    index.emplace(g.elements_[0], 0);
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
            const MobiusAut next = compose(gens[s], g.elements_[head]);
            if (index.contains(next)) continue;
            if (g.elements_.size() >= cap) {
                fail(ErrorCode::GroupTooLarge,
                     "generated group has more than " + std::to_string(cap) + " elements");
            }
            index.emplace(next, g.elements_.size());
            g.elements_.push_back(next);
            g.labels_.push_back(head == 0 ? gen_names[s] : gen_names[s] + "." + g.labels_[head]);
        }
    }

    const std::size_t n = g.elements_.size();
    g.table_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g.table_[i][j] = index.at(compose(g.elements_[i], g.elements_[j]));
        }
    }
    g.inverse_.assign(n, 0);
    g.orders_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (g.table_[i][j] == 0) g.inverse_[i] = j;
        }
        std::size_t k = 1;
        for (std::size_t x = i; x != 0; x = g.table_[i][x]) ++k;
        g.orders_[i] = i == 0 ? 1 : k;
    }

    g.class_of_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (g.class_of_[i] != n) continue;
        std::set<std::size_t> cls;
        for (std::size_t x = 0; x < n; ++x) cls.insert(g.table_[g.table_[x][i]][g.inverse_[x]]);
        for (std::size_t m : cls) g.class_of_[m] = g.classes_.size();
        g.classes_.push_back(ConjClass{{cls.begin(), cls.end()}});
    }
    return g;
}

std::optional<std::size_t> AutGroup::index_of(const MobiusAut& g) const {
    auto it = std::find(elements_.begin(), elements_.end(), g);
    if (it == elements_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

bool AutGroup::is_abelian() const { return percount::is_abelian(*this, full_subgroup()); }

std::size_t AutGroup::exponent() const { return percount::exponent(*this, full_subgroup()); }

Subgroup AutGroup::full_subgroup() const {
    Subgroup h;
    h.members.resize(order());
    std::iota(h.members.begin(), h.members.end(), 0);
    return h;
}

Subgroup AutGroup::generated_by(std::span<const std::size_t> gens) const {
    std::vector<std::uint8_t> in(order(), 0);
    std::vector<std::size_t> members{0};
    in[0] = 1;
    // In a finite group the closure under products is already a subgroup.
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (std::size_t s : gens) {
            const std::size_t next = table_[s][members[head]];
            if (!in[next]) {
                in[next] = 1;
                members.push_back(next);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return Subgroup{std::move(members)};
}

std::vector<Subgroup> all_subgroups(const AutGroup& group) {
    std::set<Subgroup> found;
    for (std::size_t i = 0; i < group.order(); ++i) {
        const std::size_t gens[] = {i};
        found.insert(group.generated_by(gens));
    }
    // Join pairs until no new subgroup appears.
    std::vector<Subgroup> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
        std::vector<Subgroup> fresh;
        const std::vector<Subgroup> current(found.begin(), found.end());
        for (const Subgroup& a : frontier) {
            for (const Subgroup& b : current) {
                std::vector<std::size_t> gens = a.members;
                gens.insert(gens.end(), b.members.begin(), b.members.end());
                Subgroup joined = group.generated_by(gens);
                if (found.insert(joined).second) fresh.push_back(std::move(joined));
            }
        }
        frontier = std::move(fresh);
    }
    std::vector<Subgroup> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
    return out;
}

bool is_subgroup(const AutGroup& group, const Subgroup& h) {
    if (h.members.empty() || !h.contains(0)) return false;
    if (!std::is_sorted(h.members.begin(), h.members.end())) return false;
    for (std::size_t a : h.members) {
        if (!h.contains(group.inverse(a))) return false;
        for (std::size_t b : h.members) {
            if (!h.contains(group.mul(a, b))) return false;
        }
    }
    return true;
}

bool is_abelian(const AutGroup& group, const Subgroup& h) {
    for (std::size_t a : h.members) {
        for (std::size_t b : h.members) {
            if (group.mul(a, b) != group.mul(b, a)) return false;
        }
    }
    return true;
}

std::size_t exponent(const AutGroup& group, const Subgroup& h) {
    std::size_t e = 1;
    for (std::size_t a : h.members) e = std::lcm(e, group.element_order(a));
    return e;
}

std::string subgroup_label(const AutGroup& group, const Subgroup& h) {
    if (h.order() == 1) return "1";
    if (h.order() == group.order()) return "G";
    // Greedy generating set from the smallest indices, preferring an element of
    // full order when the subgroup is cyclic.
    std::vector<std::size_t> gens;
    for (std::size_t a : h.members) {
        if (group.element_order(a) == h.order()) {
            gens = {a};
            break;
        }
    }
    if (gens.empty()) {
        Subgroup cur = group.trivial_subgroup();
        for (std::size_t a : h.members) {
            if (cur.contains(a)) continue;
            gens.push_back(a);
            cur = group.generated_by(gens);
            if (cur.order() == h.order()) break;
        }
    }
    std::string out = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ",";
        out += group.label(gens[i]);
    }
    return out + ">";
}

std::vector<ProjPoint> orbit(const FieldContext& ctx, const AutGroup& group, const ProjPoint& pt,
                             const Subgroup& h) {
    std::vector<std::pair<std::uint64_t, ProjPoint>> items;
    for (std::size_t g : h.members) {
        ProjPoint img = eval(ctx, group.element(g), pt);
        items.emplace_back(point_code(ctx, img), img);
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ProjPoint> out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i == 0 || items[i].first != items[i - 1].first) out.push_back(items[i].second);
    }
    return out;
}

Subgroup stabilizer(const FieldContext& ctx, const AutGroup& group, const ProjPoint& pt, const Subgroup& h) {
    Subgroup s;
    for (std::size_t g : h.members) {
        if (eval(ctx, group.element(g), pt) == pt) s.members.push_back(g);
    }
    return s;
}

Subgroup conjugate(const AutGroup& group, const Subgroup& h, std::size_t x) {
    Subgroup out;
    for (std::size_t a : h.members) out.members.push_back(group.mul(group.mul(x, a), group.inverse(x)));
    std::sort(out.members.begin(), out.members.end());
    return out;
}

}  // namespace percount
