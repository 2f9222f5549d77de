#include "percount/gring.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "percount/error.hpp"

namespace percount {

GroupRingElt group_ring_mul(const AutGroup& group, const GroupRingElt& a, const GroupRingElt& b) {
    GroupRingElt r{std::vector<mpq_class>(group.order(), 0)};
    for (std::size_t i = 0; i < group.order(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < group.order(); ++j) {
            if (b.coeffs[j] == 0) continue;
            r.coeffs[group.mul(i, j)] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return r;
}

GroupRingElt idempotent(const AutGroup& group, const Subgroup& h) {
    GroupRingElt e{std::vector<mpq_class>(group.order(), 0)};
    const mpq_class w(1, static_cast<unsigned long>(h.order()));
    for (std::size_t m : h.members) e.coeffs[m] = w;
    return e;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
    return *this;
}

ClassFunction operator*(std::int64_t k, ClassFunction a) {
    for (auto& v : a.values) v *= k;
    return a;
}

bool ClassFunction::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; });
}

ClassFunction zero_class_function(const AutGroup& group) {
    return ClassFunction{std::vector<std::int64_t>(group.conjugacy_classes().size(), 0)};
}

std::int64_t value_at(const AutGroup& group, const ClassFunction& f, std::size_t element) {
    return f.values[group.class_of(element)];
}

InducedCharacter induced_trivial_character(const AutGroup& group, const Subgroup& h) {
    std::set<std::vector<std::size_t>> cosets;
    for (std::size_t x = 0; x < group.order(); ++x) {
        std::vector<std::size_t> c;
        for (std::size_t m : h.members) c.push_back(group.mul(x, m));
        std::sort(c.begin(), c.end());
        cosets.insert(std::move(c));
    }
    std::vector<std::int64_t> by_element(group.order(), 0);
    for (std::size_t g = 0; g < group.order(); ++g) {
        for (const auto& c : cosets) {
            // gxH = xH iff g x lies in xH.
            if (std::binary_search(c.begin(), c.end(), group.mul(g, c.front()))) ++by_element[g];
        }
    }
    ClassFunction f = zero_class_function(group);
    for (std::size_t k = 0; k < group.conjugacy_classes().size(); ++k) {
        const auto& members = group.conjugacy_classes()[k].members;
        f.values[k] = by_element[members.front()];
        for (std::size_t m : members) {
            if (by_element[m] != f.values[k]) {
                fail(ErrorCode::InvariantViolation, "induced character is not a class function");
            }
        }
    }
    return InducedCharacter{h, std::move(f)};
}

bool RelationVector::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const mpz_class& v) { return v == 0; });
}

RelationVector canonicalize(RelationVector r) {
    mpz_class g = 0;
    for (const auto& v : r.coeffs) g = gcd(g, v);
    if (g == 0) return r;
    auto first = std::find_if(r.coeffs.begin(), r.coeffs.end(), [](const mpz_class& v) { return v != 0; });
    if (*first < 0) g = -g;
    for (auto& v : r.coeffs) v /= g;
    return r;
}

bool is_sim_zero(const AutGroup& group, const std::vector<Subgroup>& subgroups, const RelationVector& r) {
    if (r.coeffs.size() != subgroups.size()) {
        fail(ErrorCode::InvalidArgument, "relation length does not match the subgroup list");
    }
    std::vector<mpz_class> total(group.conjugacy_classes().size(), 0);
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        if (r.coeffs[i] == 0) continue;
        const ClassFunction psi = induced_trivial_character(group, subgroups[i]).character;
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += r.coeffs[i] * psi.values[k];
    }
    return std::all_of(total.begin(), total.end(), [](const mpz_class& v) { return v == 0; });
}

namespace {

using Row = std::vector<mpz_class>;

// Integer row echelon form on columns [0, ncols) by Euclidean row operations.
// Returns the number of pivot rows; rows below are zero on those columns.
std::size_t echelonize(std::vector<Row>& rows, std::size_t ncols, std::vector<std::size_t>* pivot_cols = nullptr) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        bool have_pivot = false;
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = row; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
            }
            if (best == rows.size()) break;
            have_pivot = true;
            std::swap(rows[row], rows[best]);
            bool clean = true;
            for (std::size_t r = row + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[row][col].get_mpz_t());
                for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= q * rows[row][k];
                if (rows[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (have_pivot) {
            if (pivot_cols) pivot_cols->push_back(col);
            ++row;
        }
    }
    return row;
}

}  // namespace

std::vector<std::vector<mpz_class>> hermite_normal_form(std::vector<std::vector<mpz_class>> rows) {
    if (rows.empty()) return rows;
    const std::size_t width = rows.front().size();
    std::vector<std::size_t> pivots;
    const std::size_t rank = echelonize(rows, width, &pivots);
    rows.resize(rank);
    for (std::size_t r = 0; r < rank; ++r) {
        const std::size_t col = pivots[r];
        if (rows[r][col] < 0) {
            for (auto& v : rows[r]) v = -v;
        }
        for (std::size_t above = 0; above < r; ++above) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[above][col].get_mpz_t(), rows[r][col].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t k = 0; k < width; ++k) rows[above][k] -= q * rows[r][k];
        }
    }
    return rows;
}

std::vector<RelationVector> relation_lattice_basis(const AutGroup& group, const std::vector<Subgroup>& subgroups) {
    const std::size_t s = subgroups.size();
    const std::size_t c = group.conjugacy_classes().size();
    // [psi_H | e_H]: the unimodular row operations that clear the character
    // block leave a Z-basis of the left kernel in the identity block.
    std::vector<Row> rows(s, Row(c + s, 0));
    for (std::size_t i = 0; i < s; ++i) {
        const ClassFunction psi = induced_trivial_character(group, subgroups[i]).character;
        for (std::size_t k = 0; k < c; ++k) rows[i][k] = psi.values[k];
        rows[i][c + i] = 1;
    }
    const std::size_t rank = echelonize(rows, c);
    std::vector<Row> kernel;
    for (std::size_t r = rank; r < s; ++r) kernel.emplace_back(rows[r].begin() + static_cast<std::ptrdiff_t>(c), rows[r].end());
    std::vector<RelationVector> out;
    for (auto& row : hermite_normal_form(std::move(kernel))) {
        RelationVector v{std::move(row)};
        if (!is_sim_zero(group, subgroups, v)) {
            fail(ErrorCode::InvariantViolation, "kernel vector fails the character test");
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

struct PartitionSearch {
    const AutGroup& group;
    const std::vector<Subgroup>& subgroups;
    std::vector<std::size_t> candidates;  // nontrivial proper subgroups
    std::vector<std::uint8_t> covered;
    std::vector<std::size_t> chosen;
    std::vector<std::vector<std::size_t>> found;

    void run() {
        const auto next = std::find(covered.begin() + 1, covered.end(), 0);
        if (next == covered.end()) {
            if (chosen.size() >= 2) {
                auto parts = chosen;
                std::sort(parts.begin(), parts.end());
                found.push_back(std::move(parts));
            }
            return;
        }
        const auto element = static_cast<std::size_t>(next - covered.begin());
        for (std::size_t idx : candidates) {
            const Subgroup& h = subgroups[idx];
            if (!h.contains(element)) continue;
            const bool disjoint = std::none_of(h.members.begin() + 1, h.members.end(),
                                               [this](std::size_t m) { return covered[m] != 0; });
            if (!disjoint) continue;
            for (std::size_t m : h.members) covered[m] = 1;
            chosen.push_back(idx);
            run();
            chosen.pop_back();
            for (std::size_t m : h.members) covered[m] = 0;
            covered[0] = 1;
        }
    }
};

}  // namespace

std::vector<PartitionRelation> partition_relations(const AutGroup& group, const std::vector<Subgroup>& subgroups) {
    std::size_t trivial = subgroups.size(), full = subgroups.size();
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        if (subgroups[i].order() == 1) trivial = i;
        if (subgroups[i].order() == group.order()) full = i;
    }
    if (group.order() == 1 || trivial == subgroups.size() || full == subgroups.size()) return {};

    PartitionSearch search{group, subgroups, {}, std::vector<std::uint8_t>(group.order(), 0), {}, {}};
    search.covered[0] = 1;
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        if (i != trivial && i != full) search.candidates.push_back(i);
    }
    search.run();

    std::vector<PartitionRelation> out;
    for (auto& parts : search.found) {
        RelationVector r{std::vector<mpz_class>(subgroups.size(), 0)};
        r.coeffs[full] += static_cast<unsigned long>(group.order());
        r.coeffs[trivial] += static_cast<unsigned long>(parts.size() - 1);
        for (std::size_t idx : parts) r.coeffs[idx] -= static_cast<unsigned long>(subgroups[idx].order());
        r = canonicalize(std::move(r));
        if (!is_sim_zero(group, subgroups, r)) {
            fail(ErrorCode::InvariantViolation, "partition relation fails the character test");
        }
        out.push_back(PartitionRelation{std::move(parts), std::move(r)});
    }
    return out;
}

bool frobenius_pairing_check(const AutGroup& group, const Subgroup& h, const ClassFunction& psi) {
    mpq_class left = 0;
    for (std::size_t m : h.members) left += value_at(group, psi, m);
    left /= static_cast<unsigned long>(h.order());

    const ClassFunction psi_h = induced_trivial_character(group, h).character;
    mpq_class right = 0;
    for (std::size_t g = 0; g < group.order(); ++g) {
        right += mpz_class(value_at(group, psi, g)) * value_at(group, psi_h, g);
    }
    right /= static_cast<unsigned long>(group.order());
    return left == right;
}

}  // namespace percount
