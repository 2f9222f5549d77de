#include "percount/fixture.hpp"

#include <algorithm>

#include "percount/error.hpp"

namespace percount::fixture {

std::string reference_config(std::uint64_t p) {
    return "# phi(x) = (x^3 + 2x) / (2x^2 + 1) with the Klein four group <sigma, tau>\n"
           "[field]\n"
           "p = " + std::to_string(p) + "\n"
           "\n"
           "[map]\n"
           "numerator = [0, 2, 0, 1]\n"
           "denominator = [1, 0, 2]\n"
           "\n"
           "[group]\n"
           "sigma = [[-1, 0], [0, 1]]\n"
           "tau = [[0, 1], [1, 0]]\n";
}

const std::vector<ExplicitQuotient>& explicit_quotients() {
    static const std::vector<ExplicitQuotient> maps = {
        {"H_sigma", "u = x^2", {0, 4, 4, 1}, {1, 4, 4}},
        {"H_sigmatau", "v = x - 1/x", {0, 3, 0, 1}, {9, 0, 2}},
        {"H_tau", "w = x + 1/x", {0, 5, 0, 1}, {1, 0, 2}},
        {"G", "z = x^2 + 1/x^2", {48, 37, 8, 1}, {25, 20, 4}},
    };
    return maps;
}

const std::vector<PublishedRow>& published_table() {
    static const std::vector<PublishedRow> rows = {
        {"H_id", "{0, 1, -1, inf}", 4, {"0", "1", "2", "3", "4", "inf"}, 6, {"0", "1", "6", "inf"}, 4},
        {"H_sigma", "{0, 1, -1, inf}", 4, {"0", "1", "4", "inf"}, 4, {"0", "1", "6", "inf"}, 4},
        {"H_sigmatau", "{0, inf}", 2, {"0", "1", "2", "3", "4", "inf"}, 6, {"0", "1", "6", "inf"}, 4},
        {"H_tau", "{0, 2, -2, inf}", 4, {"0", "2", "3", "inf"}, 4, {"0", "2", "5", "inf"}, 4},
        {"G", "{-4, 2, -2, inf}", 4, {"1", "2", "3", "inf"}, 4, {"2", "3", "5", "inf"}, 4},
    };
    return rows;
}

namespace {

std::size_t generator_index(const DynSystem& sys, const std::string& name) {
    const auto& names = sys.generator_names();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) fail(ErrorCode::InvalidArgument, "reference system needs a generator named " + name);
    const auto idx = sys.group().index_of(sys.generators()[static_cast<std::size_t>(it - names.begin())]);
    if (!idx) fail(ErrorCode::InvariantViolation, "generator " + name + " missing from its own group");
    return *idx;
}

std::size_t position(const std::vector<Subgroup>& subgroups, const Subgroup& h) {
    const auto it = std::find(subgroups.begin(), subgroups.end(), h);
    if (it == subgroups.end()) fail(ErrorCode::InvalidArgument, "subgroup missing from the lattice");
    return static_cast<std::size_t>(it - subgroups.begin());
}

}  // namespace

std::vector<std::size_t> row_indices(const DynSystem& sys, const std::vector<Subgroup>& subgroups) {
    const AutGroup& g = sys.group();
    if (g.order() != 4 || !g.is_abelian() || g.exponent() != 2) {
        fail(ErrorCode::InvalidArgument, "reference system must be a Klein four group");
    }
    const std::size_t s = generator_index(sys, "sigma");
    const std::size_t t = generator_index(sys, "tau");
    const std::size_t st = g.mul(s, t);
    const std::size_t one[] = {s}, two[] = {st}, three[] = {t};
    return {position(subgroups, g.trivial_subgroup()), position(subgroups, g.generated_by(one)),
            position(subgroups, g.generated_by(two)), position(subgroups, g.generated_by(three)),
            position(subgroups, g.full_subgroup())};
}

RelationVector reference_relation(const DynSystem& sys, const std::vector<Subgroup>& subgroups) {
    RelationVector r{std::vector<mpz_class>(subgroups.size(), 0)};
    const auto rows = row_indices(sys, subgroups);
    for (std::size_t i = 0; i < rows.size(); ++i) r.coeffs[rows[i]] = kRelationRowCoeffs[i];
    return r;
}

}  // namespace percount::fixture
