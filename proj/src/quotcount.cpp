#include "percount/quotcount.hpp"

#include <algorithm>

#include "percount/error.hpp"

namespace percount {

std::string_view mode_name(CountMode mode) { return mode == CountMode::Periodic ? "periodic" : "points"; }

OrbitScan stable_orbits(const DynSystem& sys, const Subgroup& h, std::size_t n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
    const AutGroup& group = sys.group();
    const std::size_t degree = n * exponent(group, h);
    const auto ctx = sys.field(degree);
    const auto table = sys.periodic_table(degree);

    OrbitScan scan{degree, {}};
    const std::uint64_t total = ctx->size() + 1;
    std::vector<std::uint8_t> seen(total, 0);
    std::vector<std::uint64_t> members;
    for (std::uint64_t code = 0; code < total; ++code) {
        if (seen[code]) continue;
        const ProjPoint pt = point_from_code(*ctx, code);
        members.clear();
        std::size_t stabilizer = 0;
        for (std::size_t g : h.members) {
            const std::uint64_t img = point_code(*ctx, eval(*ctx, group.element(g), pt));
            if (img == code) ++stabilizer;
            if (!seen[img]) {
                seen[img] = 1;
                members.push_back(img);
            }
        }
        // Frobenius commutes with H, so one member landing in the orbit is enough.
        const std::uint64_t frob = point_code(*ctx, frobenius_point(*ctx, pt, n));
        if (std::find(members.begin(), members.end(), frob) == members.end()) continue;

        const bool periodic = table->is_periodic(code);
        for (std::uint64_t m : members) {
            if (table->is_periodic(m) != periodic) {
                fail(ErrorCode::InvariantViolation, "orbit mixes periodic and non-periodic points");
            }
        }
        scan.orbits.push_back(StableOrbit{code, members.size(), stabilizer, periodic});
    }
    return scan;
}

std::uint64_t quotient_count(const DynSystem& sys, const Subgroup& h, std::size_t n, CountMode mode) {
    const OrbitScan scan = stable_orbits(sys, h, n);
    if (mode == CountMode::AllPoints) return scan.orbits.size();
    return static_cast<std::uint64_t>(
        std::count_if(scan.orbits.begin(), scan.orbits.end(), [](const StableOrbit& o) { return o.periodic; }));
}

std::uint64_t quotient_points(const DynSystem& sys, const Subgroup& h, std::size_t n) {
    return quotient_count(sys, h, n, CountMode::AllPoints);
}

std::uint64_t quotient_periodic(const DynSystem& sys, const Subgroup& h, std::size_t n) {
    return quotient_count(sys, h, n, CountMode::Periodic);
}

CountTable count_table(const DynSystem& sys, const std::vector<Subgroup>& subgroups, std::size_t nmax,
                       CountMode mode) {
    CountTable t{mode, nmax, {}};
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        for (std::size_t n = 1; n <= nmax; ++n) t.entries[{i, n}] = quotient_count(sys, subgroups[i], n, mode);
    }
    return t;
}

std::vector<mpz_class> relation_residuals(const CountTable& table, const RelationVector& r) {
    std::vector<mpz_class> out;
    for (std::size_t n = 1; n <= table.nmax; ++n) {
        mpz_class sum = 0;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            if (r.coeffs[i] != 0) sum += r.coeffs[i] * mpz_class(std::to_string(table.at(i, n)));
        }
        out.push_back(sum);
    }
    return out;
}

std::vector<mpz_class> verify_relation(const DynSystem& sys, const std::vector<Subgroup>& subgroups,
                                       const RelationVector& r, std::size_t nmax, CountMode mode) {
    if (r.coeffs.size() != subgroups.size()) {
        fail(ErrorCode::InvalidArgument, "relation length does not match the subgroup list");
    }
    CountTable t{mode, nmax, {}};
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        for (std::size_t n = 1; n <= nmax; ++n) {
            t.entries[{i, n}] = r.coeffs[i] == 0 ? 0 : quotient_count(sys, subgroups[i], n, mode);
        }
    }
    return relation_residuals(t, r);
}

ExplicitCheck compare_explicit(const DynSystem& sys, const RationalMap& explicit_map, const Subgroup& h,
                               std::size_t n) {
    if (explicit_map.p() != sys.p()) fail(ErrorCode::InvalidArgument, "explicit map is over a different prime");
    const auto ctx = sys.field(n);
    const std::vector<ProjPoint> pts = enumerate_points(*ctx, n);
    const std::uint64_t explicit_count = periodic_set(*ctx, explicit_map, pts).size();
    return ExplicitCheck{explicit_count, quotient_periodic(sys, h, n)};
}

bool cross_check_explicit(const DynSystem& sys, const RationalMap& explicit_map, const Subgroup& h,
                          std::size_t n) {
    const ExplicitCheck c = compare_explicit(sys, explicit_map, h, n);
    if (!c.agrees()) {
        fail(ErrorCode::Mismatch, "explicit map has " + std::to_string(c.explicit_count) +
                                      " periodic points but the orbit count is " + std::to_string(c.orbit_count));
    }
    return true;
}

}  // namespace percount
