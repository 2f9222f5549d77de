#include "percount/twists.hpp"

#include <algorithm>

#include "percount/error.hpp"

namespace percount {

namespace {

void require_abelian(const AutGroup& group) {
    if (!group.is_abelian()) {
        fail(ErrorCode::NotAbelian, "twist counting needs an abelian group (order " +
                                        std::to_string(group.order()) + " group is not abelian)");
    }
}

}  // namespace

std::vector<Twist> enumerate_twists(const AutGroup& group) {
    require_abelian(group);
    std::vector<Twist> out;
    for (std::size_t i = 0; i < group.order(); ++i) out.push_back(Twist{i});
    return out;
}

std::uint64_t twisted_count(const DynSystem& sys, const Twist& t, std::size_t n, CountMode mode) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
    const MobiusAut& c = sys.group().element(t.chi_image);
    const std::size_t degree = n * sys.group().element_order(t.chi_image);
    const auto ctx = sys.field(degree);
    std::vector<ProjPoint> pts = enumerate_points(*ctx, degree);
    if (mode == CountMode::Periodic) pts = periodic_set(*ctx, sys.map(), pts);
    return static_cast<std::uint64_t>(std::count_if(pts.begin(), pts.end(), [&](const ProjPoint& q) {
        return eval(*ctx, c, frobenius_point(*ctx, q, n)) == q;
    }));
}

std::uint64_t twisted_periodic_count(const DynSystem& sys, const Twist& t, std::size_t n) {
    return twisted_count(sys, t, n, CountMode::Periodic);
}

TwistAverageReport verify_theorem1(const DynSystem& sys, std::size_t n, CountMode mode) {
    const AutGroup& group = sys.group();
    TwistAverageReport rep{n, mode, 0, {}, 0, group.order()};
    for (const Twist& t : enumerate_twists(group)) {
        const std::uint64_t count = twisted_count(sys, t, n, mode);
        if (mode == CountMode::Periodic && count != per_fix(sys, t.chi_image, n)) {
            fail(ErrorCode::InvariantViolation, "twisted periodic count disagrees with per_fix for element " +
                                                    group.label(t.chi_image));
        }
        rep.terms.push_back(TwistTerm{t, count});
        rep.twist_sum += count;
    }
    if (rep.twist_sum % group.order() != 0) {
        fail(ErrorCode::InvariantViolation, "twist sum " + std::to_string(rep.twist_sum) +
                                                " is not divisible by |G| = " + std::to_string(group.order()));
    }
    rep.quotient_count = quotient_count(sys, group.full_subgroup(), n, mode);
    return rep;
}

bool IncidenceReport::all_consistent() const {
    return std::all_of(orbits.begin(), orbits.end(), [](const OrbitIncidence& o) { return o.consistent; });
}

IncidenceReport incidence_check(const DynSystem& sys, std::size_t n) {
    const AutGroup& group = sys.group();
    require_abelian(group);
    const Subgroup full = group.full_subgroup();
    const OrbitScan scan = stable_orbits(sys, full, n);
    const auto ctx = sys.field(scan.search_degree);

    IncidenceReport rep{n, scan.search_degree, group.order(), {}};
    for (const StableOrbit& o : scan.orbits) {
        const ProjPoint rep_pt = point_from_code(*ctx, o.representative);
        OrbitIncidence inc{o.representative, o.size, o.stabilizer_order, o.periodic, {}, 0, true};
        for (const ProjPoint& q : orbit(*ctx, group, rep_pt, full)) {
            const ProjPoint qs = frobenius_point(*ctx, q, n);
            std::size_t hits = 0;
            for (std::size_t c = 0; c < group.order(); ++c) {
                if (eval(*ctx, group.element(c), qs) == q) ++hits;
            }
            inc.per_member.push_back(hits);
            inc.total += hits;
            if (hits != o.stabilizer_order) inc.consistent = false;
        }
        if (inc.total != group.order()) inc.consistent = false;
        rep.orbits.push_back(std::move(inc));
    }
    return rep;
}

}  // namespace percount
