#include <doctest.h>

#include "percount/error.hpp"
#include "percount/quotcount.hpp"
#include "support.hpp"

using namespace percount;
using namespace testing;

namespace {

// phi(x) = x A(x^m) / B(x^m) commutes with x -> zeta x whenever zeta^m = 1.
DynSystem random_cyclic_system(Rng& rng, std::uint64_t p, std::int64_t zeta, std::size_t m) {
    while (true) {
        std::vector<std::int64_t> num(2 + m * rng.below(2), 0), den(1 + m * (1 + rng.below(2)), 0);
        for (std::size_t i = 1; i < num.size(); i += m) num[i] = rng.range(0, static_cast<std::int64_t>(p) - 1);
        for (std::size_t i = 0; i < den.size(); i += m) den[i] = rng.range(0, static_cast<std::int64_t>(p) - 1);
        try {
            return DynSystem(RationalMap::from_affine(p, num, den), {MobiusAut::make(p, zeta, 0, 0, 1)});
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::NotAMorphism);
        }
    }
}

std::vector<std::size_t> rows(const DynSystem& sys, const std::vector<Subgroup>& subs) {
    return fixture::row_indices(sys, subs);
}

}  // namespace

TEST_CASE("quotient point counts") {
    const DynSystem sys = reference_system(5);
    const auto subs = all_subgroups(sys.group());
    for (std::size_t n = 1; n <= 3; ++n) {
        std::uint64_t q = 1;
        for (std::size_t i = 0; i < n; ++i) q *= 5;
        CHECK(quotient_points(sys, sys.group().trivial_subgroup(), n) == q + 1);
    }
    CHECK(quotient_points(sys, sys.group().full_subgroup(), 1) == 6);
    const auto r = rows(sys, subs);
    CHECK(quotient_points(sys, subs[r[1]], 1) == 6);
}

TEST_CASE("quotient periodic counts match the published rows") {
    const DynSystem s5 = reference_system(5), s7 = reference_system(7);
    const auto subs5 = all_subgroups(s5.group()), subs7 = all_subgroups(s7.group());
    const auto r5 = rows(s5, subs5), r7 = rows(s7, subs7);
    const std::uint64_t want5[] = {6, 4, 6, 4, 4}, want7[] = {4, 4, 4, 4, 4};
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(quotient_periodic(s5, subs5[r5[k]], 1) == want5[k]);
        CHECK(quotient_periodic(s7, subs7[r7[k]], 1) == want7[k]);
    }
}

TEST_CASE("orbit counting agrees with a brute-force orbit oracle") {
    for (std::uint64_t p : {5, 7}) {
        const DynSystem sys = reference_system(p);
        for (const Subgroup& h : all_subgroups(sys.group())) {
            for (std::size_t n = 1; n <= (p == 5 ? 3u : 2u); ++n) {
                const auto [all, per] = oracle::quotient_counts(sys, h, n);
                CHECK(quotient_points(sys, h, n) == all);
                CHECK(quotient_periodic(sys, h, n) == per);
            }
        }
    }
}

TEST_CASE("verify_relation") {
    for (std::uint64_t p : {5, 7}) {
        const DynSystem sys = reference_system(p);
        const auto subs = all_subgroups(sys.group());
        const RelationVector r = fixture::reference_relation(sys, subs);
        const auto res = verify_relation(sys, subs, r, 3, CountMode::Periodic);
        CHECK(res == std::vector<mpz_class>{0, 0, 0});
        const RelationVector zero{std::vector<mpz_class>(subs.size(), 0)};
        CHECK(verify_relation(sys, subs, zero, 2, CountMode::AllPoints) == std::vector<mpz_class>{0, 0});
        // Not a relation: e_G alone gives the plain counts.
        RelationVector lone = zero;
        lone.coeffs.back() = 1;
        CHECK(verify_relation(sys, subs, lone, 1, CountMode::Periodic)[0] == 4);
    }
}

TEST_CASE("explicit quotient maps") {
    for (std::uint64_t p : {5, 7}) {
        const DynSystem sys = reference_system(p);
        const auto subs = all_subgroups(sys.group());
        const auto r = rows(sys, subs);
        CHECK(cross_check_explicit(sys, sys.map(), subs[r[0]], 1));
        const auto& maps = fixture::explicit_quotients();
        for (std::size_t k = 0; k < maps.size(); ++k) {
            const RationalMap m = RationalMap::from_affine(p, maps[k].numerator, maps[k].denominator);
            const ExplicitCheck chk = compare_explicit(sys, m, subs[r[k + 1]], 1);
            const auto& row = fixture::published_table()[k + 1];
            CHECK(chk.explicit_count == (p == 5 ? row.f5_count : row.f7_count));
            CHECK(chk.agrees());
        }
    }
    const DynSystem s5 = reference_system(5);
    const auto subs = all_subgroups(s5.group());
    const auto& sigma_map = fixture::explicit_quotients()[0];
    const RationalMap m = RationalMap::from_affine(5, sigma_map.numerator, sigma_map.denominator);
    // Explicit count 4 against the trivial subgroup's 6.
    CHECK_THROWS_AS(cross_check_explicit(s5, m, s5.group().trivial_subgroup(), 1), Error);
}

TEST_CASE("averaged per_fix equals the quotient count") {
    for (std::uint64_t p : {5, 7}) {
        const DynSystem sys = reference_system(p);
        for (const Subgroup& h : all_subgroups(sys.group())) {
            for (std::size_t n = 1; n <= 2; ++n) {
                std::uint64_t total = 0;
                for (std::size_t k : h.members) total += per_fix(sys, k, n);
                CHECK(total % h.order() == 0);
                CHECK(total / h.order() == quotient_periodic(sys, h, n));
            }
        }
    }
    Rng rng(31337);
    for (int t = 0; t < 12; ++t) {
        // zeta = 2 has order 4 mod 5; zeta = 6 has order 2 mod 7; zeta = 2 has order 3 mod 7.
        const std::uint64_t p = t % 3 == 0 ? 5 : 7;
        const std::int64_t zeta = t % 3 == 0 ? 2 : (t % 3 == 1 ? 6 : 2);
        const std::size_t m = t % 3 == 0 ? 4 : (t % 3 == 1 ? 2 : 3);
        const DynSystem sys = random_cyclic_system(rng, p, zeta, m);
        CAPTURE(sys.map().to_string());
        for (const Subgroup& h : all_subgroups(sys.group())) {
            std::uint64_t total = 0;
            for (std::size_t k : h.members) total += per_fix(sys, k, 1);
            CHECK(total == quotient_periodic(sys, h, 1) * h.order());
            const auto [all, per] = oracle::quotient_counts(sys, h, 1);
            CHECK(quotient_periodic(sys, h, 1) == per);
            CHECK(quotient_points(sys, h, 1) == all);
        }
    }
}

TEST_CASE("count sanity properties") {
    const DynSystem sys = reference_system(5);
    const auto subs = all_subgroups(sys.group());
    for (const Subgroup& h : subs) {
        for (std::size_t n = 1; n <= 2; ++n) {
            const std::uint64_t bound = checked_power(5, n * exponent(sys.group(), h), ~0ULL) + 1;
            CHECK(quotient_points(sys, h, n) <= bound);
            CHECK(quotient_periodic(sys, h, n) <= quotient_points(sys, h, n));
        }
    }
    // Identity map: periodic and all-points counts coincide.
    const DynSystem id_sys = build_system(parse_config("[field]\np = 5\n[map]\nnumerator = identity\n"
                                                      "[group]\ns = [[-1,0],[0,1]]\nt = [[0,1],[1,0]]\n"));
    for (const Subgroup& h : all_subgroups(id_sys.group())) {
        for (std::size_t n = 1; n <= 3; ++n) CHECK(quotient_periodic(id_sys, h, n) == quotient_points(id_sys, h, n));
    }
    // Conjugate subgroups of S3 give equal counts.
    const DynSystem s3(RationalMap::identity(5), {MobiusAut::make(5, 0, 1, 1, 0), MobiusAut::make(5, -1, 1, 0, 1)});
    const auto s3subs = all_subgroups(s3.group());
    for (const Subgroup& h : s3subs) {
        for (std::size_t x = 0; x < s3.group().order(); ++x) {
            const Subgroup c = conjugate(s3.group(), h, x);
            CHECK(quotient_points(s3, c, 1) == quotient_points(s3, h, 1));
        }
    }
}

TEST_CASE("count tables and residuals") {
    const DynSystem sys = reference_system(5);
    const auto subs = all_subgroups(sys.group());
    const CountTable t = count_table(sys, subs, 2, CountMode::Periodic);
    CHECK(t.entries.size() == subs.size() * 2);
    for (std::size_t i = 0; i < subs.size(); ++i) CHECK(t.at(i, 1) == quotient_periodic(sys, subs[i], 1));
    CHECK(relation_residuals(t, fixture::reference_relation(sys, subs)) == std::vector<mpz_class>{0, 0});
    CHECK(mode_name(CountMode::Periodic) == "periodic");
    CHECK(mode_name(CountMode::AllPoints) == "points");
    const auto scan = stable_orbits(sys, sys.group().full_subgroup(), 1);
    CHECK(scan.search_degree == 2);
    std::size_t periodic = 0;
    for (const auto& o : scan.orbits) {
        CHECK(o.size * o.stabilizer_order == 4);
        periodic += o.periodic ? 1 : 0;
    }
    CHECK(periodic == 4);
}
