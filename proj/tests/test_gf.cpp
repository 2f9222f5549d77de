#include <doctest.h>

#include "percount/error.hpp"
#include "support.hpp"

using namespace percount;
using namespace testing;

namespace {

std::vector<std::int64_t> as_signed(const fp::Poly& f) { return {f.begin(), f.end()}; }

oracle::Poly coeffs_of(const FieldElement& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

}  // namespace

TEST_CASE("modulus choice matches the smallest irreducible by trial division") {
    const auto p5 = FieldContext::make(5, 1);
    CHECK(p5.modulus() == fp::Poly{0, 1});
    CHECK(FieldContext::make(5, 2).modulus() == fp::Poly{2, 0, 1});
    CHECK(FieldContext::make(2, 4).modulus() == fp::Poly{1, 1, 0, 0, 1});

    const std::vector<std::pair<std::uint64_t, std::size_t>> cases = {
        {2, 2}, {2, 3}, {2, 5}, {2, 6}, {2, 8}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 3}, {5, 4}, {7, 2}, {7, 3}, {11, 2}};
    for (auto [p, n] : cases) {
        CAPTURE(p);
        CAPTURE(n);
        CHECK(as_signed(FieldContext::make(p, n).modulus()) == oracle::smallest_irreducible(p, n));
    }
}

TEST_CASE("prime field arithmetic") {
    const auto f = FieldContext::make(5, 1);
    CHECK(f.add(f.from_residue(2), f.from_residue(4)) == f.from_residue(1));
    CHECK(f.inv(f.from_residue(2)) == f.from_residue(3));
    CHECK(f.from_residue(-1) == f.from_residue(4));
    CHECK(f.sub(f.from_residue(1), f.from_residue(3)) == f.from_residue(3));
    CHECK(f.pow(f.from_residue(2), std::uint64_t{4}) == f.one());
    for (std::int64_t a = 0; a < 5; ++a) {
        for (std::int64_t b = 0; b < 5; ++b) {
            CHECK(f.mul(f.from_residue(a), f.from_residue(b)) == f.from_residue(a * b % 5));
        }
    }
}

TEST_CASE("extension arithmetic agrees with schoolbook multiplication") {
    const auto f = FieldContext::make(5, 2);
    const FieldElement x = f.generator();
    CHECK(f.mul(x, x) == f.from_residue(3));

    Rng rng(11);
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{5, 2}, {2, 6}, {3, 4}, {7, 3}}) {
        const auto ctx = FieldContext::make(p, n);
        const auto mod = as_signed(ctx.modulus());
        for (int t = 0; t < 200; ++t) {
            const FieldElement a = ctx.from_code(rng.below(ctx.size()));
            const FieldElement b = ctx.from_code(rng.below(ctx.size()));
            const auto want = oracle::mulmod(coeffs_of(a), coeffs_of(b), mod, static_cast<std::int64_t>(p));
            CHECK(coeffs_of(ctx.mul(a, b)) == want);
        }
    }
}

TEST_CASE("frobenius examples") {
    const auto f = FieldContext::make(5, 2);
    const FieldElement x = f.generator();
    // x^5 by repeated schoolbook products.
    oracle::Poly acc = {1, 0};
    for (int i = 0; i < 5; ++i) acc = oracle::mulmod(acc, {0, 1}, {2, 0, 1}, 5);
    const FieldElement x5 = f.frobenius(x, 1);
    CHECK(coeffs_of(x5) == acc);
    CHECK(f.frobenius(x5, 1) == x);
    CHECK(f.frobenius(x, 0) == x);
    for (std::int64_t r = 0; r < 5; ++r) CHECK(f.frobenius(f.from_residue(r), 1) == f.from_residue(r));
}

TEST_CASE("frobenius is a field automorphism (randomized)") {
    Rng rng(2024);
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{5, 3}, {2, 6}, {7, 2}, {3, 5}, {5, 6}}) {
        const auto ctx = FieldContext::make(p, n);
        for (int t = 0; t < 100; ++t) {
            const FieldElement a = ctx.from_code(rng.below(ctx.size()));
            const FieldElement b = ctx.from_code(rng.below(ctx.size()));
            const std::uint64_t e = rng.below(n) + 1;
            CHECK(ctx.frobenius(ctx.add(a, b), e) == ctx.add(ctx.frobenius(a, e), ctx.frobenius(b, e)));
            CHECK(ctx.frobenius(ctx.mul(a, b), e) == ctx.mul(ctx.frobenius(a, e), ctx.frobenius(b, e)));
            CHECK(ctx.frobenius(a, n) == a);
            mpz_class q;
            mpz_ui_pow_ui(q.get_mpz_t(), p, e);
            CHECK(ctx.frobenius(a, e) == ctx.pow(a, q));
        }
    }
}

TEST_CASE("inverses are exact over every field up to 10^4 elements tested") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{
             {2, 13}, {3, 8}, {5, 5}, {7, 4}, {97, 2}, {9973, 1}}) {
        const auto ctx = FieldContext::make(p, n);
        REQUIRE(ctx.size() <= 10000);
        std::size_t bad = 0;
        for (std::uint64_t c = 1; c < ctx.size(); ++c) {
            const FieldElement a = ctx.from_code(c);
            if (ctx.mul(ctx.inv(a), a) != ctx.one()) ++bad;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("subfields") {
    const auto f25 = FieldContext::make(5, 2);
    CHECK(f25.enumerate_subfield(1).size() == 5);
    CHECK(f25.enumerate_subfield(2).size() == 25);
    CHECK_FALSE(f25.in_subfield(f25.generator(), 1));
    CHECK(f25.in_subfield(f25.generator(), 2));
    CHECK(f25.in_subfield(f25.from_residue(3), 1));

    const auto f16 = FieldContext::make(2, 4);
    const auto sub = f16.enumerate_subfield(2);
    CHECK(sub.size() == 4);
    std::size_t filtered = 0;
    for (std::uint64_t c = 0; c < 16; ++c) {
        const FieldElement a = f16.from_code(c);
        if (f16.pow(a, std::uint64_t{4}) == a) ++filtered;
    }
    CHECK(filtered == 4);

    Rng rng(7);
    const auto f = FieldContext::make(3, 6);
    for (std::size_t m : {1, 2, 3}) {
        const auto elems = f.enumerate_subfield(m);
        for (int t = 0; t < 100; ++t) {
            const FieldElement& a = elems[rng.below(elems.size())];
            const FieldElement& b = elems[rng.below(elems.size())];
            CHECK(f.in_subfield(f.add(a, b), m));
            CHECK(f.in_subfield(f.mul(a, b), m));
        }
    }
}

TEST_CASE("codes are a bijection") {
    const auto f = FieldContext::make(3, 4);
    for (std::uint64_t c = 0; c < f.size(); ++c) CHECK(f.code(f.from_code(c)) == c);
}

TEST_CASE("field errors") {
    CHECK_THROWS_AS(FieldContext::make(6, 1), Error);
    try {
        FieldContext::make(6, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrime);
    }
    auto code_of = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code_of([] { FieldContext::make(2, 40); }) == ErrorCode::FieldTooLarge);
    CHECK(code_of([] { FieldContext::make(10007, 2); }) == ErrorCode::FieldTooLarge);
    CHECK(code_of([] { FieldContext::make(5, 2).require_divisor(3); }) == ErrorCode::NotADivisor);
    CHECK(code_of([] {
              const auto f = FieldContext::make(5, 2);
              f.inv(f.zero());
          }) == ErrorCode::DivisionByZero);
    CHECK(checked_power(7, 6, 10'000'000) == 117649);
    CHECK(checked_power(7, 12, 10'000'000) == 0);
}
