#pragma once

// Truncated power series in u = q^-s with exact rational coefficients, and the
// periodic zeta and L series built from quotient and PerFix counts.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "percount/gring.hpp"
#include "percount/quotcount.hpp"
#include "percount/system.hpp"

namespace percount {

inline constexpr std::size_t kDefaultZetaOrder = 3;

// c_0 + c_1 u + ... + c_order u^order, all results correct mod u^(order+1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    TruncatedSeries(std::size_t order, std::vector<mpq_class> coeffs);

    static TruncatedSeries one(std::size_t order);

    std::size_t order() const { return order_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& operator[](std::size_t i) const { return c_[i]; }
    mpq_class& operator[](std::size_t i) { return c_[i]; }

    bool is_one() const;
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::size_t order_;
    std::vector<mpq_class> c_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Throws ConstantTermZero.
TruncatedSeries series_inv(const TruncatedSeries& a);
// Throws ConstantTermNotZero.
TruncatedSeries series_exp(const TruncatedSeries& a);
// Throws ConstantTermZero, or ConstantTermNotOne (log c_0 is not rational).
TruncatedSeries series_log(const TruncatedSeries& a);
// a^k for any integer k; negative powers go through series_inv.
TruncatedSeries series_pow(const TruncatedSeries& a, const mpz_class& k);

// exp(sum_{n>=1} a_n u^n / n), a_n given for n = 1..order.
TruncatedSeries exp_of_counts(const std::vector<mpq_class>& counts, std::size_t order);

// Z(P^1/H, u) with a_n = |Per(P^1/H)(F_{q^n})| (or point counts in AllPoints mode).
TruncatedSeries periodic_zeta(const DynSystem& sys, const Subgroup& h, std::size_t order,
                              CountMode mode = CountMode::Periodic);

// nu_n(psi) = |G|^-1 sum_g psi(g^-1) |PerFix(g sigma^n)|.
mpq_class nu_n(const DynSystem& sys, const ClassFunction& psi, std::size_t n);

// exp(sum nu_n(psi) u^n / n).
TruncatedSeries periodic_L(const DynSystem& sys, const ClassFunction& psi, std::size_t order);

struct ProductRelationReport {
    TruncatedSeries product;           // prod_H Z(P^1/H, u)^(n_H)
    TruncatedSeries residual;          // product - 1
    std::vector<mpz_class> log_residuals;  // sum_H n_H a_n(H), n = 1..order
    bool product_is_one;
    bool log_form_zero;
    bool holds() const { return product_is_one && log_form_zero; }
};

// Computes both the product form and the coefficient form; throws
// InvariantViolation if they disagree.
ProductRelationReport product_relation_check(const DynSystem& sys, const std::vector<Subgroup>& subgroups,
                                             const RelationVector& r, std::size_t order,
                                             CountMode mode = CountMode::Periodic);

}  // namespace percount
