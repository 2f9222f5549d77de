#include "percount/zeta.hpp"

#include <algorithm>

#include "percount/error.hpp"

namespace percount {

TruncatedSeries::TruncatedSeries(std::size_t order) : order_(order), c_(order + 1, 0) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<mpq_class> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    c_.resize(order + 1, 0);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = 1;
    return s;
}

bool TruncatedSeries::is_one() const {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& v) { return v == 0; });
}

namespace {

std::size_t common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(common_order(a, b));
    for (std::size_t i = 0; i <= r.order(); ++i) r[i] = a[i] + b[i];
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(common_order(a, b));
    for (std::size_t i = 0; i <= r.order(); ++i) r[i] = a[i] - b[i];
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(common_order(a, b));
    for (std::size_t i = 0; i <= r.order(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

TruncatedSeries series_inv(const TruncatedSeries& a) {
    if (a[0] == 0) fail(ErrorCode::ConstantTermZero, "series inverse needs a nonzero constant term");
    TruncatedSeries r(a.order());
    const mpq_class inv0 = 1 / a[0];
    r[0] = inv0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        mpq_class acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += a[k] * r[n - k];
        r[n] = -acc * inv0;
    }
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (a[0] != 0) fail(ErrorCode::ConstantTermNotZero, "series exp needs a zero constant term");
    // f = exp(a) satisfies f' = a' f: n f_n = sum_{k=1}^n k a_k f_{n-k}.
    TruncatedSeries f(a.order());
    f[0] = 1;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        mpq_class acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += mpq_class(static_cast<unsigned long>(k)) * a[k] * f[n - k];
        f[n] = acc / static_cast<unsigned long>(n);
    }
    return f;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
    if (a[0] == 0) fail(ErrorCode::ConstantTermZero, "series log needs a nonzero constant term");
    if (a[0] != 1) fail(ErrorCode::ConstantTermNotOne, "series log needs constant term 1 to stay rational");
    // g = log(a): a' = g' a, so n g_n = n a_n - sum_{k=1}^{n-1} k g_k a_{n-k}.
    TruncatedSeries g(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
        mpq_class acc = mpq_class(static_cast<unsigned long>(n)) * a[n];
        for (std::size_t k = 1; k < n; ++k) acc -= mpq_class(static_cast<unsigned long>(k)) * g[k] * a[n - k];
        g[n] = acc / static_cast<unsigned long>(n);
    }
    return g;
}

TruncatedSeries series_pow(const TruncatedSeries& a, const mpz_class& k) {
    TruncatedSeries base = k < 0 ? series_inv(a) : a;
    mpz_class e = abs(k);
    TruncatedSeries result = TruncatedSeries::one(a.order());
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = series_mul(result, base);
        base = series_mul(base, base);
        e >>= 1;
    }
    return result;
}

TruncatedSeries exp_of_counts(const std::vector<mpq_class>& counts, std::size_t order) {
    TruncatedSeries log_series(order);
    for (std::size_t n = 1; n <= order && n <= counts.size(); ++n) {
        log_series[n] = counts[n - 1] / static_cast<unsigned long>(n);
    }
    return series_exp(log_series);
}

TruncatedSeries periodic_zeta(const DynSystem& sys, const Subgroup& h, std::size_t order, CountMode mode) {
    std::vector<mpq_class> counts;
    for (std::size_t n = 1; n <= order; ++n) {
        counts.emplace_back(static_cast<unsigned long>(quotient_count(sys, h, n, mode)));
    }
    return exp_of_counts(counts, order);
}

mpq_class nu_n(const DynSystem& sys, const ClassFunction& psi, std::size_t n) {
    const AutGroup& group = sys.group();
    mpq_class total = 0;
    for (std::size_t g = 0; g < group.order(); ++g) {
        const std::int64_t weight = value_at(group, psi, group.inverse(g));
        if (weight == 0) continue;
        total += mpq_class(mpz_class(static_cast<long>(weight))) *
                 mpq_class(static_cast<unsigned long>(per_fix(sys, g, n)));
    }
    return total / static_cast<unsigned long>(group.order());
}

TruncatedSeries periodic_L(const DynSystem& sys, const ClassFunction& psi, std::size_t order) {
    std::vector<mpq_class> coeffs;
    for (std::size_t n = 1; n <= order; ++n) coeffs.push_back(nu_n(sys, psi, n));
    return exp_of_counts(coeffs, order);
}

ProductRelationReport product_relation_check(const DynSystem& sys, const std::vector<Subgroup>& subgroups,
                                             const RelationVector& r, std::size_t order, CountMode mode) {
    if (r.coeffs.size() != subgroups.size()) {
        fail(ErrorCode::InvalidArgument, "relation length does not match the subgroup list");
    }
    TruncatedSeries product = TruncatedSeries::one(order);
    std::vector<mpz_class> log_residuals(order, 0);
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        if (r.coeffs[i] == 0) continue;
        std::vector<mpq_class> counts;
        for (std::size_t n = 1; n <= order; ++n) {
            const std::uint64_t a = quotient_count(sys, subgroups[i], n, mode);
            counts.emplace_back(static_cast<unsigned long>(a));
            log_residuals[n - 1] += r.coeffs[i] * static_cast<unsigned long>(a);
        }
        product = series_mul(product, series_pow(exp_of_counts(counts, order), r.coeffs[i]));
    }
    ProductRelationReport rep{product, series_sub(product, TruncatedSeries::one(order)), log_residuals,
                              product.is_one(),
                              std::all_of(log_residuals.begin(), log_residuals.end(),
                                          [](const mpz_class& v) { return v == 0; })};
    if (rep.product_is_one != rep.log_form_zero) {
        fail(ErrorCode::InvariantViolation, "product form and logarithmic form of the relation disagree");
    }
    return rep;
}

}  // namespace percount
