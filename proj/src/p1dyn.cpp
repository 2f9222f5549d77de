#include "percount/p1dyn.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "percount/error.hpp"

namespace percount {

using fp::Residue;

namespace {

Form form_mul(const Form& a, const Form& b, Residue p) {
    Form r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            r.coeffs[i + j] = fp::add_mod(r.coeffs[i + j], fp::mul_mod(a.coeffs[i], b.coeffs[j], p), p);
        }
    }
    return r;
}

Form form_unit(std::size_t degree_zero_value = 1) {
    return Form{{static_cast<Residue>(degree_zero_value)}};
}

fp::Poly dehomogenize(const Form& f) {
    fp::Poly r = f.coeffs;
    fp::trim(r);
    return r;
}

Form pad(fp::Poly f, std::size_t degree) {
    f.resize(degree + 1, 0);
    return Form{std::move(f)};
}

// Divides F and G by their common binary-form factor.
void remove_content(Form& f, Form& g, Residue p) {
    const std::size_t d = f.degree();
    const fp::Poly fa = dehomogenize(f);
    const fp::Poly ga = dehomogenize(g);
    if (fa.empty() || ga.empty()) return;
    const std::size_t y_power = std::min(d - static_cast<std::size_t>(fp::degree(fa)),
                                         d - static_cast<std::size_t>(fp::degree(ga)));
    const fp::Poly common = fp::gcd(fa, ga, p);
    const auto common_degree = static_cast<std::size_t>(fp::degree(common));
    if (y_power == 0 && common_degree == 0) return;
    const std::size_t reduced = d - y_power - common_degree;
    fp::Poly qf, qg, rem;
    fp::divmod(fa, common, p, qf, rem);
    fp::divmod(ga, common, p, qg, rem);
    f = pad(std::move(qf), reduced);
    g = pad(std::move(qg), reduced);
}

std::string poly_string(const fp::Poly& f, const char* var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || f[i] != 1) os << f[i];
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- ProjPoint

ProjPoint ProjPoint::make(const FieldContext& ctx, const FieldElement& x, const FieldElement& y) {
    if (y.is_zero()) {
        if (x.is_zero()) fail(ErrorCode::InvalidArgument, "(0 : 0) is not a projective point");
        return infinity(ctx);
    }
    return affine(ctx, ctx.div(x, y));
}

ProjPoint ProjPoint::affine(const FieldContext& /*ctx*/, const FieldElement& x) {
    ProjPoint pt;
    pt.x_ = x;
    return pt;
}

ProjPoint ProjPoint::infinity(const FieldContext& ctx) {
    ProjPoint pt;
    pt.x_ = ctx.zero();
    pt.infinite_ = true;
    return pt;
}

std::uint64_t point_code(const FieldContext& ctx, const ProjPoint& pt) {
    return pt.is_infinity() ? ctx.size() : ctx.code(pt.x());
}

ProjPoint point_from_code(const FieldContext& ctx, std::uint64_t code) {
    if (code == ctx.size()) return ProjPoint::infinity(ctx);
    return ProjPoint::affine(ctx, ctx.from_code(code));
}

std::string format_point(const FieldContext& ctx, const ProjPoint& pt) {
    if (pt.is_infinity()) return "inf";
    fp::Poly c(pt.x().coeffs().begin(), pt.x().coeffs().end());
    fp::trim(c);
    (void)ctx;
    return poly_string(c, "a");
}

// ---------------------------------------------------------------- forms, maps

bool Form::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Residue v) { return v == 0; });
}

Residue resultant(const Form& f, const Form& g, Residue p) {
    const std::size_t d = f.degree();
    if (g.degree() != d) fail(ErrorCode::InvalidArgument, "resultant needs forms of equal degree");
    const std::size_t n = 2 * d;
    std::vector<std::vector<Residue>> m(n, std::vector<Residue>(n, 0));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t i = 0; i <= d; ++i) {
            m[r][r + i] = f.coeffs[i];
            m[d + r][r + i] = g.coeffs[i];
        }
    }
    return fp::determinant(std::move(m), p);
}

RationalMap RationalMap::from_forms(std::uint64_t p, Form numerator, Form denominator) {
    if (!fp::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (numerator.coeffs.empty() || numerator.degree() != denominator.degree()) {
        fail(ErrorCode::NotAMorphism, "numerator and denominator forms must share a degree");
    }
    if (numerator.degree() < 1) fail(ErrorCode::NotAMorphism, "constant maps are not allowed (degree 0)");
    for (auto& c : numerator.coeffs) c %= p;
    for (auto& c : denominator.coeffs) c %= p;
    if (resultant(numerator, denominator, p) == 0) {
        fail(ErrorCode::NotAMorphism, "numerator and denominator share a projective root (resultant is zero)");
    }
    RationalMap m;
    m.p_ = p;
    m.num_ = std::move(numerator);
    m.den_ = std::move(denominator);
    return m;
}

RationalMap RationalMap::from_affine(std::uint64_t p, std::span<const std::int64_t> numerator,
                                     std::span<const std::int64_t> denominator) {
    if (!fp::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    auto reduce_all = [p](std::span<const std::int64_t> v) {
        fp::Poly r;
        for (std::int64_t c : v) r.push_back(fp::reduce(c, p));
        fp::trim(r);
        return r;
    };
    fp::Poly num = reduce_all(numerator);
    fp::Poly den = reduce_all(denominator);
    if (den.empty()) fail(ErrorCode::NotAMorphism, "denominator vanishes identically mod " + std::to_string(p));
    if (num.empty()) fail(ErrorCode::NotAMorphism, "numerator vanishes identically mod " + std::to_string(p));
    const int d = std::max(fp::degree(num), fp::degree(den));
    if (d < 1) fail(ErrorCode::NotAMorphism, "constant maps are not allowed (degree 0)");
    return from_forms(p, pad(std::move(num), static_cast<std::size_t>(d)), pad(std::move(den), static_cast<std::size_t>(d)));
}

RationalMap RationalMap::identity(std::uint64_t p) {
    const std::int64_t num[] = {0, 1};
    const std::int64_t den[] = {1};
    return from_affine(p, num, den);
}

std::string RationalMap::to_string() const {
    return "(" + poly_string(dehomogenize(num_), "x") + ")/(" + poly_string(dehomogenize(den_), "x") + ")";
}

// ---------------------------------------------------------------- Mobius

MobiusAut MobiusAut::make(std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    if (!fp::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    MobiusAut g;
    g.p_ = p;
    g.m_ = {fp::reduce(a, p), fp::reduce(b, p), fp::reduce(c, p), fp::reduce(d, p)};
    const Residue det = fp::sub_mod(fp::mul_mod(g.m_[0], g.m_[3], p), fp::mul_mod(g.m_[1], g.m_[2], p), p);
    if (det == 0) fail(ErrorCode::InvalidArgument, "automorphism matrix is singular mod " + std::to_string(p));
    const Residue lead = *std::find_if(g.m_.begin(), g.m_.end(), [](Residue v) { return v != 0; });
    const Residue inv = fp::inv_mod(lead, p);
    for (auto& v : g.m_) v = fp::mul_mod(v, inv, p);
    return g;
}

MobiusAut MobiusAut::identity(std::uint64_t p) { return make(p, 1, 0, 0, 1); }

bool MobiusAut::is_identity() const { return m_[0] == 1 && m_[1] == 0 && m_[2] == 0 && m_[3] == 1; }

MobiusAut MobiusAut::inverse() const {
    const auto s = [this](Residue v) { return static_cast<std::int64_t>(v); };
    const auto n = [this](Residue v) { return static_cast<std::int64_t>(fp::sub_mod(0, v, p_)); };
    return make(p_, s(m_[3]), n(m_[1]), n(m_[2]), s(m_[0]));
}

RationalMap MobiusAut::as_map() const {
    return RationalMap::from_forms(p_, Form{{m_[1], m_[0]}}, Form{{m_[3], m_[2]}});
}

std::string MobiusAut::to_string() const {
    std::ostringstream os;
    os << "[[" << m_[0] << "," << m_[1] << "],[" << m_[2] << "," << m_[3] << "]]";
    return os.str();
}

MobiusAut compose(const MobiusAut& g, const MobiusAut& h) {
    const Residue p = g.p();
    auto dot = [p](Residue x, Residue y, Residue z, Residue w) {
        return static_cast<std::int64_t>(fp::add_mod(fp::mul_mod(x, y, p), fp::mul_mod(z, w, p), p));
    };
    return MobiusAut::make(p, dot(g.a(), h.a(), g.b(), h.c()), dot(g.a(), h.b(), g.b(), h.d()),
                           dot(g.c(), h.a(), g.d(), h.c()), dot(g.c(), h.b(), g.d(), h.d()));
}

// ---------------------------------------------------------------- evaluation

ProjPoint eval(const FieldContext& ctx, const RationalMap& map, const ProjPoint& pt) {
    const auto& f = map.numerator().coeffs;
    const auto& g = map.denominator().coeffs;
    if (pt.is_infinity()) {
        return ProjPoint::make(ctx, ctx.from_residue(static_cast<std::int64_t>(f.back())),
                               ctx.from_residue(static_cast<std::int64_t>(g.back())));
    }
    FieldElement fv = ctx.zero();
    FieldElement gv = ctx.zero();
    for (std::size_t i = f.size(); i-- > 0;) {
        fv = ctx.add(ctx.mul(fv, pt.x()), ctx.from_residue(static_cast<std::int64_t>(f[i])));
        gv = ctx.add(ctx.mul(gv, pt.x()), ctx.from_residue(static_cast<std::int64_t>(g[i])));
    }
    return ProjPoint::make(ctx, fv, gv);
}

ProjPoint eval(const FieldContext& ctx, const MobiusAut& g, const ProjPoint& pt) {
    auto r = [&ctx](Residue v) { return ctx.from_residue(static_cast<std::int64_t>(v)); };
    if (pt.is_infinity()) return ProjPoint::make(ctx, r(g.a()), r(g.c()));
    const FieldElement num = ctx.add(ctx.scale(pt.x(), g.a()), r(g.b()));
    const FieldElement den = ctx.add(ctx.scale(pt.x(), g.c()), r(g.d()));
    return ProjPoint::make(ctx, num, den);
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
    const Residue p = f.p();
    if (g.p() != p) fail(ErrorCode::InvalidArgument, "maps over different primes");
    const std::size_t d = f.degree();
    // Powers A^i and B^i of g's numerator and denominator forms.
    std::vector<Form> a_pow{form_unit()}, b_pow{form_unit()};
    for (std::size_t i = 1; i <= d; ++i) {
        a_pow.push_back(form_mul(a_pow.back(), g.numerator(), p));
        b_pow.push_back(form_mul(b_pow.back(), g.denominator(), p));
    }
    const std::size_t out_degree = d * g.degree();
    Form num{std::vector<Residue>(out_degree + 1, 0)};
    Form den{std::vector<Residue>(out_degree + 1, 0)};
    for (std::size_t i = 0; i <= d; ++i) {
        const Form term = form_mul(a_pow[i], b_pow[d - i], p);
        for (std::size_t k = 0; k <= out_degree; ++k) {
            num.coeffs[k] = fp::add_mod(num.coeffs[k], fp::mul_mod(f.numerator().coeffs[i], term.coeffs[k], p), p);
            den.coeffs[k] = fp::add_mod(den.coeffs[k], fp::mul_mod(f.denominator().coeffs[i], term.coeffs[k], p), p);
        }
    }
    remove_content(num, den, p);
    return RationalMap::from_forms(p, std::move(num), std::move(den));
}

bool equal_up_to_scalar(const RationalMap& f, const RationalMap& g) {
    if (f.p() != g.p()) return false;
    const Residue p = f.p();
    Form lhs = form_mul(f.numerator(), g.denominator(), p);
    Form rhs = form_mul(g.numerator(), f.denominator(), p);
    return lhs == rhs;
}

bool commutes(const RationalMap& map, const MobiusAut& g) {
    const RationalMap gm = g.as_map();
    return equal_up_to_scalar(compose(map, gm), compose(gm, map));
}

ProjPoint frobenius_point(const FieldContext& ctx, const ProjPoint& pt, std::uint64_t e) {
    if (pt.is_infinity()) return pt;
    return ProjPoint::affine(ctx, ctx.frobenius(pt.x(), e));
}

std::vector<ProjPoint> enumerate_points(const FieldContext& ctx, std::size_t m) {
    const std::vector<FieldElement> elems = ctx.enumerate_subfield(m);
    std::vector<ProjPoint> pts;
    pts.reserve(elems.size() + 1);
    for (const auto& e : elems) pts.push_back(ProjPoint::affine(ctx, e));
    pts.push_back(ProjPoint::infinity(ctx));
    return pts;
}

// ---------------------------------------------------------------- periodic sets

std::vector<std::uint8_t> cycle_nodes(std::span<const std::uint64_t> successor) {
    const std::size_t n = successor.size();
    std::vector<std::uint32_t> indegree(n, 0);
    for (std::uint64_t s : successor) ++indegree[s];
    std::vector<std::uint8_t> alive(n, 1);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
        if (indegree[i] == 0) queue.push_back(i);
    }
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        alive[v] = 0;
        if (--indegree[successor[v]] == 0) queue.push_back(successor[v]);
    }
    return alive;
}

std::vector<ProjPoint> periodic_set(const FieldContext& ctx, const RationalMap& map,
                                    std::span<const ProjPoint> points) {
    std::unordered_map<std::uint64_t, std::uint64_t> index;
    index.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) index.emplace(point_code(ctx, points[i]), i);
    std::vector<std::uint64_t> successor(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const ProjPoint img = eval(ctx, map, points[i]);
        auto it = index.find(point_code(ctx, img));
        if (it == index.end()) {
            fail(ErrorCode::NotClosed, "image " + format_point(ctx, img) + " of " + format_point(ctx, points[i]) +
                                           " is outside the point set");
        }
        successor[i] = it->second;
    }
    const std::vector<std::uint8_t> alive = cycle_nodes(successor);
    std::vector<ProjPoint> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (alive[i]) out.push_back(points[i]);
    }
    return out;
}

PeriodicTable::PeriodicTable(const FieldContext& ctx, const RationalMap& map) {
    const std::uint64_t n = ctx.size() + 1;
    successor_.resize(n);
    for (std::uint64_t code = 0; code < n; ++code) {
        successor_[code] = point_code(ctx, eval(ctx, map, point_from_code(ctx, code)));
    }
    periodic_ = cycle_nodes(successor_);
    periodic_count_ = static_cast<std::size_t>(std::count(periodic_.begin(), periodic_.end(), 1));
}

}  // namespace percount
