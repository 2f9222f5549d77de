#pragma once

// Points and self-maps of the projective line over a working field F_{p^N}.
// Maps and automorphisms always have coefficients in the prime field, so they
// commute with Frobenius.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "percount/fp_poly.hpp"
#include "percount/gf.hpp"

namespace percount {

// A point [X : Y] of P^1, normalized to [x : 1] or the point at infinity [1 : 0].
class ProjPoint {
public:
    // Normalizes; throws InvalidArgument for (0, 0).
    static ProjPoint make(const FieldContext& ctx, const FieldElement& x, const FieldElement& y);
    static ProjPoint affine(const FieldContext& ctx, const FieldElement& x);
    static ProjPoint infinity(const FieldContext& ctx);

    bool is_infinity() const { return infinite_; }
    // Affine coordinate; zero for the point at infinity.
    const FieldElement& x() const { return x_; }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    FieldElement x_;
    bool infinite_ = false;
};

// Points of P^1(F_{p^N}) are coded as integers: code(x) for [x : 1], and p^N
// for infinity.
std::uint64_t point_code(const FieldContext& ctx, const ProjPoint& pt);
ProjPoint point_from_code(const FieldContext& ctx, std::uint64_t code);
std::string format_point(const FieldContext& ctx, const ProjPoint& pt);

// Binary form of degree d over F_p: coefficient i belongs to X^i Y^(d-i).
struct Form {
    std::vector<fp::Residue> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }
    bool is_zero() const;
    friend bool operator==(const Form&, const Form&) = default;
};

// Self-map [F(X,Y) : G(X,Y)] of P^1 with F, G of the same degree d >= 1 over
// F_p and no common root over the algebraic closure.
class RationalMap {
public:
    // x -> num(x)/den(x), coefficients ascending; homogenized to degree
    // max(deg num, deg den) after reduction mod p. Throws NotAMorphism.
    static RationalMap from_affine(std::uint64_t p, std::span<const std::int64_t> numerator,
                                   std::span<const std::int64_t> denominator);
    // Throws NotAMorphism.
    static RationalMap from_forms(std::uint64_t p, Form numerator, Form denominator);
    static RationalMap identity(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    std::size_t degree() const { return num_.degree(); }
    const Form& numerator() const { return num_; }
    const Form& denominator() const { return den_; }

    std::string to_string() const;

private:
    RationalMap() = default;
    std::uint64_t p_ = 0;
    Form num_;
    Form den_;
};

// x -> (a x + b) / (c x + d), ad - bc != 0, scaled so the first nonzero entry
// of (a, b, c, d) is 1.
class MobiusAut {
public:
    // Throws InvalidArgument for a singular matrix.
    static MobiusAut make(std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
    static MobiusAut identity(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    fp::Residue a() const { return m_[0]; }
    fp::Residue b() const { return m_[1]; }
    fp::Residue c() const { return m_[2]; }
    fp::Residue d() const { return m_[3]; }

    bool is_identity() const;
    MobiusAut inverse() const;
    RationalMap as_map() const;
    std::string to_string() const;

    friend bool operator==(const MobiusAut&, const MobiusAut&) = default;
    friend auto operator<=>(const MobiusAut&, const MobiusAut&) = default;

private:
    std::uint64_t p_ = 0;
    std::array<fp::Residue, 4> m_{};
};

// g o h
MobiusAut compose(const MobiusAut& g, const MobiusAut& h);

// Homogeneous resultant of two forms of equal degree (Sylvester determinant).
fp::Residue resultant(const Form& f, const Form& g, fp::Residue p);

ProjPoint eval(const FieldContext& ctx, const RationalMap& map, const ProjPoint& pt);
ProjPoint eval(const FieldContext& ctx, const MobiusAut& g, const ProjPoint& pt);

// f o g, with common content removed.
RationalMap compose(const RationalMap& f, const RationalMap& g);
bool equal_up_to_scalar(const RationalMap& f, const RationalMap& g);
bool commutes(const RationalMap& map, const MobiusAut& g);

ProjPoint frobenius_point(const FieldContext& ctx, const ProjPoint& pt, std::uint64_t e);

// The p^m + 1 points of P^1(F_{p^m}): affine points in code order, then
// infinity. Throws NotADivisor, FieldTooLarge.
std::vector<ProjPoint> enumerate_points(const FieldContext& ctx, std::size_t m);

// Points of `points` lying on cycles of the map's functional graph, in input
// order. Throws NotClosed when an image escapes the set.
std::vector<ProjPoint> periodic_set(const FieldContext& ctx, const RationalMap& map,
                                    std::span<const ProjPoint> points);

// Functional graph of a map on all of P^1(F_{p^N}), indexed by point code,
// with the cycle (periodic) flags precomputed.
class PeriodicTable {
public:
    PeriodicTable(const FieldContext& ctx, const RationalMap& map);

    std::size_t point_count() const { return successor_.size(); }
    std::uint64_t successor(std::uint64_t code) const { return successor_[code]; }
    bool is_periodic(std::uint64_t code) const { return periodic_[code] != 0; }
    std::size_t periodic_count() const { return periodic_count_; }

private:
    std::vector<std::uint64_t> successor_;
    std::vector<std::uint8_t> periodic_;
    std::size_t periodic_count_ = 0;
};

// Kahn-style peeling: repeatedly removes nodes of in-degree zero; the survivors
// are exactly the nodes on cycles. `successor` must map [0, n) into itself.
std::vector<std::uint8_t> cycle_nodes(std::span<const std::uint64_t> successor);

}  // namespace percount
