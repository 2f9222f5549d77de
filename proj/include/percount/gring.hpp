#pragma once

// The rational group ring Q[G]: subgroup idempotents, permutation characters
// Ind_H^G(1), and integer relations sum n_H e_H ~ 0 among subgroup idempotents.
//
// A relation vector is indexed like all_subgroups(G). The ~0 test uses the
// equivalent condition sum n_H psi_H = 0 on class functions, so no rational
// character table is ever built.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "percount/grp.hpp"

namespace percount {

struct GroupRingElt {
    // One exact coefficient per group element.
    std::vector<mpq_class> coeffs;

    friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;
};

GroupRingElt group_ring_mul(const AutGroup& group, const GroupRingElt& a, const GroupRingElt& b);

// |H|^-1 sum_{h in H} h
GroupRingElt idempotent(const AutGroup& group, const Subgroup& h);

// Integer-valued class function, one value per conjugacy class.
struct ClassFunction {
    std::vector<std::int64_t> values;

    ClassFunction& operator+=(const ClassFunction& other);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator*(std::int64_t k, ClassFunction a);
    bool is_zero() const;
    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

ClassFunction zero_class_function(const AutGroup& group);
std::int64_t value_at(const AutGroup& group, const ClassFunction& f, std::size_t element);

// psi_H(g) = number of left cosets xH fixed by g.
struct InducedCharacter {
    Subgroup subgroup;
    ClassFunction character;
};

InducedCharacter induced_trivial_character(const AutGroup& group, const Subgroup& h);

struct RelationVector {
    // n_H per subgroup, aligned with all_subgroups(group).
    std::vector<mpz_class> coeffs;

    bool is_zero() const;
    friend bool operator==(const RelationVector&, const RelationVector&) = default;
};

// Divides by the content and makes the first nonzero coefficient positive.
RelationVector canonicalize(RelationVector r);

// sum_H n_H psi_H == 0
bool is_sim_zero(const AutGroup& group, const std::vector<Subgroup>& subgroups, const RelationVector& r);

// Z-basis of { n in Z^s : sum_H n_H psi_H = 0 } in Hermite normal form
// (positive pivots, entries above each pivot reduced into [0, pivot)).
std::vector<RelationVector> relation_lattice_basis(const AutGroup& group, const std::vector<Subgroup>& subgroups);

// Integer row-style Hermite normal form of the nonzero lattice spanned by rows.
std::vector<std::vector<mpz_class>> hermite_normal_form(std::vector<std::vector<mpz_class>> rows);

struct PartitionRelation {
    // Indices into the subgroup list, ascending.
    std::vector<std::size_t> parts;
    RelationVector relation;
};

// Every cover of G by k >= 2 nontrivial subgroups meeting pairwise in the
// identity, with the relation |G| e_G + (k-1) e_1 - sum |H_i| e_{H_i} in
// canonical form.
std::vector<PartitionRelation> partition_relations(const AutGroup& group, const std::vector<Subgroup>& subgroups);

// Checks |H|^-1 sum_{h in H} psi(h) == (psi, psi_H)_G with exact rationals.
bool frobenius_pairing_check(const AutGroup& group, const Subgroup& h, const ClassFunction& psi);

}  // namespace percount
