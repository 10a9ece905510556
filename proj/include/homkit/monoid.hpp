#pragma once

#include "homkit/pointed_set.hpp"

namespace homkit {

/**
 * Commutative monoid with an absorbing zero.  Element 0 of the carrier is
 * the zero; table(i, j) is the product of elements i and j.  All axioms are
 * exhaustively checkable at these sizes.
 */
struct CommMonoidWithZero {
    PointedSet carrier;
    Eigen::MatrixXi table;
    int unit = 1;

    Index size() const { return carrier.size; }
    int mul(int i, int j) const { return table(i, j); }

    /// Throws std::invalid_argument naming the first violated axiom.
    void validate() const;
};

CommMonoidWithZero make_monoid(Index size, int unit,
                               const std::vector<std::vector<int>>& table);

/**
 * The monoid ring Z[M]/(0): basis the nonzero elements of M, with structure
 * constants read off the monoid table (0 denotes the ring zero, otherwise a
 * carrier index >= 1).  The underlying additive group is free_abelian of the
 * carrier.
 */
struct MonoidRing {
    Index rank = 0;                 // number of basis elements = |M| - 1
    Eigen::MatrixXi structure;      // rank x rank, entries in {0} u [1, |M|)
    int unit = 1;                   // carrier index of the ring unit
    std::vector<std::string> basis_labels;

    FgAbelianGroup additive_group() const { return free_group(rank); }

    /// Exhaustive basis-level ring axioms (associativity, commutativity,
    /// unit law).  Distributivity is definitional for structure constants.
    void validate_ring() const;
};

/// The functor beta.
MonoidRing monoid_ring(const CommMonoidWithZero& m);

/**
 * Result of converting a monoid to a commutative monoid object in pointed
 * sets (multiplication through the smash product) and back.
 */
struct SmashRoundtrip {
    PointedSet smash_carrier;          // carrier ^ carrier
    std::vector<int> smash_table;      // multiplication M ^ M -> M
    CommMonoidWithZero reconstructed;  // recovered monoid with zero
    bool identical = false;            // carrier-and-table equality with input
};

/// Prop-2.1-style roundtrip through the smash product; the identity on valid
/// monoids because the zero is absorbing.
SmashRoundtrip smash_monoid_roundtrip(const CommMonoidWithZero& m);

/**
 * Witness for the alpha -| alpha^* adjunction on one instance:
 * Hom_Ab(alpha(s), a) <-> Hom_pSets(s, alpha^*(a)), with naturality squares
 * checked over all pointed endomorphisms of s and group endomorphisms of a.
 */
struct AdjunctionWitness {
    Int hom_ab_count = 0;
    Int hom_psets_count = 0;
    bool bijective = false;
    long naturality_squares_checked = 0;
    bool natural = false;
    std::string failure;

    bool ok() const { return bijective && natural; }
};

struct AdjunctionCaps {
    Index max_set_size = 5;
    Int max_group_order = 8;
};

AdjunctionWitness check_alpha_adjunction(const PointedSet& s, const FgAbelianGroup& a,
                                         const AdjunctionCaps& caps = {});

/// All commutative monoids with zero on carriers of the exact given size,
/// exhaustively generated (every unit position, every associative table).
std::vector<CommMonoidWithZero> enumerate_monoids(Index size);

}  // namespace homkit
