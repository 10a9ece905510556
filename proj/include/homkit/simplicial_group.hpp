#pragma once

#include "homkit/chain_complex.hpp"
#include "homkit/simplicial_set.hpp"

namespace homkit {

/**
 * Truncated simplicial abelian group with levelwise free groups and
 * structure maps as integer matrices.  faces[n-1][i] is the matrix of
 * delta_i : A_n -> A_{n-1}; degeneracies[n][i] that of sigma_i.
 */
struct SimplicialAbelianGroup {
    int truncation = 0;
    std::vector<FgAbelianGroup> groups;
    std::vector<std::vector<IntMatrix>> faces;
    std::vector<std::vector<IntMatrix>> degeneracies;

    Index rank_at(int n) const {
        return (n >= 0 && n <= truncation) ? groups[n].free_rank : 0;
    }
    const IntMatrix& face(int n, int i) const { return faces[n - 1][i]; }
    const IntMatrix& degeneracy(int n, int i) const { return degeneracies[n][i]; }
};

ValidationReport validate(const SimplicialAbelianGroup& a);

/**
 * Levelwise free abelianization of a simplicial pointed set: dimension n
 * carries the free group on the nonbasepoint n-simplices, with the induced
 * matrices (a simplex mapping to the basepoint maps to zero).
 */
SimplicialAbelianGroup levelwise_free(const SimplicialPointedSet& x);

/**
 * Matrix of the structure map X(theta) : A_n -> A_m for an arbitrary
 * monotone theta : [m] -> [n] within the truncation, given by theta's value
 * vector and codomain n; computed through the epi-mono factorization.
 */
IntMatrix structure_map(const SimplicialAbelianGroup& a, const std::vector<int>& vals,
                        int codomain);

/**
 * Alternating-sum Moore complex on the truncated levels.  Its homology
 * agrees with the normalized complex below the truncation degree; the top
 * degree needs the degeneracy completion, see moore_complex_extended.
 */
ChainComplex moore_complex(const SimplicialAbelianGroup& a);

/**
 * Moore complex with one degeneracy-generated level grafted above the
 * truncation, so homology is correct in every degree 0..N.
 */
ChainComplex moore_complex_extended(const SimplicialAbelianGroup& a);

/**
 * Dold-Kan normalized complex: degree n is the intersection of the kernels
 * of delta_1 .. delta_n, with differential delta_0.  Kernel bases are
 * Hermite-canonical so that the Gamma roundtrip is basis-exact.
 */
ChainComplex normalized_complex(const SimplicialAbelianGroup& a);

/**
 * Dold-Kan inverse Gamma: dimension n is the direct sum over order-
 * preserving surjections [n] ->> [k] of level k, summands serialized in
 * lexicographic order.  Accepts complexes concentrated in degrees 0..N.
 */
SimplicialAbelianGroup dold_kan_gamma(const ChainComplex& c, int truncation);

/// Reduced simplicial chains: normalized_complex of levelwise_free.
ChainComplex reduced_chains(const SimplicialPointedSet& x);

/**
 * Homotopy groups of the chain-level Eilenberg-MacLane object: homology of
 * normalized_complex(dold_kan_gamma(c)), asserted equal to homology(c).
 */
GradedGroup em_homotopy_groups(const ChainComplex& c);

/// Order-preserving surjections [n] ->> [k] as value vectors, k = 0..n,
/// lexicographically sorted within each k.
std::vector<std::vector<int>> surjections_onto(int n, int k);

}  // namespace homkit
