#pragma once

#include "homkit/chain_complex.hpp"

namespace homkit {

/**
 * Symbolic value "Ext^1(Q, B)", recorded by the rank of B.  The group itself
 * is an uncountable Q-vector space, so only its structure is tracked; rank 0
 * means the trivial group, and ranks add under direct sums of sources.
 */
struct FormalExt {
    Index rank = 0;
    std::string source_label;  // description of B for display

    bool is_zero() const { return rank == 0; }
    bool operator==(const FormalExt& o) const { return rank == o.rank; }
    std::string to_string() const;
};

FormalExt formal_ext_sum(const FormalExt& a, const FormalExt& b);

/// Integral homology of a finite cell complex: a graded group supported in
/// nonnegative degrees with finitely generated entries.
using FiniteComplexHomology = GradedGroup;

/// Throws unless the grading is supported in degrees >= 0.
void require_nonnegative_support(const FiniteComplexHomology& x, const char* where);

/// Graded FormalExt values with a recorded window.
struct GradedFormalExt {
    std::map<int, FormalExt> entries;  // nonzero degrees only
    int window_lo = 0;
    int window_hi = -1;

    FormalExt at(int degree) const;
    void set(int degree, FormalExt v);
    std::vector<int> support() const;
    std::string to_string() const;
};

/**
 * Lin's theorem as a computation rule:
 *   [Sigma^i H A, X]  =  Ext^1(A (x) Q, H_{i+1}(X; Z)),
 * for cyclic A; the rank is rationalize_rank(A) * rank H_{i+1}(X).
 * Ext^1(Q, torsion) = 0 is baked in.  Non-cyclic A is rejected unless
 * allow_noncyclic enables the factorwise extension.
 */
FormalExt lin_bracket(const FgAbelianGroup& a, const FiniteComplexHomology& x, int i,
                      bool allow_noncyclic = false,
                      const std::string& target_label = "");

/**
 * Homology of the dualizing complex f^! applied to the spectrum with the
 * given integral homology: degree t carries lin_bracket(Z, x, t).  For x
 * concentrated in degree 0 with free part of rank d, the answer is rank d in
 * degree -1 and zero elsewhere.
 */
GradedFormalExt dualizing_homology(const FiniteComplexHomology& x,
                                   const std::string& target_label = "");

/// Pullback to the closed point Spec F_p: degree t carries
/// lin_bracket(Z/p, x, t), identically zero; rejects nonprime p.
GradedFormalExt j_shriek_homology(const Int& p, const FiniteComplexHomology& x);

/// i^! at chain level: the degree-0 entry of dualizing_homology, i.e.
/// Ext^1(Q, H_1(x)); vanishes when H_1 is finite.
FormalExt i_shriek(const FiniteComplexHomology& x);

/**
 * The pi_0 -| H adjunction corner: compares hom_fg(H_0(c), a) with
 * hyperExt^0(c, resolution of a).  A mismatch is reported in the witness,
 * never thrown.
 */
struct Pi0Witness {
    FgAbelianGroup lhs;  // Hom(H_0(c), a)
    FgAbelianGroup rhs;  // hyperExt^0(c, a)
    bool ok = false;
};

Pi0Witness pi0_adjunction_check(const ChainComplex& c, const FgAbelianGroup& a);

}  // namespace homkit
