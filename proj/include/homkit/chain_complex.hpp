#pragma once

#include <map>

#include "homkit/fg_group.hpp"

namespace homkit {

/**
 * Graded abelian group: an explicit degree -> group association with a
 * recorded support window.  Degrees outside the window are implicitly
 * trivial; at(d) is total.
 */
class GradedGroup {
  public:
    GradedGroup() = default;
    GradedGroup(int window_lo, int window_hi)
        : window_lo_(window_lo), window_hi_(window_hi) {}

    void set(int degree, FgAbelianGroup g);
    const FgAbelianGroup& at(int degree) const;

    /// Degrees carrying a nontrivial group, in increasing order.
    std::vector<int> support() const;
    int window_lo() const { return window_lo_; }
    int window_hi() const { return window_hi_; }

    bool operator==(const GradedGroup& o) const;
    bool operator!=(const GradedGroup& o) const { return !(*this == o); }

    std::string to_string() const;

    const std::map<int, FgAbelianGroup>& entries() const { return entries_; }

  private:
    std::map<int, FgAbelianGroup> entries_;  // nontrivial degrees only
    int window_lo_ = 0;
    int window_hi_ = -1;  // empty window
};

/**
 * Bounded chain complex of free abelian groups,
 *
 *   ... -> C_{n+1} -> C_n -> C_{n-1} -> ...   (differentials lower degree)
 *
 * stored as free ranks per level starting at lowest_degree, with
 * differentials[i] : level lowest_degree+i+1 -> level lowest_degree+i.
 * Arbitrary f.g. coefficient groups enter via free_resolution below.
 */
struct ChainComplex {
    int lowest_degree = 0;
    std::vector<Index> levels;
    std::vector<IntMatrix> differentials;  // size = levels.size() - 1 (or empty)

    int top_degree() const {
        return lowest_degree + static_cast<int>(levels.size()) - 1;
    }
    bool in_window(int degree) const {
        return degree >= lowest_degree && degree <= top_degree();
    }
    Index rank_at(int degree) const {
        return in_window(degree) ? levels[degree - lowest_degree] : 0;
    }
    /// Differential leaving degree d (zero-sized matrix outside the window).
    IntMatrix diff_out(int degree) const;
    /// Differential arriving at degree d from d+1.
    IntMatrix diff_into(int degree) const;

    /// Checks shapes and that consecutive differentials compose to zero.
    void validate() const;
};

/// Complex with a single free level of the given rank in the given degree.
ChainComplex concentrated_complex(int degree, Index rank);

/// Shifts every degree up by n.
ChainComplex shift(const ChainComplex& c, int n);

bool complexes_equal(const ChainComplex& a, const ChainComplex& b);

/**
 * Homology H_n = ker d_n / im d_{n+1}, computed via Smith normal form.
 * Rejects complexes failing the d d = 0 invariant.
 */
GradedGroup homology(const ChainComplex& c);

/**
 * Total Hom complex Hom(C, D) with
 *   Hom(C, D)_n = (+)_i Hom(C_i, D_{i+n}),
 *   (df)_i = d^D f_i - (-1)^n f_{i-1} d^C.
 * Levels are free, so no further resolution is needed.
 */
ChainComplex hom_complex(const ChainComplex& c, const ChainComplex& d);

/**
 * hyperExt^n(C, D) = H_{-n} of the total Hom complex.  Degrees outside the
 * computable support return the trivial group.
 */
FgAbelianGroup hyper_ext(const ChainComplex& c, const ChainComplex& d, int degree);

/**
 * Two-step free resolution 0 -> Z^k -> Z^{r+k} -> A -> 0 of a finitely
 * generated group, as a complex in degrees 1, 0 (degree 0 only when there is
 * no torsion).  Quasi-isomorphic to A[0].
 */
ChainComplex free_resolution(const FgAbelianGroup& a);

}  // namespace homkit
