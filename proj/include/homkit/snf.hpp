#pragma once

#include "homkit/numeric.hpp"

namespace homkit {

/**
 * Smith normal form with unimodular witnesses: u * a * v = d, where u and v
 * have determinant +-1 and d is diagonal with a nonnegative divisibility
 * chain d1 | d2 | ...
 */
struct SnfDecomposition {
    IntMatrix u;  ///< rows x rows, unimodular
    IntMatrix d;  ///< rows x cols, diagonal
    IntMatrix v;  ///< cols x cols, unimodular

    /// Diagonal entries of d, in chain order.
    std::vector<Int> diagonal() const;
};

/**
 * Diagonalize an integer matrix by unimodular row and column operations.
 *
 * Pivoting is deterministic: the nonzero entry of least absolute value is
 * chosen, ties broken by lowest (row, col).  Total on all integer matrices,
 * including empty ones.
 */
SnfDecomposition smith_normal_form(const IntMatrix& a);

/**
 * Canonical basis of the integer kernel lattice { x : a x = 0 }, returned as
 * the columns of a cols x nullity matrix in column-style Hermite normal form
 * (positive pivots in increasing row order, entries left of a pivot reduced
 * into [0, pivot)).  The kernel of an integer matrix is a saturated
 * sublattice, so this basis spans it exactly.
 */
IntMatrix kernel_basis(const IntMatrix& a);

/**
 * Solve k * x = b over the integers for a full-column-rank k.  Throws
 * std::invalid_argument when some column of b is not in the column lattice.
 */
IntMatrix solve_in_lattice(const IntMatrix& k, const IntMatrix& b);

/// Column-style Hermite normal form of a full-column-rank matrix: returns
/// a * w for a unimodular w, canonical as described at kernel_basis.
IntMatrix hermite_column_basis(const IntMatrix& a);

}  // namespace homkit
