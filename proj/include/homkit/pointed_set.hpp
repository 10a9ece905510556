#pragma once

#include <string>
#include <vector>

#include "homkit/fg_group.hpp"

namespace homkit {

/**
 * Finite pointed set.  Elements are canonical indices 0..size-1 with the
 * basepoint fixed at index 0; labels are optional display names.
 */
struct PointedSet {
    Index size = 1;
    std::vector<std::string> labels;  // empty, or one per element

    PointedSet() = default;
    explicit PointedSet(Index n, std::vector<std::string> names = {});

    std::string label(Index i) const;
};

/// Smash product X ^ Y = (X x Y) / (X v Y); size (|X|-1)(|Y|-1) + 1 and
/// labels record the generating pair.
PointedSet smash(const PointedSet& x, const PointedSet& y);

/// Index of the class of (i, j) in smash(x, y); 0 when either factor is the
/// basepoint.
Index smash_index(const PointedSet& x, const PointedSet& y, Index i, Index j);

/// One-point union; x's elements keep their indices, y's nonbasepoint
/// elements follow.
PointedSet wedge(const PointedSet& x, const PointedSet& y);

Index wedge_index_left(const PointedSet& x, const PointedSet& y, Index i);
Index wedge_index_right(const PointedSet& x, const PointedSet& y, Index j);

/// The functor alpha: free abelian group on x with the basepoint set to zero.
FgAbelianGroup free_abelian(const PointedSet& x);

/// The forgetful functor alpha^*: a finite abelian group as a pointed set
/// with basepoint the identity.  Rejects infinite groups.
PointedSet forget_to_pointed(const FgAbelianGroup& a);

/**
 * Computes smash(x, y) as a literal quotient of the Cartesian product by the
 * wedge and checks it against the arithmetic size formula; returns the class
 * count.  Exists as an independent route for tests.
 */
Index smash_size_by_quotient(const PointedSet& x, const PointedSet& y);

}  // namespace homkit
