#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homkit/snf.hpp"

namespace homkit {

/**
 * Finitely generated abelian group in invariant-factor form:
 *
 *   Z^free_rank  (+)  Z/d1 (+) ... (+) Z/dk,   2 <= d1 | d2 | ... | dk.
 *
 * Optionally carries a presentation matrix whose cokernel realizes the group.
 */
struct FgAbelianGroup {
    Index free_rank = 0;
    std::vector<Int> invariant_factors;
    std::optional<IntMatrix> presentation;

    FgAbelianGroup() = default;
    FgAbelianGroup(Index rank, std::vector<Int> factors);

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    /// Order of a finite group.  Throws on infinite input.
    Int order() const;
    bool is_cyclic() const;

    bool operator==(const FgAbelianGroup& o) const {
        return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
    }
    bool operator!=(const FgAbelianGroup& o) const { return !(*this == o); }

    /// Display form such as "0", "Z", "Z^2 + Z/2 + Z/6".
    std::string to_string() const;
};

FgAbelianGroup trivial_group();
FgAbelianGroup free_group(Index rank);
FgAbelianGroup cyclic_group(const Int& n);

/**
 * Canonical invariant-factor form of a direct sum of cyclic pieces: `rank`
 * free summands plus Z/c for each entry of `cyclic_orders` (entries may be in
 * any order and need not form a chain; zeros count as free summands, units
 * are dropped).  Normalization runs through the SNF of the evident diagonal
 * presentation.
 */
FgAbelianGroup group_from_cyclics(Index rank, const std::vector<Int>& cyclic_orders);

/// Cokernel of a : Z^cols -> Z^rows, read off the SNF diagonal; the result's
/// presentation field is set to a.
FgAbelianGroup cokernel_structure(const IntMatrix& a);

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Hom(A, B), computed factorwise: Hom(Z, B) = B and Hom(Z/d, B) = B[d].
FgAbelianGroup hom_fg(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Ext^1(A, B), computed factorwise: Ext^1(Z, B) = 0 and
/// Ext^1(Z/d, B) = B/dB.
FgAbelianGroup ext1_fg(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Rank of A (x) Q; torsion dies under rationalization.
Index rationalize_rank(const FgAbelianGroup& a);

/**
 * Element arithmetic for finite groups, used by exhaustive enumerations.
 * Elements are residue tuples, one slot per invariant factor.
 */
struct FiniteGroupElements {
    explicit FiniteGroupElements(const FgAbelianGroup& g);

    const FgAbelianGroup& group() const { return group_; }
    Int order() const { return order_; }
    std::size_t slots() const { return group_.invariant_factors.size(); }

    std::vector<Int> zero() const;
    std::vector<Int> element(const Int& index) const;  ///< mixed-radix decode
    Int index_of(const std::vector<Int>& e) const;
    std::vector<Int> add(const std::vector<Int>& x, const std::vector<Int>& y) const;
    std::vector<Int> scale(const Int& n, const std::vector<Int>& x) const;
    /// Additive order of an element.
    Int element_order(const std::vector<Int>& x) const;
    std::string label(const std::vector<Int>& e) const;

  private:
    FgAbelianGroup group_;
    Int order_;
};

}  // namespace homkit
