#pragma once

#include "homkit/fg_group.hpp"
#include "homkit/number_field.hpp"

namespace homkit {

/**
 * Brute-force ideal class group: the quotient of the free group on the
 * prime ideals over rational primes up to the enumeration bound by the
 * relations found through prime splitting and bounded element search.
 *
 * The computed quotient always surjects onto Cl(K).  The result is marked
 * certified when equality is established (trivial quotient, or a definite
 * norm form rules out the missing principalities); otherwise it is reported
 * as inconclusive, never silently wrong.
 */
struct ClassGroupResult {
    enum class Status { certified, inconclusive };

    FgAbelianGroup group;
    Status status = Status::inconclusive;
    std::vector<std::string> generators;  // display names of the prime ideals
    std::string detail;

    bool certified() const { return status == Status::certified; }
};

struct ClassGroupOptions {
    Index element_box = 8;  // coordinate box for the principal-relation search
};

/**
 * bound_num/bound_den is the enumeration bound B; the Minkowski bound of k
 * is computed and B is required to cover it.
 */
ClassGroupResult class_group(const NumberField& k, const Int& bound_num,
                             const Int& bound_den, const ClassGroupOptions& opts = {});

}  // namespace homkit
