#pragma once

#include <map>
#include <optional>

#include "homkit/number_field.hpp"

namespace homkit {

/**
 * Finite-support, precision-truncated element of the finite adele ring of a
 * monogenic number field.  The component at a supported rational prime p is
 * p^{-k} * r with r an element of O_K / p^{N+k} in power-basis coordinates,
 * so the value is pinned modulo p^N * O_K.  Primes outside the support carry
 * an integral, untracked component.
 *
 * Canonical form: k is minimal (r not divisible by p while k > 0), r is
 * reduced to least nonnegative coordinates, and components with k = 0 and
 * r = 0 are pruned from the support.
 */
struct FiniteAdele {
    struct Component {
        int k = 0;
        IntVector r;
    };

    NumberField field;
    int precision = 1;        // N >= 1
    int denominator_cap = 6;  // maximal k per component
    std::map<Int, Component> components;

    bool is_integral() const;
    bool operator==(const FiniteAdele& o) const;
};

FiniteAdele make_adele(const NumberField& k, int precision,
                       const std::map<Int, FiniteAdele::Component>& components,
                       int denominator_cap = 6);

/// Reduces every component to canonical form in place.
void canonicalize(FiniteAdele& x);

FiniteAdele adele_add(const FiniteAdele& x, const FiniteAdele& y);
FiniteAdele adele_sub(const FiniteAdele& x, const FiniteAdele& y);
FiniteAdele adele_scale(const Int& n, const FiniteAdele& x);

/// Diagonal image of a global element num/den (den > 0) at the given
/// precision, supported on the primes dividing den together with `support`.
FiniteAdele adele_of_global(const NumberField& k, int precision, const OkElement& num,
                            const Int& den, const std::vector<Int>& support,
                            int denominator_cap = 6);

/// Equality of fractional data only: matching k and r mod p^k per prime
/// (the class in A_K^fin / O-hat, which is what the adele dictionary pins).
bool same_class_at_precision(const FiniteAdele& x, const FiniteAdele& y);

/// Global element of K with bounded denominator.
struct GlobalElement {
    OkElement num;
    Int den = 1;
};

/**
 * Strong approximation: a global lambda with denominator dividing
 * prod p^{k_p} such that y = x - lambda is integral at every prime, found by
 * coordinatewise CRT.  Idempotent: reducing y again yields lambda = 0.
 */
struct ReduceResult {
    GlobalElement lambda;
    FiniteAdele integral;
};

ReduceResult strong_approx_reduce(const FiniteAdele& x);

/**
 * A homomorphism Q -> K/O_K recorded on the unit fractions 1/m for divisors
 * m of the modulus: values[m] holds the numerator vector v with
 * value(1/m) = v/m mod O_K, reduced mod m.  Compatibility:
 * value(1/m') = (m/m') * value(1/m) for m' | m, i.e. v_{m'} = v_m mod m'.
 */
struct CompatibleSystem {
    NumberField field;
    Int modulus = 1;
    std::map<Int, IntVector> values;  // one entry per divisor of modulus

    /// Throws naming the first failing divisor pair.
    void validate() const;
};

CompatibleSystem make_system(const NumberField& k, const Int& modulus,
                             const std::map<Int, IntVector>& values);

/// The system of a global class: values(1/m) = class of (modulus/m) * x
/// for the canonical representative x = num/modulus.
CompatibleSystem system_of_numerator(const NumberField& k, const Int& modulus,
                                     const IntVector& numerator);

/**
 * The adele dictionary of Prop. 3.4's proof, tower direction: reads the
 * p-component off the recorded tower and returns the canonical fractional
 * representative of the class at the requested precision.  Requires
 * precision <= the p-adic depth v_p(modulus) for every supported prime.
 */
FiniteAdele system_to_adele(const CompatibleSystem& s, int precision,
                            int denominator_cap = 6);

/**
 * Inverse direction: the compatible system of the class of x at the given
 * modulus.  Requires the modulus to cover the support (v_p(m) >= k_p) and
 * its depth to stay within precision (v_p(m) <= N + k_p).
 */
CompatibleSystem adele_to_system(const FiniteAdele& x, const Int& modulus);

/**
 * Division of the class by n: returns y with n*y = x componentwise at x's
 * precision (so n*y - x reduces to an integral adele); k grows by v_p(n),
 * subject to the denominator cap.
 */
FiniteAdele divide_class(const FiniteAdele& x, const Int& n);

/**
 * Bounded search for a global representative of the class of x: lambda in
 * (1/D') O_K with D' | denominator_bound whose class matches every tracked
 * component.  A nullopt is none-within-bound, not a proof of non-globality.
 */
std::optional<GlobalElement> is_global(const FiniteAdele& x, const Int& denominator_bound);

}  // namespace homkit
