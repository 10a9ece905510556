#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <vector>

namespace Eigen {

/**
 * NumTraits for GMP arbitrary-precision integers, so that Eigen dense
 * matrices can be instantiated with exact integer scalars.
 */
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpz_class NonInteger;
    typedef mpz_class Nested;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 50
    };
};

}  // namespace Eigen

namespace homkit {

/// Exact integer scalar used throughout.
using Int = mpz_class;

/// Dense integer matrix, the substrate of all differentials and presentations.
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// g = gcd(a, b) together with Bezout coefficients g = s*a + t*b.
inline Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return g;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// Inverse of a modulo m.  Throws if gcd(a, m) != 1.
Int inv_mod(const Int& a, const Int& m);

/// Least nonnegative residue of a modulo m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// p-adic valuation of a nonzero integer.
int valuation(const Int& a, const Int& p);

bool is_prime_int(const Int& p);

/// Chinese remainder: value congruent to r[i] mod m[i] for pairwise coprime
/// moduli, reduced modulo the product.
Int crt(const std::vector<Int>& residues, const std::vector<Int>& moduli);

IntMatrix int_identity(Index n);
IntMatrix int_zero(Index rows, Index cols);

bool is_zero_matrix(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

/// True when |det| = 1.
bool is_unimodular(const IntMatrix& a);

/// Integer inverse of a unimodular matrix.  Throws std::invalid_argument when
/// the input is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// gcd of all k x k minors (0 when every minor vanishes; 1 for k = 0).
Int minor_gcd(const IntMatrix& a, Index k);

std::string to_string(const IntMatrix& a);

}  // namespace homkit
