#pragma once

#include "homkit/numeric.hpp"

namespace homkit {

/// Integer polynomial in ascending coefficient order; the leading
/// coefficient is last and nonzero (except for the zero polynomial {}).
using IntPoly = std::vector<Int>;

Int poly_eval(const IntPoly& f, const Int& x);
IntPoly poly_mul(const IntPoly& f, const IntPoly& g);
IntPoly poly_derivative(const IntPoly& f);
/// Remainder of f modulo a monic g.
IntPoly poly_mod_monic(const IntPoly& f, const IntPoly& g);
/// Resultant via the Sylvester matrix determinant.
Int resultant(const IntPoly& f, const IntPoly& g);

/**
 * Monogenic number field K = Q[x]/(f) with ring of integers O_K = Z[theta].
 * The minimal polynomial is monic and irreducible over Q, verified at
 * construction for degrees up to 4 (higher degrees are out of desk scale).
 */
struct NumberField {
    IntPoly min_poly;  // monic, degree >= 1
    Int disc = 1;      // discriminant of min_poly

    Index degree() const { return static_cast<Index>(min_poly.size()) - 1; }
    bool operator==(const NumberField& o) const { return min_poly == o.min_poly; }
};

/// Validates monicity and irreducibility and computes the discriminant.
NumberField make_number_field(const IntPoly& min_poly);

/// The rational field as the degree-1 field with minimal polynomial x.
NumberField rational_field();

/// Number of real roots of the (squarefree) minimal polynomial, by Sturm
/// chains over exact rationals.
int real_embedding_count(const NumberField& k);

/// True when bound_num/bound_den >= the Minkowski bound of k, decided by an
/// exact rational comparison with a safe upper bound for (4/pi)^{r2}.
bool covers_minkowski_bound(const NumberField& k, const Int& bound_num,
                            const Int& bound_den);

/// Element of O_K in the power basis 1, theta, ..., theta^{d-1}.
struct OkElement {
    IntVector coords;

    static OkElement zero(const NumberField& k);
    static OkElement one(const NumberField& k);
};

OkElement ok_add(const OkElement& a, const OkElement& b);
OkElement ok_sub(const OkElement& a, const OkElement& b);
OkElement ok_scale(const Int& n, const OkElement& a);
OkElement ok_mul(const NumberField& k, const OkElement& a, const OkElement& b);
/// Field norm N(a) = Res(min_poly, a as a polynomial in theta).
Int ok_norm(const NumberField& k, const OkElement& a);
std::string ok_to_string(const NumberField& k, const OkElement& a);

/**
 * Splitting data of a rational prime: one entry per prime ideal over p,
 * with the local irreducible factor mod p, ramification index e and residue
 * degree f; sum of e*f equals the field degree.
 */
struct PrimeSplit {
    Int p;
    struct Factor {
        IntPoly poly;  // monic irreducible mod p, coefficients in [0, p)
        int e = 1;
        int f = 1;
    };
    std::vector<Factor> factors;
};

/**
 * Kummer-Dedekind factorization of p in O_K.  When p divides the
 * discriminant, Dedekind's criterion must certify that p does not divide
 * the index [O_K : Z[theta]]; otherwise the call is rejected (conservative
 * failure, never a wrong answer).
 */
PrimeSplit factor_prime(const NumberField& k, const Int& p);

}  // namespace homkit
