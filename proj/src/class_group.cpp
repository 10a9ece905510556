#include "homkit/class_group.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace homkit {

namespace {

std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.push_back({p, e});
        }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::string poly_name(const IntPoly& f) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        if (!first) os << "+";
        if (i == 0 || f[i] != 1) os << f[i].get_str();
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

/// Linear Hensel lift of a simple root of f mod p to modulus p^T.
Int hensel_lift_root(const IntPoly& f, const Int& p, const Int& root, int T) {
    IntPoly df = poly_derivative(f);
    Int c = root;
    Int modulus = p;
    Int dinv = inv_mod(mod_floor(poly_eval(df, c), p), p);
    for (int j = 1; j < T; ++j) {
        Int value = mod_floor(poly_eval(f, c), modulus * p);
        Int t = mod_floor(-(value / modulus) * dinv, p);
        c += t * modulus;
        modulus *= p;
    }
    return c;
}

/// Exhaustive search for an algebraic integer of absolute norm `target` in
/// an imaginary quadratic field; decidable because the norm form is
/// positive definite.
bool definite_norm_exists(const NumberField& k, const Int& target) {
    // N(a + b theta) = a^2 + u a b + w b^2 with f = x^2 + u x + w.
    const Int u = k.min_poly[1], w = k.min_poly[0];
    const Int disc_abs = abs(k.disc);
    // q(a, b) >= |disc| b^2 / 4, so |b| <= sqrt(4 target / |disc|).
    Int bmax = sqrt((4 * target) / disc_abs) + 1;
    for (Int b = -bmax; b <= bmax; ++b) {
        // a^2 + (u b) a + (w b^2 - target) = 0.
        Int discr = u * u * b * b - 4 * (w * b * b - target);
        if (discr < 0) continue;
        Int root = sqrt(discr);
        if (root * root != discr) continue;
        for (int sign = -1; sign <= 1; sign += 2) {
            Int twice_a = -u * b + sign * root;
            if (twice_a % 2 != 0) continue;
            Int a = twice_a / 2;
            if (a * a + u * a * b + w * b * b == target) return true;
        }
    }
    return false;
}

}  // namespace

ClassGroupResult class_group(const NumberField& k, const Int& bound_num,
                             const Int& bound_den, const ClassGroupOptions& opts) {
    if (!covers_minkowski_bound(k, bound_num, bound_den))
        throw std::invalid_argument(
            "class_group: enumeration bound is below the Minkowski bound");

    ClassGroupResult out;
    if (k.degree() == 1) {
        out.group = trivial_group();
        out.status = ClassGroupResult::Status::certified;
        out.detail = "degree-1 field";
        return out;
    }

    const Int pmax = bound_num / bound_den;  // floor
    struct Generator {
        Int p;
        int f = 1;
        std::string name;
    };
    std::vector<Generator> gens;
    std::vector<std::vector<Int>> relations;  // rows over generators
    std::map<Int, PrimeSplit> splits;

    for (Int p = 2; p <= pmax; ++p) {
        if (!is_prime_int(p)) continue;
        PrimeSplit split = factor_prime(k, p);
        std::vector<Int> relation;
        const std::size_t base = gens.size();
        for (std::size_t i = 0; i < split.factors.size(); ++i) {
            Generator g;
            g.p = p;
            g.f = split.factors[i].f;
            g.name = "(" + p.get_str() + "; " + poly_name(split.factors[i].poly) + ")";
            gens.push_back(std::move(g));
        }
        relation.assign(gens.size(), Int(0));
        for (std::size_t i = 0; i < split.factors.size(); ++i)
            relation[base + i] = split.factors[i].e;  // (p) = prod P_i^{e_i}
        relations.push_back(std::move(relation));
        splits[p] = std::move(split);
    }
    for (auto& r : relations) r.resize(gens.size(), Int(0));
    for (const auto& g : gens) out.generators.push_back(g.name);

    if (gens.empty()) {
        out.group = trivial_group();
        out.status = ClassGroupResult::Status::certified;
        out.detail = "no primes below the bound";
        return out;
    }

    // Principal relations from bounded element search.
    const Index d = k.degree();
    std::vector<Int> coords(d, -opts.element_box);
    auto advance = [&]() {
        for (Index i = 0; i < d; ++i) {
            if (coords[i] < opts.element_box) {
                ++coords[i];
                return true;
            }
            coords[i] = -opts.element_box;
        }
        return false;
    };
    do {
        OkElement g = OkElement::zero(k);
        bool zero = true;
        for (Index i = 0; i < d; ++i) {
            g.coords(i) = coords[i];
            if (coords[i] != 0) zero = false;
        }
        if (zero) continue;
        Int norm = abs(ok_norm(k, g));
        if (norm <= 1) continue;

        auto fac = factorize(norm);
        bool smooth = true;
        for (const auto& [p, e] : fac)
            if (p > pmax) smooth = false;
        if (!smooth) continue;

        std::vector<Int> relation(gens.size(), Int(0));
        bool usable = true;
        for (const auto& [p, vp] : fac) {
            const PrimeSplit& split = splits.at(p);
            std::size_t base = 0;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (gens[i].p == p) {
                    base = i;
                    break;
                }
            if (split.factors.size() == 1) {
                // Unique prime over p: f * v_P = v_p(norm).
                const int f = split.factors[0].f;
                if (vp % f != 0) throw std::logic_error("class_group: valuation mismatch");
                relation[base] = vp / f;
            } else {
                bool all_linear_unramified = true;
                for (const auto& fac2 : split.factors)
                    if (fac2.e != 1 || fac2.f != 1) all_linear_unramified = false;
                if (!all_linear_unramified) {
                    usable = false;  // mixed splitting beyond desk scale
                    break;
                }
                const int T = vp + 1;
                Int total = 0;
                for (std::size_t i = 0; i < split.factors.size(); ++i) {
                    Int root = mod_floor(-split.factors[i].poly[0], p);
                    Int lifted = hensel_lift_root(k.min_poly, p, root, T);
                    Int modulus = pow_int(p, static_cast<unsigned long>(T));
                    Int value = 0;
                    for (Index j = d; j-- > 0;)
                        value = mod_floor(value * lifted + g.coords(j), modulus);
                    int v = 0;
                    if (value == 0) throw std::logic_error("class_group: Hensel depth");
                    while (value % p == 0 && v < T) {
                        value /= p;
                        ++v;
                    }
                    relation[base + i] = v;
                    total += v;
                }
                if (total != vp) throw std::logic_error("class_group: valuations do not sum");
            }
        }
        if (usable) relations.push_back(std::move(relation));
    } while (advance());

    // Quotient of the free group on the generators by the relations.
    IntMatrix rel = int_zero(static_cast<Index>(gens.size()),
                             static_cast<Index>(relations.size()));
    for (std::size_t j = 0; j < relations.size(); ++j)
        for (std::size_t i = 0; i < gens.size(); ++i)
            rel(static_cast<Index>(i), static_cast<Index>(j)) = relations[j][i];
    FgAbelianGroup quotient = cokernel_structure(rel);
    quotient.presentation.reset();
    out.group = quotient;

    if (quotient.is_trivial()) {
        out.status = ClassGroupResult::Status::certified;
        out.detail = "all generators are principal";
        return out;
    }

    // The quotient surjects onto Cl(K); certify equality where the norm
    // form is definite and the quotient has prime order.
    const bool imaginary_quadratic = (d == 2 && k.disc < 0);
    const bool prime_cyclic = quotient.free_rank == 0 &&
                              quotient.invariant_factors.size() == 1 &&
                              is_prime_int(quotient.invariant_factors[0]);
    if (imaginary_quadratic && prime_cyclic) {
        SnfDecomposition s = smith_normal_form(rel);
        auto class_nonzero = [&](std::size_t i) {
            for (Index j = 0; j < s.u.rows(); ++j) {
                Int y = s.u(j, static_cast<Index>(i));
                Int dj = (j < std::min(s.d.rows(), s.d.cols())) ? s.d(j, j) : Int(0);
                if (dj == 0 && y != 0) return true;
                if (dj > 1 && mod_floor(y, dj) != 0) return true;
            }
            return false;
        };
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].f != 1 || !class_nonzero(i)) continue;
            if (!definite_norm_exists(k, gens[i].p)) {
                out.status = ClassGroupResult::Status::certified;
                out.detail = "ideal " + gens[i].name +
                             " certified non-principal by definite norm search";
                return out;
            }
        }
        out.status = ClassGroupResult::Status::inconclusive;
        out.detail = "relations may be incomplete at this element box";
        return out;
    }

    out.status = ClassGroupResult::Status::inconclusive;
    out.detail = "no certification route for this signature; quotient surjects onto Cl(K)";
    return out;
}

}  // namespace homkit
