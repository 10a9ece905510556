#include "homkit/number_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace homkit {

namespace {

void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Index deg(const IntPoly& f) { return static_cast<Index>(f.size()) - 1; }

}  // namespace

Int poly_eval(const IntPoly& f, const Int& x) {
    Int acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

IntPoly poly_mul(const IntPoly& f, const IntPoly& g) {
    if (f.empty() || g.empty()) return {};
    IntPoly h(f.size() + g.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
    trim(h);
    return h;
}

IntPoly poly_derivative(const IntPoly& f) {
    IntPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(Int(i) * f[i]);
    trim(d);
    return d;
}

IntPoly poly_mod_monic(const IntPoly& f, const IntPoly& g) {
    if (g.empty() || g.back() != 1)
        throw std::invalid_argument("poly_mod_monic: divisor not monic");
    IntPoly r = f;
    trim(r);
    while (deg(r) >= deg(g) && !r.empty()) {
        Int c = r.back();
        std::size_t shift = r.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] -= c * g[i];
        trim(r);
    }
    return r;
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.empty() || g.empty()) return 0;
    const Index m = deg(f), n = deg(g);
    if (m == 0 && n == 0) return 1;
    IntMatrix s = int_zero(m + n, m + n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j <= m; ++j) s(i, i + j) = f[m - j];
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j <= n; ++j) s(n + i, i + j) = g[n - j];
    return determinant(s);
}

namespace {

std::vector<Int> divisors_with_sign(const Int& n) {
    std::vector<Int> out;
    Int a = abs(n);
    for (Int d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            if (d * d != a) {
                out.push_back(a / d);
                out.push_back(-(a / d));
            }
        }
    return out;
}

bool has_rational_root(const IntPoly& f) {
    // Monic, so rational roots are integer divisors of the constant term.
    if (f[0] == 0) return true;  // x divides f
    for (const Int& r : divisors_with_sign(f[0]))
        if (poly_eval(f, r) == 0) return true;
    return false;
}

/// Quartic-only check for a factorization into two monic quadratics.
bool has_quadratic_factor_quartic(const IntPoly& f) {
    // f = x^4 + c3 x^3 + c2 x^2 + c1 x + c0 = (x^2+ax+b)(x^2+cx+e).
    const Int &c0 = f[0], &c1 = f[1], &c2 = f[2], &c3 = f[3];
    for (const Int& b : divisors_with_sign(c0)) {
        Int e = c0 / b;
        // a+c = c3, b+e+ac = c2, ae+bc = c1.
        Int s = c3;
        Int prod = c2 - b - e;  // ac
        // a, c are integer roots of t^2 - s t + prod.
        Int discr = s * s - 4 * prod;
        if (discr < 0) continue;
        Int root = sqrt(discr);
        if (root * root != discr) continue;
        for (int sign = -1; sign <= 1; sign += 2) {
            Int twice_a = s + sign * root;
            if (twice_a % 2 != 0) continue;
            Int a = twice_a / 2;
            Int c = s - a;
            if (a * e + b * c == c1) return true;
        }
    }
    return false;
}

}  // namespace

NumberField make_number_field(const IntPoly& min_poly) {
    IntPoly f = min_poly;
    trim(f);
    if (f.size() < 2)
        throw std::invalid_argument("number field: minimal polynomial must have degree >= 1");
    if (f.back() != 1)
        throw std::invalid_argument("number field: minimal polynomial must be monic");
    const Index d = deg(f);
    if (d > 4)
        throw std::invalid_argument(
            "number field: irreducibility checking is implemented for degree <= 4");
    if (d >= 2 && has_rational_root(f))
        throw std::invalid_argument("number field: minimal polynomial is reducible");
    if (d == 4 && has_quadratic_factor_quartic(f))
        throw std::invalid_argument("number field: minimal polynomial is reducible");

    NumberField k;
    k.min_poly = f;
    if (d == 1) {
        k.disc = 1;
    } else {
        Int res = resultant(f, poly_derivative(f));
        // disc = (-1)^{d(d-1)/2} Res(f, f') for monic f.
        k.disc = ((d * (d - 1) / 2) % 2 == 0) ? res : Int(-res);
    }
    return k;
}

NumberField rational_field() { return make_number_field({0, 1}); }

int real_embedding_count(const NumberField& k) {
    const Index d = k.degree();
    if (d == 1) return 1;
    // Sturm chain over rationals; the minimal polynomial is squarefree.
    using QPoly = std::vector<mpq_class>;
    auto qtrim = [](QPoly& f) { while (!f.empty() && f.back() == 0) f.pop_back(); };
    QPoly f0(k.min_poly.size()), f1;
    for (std::size_t i = 0; i < k.min_poly.size(); ++i) f0[i] = k.min_poly[i];
    {
        IntPoly d1 = poly_derivative(k.min_poly);
        f1.resize(d1.size());
        for (std::size_t i = 0; i < d1.size(); ++i) f1[i] = d1[i];
    }
    auto qrem = [&](QPoly a, const QPoly& b) {
        while (a.size() >= b.size() && !a.empty()) {
            mpq_class c = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
            qtrim(a);
        }
        return a;
    };
    std::vector<QPoly> chain = {f0, f1};
    while (!chain.back().empty() && chain.back().size() > 1) {
        QPoly r = qrem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(r);
    }
    auto variations = [&](int at_infinity) {  // +1 or -1
        int var = 0, prev = 0;
        for (const QPoly& f : chain) {
            if (f.empty()) continue;
            int s = sgn(f.back());
            if ((f.size() - 1) % 2 == 1 && at_infinity < 0) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++var;
            if (s != 0) prev = s;
        }
        return var;
    };
    return variations(-1) - variations(+1);
}

bool covers_minkowski_bound(const NumberField& k, const Int& bound_num,
                            const Int& bound_den) {
    if (bound_den <= 0 || bound_num < 0)
        throw std::invalid_argument("covers_minkowski_bound: bad bound");
    const Index d = k.degree();
    if (d == 1) return true;  // bound is 1 for Q
    const int r2 = static_cast<int>(d - real_embedding_count(k)) / 2;
    // Need B >= sqrt|disc| (4/pi)^{r2} d!/d^d.  Compare squares with the
    // rational upper bound pi^2 > 986/100, i.e. (16/pi^2) < 1600/986.
    Int fact = 1;
    for (Index i = 2; i <= d; ++i) fact *= i;
    Int dd = pow_int(Int(d), static_cast<unsigned long>(d));
    mpq_class lhs(bound_num * bound_num, bound_den * bound_den);
    lhs *= mpq_class(dd * dd, fact * fact);
    mpq_class rhs(abs(k.disc), 1);
    for (int i = 0; i < r2; ++i) rhs *= mpq_class(1600, 986);
    lhs.canonicalize();
    rhs.canonicalize();
    return lhs >= rhs;
}

OkElement OkElement::zero(const NumberField& k) {
    OkElement e;
    e.coords = IntVector::Zero(k.degree());
    return e;
}

OkElement OkElement::one(const NumberField& k) {
    OkElement e = zero(k);
    e.coords(0) = 1;
    return e;
}

OkElement ok_add(const OkElement& a, const OkElement& b) {
    OkElement e;
    e.coords = a.coords + b.coords;
    return e;
}

OkElement ok_sub(const OkElement& a, const OkElement& b) {
    OkElement e;
    e.coords = a.coords - b.coords;
    return e;
}

OkElement ok_scale(const Int& n, const OkElement& a) {
    OkElement e;
    e.coords = n * a.coords;
    return e;
}

OkElement ok_mul(const NumberField& k, const OkElement& a, const OkElement& b) {
    IntPoly fa(a.coords.data(), a.coords.data() + a.coords.size());
    IntPoly fb(b.coords.data(), b.coords.data() + b.coords.size());
    IntPoly prod = poly_mod_monic(poly_mul(fa, fb), k.min_poly);
    OkElement e = OkElement::zero(k);
    for (std::size_t i = 0; i < prod.size(); ++i) e.coords(i) = prod[i];
    return e;
}

Int ok_norm(const NumberField& k, const OkElement& a) {
    IntPoly g(a.coords.data(), a.coords.data() + a.coords.size());
    IntPoly gt = g;
    trim(gt);
    if (gt.empty()) return 0;
    // Monic f: Res(f, g) = prod over roots of f of g(root) = N(g(theta)).
    return resultant(k.min_poly, gt);
}

std::string ok_to_string(const NumberField& k, const OkElement& a) {
    std::ostringstream os;
    bool first = true;
    for (Index i = 0; i < k.degree(); ++i) {
        if (a.coords(i) == 0) continue;
        if (!first) os << " + ";
        os << a.coords(i).get_str();
        if (i >= 1) os << "*t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

using FpPoly = std::vector<Int>;  // coefficients reduced mod p

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_reduce(const IntPoly& f, const Int& p) {
    FpPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = mod_floor(f[i], p);
    fp_trim(out);
    return out;
}

FpPoly fp_monic(FpPoly f, const Int& p) {
    fp_trim(f);
    if (f.empty()) return f;
    Int inv = inv_mod(f.back(), p);
    for (auto& c : f) c = mod_floor(c * inv, p);
    return f;
}

FpPoly fp_mul(const FpPoly& f, const FpPoly& g, const Int& p) {
    if (f.empty() || g.empty()) return {};
    FpPoly h(f.size() + g.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] = mod_floor(h[i + j] + f[i] * g[j], p);
    fp_trim(h);
    return h;
}

/// Division with remainder by a monic divisor.
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& f, const FpPoly& g, const Int& p) {
    FpPoly r = f, q(f.size() > g.size() ? f.size() - g.size() + 1 : 1, Int(0));
    fp_trim(r);
    while (r.size() >= g.size() && !r.empty()) {
        Int c = r.back();
        std::size_t shift = r.size() - g.size();
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
            r[shift + i] = mod_floor(r[shift + i] - c * g[i], p);
        fp_trim(r);
    }
    fp_trim(q);
    return {q, r};
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Int& p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_divmod(a, fp_monic(b, p), p).second;
        a = b;
        b = r;
    }
    return fp_monic(a, p);
}

Int fp_eval(const FpPoly& f, const Int& x, const Int& p) {
    Int acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = mod_floor(acc * x + f[i], p);
    return acc;
}

/// Complete factorization of a monic polynomial of degree <= 4 over F_p.
std::vector<std::pair<FpPoly, int>> fp_factor(FpPoly f, const Int& p) {
    std::vector<FpPoly> irreducibles;
    // Linear factors by root scanning.
    fp_trim(f);
    bool found = true;
    while (found && f.size() > 1) {
        found = false;
        for (Int r = 0; r < p; ++r) {
            if (fp_eval(f, r, p) != 0) continue;
            FpPoly lin = {mod_floor(-r, p), 1};
            f = fp_divmod(f, lin, p).first;
            irreducibles.push_back(lin);
            found = true;
            break;
        }
    }
    fp_trim(f);
    const Index rest = static_cast<Index>(f.size()) - 1;
    if (rest == 2 || rest == 3) {
        irreducibles.push_back(fp_monic(f, p));  // root-free => irreducible
    } else if (rest == 4) {
        bool split = false;
        for (Int a = 0; a < p && !split; ++a)
            for (Int b = 0; b < p && !split; ++b) {
                FpPoly quad = {b, a, 1};
                auto [q, r] = fp_divmod(f, quad, p);
                if (r.empty()) {
                    irreducibles.push_back(quad);
                    irreducibles.push_back(fp_monic(q, p));
                    split = true;
                }
            }
        if (!split) irreducibles.push_back(fp_monic(f, p));
    } else if (rest > 4) {
        throw std::invalid_argument("factor_prime: residual degree above desk scale");
    }

    // Collect multiplicities, sorted for determinism.
    std::sort(irreducibles.begin(), irreducibles.end());
    std::vector<std::pair<FpPoly, int>> out;
    for (const auto& g : irreducibles) {
        if (!out.empty() && out.back().first == g)
            ++out.back().second;
        else
            out.push_back({g, 1});
    }
    return out;
}

}  // namespace

PrimeSplit factor_prime(const NumberField& k, const Int& p) {
    if (!is_prime_int(p))
        throw std::invalid_argument("factor_prime: " + p.get_str() + " is not prime");
    if (p > 100000)
        throw std::invalid_argument("factor_prime: prime above desk scale");

    FpPoly fbar = fp_reduce(k.min_poly, p);
    if (static_cast<Index>(fbar.size()) - 1 != k.degree())
        throw std::logic_error("factor_prime: leading coefficient vanished");
    auto factors = fp_factor(fbar, p);

    if (k.disc % p == 0 && k.degree() > 1) {
        // Dedekind's criterion certifies p does not divide [O_K : Z[theta]]:
        // with fbar = prod g_i^{e_i}, g = prod g_i, h = fbar/g lifted monic,
        // F = (g h - f)/p, the test is gcd(F, g, h) = 1 mod p.
        FpPoly gbar = {1};
        for (const auto& [gi, e] : factors) gbar = fp_mul(gbar, gi, p);
        FpPoly hbar = fp_divmod(fbar, gbar, p).first;
        IntPoly g_lift(gbar.begin(), gbar.end());
        IntPoly h_lift(hbar.begin(), hbar.end());
        if (h_lift.empty()) h_lift = {1};
        IntPoly gh = poly_mul(g_lift, h_lift);
        IntPoly big_f(std::max(gh.size(), k.min_poly.size()), Int(0));
        for (std::size_t i = 0; i < gh.size(); ++i) big_f[i] += gh[i];
        for (std::size_t i = 0; i < k.min_poly.size(); ++i) big_f[i] -= k.min_poly[i];
        for (auto& c : big_f) {
            if (c % p != 0)
                throw std::logic_error("factor_prime: Dedekind lift not divisible");
            c /= p;
        }
        FpPoly fp_f = fp_reduce(big_f, p);
        FpPoly gcd1 = fp_gcd(fp_f, gbar, p);
        FpPoly gcd2 = fp_gcd(gcd1, hbar, p);
        if (gcd2.size() != 1)
            throw std::invalid_argument(
                "factor_prime: p divides the discriminant and Dedekind's "
                "criterion cannot certify the split at p = " + p.get_str());
    }

    PrimeSplit out;
    out.p = p;
    Index total = 0;
    for (const auto& [gi, e] : factors) {
        PrimeSplit::Factor fac;
        fac.poly = IntPoly(gi.begin(), gi.end());
        fac.e = e;
        fac.f = static_cast<int>(gi.size()) - 1;
        total += Index(fac.e) * Index(fac.f);
        out.factors.push_back(std::move(fac));
    }
    if (total != k.degree())
        throw std::logic_error("factor_prime: ramification degrees do not sum to d");
    return out;
}

}  // namespace homkit
