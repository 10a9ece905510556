#include "homkit/adele.hpp"

#include <sstream>
#include <stdexcept>

namespace homkit {

namespace {

Int pow_p(const Int& p, int e) { return pow_int(p, static_cast<unsigned long>(e)); }

IntVector vec_mod(const IntVector& v, const Int& m) {
    IntVector out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = mod_floor(v(i), m);
    return out;
}

bool vec_divisible(const IntVector& v, const Int& p) {
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) % p != 0) return false;
    return true;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

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

}  // namespace

bool FiniteAdele::is_integral() const {
    for (const auto& [p, c] : components)
        if (c.k != 0) return false;
    return true;
}

bool FiniteAdele::operator==(const FiniteAdele& o) const {
    if (!(field == o.field) || precision != o.precision) return false;
    if (components.size() != o.components.size()) return false;
    for (const auto& [p, c] : components) {
        auto it = o.components.find(p);
        if (it == o.components.end()) return false;
        if (c.k != it->second.k || c.r != it->second.r) return false;
    }
    return true;
}

void canonicalize(FiniteAdele& x) {
    if (x.precision < 1)
        throw std::invalid_argument("adele: precision must be >= 1");
    const Index d = x.field.degree();
    for (auto it = x.components.begin(); it != x.components.end();) {
        const Int& p = it->first;
        auto& c = it->second;
        if (p < 2 || !is_prime_int(p))
            throw std::invalid_argument("adele: support contains a nonprime");
        if (c.k < 0) throw std::invalid_argument("adele: negative denominator exponent");
        if (c.k > x.denominator_cap)
            throw std::invalid_argument("adele: denominator cap exceeded at p = " +
                                        p.get_str());
        if (c.r.size() != d)
            throw std::invalid_argument("adele: component coordinate count mismatch");
        c.r = vec_mod(c.r, pow_p(p, x.precision + c.k));
        while (c.k > 0 && vec_divisible(c.r, p)) {
            c.r /= p;
            --c.k;
        }
        if (c.k == 0 && is_zero_matrix(c.r)) {
            it = x.components.erase(it);
        } else {
            ++it;
        }
    }
}

FiniteAdele make_adele(const NumberField& k, int precision,
                       const std::map<Int, FiniteAdele::Component>& components,
                       int denominator_cap) {
    FiniteAdele x;
    x.field = k;
    x.precision = precision;
    x.denominator_cap = denominator_cap;
    x.components = components;
    canonicalize(x);
    return x;
}

namespace {

void require_compatible(const FiniteAdele& x, const FiniteAdele& y, const char* op) {
    if (!(x.field == y.field))
        throw std::invalid_argument(std::string(op) + ": fields differ");
    if (x.precision != y.precision)
        throw std::invalid_argument(std::string(op) + ": precisions differ");
}

}  // namespace

FiniteAdele adele_add(const FiniteAdele& x, const FiniteAdele& y) {
    require_compatible(x, y, "adele_add");
    FiniteAdele out = x;
    out.denominator_cap = std::max(x.denominator_cap, y.denominator_cap);
    for (const auto& [p, cy] : y.components) {
        auto it = out.components.find(p);
        if (it == out.components.end()) {
            out.components[p] = cy;
            continue;
        }
        auto& cx = it->second;
        const int k = std::max(cx.k, cy.k);
        const Int modulus = pow_p(p, x.precision + k);
        IntVector rx = cx.r * pow_p(p, k - cx.k);
        IntVector ry = cy.r * pow_p(p, k - cy.k);
        cx.k = k;
        cx.r = vec_mod(rx + ry, modulus);
    }
    canonicalize(out);
    return out;
}

FiniteAdele adele_scale(const Int& n, const FiniteAdele& x) {
    FiniteAdele out = x;
    for (auto& [p, c] : out.components) c.r = vec_mod(Int(n) * c.r, pow_p(p, out.precision + c.k));
    canonicalize(out);
    return out;
}

FiniteAdele adele_sub(const FiniteAdele& x, const FiniteAdele& y) {
    return adele_add(x, adele_scale(Int(-1), y));
}

FiniteAdele adele_of_global(const NumberField& k, int precision, const OkElement& num,
                            const Int& den, const std::vector<Int>& support,
                            int denominator_cap) {
    if (den <= 0) throw std::invalid_argument("adele_of_global: denominator must be positive");
    FiniteAdele x;
    x.field = k;
    x.precision = precision;
    x.denominator_cap = denominator_cap;
    for (const auto& [p, c] : factorize(den)) {
        FiniteAdele::Component comp;
        comp.k = c;
        const Int modulus = pow_p(p, precision + c);
        Int cofactor = den / pow_p(p, c);
        comp.r = vec_mod(num.coords * inv_mod(cofactor, modulus), modulus);
        x.components[p] = std::move(comp);
    }
    for (const Int& p : support) {
        if (x.components.count(p)) continue;
        FiniteAdele::Component comp;
        comp.k = 0;
        const Int modulus = pow_p(p, precision);
        comp.r = vec_mod(num.coords * inv_mod(mod_floor(den, modulus), modulus), modulus);
        x.components[p] = std::move(comp);
    }
    canonicalize(x);
    return x;
}

bool same_class_at_precision(const FiniteAdele& x, const FiniteAdele& y) {
    if (!(x.field == y.field)) return false;
    auto class_matches = [](const FiniteAdele::Component* a,
                            const FiniteAdele::Component* b, const Int& p) {
        const int ka = a ? a->k : 0;
        const int kb = b ? b->k : 0;
        if (ka != kb) return false;
        if (ka == 0) return true;  // both integral classes
        const Int m = pow_p(p, ka);
        for (Index i = 0; i < a->r.size(); ++i)
            if (mod_floor(a->r(i), m) != mod_floor(b->r(i), m)) return false;
        return true;
    };
    for (const auto& [p, c] : x.components) {
        auto it = y.components.find(p);
        if (!class_matches(&c, it == y.components.end() ? nullptr : &it->second, p))
            return false;
    }
    for (const auto& [p, c] : y.components)
        if (!x.components.count(p) && c.k != 0) return false;
    return true;
}

ReduceResult strong_approx_reduce(const FiniteAdele& input) {
    FiniteAdele x = input;
    canonicalize(x);
    const Index d = x.field.degree();

    Int big_d = 1;
    for (const auto& [p, c] : x.components) big_d *= pow_p(p, c.k);

    ReduceResult out;
    out.lambda.den = big_d;
    out.lambda.num = OkElement::zero(x.field);
    if (big_d > 1) {
        for (Index j = 0; j < d; ++j) {
            std::vector<Int> residues, moduli;
            for (const auto& [p, c] : x.components) {
                if (c.k == 0) continue;
                const Int pk = pow_p(p, c.k);
                residues.push_back(mod_floor(c.r(j) * (big_d / pk), pk));
                moduli.push_back(pk);
            }
            out.lambda.num.coords(j) = crt(residues, moduli);
        }
    }

    // y = x - lambda, componentwise; integral by construction.
    FiniteAdele y = x;
    for (auto& [p, c] : y.components) {
        const Int pk = pow_p(p, c.k);
        const Int modulus = pow_p(p, y.precision + c.k);
        IntVector lam = vec_mod(out.lambda.num.coords * inv_mod(mod_floor(big_d / pk, modulus), modulus),
                                modulus);
        IntVector num = vec_mod(c.r - lam, modulus);
        if (c.k > 0) {
            if (!vec_divisible(num, pk))
                throw std::logic_error("strong_approx_reduce: CRT residue mismatch");
            num /= pk;
        }
        c.k = 0;
        c.r = vec_mod(num, pow_p(p, y.precision));
    }
    canonicalize(y);
    out.integral = std::move(y);
    return out;
}

void CompatibleSystem::validate() const {
    if (modulus < 1)
        throw std::invalid_argument("compatible system: modulus must be >= 1");
    const Index d = field.degree();
    const std::vector<Int> divs = divisors(modulus);
    if (values.size() != divs.size())
        throw std::invalid_argument(
            "compatible system: values must cover every divisor of the modulus");
    for (const Int& m : divs) {
        auto it = values.find(m);
        if (it == values.end())
            throw std::invalid_argument("compatible system: missing divisor " + m.get_str());
        if (it->second.size() != d)
            throw std::invalid_argument("compatible system: coordinate count at " +
                                        m.get_str());
        for (Index j = 0; j < d; ++j)
            if (it->second(j) < 0 || it->second(j) >= m)
                throw std::invalid_argument("compatible system: value not reduced mod " +
                                            m.get_str());
    }
    for (const Int& m : divs)
        for (const Int& m2 : divs) {
            if (m2 >= m || m % m2 != 0) continue;
            // value(1/m2) = (m/m2) value(1/m): numerators agree mod m2.
            const IntVector& vm = values.at(m);
            const IntVector& vm2 = values.at(m2);
            for (Index j = 0; j < d; ++j)
                if (mod_floor(vm(j), m2) != vm2(j))
                    throw std::invalid_argument(
                        "compatible system: divisor pair (" + m2.get_str() + ", " +
                        m.get_str() + ") incompatible");
        }
}

CompatibleSystem make_system(const NumberField& k, const Int& modulus,
                             const std::map<Int, IntVector>& values) {
    CompatibleSystem s;
    s.field = k;
    s.modulus = modulus;
    s.values = values;
    s.validate();
    return s;
}

CompatibleSystem system_of_numerator(const NumberField& k, const Int& modulus,
                                     const IntVector& numerator) {
    CompatibleSystem s;
    s.field = k;
    s.modulus = modulus;
    for (const Int& m : divisors(modulus)) s.values[m] = vec_mod(numerator, m);
    s.validate();
    return s;
}

FiniteAdele system_to_adele(const CompatibleSystem& s, int precision,
                            int denominator_cap) {
    s.validate();
    if (precision < 1)
        throw std::invalid_argument("system_to_adele: precision must be >= 1");
    FiniteAdele x;
    x.field = s.field;
    x.precision = precision;
    x.denominator_cap = denominator_cap;
    const IntVector& w = s.values.at(s.modulus);
    for (const auto& [p, e] : factorize(s.modulus)) {
        if (precision > e)
            throw std::invalid_argument(
                "system_to_adele: precision exceeds the p-adic depth of the modulus at p = " +
                p.get_str());
        const Int pe = pow_p(p, e);
        const Int cofactor = s.modulus / pe;
        IntVector c = vec_mod(w * inv_mod(mod_floor(cofactor, pe), pe), pe);
        if (is_zero_matrix(c)) continue;  // integral at p
        int v = e;
        for (Index j = 0; j < c.size(); ++j)
            if (c(j) != 0) v = std::min(v, valuation(c(j), p));
        const int k = e - v;
        if (k == 0) continue;  // integral class, canonical representative zero
        if (k > denominator_cap)
            throw std::invalid_argument("system_to_adele: denominator cap exceeded");
        FiniteAdele::Component comp;
        comp.k = k;
        comp.r = c / pow_p(p, v);  // exact; known mod p^k, canonically lifted
        x.components[p] = std::move(comp);
    }
    canonicalize(x);
    return x;
}

CompatibleSystem adele_to_system(const FiniteAdele& input, const Int& modulus) {
    FiniteAdele x = input;
    canonicalize(x);
    if (modulus < 1)
        throw std::invalid_argument("adele_to_system: modulus must be >= 1");
    auto fac = factorize(modulus);
    for (const auto& [p, c] : x.components) {
        int e = 0;
        for (const auto& [q, eq] : fac)
            if (q == p) e = eq;
        if (e < c.k)
            throw std::invalid_argument(
                "adele_to_system: modulus does not cover the class denominator at p = " +
                p.get_str());
        if (e > x.precision + c.k)
            throw std::invalid_argument(
                "adele_to_system: modulus depth exceeds the precision at p = " +
                p.get_str());
    }
    for (const auto& [p, e] : fac)
        if (!x.components.count(p) && e > x.precision)
            throw std::invalid_argument(
                "adele_to_system: modulus depth exceeds the precision at p = " +
                p.get_str());

    const Index d = x.field.degree();
    IntVector w(d);
    for (Index j = 0; j < d; ++j) {
        std::vector<Int> residues, moduli;
        for (const auto& [p, e] : fac) {
            const Int pe = pow_p(p, e);
            auto it = x.components.find(p);
            if (it == x.components.end()) {
                residues.push_back(0);
            } else {
                const auto& c = it->second;
                // w = (m/p^e) p^{e-k} r mod p^e.
                Int scale = mod_floor((modulus / pe) * pow_p(p, e - c.k), pe);
                residues.push_back(mod_floor(c.r(j) * scale, pe));
            }
            moduli.push_back(pe);
        }
        w(j) = crt(residues, moduli);
    }
    return system_of_numerator(x.field, modulus, w);
}

FiniteAdele divide_class(const FiniteAdele& input, const Int& n) {
    if (n < 1) throw std::invalid_argument("divide_class: n must be >= 1");
    FiniteAdele x = input;
    canonicalize(x);
    for (auto& [p, c] : x.components) {
        const int a = (n % p == 0) ? valuation(n, p) : 0;
        const int k2 = c.k + a;
        if (k2 > x.denominator_cap)
            throw std::invalid_argument("divide_class: denominator cap exceeded at p = " +
                                        p.get_str());
        const Int modulus = pow_p(p, x.precision + k2);
        const Int unit = n / pow_p(p, a);
        c.k = k2;
        c.r = vec_mod(c.r * inv_mod(mod_floor(unit, modulus), modulus), modulus);
    }
    canonicalize(x);
    return x;
}

std::optional<GlobalElement> is_global(const FiniteAdele& input, const Int& denominator_bound) {
    if (denominator_bound < 1)
        throw std::invalid_argument("is_global: bound must be >= 1");
    FiniteAdele x = input;
    canonicalize(x);
    Int dprime = 1;
    for (const auto& [p, c] : x.components) dprime *= pow_p(p, c.k);
    if (denominator_bound % dprime != 0) return std::nullopt;

    GlobalElement g;
    g.den = dprime;
    g.num = OkElement::zero(x.field);
    const Index d = x.field.degree();
    for (Index j = 0; j < d; ++j) {
        std::vector<Int> residues, moduli;
        for (const auto& [p, c] : x.components) {
            if (c.k == 0) continue;
            const Int pk = pow_p(p, c.k);
            residues.push_back(mod_floor(c.r(j) * (dprime / pk), pk));
            moduli.push_back(pk);
        }
        g.num.coords(j) = crt(residues, moduli);
    }

    // The witness must reproduce the class of x.
    std::vector<Int> support;
    for (const auto& [p, c] : x.components) support.push_back(p);
    FiniteAdele check = adele_of_global(x.field, x.precision, g.num, g.den, support,
                                        x.denominator_cap);
    if (!same_class_at_precision(check, x))
        throw std::logic_error("is_global: witness fails the class comparison");
    return g;
}

}  // namespace homkit
