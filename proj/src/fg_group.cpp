#include "homkit/fg_group.hpp"

#include <sstream>
#include <stdexcept>

namespace homkit {

FgAbelianGroup::FgAbelianGroup(Index rank, std::vector<Int> factors)
    : free_rank(rank), invariant_factors(std::move(factors)) {
    if (free_rank < 0)
        throw std::invalid_argument("FgAbelianGroup: negative rank");
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        if (invariant_factors[i] < 2)
            throw std::invalid_argument("FgAbelianGroup: invariant factor < 2");
        if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
            throw std::invalid_argument("FgAbelianGroup: factors not a divisibility chain");
    }
}

Int FgAbelianGroup::order() const {
    if (!is_finite())
        throw std::invalid_argument("order: group is infinite");
    Int n = 1;
    for (const Int& d : invariant_factors) n *= d;
    return n;
}

bool FgAbelianGroup::is_cyclic() const {
    return free_rank + static_cast<Index>(invariant_factors.size()) <= 1;
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1)
        os << "Z", first = false;
    else if (free_rank > 1)
        os << "Z^" << free_rank, first = false;
    for (const Int& d : invariant_factors) {
        os << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

FgAbelianGroup trivial_group() { return FgAbelianGroup(); }

FgAbelianGroup free_group(Index rank) { return FgAbelianGroup(rank, {}); }

FgAbelianGroup cyclic_group(const Int& n) {
    if (n == 0) return free_group(1);
    Int a = abs(n);
    if (a == 1) return trivial_group();
    return FgAbelianGroup(0, {a});
}

FgAbelianGroup group_from_cyclics(Index rank, const std::vector<Int>& cyclic_orders) {
    std::vector<Int> torsion;
    Index extra_free = 0;
    for (const Int& c : cyclic_orders) {
        Int a = abs(c);
        if (a == 0)
            ++extra_free;
        else if (a > 1)
            torsion.push_back(a);
    }
    const Index k = static_cast<Index>(torsion.size());
    IntMatrix pres = int_zero(k, k);
    for (Index i = 0; i < k; ++i) pres(i, i) = torsion[i];
    FgAbelianGroup g = cokernel_structure(pres);
    g.presentation.reset();
    g.free_rank += rank + extra_free;
    return g;
}

FgAbelianGroup cokernel_structure(const IntMatrix& a) {
    SnfDecomposition s = smith_normal_form(a);
    std::vector<Int> factors;
    Index nonzero = 0;
    for (const Int& d : s.diagonal()) {
        if (d != 0) ++nonzero;
        if (d > 1) factors.push_back(d);
    }
    FgAbelianGroup g(a.rows() - nonzero, std::move(factors));
    g.presentation = a;
    return g;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> cyclics = a.invariant_factors;
    cyclics.insert(cyclics.end(), b.invariant_factors.begin(),
                   b.invariant_factors.end());
    return group_from_cyclics(a.free_rank + b.free_rank, cyclics);
}

FgAbelianGroup hom_fg(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> cyclics;
    Index rank = 0;
    // Hom(Z, B) = B, one copy per free generator of A.
    rank += a.free_rank * b.free_rank;
    for (Index i = 0; i < a.free_rank; ++i)
        for (const Int& e : b.invariant_factors) cyclics.push_back(e);
    // Hom(Z/d, B) = B[d]; the free part of B contributes no d-torsion.
    for (const Int& d : a.invariant_factors)
        for (const Int& e : b.invariant_factors)
            cyclics.push_back(gcd_int(d, e));
    return group_from_cyclics(rank, cyclics);
}

FgAbelianGroup ext1_fg(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> cyclics;
    // Ext^1(Z/d, B) = B/dB = (Z/d)^rank(B) (+) (+)_e Z/gcd(d, e).
    for (const Int& d : a.invariant_factors) {
        for (Index i = 0; i < b.free_rank; ++i) cyclics.push_back(d);
        for (const Int& e : b.invariant_factors) cyclics.push_back(gcd_int(d, e));
    }
    return group_from_cyclics(0, cyclics);
}

Index rationalize_rank(const FgAbelianGroup& a) { return a.free_rank; }

FiniteGroupElements::FiniteGroupElements(const FgAbelianGroup& g) : group_(g) {
    if (!g.is_finite())
        throw std::invalid_argument("FiniteGroupElements: group is infinite");
    order_ = g.order();
}

std::vector<Int> FiniteGroupElements::zero() const {
    return std::vector<Int>(slots(), Int(0));
}

std::vector<Int> FiniteGroupElements::element(const Int& index) const {
    Int rest = index;
    std::vector<Int> e(slots());
    for (std::size_t i = slots(); i-- > 0;) {
        e[i] = mod_floor(rest, group_.invariant_factors[i]);
        rest /= group_.invariant_factors[i];
    }
    return e;
}

Int FiniteGroupElements::index_of(const std::vector<Int>& e) const {
    Int idx = 0;
    for (std::size_t i = 0; i < slots(); ++i)
        idx = idx * group_.invariant_factors[i] + mod_floor(e[i], group_.invariant_factors[i]);
    return idx;
}

std::vector<Int> FiniteGroupElements::add(const std::vector<Int>& x,
                                          const std::vector<Int>& y) const {
    std::vector<Int> e(slots());
    for (std::size_t i = 0; i < slots(); ++i)
        e[i] = mod_floor(x[i] + y[i], group_.invariant_factors[i]);
    return e;
}

std::vector<Int> FiniteGroupElements::scale(const Int& n,
                                            const std::vector<Int>& x) const {
    std::vector<Int> e(slots());
    for (std::size_t i = 0; i < slots(); ++i)
        e[i] = mod_floor(n * x[i], group_.invariant_factors[i]);
    return e;
}

Int FiniteGroupElements::element_order(const std::vector<Int>& x) const {
    Int ord = 1;
    for (std::size_t i = 0; i < slots(); ++i) {
        const Int& d = group_.invariant_factors[i];
        Int r = mod_floor(x[i], d);
        ord = lcm_int(ord, d / gcd_int(d, r == 0 ? d : r));
    }
    return ord;
}

std::string FiniteGroupElements::label(const std::vector<Int>& e) const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e.size(); ++i)
        os << (i ? "," : "") << e[i].get_str();
    os << ")";
    return os.str();
}

}  // namespace homkit
