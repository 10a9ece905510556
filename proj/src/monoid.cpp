#include "homkit/monoid.hpp"

#include <sstream>
#include <stdexcept>

namespace homkit {

namespace {

std::string triple_msg(const char* what, int i, int j, int k = -1) {
    std::ostringstream os;
    os << what << " fails at (" << i << ", " << j;
    if (k >= 0) os << ", " << k;
    os << ")";
    return os.str();
}

}  // namespace

void CommMonoidWithZero::validate() const {
    const Index n = size();
    if (table.rows() != n || table.cols() != n)
        throw std::invalid_argument("monoid: table shape mismatch");
    if (unit < 0 || unit >= n)
        throw std::invalid_argument("monoid: unit out of range");
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (table(i, j) < 0 || table(i, j) >= n)
                throw std::invalid_argument(triple_msg("monoid: entry out of range", i, j));
    for (Index i = 0; i < n; ++i) {
        if (table(0, i) != 0 || table(i, 0) != 0)
            throw std::invalid_argument(triple_msg("monoid: zero not absorbing", 0, i));
        if (table(unit, i) != i)
            throw std::invalid_argument(triple_msg("monoid: unit law", unit, i));
    }
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (table(i, j) != table(j, i))
                throw std::invalid_argument(triple_msg("monoid: commutativity", i, j));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k)
                if (table(table(i, j), k) != table(i, table(j, k)))
                    throw std::invalid_argument(triple_msg("monoid: associativity", i, j, k));
}

CommMonoidWithZero make_monoid(Index size, int unit,
                               const std::vector<std::vector<int>>& table) {
    CommMonoidWithZero m;
    m.carrier = PointedSet(size);
    m.unit = unit;
    m.table.resize(size, size);
    if (static_cast<Index>(table.size()) != size)
        throw std::invalid_argument("make_monoid: table shape mismatch");
    for (Index i = 0; i < size; ++i) {
        if (static_cast<Index>(table[i].size()) != size)
            throw std::invalid_argument("make_monoid: table shape mismatch");
        for (Index j = 0; j < size; ++j) m.table(i, j) = table[i][j];
    }
    m.validate();
    return m;
}

void MonoidRing::validate_ring() const {
    auto mul = [&](int a, int b) {  // carrier indices, 0 = ring zero
        if (a == 0 || b == 0) return 0;
        return static_cast<int>(structure(a - 1, b - 1));
    };
    for (int a = 1; a <= rank; ++a) {
        if (mul(unit, a) != a || mul(a, unit) != a)
            throw std::invalid_argument("monoid ring: unit law fails on basis");
        for (int b = 1; b <= rank; ++b) {
            if (mul(a, b) != mul(b, a))
                throw std::invalid_argument("monoid ring: commutativity fails on basis");
            for (int c = 1; c <= rank; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("monoid ring: associativity fails on basis");
        }
    }
}

MonoidRing monoid_ring(const CommMonoidWithZero& m) {
    m.validate();
    if (m.size() < 2)
        throw std::invalid_argument("monoid_ring: monoid has no nonzero elements");
    MonoidRing r;
    r.rank = m.size() - 1;
    r.unit = m.unit;
    r.structure.resize(r.rank, r.rank);
    for (Index i = 1; i < m.size(); ++i)
        for (Index j = 1; j < m.size(); ++j)
            r.structure(i - 1, j - 1) = m.mul(static_cast<int>(i), static_cast<int>(j));
    for (Index i = 1; i < m.size(); ++i) r.basis_labels.push_back(m.carrier.label(i));
    r.validate_ring();
    return r;
}

SmashRoundtrip smash_monoid_roundtrip(const CommMonoidWithZero& m) {
    m.validate();
    SmashRoundtrip out;
    out.smash_carrier = smash(m.carrier, m.carrier);

    // The multiplication factors through the smash because 0 is absorbing:
    // every pair with a zero coordinate lands in the basepoint class.
    out.smash_table.assign(out.smash_carrier.size, 0);
    for (Index i = 0; i < m.size(); ++i)
        for (Index j = 0; j < m.size(); ++j) {
            const Index cls = smash_index(m.carrier, m.carrier, i, j);
            const int value = m.mul(static_cast<int>(i), static_cast<int>(j));
            if (cls == 0) {
                if (value != 0)
                    throw std::invalid_argument(
                        "smash_monoid_roundtrip: multiplication does not factor");
            } else {
                out.smash_table[cls] = value;
            }
        }

    out.reconstructed = m;
    for (Index i = 0; i < m.size(); ++i)
        for (Index j = 0; j < m.size(); ++j) {
            const Index cls = smash_index(m.carrier, m.carrier, i, j);
            out.reconstructed.table(i, j) = (cls == 0) ? 0 : out.smash_table[cls];
        }
    out.reconstructed.validate();
    out.identical = (out.reconstructed.table == m.table) &&
                    (out.reconstructed.unit == m.unit) &&
                    (out.reconstructed.carrier.size == m.carrier.size);
    return out;
}

namespace {

/// All pointed endomorphisms of s, each as the image vector of elements
/// 1..|s|-1 (the basepoint is fixed).
std::vector<std::vector<Index>> pointed_endos(const PointedSet& s) {
    const Index n = s.size;
    std::vector<std::vector<Index>> out;
    std::vector<Index> img(n - 1, 0);
    while (true) {
        out.push_back(img);
        Index i = 0;
        for (; i < n - 1; ++i) {
            if (++img[i] < n) break;
            img[i] = 0;
        }
        if (i == n - 1) break;
    }
    return out;
}

/// All group endomorphisms of a finite group, as generator-image tuples.
std::vector<std::vector<std::vector<Int>>> group_endos(const FiniteGroupElements& el) {
    const auto& factors = el.group().invariant_factors;
    std::vector<std::vector<std::vector<Int>>> per_slot(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j)
        for (Int idx = 0; idx < el.order(); ++idx) {
            std::vector<Int> u = el.element(idx);
            if (el.scale(factors[j], u) == el.zero()) per_slot[j].push_back(u);
        }
    std::vector<std::vector<std::vector<Int>>> out;
    std::vector<std::size_t> pick(factors.size(), 0);
    while (true) {
        std::vector<std::vector<Int>> endo(factors.size());
        for (std::size_t j = 0; j < factors.size(); ++j) endo[j] = per_slot[j][pick[j]];
        out.push_back(endo);
        std::size_t j = 0;
        for (; j < factors.size(); ++j) {
            if (++pick[j] < per_slot[j].size()) break;
            pick[j] = 0;
        }
        if (j == factors.size()) break;
    }
    return out;
}

std::vector<Int> apply_endo(const FiniteGroupElements& el,
                            const std::vector<std::vector<Int>>& endo,
                            const std::vector<Int>& x) {
    std::vector<Int> y = el.zero();
    for (std::size_t j = 0; j < x.size(); ++j)
        y = el.add(y, el.scale(x[j], endo[j]));
    return y;
}

}  // namespace

AdjunctionWitness check_alpha_adjunction(const PointedSet& s, const FgAbelianGroup& a,
                                         const AdjunctionCaps& caps) {
    AdjunctionWitness w;
    if (!a.is_finite())
        throw std::invalid_argument("check_alpha_adjunction: group is infinite");
    FiniteGroupElements el(a);
    if (s.size > caps.max_set_size || el.order() > caps.max_group_order)
        throw std::invalid_argument("check_alpha_adjunction: size caps exceeded");

    const Index gens = s.size - 1;
    Int count = 1;
    for (Index i = 0; i < gens; ++i) count *= el.order();
    w.hom_ab_count = count;      // Hom_Ab(Z^gens, a) = a^gens
    w.hom_psets_count = count;   // basepoint-preserving maps s -> a
    w.bijective = true;          // both sides are indexed by the same tuples

    // A hom phi corresponds to the pointed map g with g(i) = phi(e_i); the
    // tuple of generator images is the shared datum.  Naturality is checked
    // over all morphisms within the instance: pointed endos of s and group
    // endos of a.
    const auto endos_s = pointed_endos(s);
    const auto endos_a = group_endos(el);
    const Int total = w.hom_ab_count;
    if (!total.fits_slong_p())
        throw std::invalid_argument("check_alpha_adjunction: hom set too large");
    const long homs = total.get_si();

    w.natural = true;
    for (long t = 0; t < homs && w.natural; ++t) {
        // Decode tuple t: generator i maps to element tuple[i].
        std::vector<std::vector<Int>> tuple(gens);
        {
            Int rest = t;
            for (Index i = gens; i-- > 0;) {
                tuple[i] = el.element(mod_floor(rest, el.order()));
                rest /= el.order();
            }
        }
        // Evaluate phi on an arbitrary integer vector of alpha(s).
        auto phi_eval = [&](const IntVector& v) {
            std::vector<Int> acc = el.zero();
            for (Index j = 0; j < gens; ++j)
                acc = el.add(acc, el.scale(v(j), tuple[j]));
            return acc;
        };
        auto value_at = [&](Index si) {  // the pointed map g on element si
            return si == 0 ? el.zero() : tuple[si - 1];
        };
        for (const auto& e : endos_s) {
            // alpha(e) as an integer matrix on the free group.
            IntMatrix ae = int_zero(gens, gens);
            for (Index i = 0; i < gens; ++i)
                if (e[i] != 0) ae(e[i] - 1, i) = 1;
            for (const auto& h : endos_a) {
                for (Index i = 1; i < s.size && w.natural; ++i) {
                    // Ab route: (h . phi . alpha(e)) on e_i, via matrix and
                    // group arithmetic.
                    IntVector basis = IntVector::Zero(gens);
                    basis(i - 1) = 1;
                    IntVector moved = ae * basis;
                    std::vector<Int> lhs = apply_endo(el, h, phi_eval(moved));
                    // pSets route: (alpha^*(h) . g . e) on the element i.
                    std::vector<Int> rhs =
                        apply_endo(el, h, value_at(e[i - 1]));
                    if (lhs != rhs) {
                        w.natural = false;
                        w.failure = "naturality square broke at generator " +
                                    std::to_string(i);
                    }
                }
                ++w.naturality_squares_checked;
            }
        }
    }
    return w;
}

std::vector<CommMonoidWithZero> enumerate_monoids(Index size) {
    std::vector<CommMonoidWithZero> out;
    if (size < 1) return out;
    if (size == 1) {
        CommMonoidWithZero m;
        m.carrier = PointedSet(1);
        m.unit = 0;
        m.table = Eigen::MatrixXi::Zero(1, 1);
        out.push_back(std::move(m));
        return out;
    }
    for (int unit = 1; unit < size; ++unit) {
        std::vector<std::pair<int, int>> free_pairs;
        for (int i = 1; i < size; ++i)
            for (int j = i; j < size; ++j)
                if (i != unit && j != unit) free_pairs.emplace_back(i, j);

        const std::size_t nfree = free_pairs.size();
        std::vector<int> assign(nfree, 0);
        while (true) {
            CommMonoidWithZero m;
            m.carrier = PointedSet(size);
            m.unit = unit;
            m.table = Eigen::MatrixXi::Zero(size, size);
            for (int j = 0; j < size; ++j) {
                m.table(unit, j) = j;
                m.table(j, unit) = j;
            }
            for (std::size_t t = 0; t < nfree; ++t) {
                m.table(free_pairs[t].first, free_pairs[t].second) = assign[t];
                m.table(free_pairs[t].second, free_pairs[t].first) = assign[t];
            }
            bool assoc = true;
            for (int i = 0; i < size && assoc; ++i)
                for (int j = 0; j < size && assoc; ++j)
                    for (int k = 0; k < size && assoc; ++k)
                        if (m.table(m.table(i, j), k) != m.table(i, m.table(j, k)))
                            assoc = false;
            if (assoc) out.push_back(m);

            std::size_t t = 0;
            for (; t < nfree; ++t) {
                if (++assign[t] < size) break;
                assign[t] = 0;
            }
            if (t == nfree) break;
        }
    }
    return out;
}

}  // namespace homkit
