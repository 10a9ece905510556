#include "homkit/chain_complex.hpp"

#include <sstream>
#include <stdexcept>

namespace homkit {

namespace {
const FgAbelianGroup kTrivial;
}

void GradedGroup::set(int degree, FgAbelianGroup g) {
    if (entries_.empty() && window_lo_ > window_hi_)
        window_lo_ = window_hi_ = degree;
    window_lo_ = std::min(window_lo_, degree);
    window_hi_ = std::max(window_hi_, degree);
    if (g.is_trivial())
        entries_.erase(degree);
    else
        entries_[degree] = std::move(g);
}

const FgAbelianGroup& GradedGroup::at(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? kTrivial : it->second;
}

std::vector<int> GradedGroup::support() const {
    std::vector<int> out;
    for (const auto& [deg, g] : entries_) out.push_back(deg);
    return out;
}

bool GradedGroup::operator==(const GradedGroup& o) const {
    return entries_ == o.entries_;
}

std::string GradedGroup::to_string() const {
    if (entries_.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [deg, g] : entries_) {
        os << (first ? "" : ", ") << deg << ": " << g.to_string();
        first = false;
    }
    os << "}";
    return os.str();
}

IntMatrix ChainComplex::diff_out(int degree) const {
    const int i = degree - lowest_degree;
    if (i >= 1 && i <= static_cast<int>(differentials.size()))
        return differentials[i - 1];
    return int_zero(rank_at(degree - 1), rank_at(degree));
}

IntMatrix ChainComplex::diff_into(int degree) const { return diff_out(degree + 1); }

void ChainComplex::validate() const {
    if (!levels.empty() && differentials.size() + 1 != levels.size())
        throw std::invalid_argument("ChainComplex: differential count mismatch");
    for (Index r : levels)
        if (r < 0) throw std::invalid_argument("ChainComplex: negative rank");
    for (std::size_t i = 0; i < differentials.size(); ++i) {
        if (differentials[i].rows() != levels[i] ||
            differentials[i].cols() != levels[i + 1])
            throw std::invalid_argument("ChainComplex: differential shape mismatch");
        if (i + 1 < differentials.size()) {
            IntMatrix dd = differentials[i] * differentials[i + 1];
            if (!is_zero_matrix(dd))
                throw std::invalid_argument(
                    "ChainComplex: differentials do not compose to zero at degree " +
                    std::to_string(lowest_degree + static_cast<int>(i) + 2));
        }
    }
}

ChainComplex concentrated_complex(int degree, Index rank) {
    ChainComplex c;
    c.lowest_degree = degree;
    c.levels = {rank};
    return c;
}

ChainComplex shift(const ChainComplex& c, int n) {
    ChainComplex out = c;
    out.lowest_degree += n;
    return out;
}

bool complexes_equal(const ChainComplex& a, const ChainComplex& b) {
    if (a.lowest_degree != b.lowest_degree || a.levels != b.levels) return false;
    for (std::size_t i = 0; i < a.differentials.size(); ++i)
        if (a.differentials[i] != b.differentials[i]) return false;
    return true;
}

GradedGroup homology(const ChainComplex& c) {
    c.validate();
    GradedGroup h(c.lowest_degree, c.top_degree());
    for (int deg = c.lowest_degree; deg <= c.top_degree(); ++deg) {
        IntMatrix out = c.diff_out(deg);
        IntMatrix in = c.diff_into(deg);
        // Cycles: canonical basis of ker(out).
        IntMatrix cycles = (out.rows() == 0) ? int_identity(c.rank_at(deg))
                                             : kernel_basis(out);
        // Boundaries expressed in cycle coordinates; d d = 0 guarantees the
        // lattice solve succeeds.
        IntMatrix q;
        if (in.cols() == 0)
            q = int_zero(cycles.cols(), 0);
        else
            q = solve_in_lattice(cycles, in);
        FgAbelianGroup g = cokernel_structure(q);
        g.presentation.reset();
        h.set(deg, std::move(g));
    }
    return h;
}

namespace {

/// Matrix of f |-> p * f on vectorized Hom(C_i, D_j), where f is a
/// target_rows x source_cols block and vec stacks, per source basis vector,
/// the target coordinates contiguously.
IntMatrix postcompose_matrix(const IntMatrix& p, Index source_cols) {
    const Index rows_in = p.cols(), rows_out = p.rows();
    IntMatrix m = int_zero(source_cols * rows_out, source_cols * rows_in);
    for (Index b = 0; b < source_cols; ++b)
        for (Index a2 = 0; a2 < rows_out; ++a2)
            for (Index a1 = 0; a1 < rows_in; ++a1)
                m(b * rows_out + a2, b * rows_in + a1) = p(a2, a1);
    return m;
}

/// Matrix of f |-> f * q on vectorized Hom blocks, with the same layout.
IntMatrix precompose_matrix(const IntMatrix& q, Index target_rows) {
    const Index cols_in = q.rows(), cols_out = q.cols();
    IntMatrix m = int_zero(cols_out * target_rows, cols_in * target_rows);
    for (Index b2 = 0; b2 < cols_out; ++b2)
        for (Index b1 = 0; b1 < cols_in; ++b1)
            for (Index a = 0; a < target_rows; ++a)
                m(b2 * target_rows + a, b1 * target_rows + a) = q(b1, b2);
    return m;
}

}  // namespace

ChainComplex hom_complex(const ChainComplex& c, const ChainComplex& d) {
    c.validate();
    d.validate();
    ChainComplex h;
    if (c.levels.empty() || d.levels.empty()) return h;
    const int lo = d.lowest_degree - c.top_degree();
    const int hi = d.top_degree() - c.lowest_degree;
    h.lowest_degree = lo;

    // Summand layout in Hom_n: ascending i over pairs (C_i, D_{i+n}).
    auto level_rank = [&](int n) {
        Index r = 0;
        for (int i = c.lowest_degree; i <= c.top_degree(); ++i)
            r += c.rank_at(i) * d.rank_at(i + n);
        return r;
    };
    auto summand_offset = [&](int n, int i) {
        Index off = 0;
        for (int j = c.lowest_degree; j < i; ++j)
            off += c.rank_at(j) * d.rank_at(j + n);
        return off;
    };

    for (int n = lo; n <= hi; ++n) h.levels.push_back(level_rank(n));
    for (int n = lo + 1; n <= hi; ++n) {
        IntMatrix dn = int_zero(level_rank(n - 1), level_rank(n));
        const Int sign = (n % 2 == 0) ? Int(-1) : Int(1);  // -(-1)^n
        for (int i = c.lowest_degree; i <= c.top_degree(); ++i) {
            const Index ci = c.rank_at(i);
            const Index dj = d.rank_at(i + n);
            if (ci == 0 || dj == 0) continue;
            // Postcompose with d^D : D_{i+n} -> D_{i+n-1}.
            if (d.rank_at(i + n - 1) > 0) {
                IntMatrix blk = postcompose_matrix(d.diff_out(i + n), ci);
                dn.block(summand_offset(n - 1, i), summand_offset(n, i),
                         blk.rows(), blk.cols()) = blk;
            }
            // Precompose with d^C : C_{i+1} -> C_i, landing in summand i+1.
            if (c.rank_at(i + 1) > 0) {
                IntMatrix blk = precompose_matrix(c.diff_into(i), dj);
                dn.block(summand_offset(n - 1, i + 1), summand_offset(n, i),
                         blk.rows(), blk.cols()) += sign * blk;
            }
        }
        h.differentials.push_back(std::move(dn));
    }
    h.validate();
    return h;
}

FgAbelianGroup hyper_ext(const ChainComplex& c, const ChainComplex& d, int degree) {
    ChainComplex h = hom_complex(c, d);
    if (h.levels.empty()) return trivial_group();
    FgAbelianGroup g = homology(h).at(-degree);
    g.presentation.reset();
    return g;
}

ChainComplex free_resolution(const FgAbelianGroup& a) {
    const Index r = a.free_rank;
    const Index k = static_cast<Index>(a.invariant_factors.size());
    if (k == 0) return concentrated_complex(0, r);
    ChainComplex c;
    c.lowest_degree = 0;
    c.levels = {r + k, k};
    IntMatrix d = int_zero(r + k, k);
    for (Index i = 0; i < k; ++i) d(r + i, i) = a.invariant_factors[i];
    c.differentials = {std::move(d)};
    return c;
}

}  // namespace homkit
