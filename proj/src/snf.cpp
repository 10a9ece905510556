#include "homkit/snf.hpp"

#include <stdexcept>

namespace homkit {

std::vector<Int> SnfDecomposition::diagonal() const {
    std::vector<Int> out;
    Index n = std::min(d.rows(), d.cols());
    out.reserve(n);
    for (Index i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
}

namespace {

/// Least-absolute-value nonzero pivot in the trailing block starting at t,
/// ties broken by lowest (row, col).  Returns false when the block is zero.
bool find_pivot(const IntMatrix& m, Index t, Index& pi, Index& pj) {
    bool found = false;
    Int best = 0;
    for (Index i = t; i < m.rows(); ++i)
        for (Index j = t; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int mag = abs(m(i, j));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& a) {
    const Index rows = a.rows(), cols = a.cols();
    SnfDecomposition out;
    out.u = int_identity(rows);
    out.v = int_identity(cols);
    out.d = a;
    IntMatrix& d = out.d;

    const Index steps = std::min(rows, cols);
    for (Index t = 0; t < steps; ++t) {
        while (true) {
            Index pi, pj;
            if (!find_pivot(d, t, pi, pj)) {
                t = steps;  // trailing block exhausted
                break;
            }
            if (pi != t) {
                d.row(t).swap(d.row(pi));
                out.u.row(t).swap(out.u.row(pi));
            }
            if (pj != t) {
                d.col(t).swap(d.col(pj));
                out.v.col(t).swap(out.v.col(pj));
            }

            // Reduce column t below the pivot, then row t to its right.
            bool dirty = false;
            for (Index i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);  // truncated quotient
                if (q != 0) {
                    d.row(i) -= d.row(t) * q;
                    out.u.row(i) -= out.u.row(t) * q;
                }
                if (d(i, t) != 0) dirty = true;
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                if (q != 0) {
                    d.col(j) -= d.col(t) * q;
                    out.v.col(j) -= out.v.col(t) * q;
                }
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;  // remainders left, re-pivot on a smaller entry

            // Pivot now divides its row and column; enforce divisibility of
            // the trailing block so the diagonal forms a chain.
            bool fixed = true;
            for (Index i = t + 1; i < rows && fixed; ++i)
                for (Index j = t + 1; j < cols && fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.row(t) += d.row(i);
                        out.u.row(t) += out.u.row(i);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (t == steps) break;
    }

    for (Index t = 0; t < steps; ++t)
        if (d(t, t) < 0) {
            d.row(t) = -d.row(t);
            out.u.row(t) = -out.u.row(t);
        }
    return out;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("unimodular_inverse: matrix not square");
    SnfDecomposition s = smith_normal_form(a);
    for (Index i = 0; i < a.rows(); ++i)
        if (s.d(i, i) != 1)
            throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
    // u a v = I  =>  a^{-1} = v u.
    return s.v * s.u;
}

IntMatrix hermite_column_basis(const IntMatrix& a) {
    IntMatrix h = a;
    const Index rows = h.rows(), cols = h.cols();
    Index c = 0;  // next column to place a pivot in
    for (Index r = 0; r < rows && c < cols; ++r) {
        // Clear row r beyond column c by gcd column operations.
        for (Index j = c + 1; j < cols; ++j) {
            while (h(r, j) != 0) {
                if (h(r, c) == 0 || abs(h(r, j)) < abs(h(r, c))) {
                    h.col(c).swap(h.col(j));
                    continue;
                }
                Int q = h(r, c) / h(r, j);
                if (q != 0) h.col(c) -= h.col(j) * q;
                h.col(c).swap(h.col(j));
            }
        }
        if (h(r, c) == 0) continue;  // no pivot in this row
        if (h(r, c) < 0) h.col(c) = -h.col(c);
        for (Index j = 0; j < c; ++j) {
            Int q = h(r, j) / h(r, c);
            if (h(r, j) - q * h(r, c) < 0) q -= 1;  // floor toward [0, pivot)
            if (q != 0) h.col(j) -= h.col(c) * q;
        }
        ++c;
    }
    return h;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SnfDecomposition s = smith_normal_form(a);
    Index rank = 0;
    const Index n = std::min(a.rows(), a.cols());
    for (Index i = 0; i < n; ++i)
        if (s.d(i, i) != 0) ++rank;
    const Index nullity = a.cols() - rank;
    IntMatrix k(a.cols(), nullity);
    for (Index j = 0; j < nullity; ++j) k.col(j) = s.v.col(rank + j);
    return hermite_column_basis(k);
}

IntMatrix solve_in_lattice(const IntMatrix& k, const IntMatrix& b) {
    if (k.rows() != b.rows())
        throw std::invalid_argument("solve_in_lattice: row mismatch");
    SnfDecomposition s = smith_normal_form(k);
    const Index n = std::min(k.rows(), k.cols());
    Index rank = 0;
    for (Index i = 0; i < n; ++i)
        if (s.d(i, i) != 0) ++rank;
    if (rank != k.cols())
        throw std::invalid_argument("solve_in_lattice: matrix not full column rank");
    IntMatrix ub = s.u * b;
    IntMatrix y(k.cols(), b.cols());
    for (Index j = 0; j < b.cols(); ++j) {
        for (Index i = 0; i < rank; ++i) {
            if (ub(i, j) % s.d(i, i) != 0)
                throw std::invalid_argument("solve_in_lattice: no integral solution");
            y(i, j) = ub(i, j) / s.d(i, i);
        }
        for (Index i = rank; i < k.rows(); ++i)
            if (ub(i, j) != 0)
                throw std::invalid_argument("solve_in_lattice: no solution");
    }
    return s.v * y;
}

}  // namespace homkit
