#include "homkit/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace homkit {

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("inv_mod: " + a.get_str() +
                                    " is not invertible modulo " + m.get_str());
    return r;
}

int valuation(const Int& a, const Int& p) {
    if (a == 0) throw std::invalid_argument("valuation: zero argument");
    int v = 0;
    Int r = a;
    while (r % p == 0) {
        r /= p;
        ++v;
    }
    return v;
}

bool is_prime_int(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Int crt(const std::vector<Int>& residues, const std::vector<Int>& moduli) {
    if (residues.size() != moduli.size())
        throw std::invalid_argument("crt: size mismatch");
    Int value = 0;
    Int modulus = 1;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        // Merge (value mod modulus) with (residues[i] mod moduli[i]).
        const Int& m = moduli[i];
        Int t = mod_floor((residues[i] - value) * inv_mod(modulus, m), m);
        value += modulus * t;
        modulus *= m;
        value = mod_floor(value, modulus);
    }
    return value;
}

IntMatrix int_identity(Index n) {
    IntMatrix m = IntMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix int_zero(Index rows, Index cols) { return IntMatrix::Zero(rows, cols); }

bool is_zero_matrix(const IntMatrix& a) {
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) return false;
    return true;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const Index n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            Index piv = -1;
            for (Index i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            m.row(k).swap(m.row(piv));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                Int num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                // Bareiss guarantees exact divisibility by the previous pivot.
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

bool is_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols()) return false;
    Int d = determinant(a);
    return d == 1 || d == -1;
}

namespace {

void combinations(Index n, Index k, std::vector<std::vector<Index>>& out) {
    std::vector<Index> c(k);
    for (Index i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        Index i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (Index j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace

Int minor_gcd(const IntMatrix& a, Index k) {
    if (k == 0) return 1;
    if (k > a.rows() || k > a.cols()) return 0;
    std::vector<std::vector<Index>> rows, cols;
    combinations(a.rows(), k, rows);
    combinations(a.cols(), k, cols);
    Int g = 0;
    for (const auto& r : rows)
        for (const auto& c : cols) {
            IntMatrix sub(k, k);
            for (Index i = 0; i < k; ++i)
                for (Index j = 0; j < k; ++j) sub(i, j) = a(r[i], c[j]);
            g = gcd_int(g, determinant(sub));
            if (g == 1) return g;
        }
    return g;
}

std::string to_string(const IntMatrix& a) {
    std::ostringstream os;
    os << "[";
    for (Index i = 0; i < a.rows(); ++i) {
        os << (i ? "; " : "");
        for (Index j = 0; j < a.cols(); ++j)
            os << (j ? " " : "") << a(i, j).get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace homkit
