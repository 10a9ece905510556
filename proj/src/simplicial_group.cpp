#include "homkit/simplicial_group.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace homkit {

namespace {

bool shape_ok(const IntMatrix& m, Index rows, Index cols) {
    return m.rows() == rows && m.cols() == cols;
}

}  // namespace

ValidationReport validate(const SimplicialAbelianGroup& a) {
    ValidationReport r;
    const int N = a.truncation;
    if (N < 0 || static_cast<int>(a.groups.size()) != N + 1) {
        r.fail("level count does not match truncation");
        return r;
    }
    for (int n = 0; n <= N; ++n)
        if (!a.groups[n].invariant_factors.empty()) {
            r.fail("level " + std::to_string(n) +
                   " has torsion; levels must be free");
            return r;
        }
    if (static_cast<int>(a.faces.size()) != N) {
        r.fail("face family count mismatch");
        return r;
    }
    for (int n = 1; n <= N; ++n) {
        if (static_cast<int>(a.faces[n - 1].size()) != n + 1) {
            r.fail("face count at dim " + std::to_string(n));
            return r;
        }
        for (int i = 0; i <= n; ++i)
            if (!shape_ok(a.faces[n - 1][i], a.rank_at(n - 1), a.rank_at(n))) {
                r.fail("face matrix shape at dim " + std::to_string(n));
                return r;
            }
    }
    for (int n = 0; n < N; ++n) {
        if (static_cast<int>(a.degeneracies.size()) <= n ||
            static_cast<int>(a.degeneracies[n].size()) != n + 1) {
            r.fail("degeneracy count at dim " + std::to_string(n));
            return r;
        }
        for (int i = 0; i <= n; ++i)
            if (!shape_ok(a.degeneracies[n][i], a.rank_at(n + 1), a.rank_at(n))) {
                r.fail("degeneracy matrix shape at dim " + std::to_string(n));
                return r;
            }
    }

    auto check = [&](const IntMatrix& lhs, const IntMatrix& rhs, const std::string& what) {
        if (lhs != rhs) r.fail(what + " fails as a matrix identity");
    };
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                check(a.face(n - 1, i) * a.face(n, j),
                      a.face(n - 1, j - 1) * a.face(n, i),
                      "delta_" + std::to_string(i) + " delta_" + std::to_string(j) +
                          " at dim " + std::to_string(n));
    for (int n = 0; n + 2 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                check(a.degeneracy(n + 1, i) * a.degeneracy(n, j),
                      a.degeneracy(n + 1, j + 1) * a.degeneracy(n, i),
                      "sigma_" + std::to_string(i) + " sigma_" + std::to_string(j) +
                          " at dim " + std::to_string(n));
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                IntMatrix lhs = a.face(n + 1, i) * a.degeneracy(n, j);
                IntMatrix rhs;
                if (i == j || i == j + 1)
                    rhs = int_identity(a.rank_at(n));
                else if (i < j)
                    rhs = a.degeneracy(n - 1, j - 1) * a.face(n, i);
                else
                    rhs = a.degeneracy(n - 1, j) * a.face(n, i - 1);
                check(lhs, rhs,
                      "delta_" + std::to_string(i) + " sigma_" + std::to_string(j) +
                          " at dim " + std::to_string(n));
            }
    return r;
}

namespace {

/// Matrix of a basepoint-killing induced map between free groups on
/// nonbasepoint elements.
IntMatrix induced_matrix(const SimplicialMap& m, Index src_size, Index src_base,
                         Index tgt_size, Index tgt_base) {
    IntMatrix out = int_zero(tgt_size - 1, src_size - 1);
    for (Index e = 0; e < src_size; ++e) {
        if (e == src_base) continue;
        const Index col = e - (e > src_base ? 1 : 0);
        const Index img = m[e];
        if (img == tgt_base) continue;
        const Index row = img - (img > tgt_base ? 1 : 0);
        out(row, col) = 1;
    }
    return out;
}

}  // namespace

SimplicialAbelianGroup levelwise_free(const SimplicialPointedSet& x) {
    ValidationReport r = validate(x);
    if (!r.ok)
        throw std::invalid_argument("levelwise_free: invalid input: " + r.to_string());
    SimplicialAbelianGroup a;
    a.truncation = x.truncation;
    for (int n = 0; n <= x.truncation; ++n)
        a.groups.push_back(free_group(x.sizes[n] - 1));
    a.faces.resize(x.truncation);
    for (int n = 1; n <= x.truncation; ++n)
        for (int i = 0; i <= n; ++i)
            a.faces[n - 1].push_back(induced_matrix(x.faces[n - 1][i], x.sizes[n],
                                                    x.basepoints[n], x.sizes[n - 1],
                                                    x.basepoints[n - 1]));
    a.degeneracies.resize(std::max(x.truncation, 0));
    for (int n = 0; n < x.truncation; ++n)
        for (int i = 0; i <= n; ++i)
            a.degeneracies[n].push_back(
                induced_matrix(x.degeneracies[n][i], x.sizes[n], x.basepoints[n],
                               x.sizes[n + 1], x.basepoints[n + 1]));
    return a;
}

std::vector<std::vector<int>> surjections_onto(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    // A value vector starts at 0, ends at k, steps by 0 or 1.
    std::vector<int> vals(n + 1, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n + 1) {
            if (vals[n] == k) out.push_back(vals);
            return;
        }
        for (int step = 0; step <= 1; ++step) {
            vals[pos] = vals[pos - 1] + step;
            if (vals[pos] <= k) rec(pos + 1);
        }
    };
    if (n == 0) {
        if (k == 0) out.push_back({0});
        return out;
    }
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix structure_map(const SimplicialAbelianGroup& a, const std::vector<int>& vals,
                        int codomain) {
    // Image values, ascending.
    std::vector<int> image;
    for (int v : vals)
        if (image.empty() || image.back() != v) image.push_back(v);
    const int k = static_cast<int>(image.size()) - 1;
    // Mono part: faces removing the missed values of [0..codomain], largest
    // first; values below a removed one are unshifted, so original indices
    // stay valid.
    IntMatrix mat = int_identity(a.rank_at(codomain));
    int level = codomain;
    for (int s = codomain; s >= 0; --s) {
        if (std::binary_search(image.begin(), image.end(), s)) continue;
        mat = IntMatrix(a.face(level, s) * mat);
        --level;
    }
    // Epi part: eta = renumbered vals.
    std::vector<int> eta(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
        eta[i] = static_cast<int>(
            std::lower_bound(image.begin(), image.end(), vals[i]) - image.begin());
    // Peel repeats: eta = eta' . sigma_i with i the first repeat position.
    std::vector<int> cur = eta;
    std::vector<int> sigmas;
    while (static_cast<int>(cur.size()) - 1 > k) {
        int i = 0;
        while (cur[i] != cur[i + 1]) ++i;
        sigmas.push_back(i);
        cur.erase(cur.begin() + i + 1);
    }
    // X(eta) = s_{i_first} o ... o s_{i_last}, applied from level k upward.
    level = k;
    for (auto it = sigmas.rbegin(); it != sigmas.rend(); ++it) {
        mat = IntMatrix(a.degeneracy(level, *it) * mat);
        ++level;
    }
    return mat;
}

ChainComplex moore_complex(const SimplicialAbelianGroup& a) {
    ValidationReport r = validate(a);
    if (!r.ok)
        throw std::invalid_argument("moore_complex: invalid input: " + r.to_string());
    ChainComplex c;
    c.lowest_degree = 0;
    for (int n = 0; n <= a.truncation; ++n) c.levels.push_back(a.rank_at(n));
    for (int n = 1; n <= a.truncation; ++n) {
        IntMatrix d = int_zero(a.rank_at(n - 1), a.rank_at(n));
        for (int i = 0; i <= n; ++i)
            d += (i % 2 == 0 ? Int(1) : Int(-1)) * a.face(n, i);
        c.differentials.push_back(std::move(d));
    }
    c.validate();
    return c;
}

ChainComplex normalized_complex(const SimplicialAbelianGroup& a) {
    ValidationReport r = validate(a);
    if (!r.ok)
        throw std::invalid_argument("normalized_complex: invalid input: " + r.to_string());
    const int N = a.truncation;
    std::vector<IntMatrix> bases(N + 1);
    bases[0] = int_identity(a.rank_at(0));
    for (int n = 1; n <= N; ++n) {
        IntMatrix stacked = int_zero(Index(n) * a.rank_at(n - 1), a.rank_at(n));
        for (int i = 1; i <= n; ++i)
            stacked.block((i - 1) * a.rank_at(n - 1), 0, a.rank_at(n - 1),
                          a.rank_at(n)) = a.face(n, i);
        bases[n] = kernel_basis(stacked);
    }
    ChainComplex c;
    c.lowest_degree = 0;
    for (int n = 0; n <= N; ++n) c.levels.push_back(bases[n].cols());
    for (int n = 1; n <= N; ++n) {
        IntMatrix image = a.face(n, 0) * bases[n];
        c.differentials.push_back(solve_in_lattice(bases[n - 1], image));
    }
    c.validate();
    return c;
}

namespace {

/// Ordered Gamma summand list for one dimension: pairs (surjection values,
/// complex level k), k ascending then lexicographic.
struct GammaLevel {
    std::vector<std::vector<int>> etas;
    std::vector<int> ks;
    std::vector<Index> offsets;
    Index rank = 0;
};

GammaLevel gamma_level(const ChainComplex& c, int n) {
    GammaLevel lvl;
    for (int k = 0; k <= n; ++k) {
        if (c.rank_at(k) == 0) continue;
        for (auto& vals : surjections_onto(n, k)) {
            lvl.etas.push_back(vals);
            lvl.ks.push_back(k);
            lvl.offsets.push_back(lvl.rank);
            lvl.rank += c.rank_at(k);
        }
    }
    return lvl;
}

Index find_summand(const GammaLevel& lvl, const std::vector<int>& vals) {
    for (std::size_t t = 0; t < lvl.etas.size(); ++t)
        if (lvl.etas[t] == vals) return static_cast<Index>(t);
    throw std::logic_error("dold_kan_gamma: summand lookup failed");
}

}  // namespace

SimplicialAbelianGroup dold_kan_gamma(const ChainComplex& c, int truncation) {
    c.validate();
    for (int d = c.lowest_degree; d < 0; ++d)
        if (c.rank_at(d) > 0)
            throw std::invalid_argument(
                "dold_kan_gamma: complex has negative-degree support");
    if (truncation < 0)
        throw std::invalid_argument("dold_kan_gamma: negative truncation");
    for (int d = truncation + 1; d <= c.top_degree(); ++d)
        if (c.rank_at(d) > 0)
            throw std::invalid_argument(
                "dold_kan_gamma: complex has support above the truncation");

    std::vector<GammaLevel> lvl;
    for (int n = 0; n <= truncation; ++n) lvl.push_back(gamma_level(c, n));

    SimplicialAbelianGroup g;
    g.truncation = truncation;
    for (int n = 0; n <= truncation; ++n) g.groups.push_back(free_group(lvl[n].rank));
    g.faces.resize(truncation);
    g.degeneracies.resize(std::max(truncation, 0));

    for (int n = 1; n <= truncation; ++n) {
        for (int i = 0; i <= n; ++i) {
            IntMatrix face = int_zero(lvl[n - 1].rank, lvl[n].rank);
            for (std::size_t t = 0; t < lvl[n].etas.size(); ++t) {
                const auto& eta = lvl[n].etas[t];
                const int k = lvl[n].ks[t];
                // Compose with the coface skipping i.
                std::vector<int> composed(n);
                for (int j = 0; j < n; ++j) composed[j] = eta[j < i ? j : j + 1];
                // Image analysis: surjective, or missing exactly one value.
                std::vector<bool> hit(k + 1, false);
                for (int v : composed) hit[v] = true;
                int missing = -1;
                for (int v = 0; v <= k; ++v)
                    if (!hit[v]) {
                        missing = v;
                        break;
                    }
                if (missing == -1) {
                    const Index tgt = find_summand(lvl[n - 1], composed);
                    for (Index row = 0; row < c.rank_at(k); ++row)
                        face(lvl[n - 1].offsets[tgt] + row, lvl[n].offsets[t] + row) = 1;
                } else if (missing == 0) {
                    // The mono part is delta_0: the block is the differential.
                    std::vector<int> shifted(composed);
                    for (int& v : shifted) v -= 1;
                    const Index tgt = find_summand(lvl[n - 1], shifted);
                    if (c.rank_at(k - 1) > 0) {
                        IntMatrix d = c.diff_out(k);
                        face.block(lvl[n - 1].offsets[tgt], lvl[n].offsets[t],
                                   d.rows(), d.cols()) = d;
                    }
                }
                // Any other missing value contributes zero.
            }
            g.faces[n - 1].push_back(std::move(face));
        }
    }
    for (int n = 0; n < truncation; ++n) {
        for (int i = 0; i <= n; ++i) {
            IntMatrix degen = int_zero(lvl[n + 1].rank, lvl[n].rank);
            for (std::size_t t = 0; t < lvl[n].etas.size(); ++t) {
                const auto& eta = lvl[n].etas[t];
                const int k = lvl[n].ks[t];
                // Compose with the codegeneracy repeating i; always epi.
                std::vector<int> composed(n + 2);
                for (int j = 0; j <= n + 1; ++j) composed[j] = eta[j <= i ? j : j - 1];
                const Index tgt = find_summand(lvl[n + 1], composed);
                for (Index row = 0; row < c.rank_at(k); ++row)
                    degen(lvl[n + 1].offsets[tgt] + row, lvl[n].offsets[t] + row) = 1;
            }
            g.degeneracies[n].push_back(std::move(degen));
        }
    }

    ValidationReport check = validate(g);
    if (!check.ok)
        throw std::logic_error("dold_kan_gamma: output failed validation: " +
                               check.to_string());
    return g;
}

ChainComplex moore_complex_extended(const SimplicialAbelianGroup& a) {
    ChainComplex base = moore_complex(a);
    const int N = a.truncation;
    ChainComplex normal = normalized_complex(a);

    // Kernel bases of the normalized levels, for the summand inclusions.
    std::vector<IntMatrix> bases(N + 1);
    bases[0] = int_identity(a.rank_at(0));
    for (int n = 1; n <= N; ++n) {
        IntMatrix stacked = int_zero(Index(n) * a.rank_at(n - 1), a.rank_at(n));
        for (int i = 1; i <= n; ++i)
            stacked.block((i - 1) * a.rank_at(n - 1), 0, a.rank_at(n - 1),
                          a.rank_at(n)) = a.face(n, i);
        bases[n] = kernel_basis(stacked);
    }

    // Level N+1 of the degeneracy completion: one summand N_k per
    // non-identity surjection [N+1] ->> [k].
    std::vector<std::vector<int>> etas;
    std::vector<int> ks;
    Index rank = 0;
    std::vector<Index> offsets;
    for (int k = 0; k <= N; ++k)
        for (auto& vals : surjections_onto(N + 1, k)) {
            if (normal.rank_at(k) == 0) continue;
            etas.push_back(vals);
            ks.push_back(k);
            offsets.push_back(rank);
            rank += normal.rank_at(k);
        }

    IntMatrix d = int_zero(a.rank_at(N), rank);
    for (std::size_t t = 0; t < etas.size(); ++t) {
        const int k = ks[t];
        IntMatrix alternating = int_zero(a.rank_at(N), normal.rank_at(k));
        for (int i = 0; i <= N + 1; ++i) {
            std::vector<int> composed(N + 1);
            for (int j = 0; j <= N; ++j) composed[j] = etas[t][j < i ? j : j + 1];
            IntMatrix block = structure_map(a, composed, k) * bases[k];
            alternating += (i % 2 == 0 ? Int(1) : Int(-1)) * block;
        }
        d.block(0, offsets[t], a.rank_at(N), normal.rank_at(k)) = alternating;
    }

    base.levels.push_back(rank);
    base.differentials.push_back(std::move(d));
    base.validate();
    return base;
}

ChainComplex reduced_chains(const SimplicialPointedSet& x) {
    return normalized_complex(levelwise_free(x));
}

GradedGroup em_homotopy_groups(const ChainComplex& c) {
    c.validate();
    if (c.lowest_degree < 0)
        for (int d = c.lowest_degree; d < 0; ++d)
            if (c.rank_at(d) > 0)
                throw std::invalid_argument(
                    "em_homotopy_groups: complex has negative-degree support");
    const int top = c.levels.empty() ? 0 : std::max(c.top_degree(), 0);
    SimplicialAbelianGroup g = dold_kan_gamma(c, top);
    GradedGroup via_gamma = homology(normalized_complex(g));
    GradedGroup direct = homology(c);
    if (!(via_gamma == direct))
        throw std::logic_error(
            "em_homotopy_groups: homotopy groups disagree with homology");
    return via_gamma;
}

}  // namespace homkit
