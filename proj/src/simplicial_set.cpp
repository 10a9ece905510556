#include "homkit/simplicial_set.hpp"

#include <sstream>
#include <stdexcept>

namespace homkit {

std::string ValidationReport::to_string() const {
    if (ok) return "valid";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i)
        os << (i ? "; " : "") << violations[i];
    return os.str();
}

namespace {

bool map_well_formed(const SimplicialMap& m, Index domain, Index codomain) {
    if (static_cast<Index>(m.size()) != domain) return false;
    for (Index v : m)
        if (v < 0 || v >= codomain) return false;
    return true;
}

std::string at(int n, int i, int j = -1) {
    std::ostringstream os;
    os << "dim " << n << ", (" << i;
    if (j >= 0) os << "," << j;
    os << ")";
    return os.str();
}

}  // namespace

ValidationReport validate(const TruncatedSimplicialData& x) {
    ValidationReport r;
    const int N = x.truncation;
    if (N < 0 || static_cast<int>(x.sizes.size()) != N + 1) {
        r.fail("level count does not match truncation");
        return r;
    }
    for (int n = 0; n <= N; ++n)
        if (x.sizes[n] < 1) {
            r.fail("empty level at dim " + std::to_string(n));
            return r;
        }
    if (static_cast<int>(x.faces.size()) != N ||
        static_cast<int>(x.degeneracies.size()) != std::max(N, 0)) {
        // degeneracies has one slot per dim 0..N-1; tolerate an extra empty
        // tail so hand-written data is easy to load.
        if (static_cast<int>(x.faces.size()) != N) {
            r.fail("face map family count mismatch");
            return r;
        }
    }
    for (int n = 1; n <= N; ++n) {
        if (static_cast<int>(x.faces[n - 1].size()) != n + 1) {
            r.fail("face count at dim " + std::to_string(n));
            return r;
        }
        for (int i = 0; i <= n; ++i)
            if (!map_well_formed(x.faces[n - 1][i], x.sizes[n], x.sizes[n - 1])) {
                r.fail("face map ill-formed at " + at(n, i));
                return r;
            }
    }
    for (int n = 0; n < N; ++n) {
        if (static_cast<int>(x.degeneracies.size()) <= n ||
            static_cast<int>(x.degeneracies[n].size()) != n + 1) {
            r.fail("degeneracy count at dim " + std::to_string(n));
            return r;
        }
        for (int i = 0; i <= n; ++i)
            if (!map_well_formed(x.degeneracies[n][i], x.sizes[n], x.sizes[n + 1])) {
                r.fail("degeneracy map ill-formed at " + at(n, i));
                return r;
            }
    }

    // delta_i delta_j = delta_{j-1} delta_i for i < j, on X_n, n >= 2.
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (Index s = 0; s < x.sizes[n]; ++s)
                    if (x.face(n - 1, i, x.face(n, j, s)) !=
                        x.face(n - 1, j - 1, x.face(n, i, s)))
                        r.fail("delta_" + std::to_string(i) + " delta_" +
                               std::to_string(j) + " identity fails at " +
                               at(n, static_cast<int>(s)));

    // sigma_i sigma_j = sigma_{j+1} sigma_i for i <= j, landing in dim n+2.
    for (int n = 0; n + 2 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (Index s = 0; s < x.sizes[n]; ++s)
                    if (x.degeneracy(n + 1, i, x.degeneracy(n, j, s)) !=
                        x.degeneracy(n + 1, j + 1, x.degeneracy(n, i, s)))
                        r.fail("sigma_" + std::to_string(i) + " sigma_" +
                               std::to_string(j) + " identity fails at " +
                               at(n, static_cast<int>(s)));

    // Mixed identities on X_n, landing back in dim n.
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (Index s = 0; s < x.sizes[n]; ++s) {
                    Index lhs = x.face(n + 1, i, x.degeneracy(n, j, s));
                    Index rhs;
                    if (i < j)
                        rhs = (n >= 1) ? x.degeneracy(n - 1, j - 1, x.face(n, i, s))
                                       : s;  // unreachable for n = 0
                    else if (i == j || i == j + 1)
                        rhs = s;
                    else
                        rhs = (n >= 1) ? x.degeneracy(n - 1, j, x.face(n, i - 1, s))
                                       : s;
                    if (lhs != rhs)
                        r.fail("delta_" + std::to_string(i) + " sigma_" +
                               std::to_string(j) + " identity fails at " +
                               at(n, static_cast<int>(s)));
                }
    return r;
}

ValidationReport validate(const SimplicialPointedSet& x) {
    ValidationReport r = validate(static_cast<const TruncatedSimplicialData&>(x));
    const int N = x.truncation;
    if (static_cast<int>(x.basepoints.size()) != N + 1) {
        r.fail("basepoint count mismatch");
        return r;
    }
    for (int n = 0; n <= N; ++n)
        if (x.basepoints[n] < 0 || x.basepoints[n] >= x.sizes[n]) {
            r.fail("basepoint out of range at dim " + std::to_string(n));
            return r;
        }
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i)
            if (x.face(n, i, x.basepoints[n]) != x.basepoints[n - 1])
                r.fail("face delta_" + std::to_string(i) +
                       " moves the basepoint at dim " + std::to_string(n));
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n; ++i)
            if (x.degeneracy(n, i, x.basepoints[n]) != x.basepoints[n + 1])
                r.fail("degeneracy sigma_" + std::to_string(i) +
                       " moves the basepoint at dim " + std::to_string(n));
    return r;
}

ValidationReport validate(const PointedSimplicialSet& x) {
    ValidationReport r = validate(static_cast<const TruncatedSimplicialData&>(x));
    if (x.point < 0 || x.point >= x.sizes[0]) r.fail("chosen point out of range");
    return r;
}

SimplicialPointedSet basepoint_lift(const PointedSimplicialSet& x) {
    ValidationReport r = validate(x);
    if (!r.ok)
        throw std::invalid_argument("basepoint_lift: invalid input: " + r.to_string());
    SimplicialPointedSet out;
    static_cast<TruncatedSimplicialData&>(out) = x;
    out.basepoints.resize(x.truncation + 1);
    out.basepoints[0] = x.point;
    for (int n = 0; n < x.truncation; ++n)
        out.basepoints[n + 1] = x.degeneracy(n, 0, out.basepoints[n]);
    ValidationReport lifted = validate(out);
    if (!lifted.ok)
        throw std::logic_error("basepoint_lift: lift failed validation: " +
                               lifted.to_string());
    return out;
}

PointedSimplicialSet forget_basepoints(const SimplicialPointedSet& x) {
    PointedSimplicialSet out;
    static_cast<TruncatedSimplicialData&>(out) = x;
    out.point = x.basepoints.empty() ? 0 : x.basepoints[0];
    return out;
}

bool simplicial_equal(const TruncatedSimplicialData& a, const TruncatedSimplicialData& b) {
    return a.truncation == b.truncation && a.sizes == b.sizes && a.faces == b.faces &&
           a.degeneracies == b.degeneracies;
}

bool operator==(const SimplicialPointedSet& a, const SimplicialPointedSet& b) {
    return simplicial_equal(a, b) && a.basepoints == b.basepoints;
}

bool operator==(const PointedSimplicialSet& a, const PointedSimplicialSet& b) {
    return simplicial_equal(a, b) && a.point == b.point;
}

}  // namespace homkit
