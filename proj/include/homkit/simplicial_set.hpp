#pragma once

#include <string>
#include <vector>

#include "homkit/numeric.hpp"

namespace homkit {

/// One level map (face or degeneracy) as an index array.
using SimplicialMap = std::vector<Index>;

/**
 * Finite simplicial set truncated at dimension N.  sizes[n] counts the
 * n-simplices; faces[n-1][i] is delta_i : X_n -> X_{n-1} for 0 <= i <= n, and
 * degeneracies[n][i] is sigma_i : X_n -> X_{n+1} for 0 <= i <= n < N.
 * Simplices above the truncation are degeneracy-generated and reconstructed
 * on demand.
 */
struct TruncatedSimplicialData {
    int truncation = 0;
    std::vector<Index> sizes;
    std::vector<std::vector<SimplicialMap>> faces;
    std::vector<std::vector<SimplicialMap>> degeneracies;

    Index size_at(int n) const { return sizes[n]; }
    Index face(int n, int i, Index x) const { return faces[n - 1][i][x]; }
    Index degeneracy(int n, int i, Index x) const { return degeneracies[n][i][x]; }
};

/**
 * Simplicial object in pointed sets: the data above plus a basepoint index
 * per level.  Validity requires every face and degeneracy to send basepoint
 * to basepoint, which forces basepoints[n] to be the n-fold sigma_0 image of
 * basepoints[0].
 */
struct SimplicialPointedSet : TruncatedSimplicialData {
    std::vector<Index> basepoints;
};

/// Pointed simplicial set: plain simplicial data with a chosen point in
/// dimension 0.
struct PointedSimplicialSet : TruncatedSimplicialData {
    Index point = 0;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string what) {
        ok = false;
        violations.push_back(std::move(what));
    }
    std::string to_string() const;
};

/// Checks shapes, map ranges, and every simplicial identity within the
/// truncation; report-valued, never throws on invalid data.
ValidationReport validate(const TruncatedSimplicialData& x);
ValidationReport validate(const SimplicialPointedSet& x);
ValidationReport validate(const PointedSimplicialSet& x);

/**
 * Quasi-inverse of the forgetful functor: lifts a pointed simplicial set to
 * a simplicial pointed set whose basepoint in dimension n is the n-fold
 * sigma_0 image of the chosen point.  Index layout is untouched, so
 * forgetting the basepoints returns the input exactly.  Rejects invalid
 * input.
 */
SimplicialPointedSet basepoint_lift(const PointedSimplicialSet& x);

/// The forgetful functor: drops the basepoints, keeping the dimension-0
/// basepoint as the chosen point.
PointedSimplicialSet forget_basepoints(const SimplicialPointedSet& x);

bool simplicial_equal(const TruncatedSimplicialData& a, const TruncatedSimplicialData& b);
bool operator==(const SimplicialPointedSet& a, const SimplicialPointedSet& b);
bool operator==(const PointedSimplicialSet& a, const PointedSimplicialSet& b);

}  // namespace homkit
