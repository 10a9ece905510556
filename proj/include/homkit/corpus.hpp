#pragma once

#include "homkit/simplicial_set.hpp"

namespace homkit {
namespace corpus {

/// One vertex, truncation 0.
SimplicialPointedSet point();

/// Two vertices with the basepoint at index 0, truncation 0.
SimplicialPointedSet sphere0();

/// Minimal circle: one vertex and one nondegenerate edge, truncation 1.
SimplicialPointedSet circle();

/// One vertex and one nondegenerate 2-simplex with all faces degenerate,
/// truncation 2.
SimplicialPointedSet sphere2();

/// Two-vertex projective plane: vertices v, w; edges a, b : v -> w and a
/// loop c at v; triangles U, L with dU = (b, a, c) and dL = (a, b, c);
/// truncation 2.
SimplicialPointedSet projective_plane();

/// The five bundled models in a fixed order with display names.
std::vector<std::pair<std::string, SimplicialPointedSet>> all_models();

}  // namespace corpus
}  // namespace homkit
