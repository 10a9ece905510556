#include "homkit/corpus.hpp"

#include <stdexcept>

namespace homkit {
namespace corpus {

namespace {

SimplicialPointedSet checked(SimplicialPointedSet x, const char* name) {
    ValidationReport r = validate(x);
    if (!r.ok)
        throw std::logic_error(std::string("corpus model ") + name +
                               " invalid: " + r.to_string());
    return x;
}

}  // namespace

SimplicialPointedSet point() {
    SimplicialPointedSet x;
    x.truncation = 0;
    x.sizes = {1};
    x.basepoints = {0};
    return checked(std::move(x), "point");
}

SimplicialPointedSet sphere0() {
    SimplicialPointedSet x;
    x.truncation = 0;
    x.sizes = {2};
    x.basepoints = {0};
    return checked(std::move(x), "S0");
}

SimplicialPointedSet circle() {
    SimplicialPointedSet x;
    x.truncation = 1;
    x.sizes = {1, 2};  // dim 1: sigma_0(v), e
    x.faces = {{{0, 0}, {0, 0}}};
    x.degeneracies = {{{0}}};
    x.basepoints = {0, 0};
    return checked(std::move(x), "circle");
}

SimplicialPointedSet sphere2() {
    SimplicialPointedSet x;
    x.truncation = 2;
    x.sizes = {1, 1, 2};  // dim 2: sigma_0 sigma_0(v), s
    x.faces.resize(2);
    x.faces[0] = {{0}, {0}};                    // dim 1 -> dim 0
    x.faces[1] = {{0, 0}, {0, 0}, {0, 0}};      // dim 2 -> dim 1
    x.degeneracies.resize(2);
    x.degeneracies[0] = {{0}};                  // dim 0 -> dim 1
    x.degeneracies[1] = {{0}, {0}};             // dim 1 -> dim 2
    x.basepoints = {0, 0, 0};
    return checked(std::move(x), "S2");
}

SimplicialPointedSet projective_plane() {
    SimplicialPointedSet x;
    x.truncation = 2;
    // Dim 0: v = 0 (basepoint), w = 1.
    // Dim 1: sigma_0 v = 0, sigma_0 w = 1, a = 2, b = 3, c = 4 with
    //        a, b : v -> w and c a loop at v.
    // Dim 2: sigma_0 sigma_0 v = 0, sigma_0 sigma_0 w = 1,
    //        sigma_0 a = 2, sigma_1 a = 3, sigma_0 b = 4, sigma_1 b = 5,
    //        sigma_0 c = 6, sigma_1 c = 7, U = 8, L = 9.
    x.sizes = {2, 5, 10};
    x.faces.resize(2);
    // delta_0, delta_1 : dim 1 -> dim 0 (delta_0 = target, delta_1 = source).
    x.faces[0] = {
        {0, 1, 1, 1, 0},  // delta_0
        {0, 1, 0, 0, 0},  // delta_1
    };
    // delta_0, delta_1, delta_2 : dim 2 -> dim 1.
    x.faces[1] = {
        {0, 1, 2, 1, 3, 1, 4, 0, 3, 2},  // delta_0
        {0, 1, 2, 2, 3, 3, 4, 4, 2, 3},  // delta_1
        {0, 1, 0, 2, 0, 3, 0, 4, 4, 4},  // delta_2
    };
    x.degeneracies.resize(2);
    x.degeneracies[0] = {{0, 1}};
    x.degeneracies[1] = {
        {0, 1, 2, 4, 6},  // sigma_0
        {0, 1, 3, 5, 7},  // sigma_1
    };
    x.basepoints = {0, 0, 0};
    return checked(std::move(x), "RP2");
}

std::vector<std::pair<std::string, SimplicialPointedSet>> all_models() {
    return {{"point", point()},
            {"s0", sphere0()},
            {"circle", circle()},
            {"s2", sphere2()},
            {"rp2", projective_plane()}};
}

}  // namespace corpus
}  // namespace homkit
