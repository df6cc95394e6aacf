#pragma once

// Shared fixture complexes for the test suites.

#include <string>
#include <vector>

#include "srt/complex.hpp"

namespace fixtures {

using srt::SimplicialComplex;

inline std::vector<std::string> labels_n(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

inline SimplicialComplex point() {
    return SimplicialComplex::from_facets({"1"}, {{"1"}});
}

inline SimplicialComplex two_points() {
    return SimplicialComplex::from_facets(labels_n(2), {{"1"}, {"2"}});
}

inline SimplicialComplex edge() {
    return SimplicialComplex::from_facets(labels_n(2), {{"1", "2"}});
}

inline SimplicialComplex path3() { // two edges sharing a vertex
    return SimplicialComplex::from_facets(labels_n(3), {{"1", "2"}, {"2", "3"}});
}

inline SimplicialComplex cycle(int n) {
    std::vector<std::vector<std::string>> facets;
    for (int i = 1; i <= n; ++i)
        facets.push_back({std::to_string(i), std::to_string(i % n + 1)});
    return SimplicialComplex::from_facets(labels_n(n), facets);
}

inline SimplicialComplex full_simplex(int nverts) {
    std::vector<std::string> all = labels_n(nverts);
    return SimplicialComplex::from_facets(all, {all});
}

inline SimplicialComplex boundary_3_simplex() {
    return SimplicialComplex::from_facets(labels_n(4), {{"1", "2", "3"},
                                                        {"1", "2", "4"},
                                                        {"1", "3", "4"},
                                                        {"2", "3", "4"}});
}

inline SimplicialComplex two_disjoint_edges() {
    return SimplicialComplex::from_facets(labels_n(4), {{"1", "2"}, {"3", "4"}});
}

inline SimplicialComplex triangle_with_pendant() { // hollow triangle plus an extra edge
    return SimplicialComplex::from_facets(labels_n(4),
                                          {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"1", "4"}});
}

inline SimplicialComplex two_triangles_shared_edge() {
    return SimplicialComplex::from_facets(labels_n(4), {{"1", "2", "3"}, {"1", "2", "4"}});
}

// Minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2() {
    return SimplicialComplex::from_facets(labels_n(6), {{"1", "2", "3"},
                                                        {"1", "2", "4"},
                                                        {"1", "3", "5"},
                                                        {"1", "4", "6"},
                                                        {"1", "5", "6"},
                                                        {"2", "3", "6"},
                                                        {"2", "4", "5"},
                                                        {"2", "5", "6"},
                                                        {"3", "4", "5"},
                                                        {"3", "4", "6"}});
}

inline SimplicialComplex tree4() { // star with three leaves
    return SimplicialComplex::from_facets(labels_n(4), {{"1", "2"}, {"1", "3"}, {"1", "4"}});
}

} // namespace fixtures
