#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "srt/combinatorics.hpp"
#include "srt/complex.hpp"

using namespace srt;
using namespace fixtures;

TEST_CASE("from_facets builds the downward closure") {
    auto cx = path3();
    CHECK(cx.dim() == 1);
    CHECK(cx.vertex_count() == 3);
    CHECK(cx.faces(-1).size() == 1);
    CHECK(cx.faces(0).size() == 3);
    CHECK(cx.faces(1).size() == 2);
    // {∅,1,2,3,12,23} and nothing else
    CHECK(cx.contains(cx.face_from_labels({"1", "2"})));
    CHECK(cx.contains(cx.face_from_labels({"2", "3"})));
    CHECK(!cx.contains(cx.face_from_labels({"1", "3"})));
    CHECK(!cx.contains(cx.face_from_labels({"1", "2", "3"})));
}

TEST_CASE("from_facets single point") {
    auto cx = point();
    CHECK(cx.dim() == 0);
    CHECK(cx.f_vector().counts == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("from_facets validation errors") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets({"1", "2", "3"}, {{"1", "2"}, {"1"}}),
                    IsolatedLabelError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({"1"}, {{"1"}, {"2"}}), UnknownLabelError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({"1", "1"}, {{"1"}}), DuplicateLabelError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({"1", "2"}, {}), IsolatedLabelError);
}

TEST_CASE("facet antichain reduction is silent") {
    auto cx = SimplicialComplex::from_facets({"1", "2"}, {{"1", "2"}, {"1"}, {"1", "2"}});
    CHECK(cx.facets().size() == 1);
    CHECK(cx.facets()[0].count() == 2);
}

TEST_CASE("f-vectors of the stock examples") {
    CHECK(full_simplex(3).f_vector().counts == std::vector<std::int64_t>{1, 3, 3, 1});
    CHECK(cycle(3).f_vector().counts == std::vector<std::int64_t>{1, 3, 3});
    CHECK(two_disjoint_edges().f_vector().counts == std::vector<std::int64_t>{1, 4, 2});
}

TEST_CASE("h-vectors and the defining identity") {
    CHECK(full_simplex(3).h_vector().h == std::vector<std::int64_t>{1, 0, 0, 0});
    CHECK(full_simplex(5).h_vector().h == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0});
    CHECK(cycle(3).h_vector().h == std::vector<std::int64_t>{1, 1, 1});
    CHECK(boundary_3_simplex().h_vector().h == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(edge().h_vector().h == std::vector<std::int64_t>{1, 0, 0});
    CHECK(path3().h_vector().h == std::vector<std::int64_t>{1, 1, 0});
}

TEST_CASE("f <-> h round trip") {
    for (const auto& cx : {point(), two_points(), edge(), path3(), cycle(3), cycle(4), cycle(5),
                           full_simplex(4), boundary_3_simplex(), two_disjoint_edges(),
                           triangle_with_pendant(), rp2()}) {
        auto f = cx.f_vector();
        CHECK(f_from_h(h_from_f(f)) == f);
    }
}

TEST_CASE("barycentric subdivision of an edge is the 3-vertex path") {
    auto sd = edge().barycentric_subdivision();
    CHECK(sd.dim() == 1);
    CHECK(sd.f_vector().counts == std::vector<std::int64_t>{1, 3, 2});
    // labels come from the parent faces
    std::set<std::string> labels(sd.labels().begin(), sd.labels().end());
    CHECK(labels == std::set<std::string>{"{1}", "{2}", "{1,2}"});
}

TEST_CASE("barycentric subdivision of C3 is C6") {
    auto sd = cycle(3).barycentric_subdivision();
    CHECK(sd.f_vector().counts == std::vector<std::int64_t>{1, 6, 6});
    CHECK(sd.dim() == 1);
}

TEST_CASE("barycentric subdivision of the 2-simplex") {
    auto sd = full_simplex(3).barycentric_subdivision();
    CHECK(sd.f_vector().counts == std::vector<std::int64_t>{1, 7, 12, 6});
    CHECK(sd.dim() == 2);
}

TEST_CASE("sd output is re-parseable through from_facets") {
    auto sd = cycle(4).barycentric_subdivision();
    std::vector<std::vector<std::string>> facet_labels;
    for (const auto& f : sd.facets()) facet_labels.push_back(sd.face_labels(f));
    auto rebuilt = SimplicialComplex::from_facets(sd.labels(), facet_labels);
    CHECK(rebuilt == sd);
}

TEST_CASE("dim sd = dim and vertex count = face count") {
    for (const auto& cx : {point(), edge(), path3(), cycle(3), cycle(5), full_simplex(4),
                           boundary_3_simplex(), two_disjoint_edges(), rp2()}) {
        auto sd = cx.barycentric_subdivision();
        CHECK(sd.dim() == cx.dim());
        CHECK(sd.vertex_count() == cx.face_count());
    }
}

TEST_CASE("links") {
    auto c3 = cycle(3);
    CHECK(c3.link(Bitset{}) == c3);
    auto lk = c3.link(Bitset::single(0));
    CHECK(lk.dim() == 0);
    CHECK(lk.vertex_count() == 2);
    auto s3 = full_simplex(3);
    auto lk_edge = s3.link(s3.face_from_labels({"1", "2"}));
    CHECK(lk_edge.vertex_count() == 1);
    CHECK(lk_edge.labels()[0] == "3");
    CHECK_THROWS_AS(c3.link(c3.face_from_labels({"1", "2", "3"})), NotAFaceError);
    // link of a facet is the empty complex {∅}
    auto lk_facet = c3.link(c3.face_from_labels({"1", "2"}));
    CHECK(lk_facet.is_empty_complex());
    CHECK(!lk_facet.is_void());
}

TEST_CASE("restrictions") {
    auto c3 = cycle(3);
    CHECK(c3.restriction(Bitset::first_n(3)) == c3);
    auto r = c3.restriction(c3.face_from_labels({"1", "2"}));
    CHECK(r.dim() == 1);
    CHECK(r.vertex_count() == 2);
    auto c4 = cycle(4);
    auto r13 = c4.restriction(c4.face_from_labels({"1", "3"}));
    CHECK(r13.dim() == 0);
    CHECK(r13.vertex_count() == 2);
    Bitset outside = Bitset::single(9);
    CHECK_THROWS_AS(c3.restriction(outside), UnknownVertexError);
    CHECK(c3.restriction(Bitset{}).is_empty_complex());
}

TEST_CASE("boundary of a face") {
    auto s3 = full_simplex(3);
    auto bd_edge = s3.boundary_of_face(s3.face_from_labels({"1", "2"}));
    CHECK(bd_edge.dim() == 0);
    CHECK(bd_edge.vertex_count() == 2);
    auto bd_tri = s3.boundary_of_face(s3.face_from_labels({"1", "2", "3"}));
    CHECK(bd_tri == cycle(3));
    auto bd_vertex = s3.boundary_of_face(s3.face_from_labels({"1"}));
    CHECK(bd_vertex.is_void());
    CHECK_THROWS_AS(s3.boundary_of_face(Bitset{}), EmptyFaceError);
}

TEST_CASE("downward closure property") {
    for (const auto& cx : {cycle(4), boundary_3_simplex(), triangle_with_pendant(), rp2()}) {
        for (int d = 0; d <= cx.dim(); ++d)
            for (const auto& f : cx.faces(d))
                for (int v : f.to_indices()) {
                    Bitset sub = f;
                    sub.reset(static_cast<std::size_t>(v));
                    CHECK(cx.contains(sub));
                }
    }
}

TEST_CASE("graph predicates") {
    CHECK(one_skeleton_is_chordal(tree4()));
    CHECK(one_skeleton_is_forest(tree4()));
    CHECK(!one_skeleton_is_chordal(cycle(4)));
    CHECK(!one_skeleton_is_forest(cycle(4)));
    CHECK(one_skeleton_is_chordal(full_simplex(3)));
    CHECK(!one_skeleton_is_forest(full_simplex(3)));
    CHECK(one_skeleton_is_chordal(full_simplex(5)));
    CHECK(!one_skeleton_is_chordal(cycle(6)));
    CHECK(one_skeleton_is_forest(two_disjoint_edges()));
    CHECK(one_skeleton_is_forest(path3()));
    // chordal but not a forest: C4 plus one chord
    auto chorded = SimplicialComplex::from_facets(labels_n(4), {{"1", "2"}, {"2", "3"},
                                                                {"3", "4"}, {"1", "4"},
                                                                {"1", "3"}});
    CHECK(one_skeleton_is_chordal(chorded));
    CHECK(!one_skeleton_is_forest(chorded));
}

TEST_CASE("void vs empty complex") {
    auto v = SimplicialComplex::void_complex();
    auto e = SimplicialComplex::empty_complex();
    CHECK(v.is_void());
    CHECK(!e.is_void());
    CHECK(e.is_empty_complex());
    CHECK(v.dim() == -2);
    CHECK(e.dim() == -1);
    CHECK(!(v == e));
    CHECK(e.faces(-1).size() == 1);
    CHECK_THROWS_AS(v.f_vector(), VoidComplexError);
}

TEST_CASE("flag count of subdivided boundaries: f_{r-2} = r! S(m,r)") {
    for (int m = 2; m <= 5; ++m) {
        auto simplex = full_simplex(m);
        auto sd = simplex.boundary_of_face(Bitset::first_n(static_cast<std::size_t>(m)))
                      .barycentric_subdivision();
        auto f = sd.f_vector();
        for (int r = 1; r <= m; ++r) {
            auto expected = BigInt::factorial(static_cast<std::uint64_t>(r)) * stirling2(m, r);
            CHECK(BigInt{f.f(r - 2)} == expected);
        }
    }
}
