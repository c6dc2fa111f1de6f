#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "lmck/faces.hpp"

using namespace lmck;

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(ComplexSpec(3, 2), ValidationError);  // n < d+2
    CHECK_THROWS_AS(ComplexSpec(5, 0), ValidationError);
    const ComplexSpec spec(5, 2);
    CHECK(spec.face_count() == 10);   // C(5,3)
    CHECK(spec.row_count() == 10);    // C(5,2)
    CHECK(spec.cycle_dim() == 6);     // C(4,2)
}

TEST_CASE("rank/unrank examples") {
    const ComplexSpec spec(5, 2);
    CHECK(unrank_face(spec, 0) == std::vector<Vertex>{0, 1, 2});
    CHECK(unrank_face(spec, 8) == std::vector<Vertex>{1, 3, 4});
    CHECK(unrank_face(spec, 9) == std::vector<Vertex>{2, 3, 4});
    CHECK(rank_face(spec, {0, 1, 2}) == 0);
    CHECK(rank_face(spec, {1, 3, 4}) == 8);
    CHECK(rank_face(spec, {0, 1, 3}) == 1);
    CHECK_THROWS_AS(unrank_face(spec, 10), ValidationError);
    CHECK_THROWS_AS(rank_face(spec, {1, 0, 2}), ValidationError);
    CHECK_THROWS_AS(rank_face(spec, {0, 1, 1}), ValidationError);
    CHECK_THROWS_AS(rank_face(spec, {0, 1, 5}), ValidationError);
}

TEST_CASE("rank/unrank bijection, exhaustive") {
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{12, 2}, {9, 3}, {7, 1}, {8, 4}}) {
        const ComplexSpec spec(n, d);
        std::vector<Vertex> prev;
        for (FaceId id = 0; id < spec.face_count(); ++id) {
            const auto tuple = unrank_face(spec, id);
            CHECK(rank_face(spec, tuple) == id);
            if (!prev.empty()) {
                // colex order of ids agrees with colex order of tuples
                auto colex_less = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
                    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
                        if (a[i] != b[i]) return a[i] < b[i];
                    return false;
                };
                CHECK(colex_less(prev, tuple));
            }
            prev = tuple;
        }
    }
}

TEST_CASE("boundary basics") {
    const ComplexSpec spec(5, 2);
    const auto facets = boundary(spec, {0, 1, 2});
    REQUIRE(facets.size() == 3);
    CHECK(facets[0].sign == 1);
    CHECK(facets[0].vertices == std::vector<Vertex>{1, 2});
    CHECK(facets[1].sign == -1);
    CHECK(facets[1].vertices == std::vector<Vertex>{0, 2});
    CHECK(facets[2].sign == 1);
    CHECK(facets[2].vertices == std::vector<Vertex>{0, 1});

    const ComplexSpec line(4, 1);
    const auto ends = boundary(line, {0, 1});
    REQUIRE(ends.size() == 2);
    CHECK(ends[0].sign == 1);
    CHECK(ends[0].vertices == std::vector<Vertex>{1});
    CHECK(ends[1].sign == -1);
    CHECK(ends[1].vertices == std::vector<Vertex>{0});
}

TEST_CASE("boundary_rows matches boundary()") {
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{7, 2}, {6, 3}}) {
        const ComplexSpec spec(n, d);
        std::vector<std::pair<std::int64_t, int>> rows;
        for (FaceId id = 0; id < spec.face_count(); ++id) {
            rows.clear();
            boundary_rows(spec, id, rows);
            const auto facets = boundary(spec, unrank_face(spec, id));
            REQUIRE(rows.size() == facets.size());
            std::map<std::int64_t, int> expected;
            for (const auto& f : facets)
                expected[rank_subset(spec, f.vertices, spec.d())] = f.sign;
            for (const auto& [row, sign] : rows) {
                REQUIRE(expected.count(row) == 1);
                CHECK(expected[row] == sign);
            }
            CHECK(std::is_sorted(rows.begin(), rows.end()));
        }
    }
}

TEST_CASE("boundary of boundary is zero") {
    // expand two levels with signs; every (d-2)-face coefficient cancels
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{7, 2}, {6, 3}}) {
        const ComplexSpec spec(n, d);
        for (FaceId id = 0; id < spec.face_count(); ++id) {
            std::map<std::vector<Vertex>, int> coeff;
            for (const auto& facet : boundary(spec, unrank_face(spec, id))) {
                // one level deeper, by hand (facet has d vertices)
                for (std::size_t i = 0; i < facet.vertices.size(); ++i) {
                    std::vector<Vertex> sub;
                    for (std::size_t j = 0; j < facet.vertices.size(); ++j)
                        if (j != i) sub.push_back(facet.vertices[j]);
                    coeff[sub] += facet.sign * (i % 2 == 0 ? 1 : -1);
                }
            }
            for (const auto& [sub, c] : coeff) CHECK(c == 0);
        }
    }
}

TEST_CASE("binomial overflow is a configuration error") {
    CHECK_THROWS_AS(ComplexSpec(500, 30), ValidationError);
}
