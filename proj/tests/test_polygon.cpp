#include <doctest.h>

#include <cmath>
#include <numeric>

#include "polyq/bending.hpp"
#include "polyq/polygon.hpp"
#include "polyq/tree.hpp"

using namespace polyq;

TEST_CASE("index partitions from splitting") {
    RibbonTree t = caterpillar(3);
    auto inner = index_partition(t, EdgeRef{1});
    CHECK(inner.root_side == std::vector<int>{0, 1});
    CHECK(inner.far_side == std::vector<int>{2, 3});

    auto at_root = index_partition(t, EdgeRef{});
    CHECK(at_root.root_side == std::vector<int>{0});
    CHECK(at_root.far_side == std::vector<int>{1, 2, 3});

    auto at_leaf = index_partition(t, EdgeRef{1, 0});
    CHECK(at_leaf.far_side == std::vector<int>{2});
    CHECK(at_leaf.root_side == std::vector<int>{0, 1, 3});

    CHECK_THROWS_AS(index_partition(t, EdgeRef{4}), std::out_of_range);
}

TEST_CASE("antipodal pair for the lone leaf") {
    Labeling phi{{EdgeRef{}, 2}};
    auto u = realize(corolla(1), {2, {2}}, phi);
    REQUIRE(u.vectors.size() == 2);
    CHECK(u.vectors[0] == Vec3{2.0, 0.0, 0.0});
    CHECK(u.vectors[1] == Vec3{-2.0, 0.0, 0.0});
    CHECK(u.closure_residual() == 0.0);
}

TEST_CASE("equilateral triangle") {
    RibbonTree t = corolla(2);
    Labeling phi{{EdgeRef{}, 1}, {EdgeRef{0}, 1}, {EdgeRef{1}, 1}};
    auto u = realize(t, {1, {1, 1}}, phi);
    REQUIRE(u.vectors.size() == 3);
    CHECK(u.closure_residual() <= 1e-12);
    for (int i = 0; i <= 2; ++i) {
        CHECK(norm(u.vectors[i]) == doctest::Approx(1.0).epsilon(1e-12));
        auto part = index_partition(t, i == 0 ? EdgeRef{} : EdgeRef{i - 1});
        CHECK(bending_value(u, part) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // flat triangle: collinear vectors still close up
    Labeling flat{{EdgeRef{}, 2}, {EdgeRef{0}, 1}, {EdgeRef{1}, 1}};
    auto v = realize(t, {2, {1, 1}}, flat);
    CHECK(v.closure_residual() <= 1e-12);
}

TEST_CASE("prescribed bending value at an internal edge") {
    RibbonTree t = caterpillar(3);
    Labeling phi{{EdgeRef{}, 1}, {EdgeRef{0}, 1},    {EdgeRef{1}, 2},
                 {EdgeRef{1, 0}, 1}, {EdgeRef{1, 1}, 1}};
    auto u = realize(t, {1, {1, 1, 1}}, phi);
    CHECK(bending_value(u, index_partition(t, EdgeRef{1})) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("every admissible labeling is realized faithfully") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& t : enumerate_trivalent(n)) {
            auto edges = all_edges(t);
            std::vector<int> point(n + 1, 0);
            while (true) {
                LengthVector lv{point[0], {point.begin() + 1, point.end()}};
                double tol = 1e-9 * (1.0 + lv.d + std::accumulate(lv.c.begin(), lv.c.end(), 0));
                for (const auto& phi : enumerate_labelings(t, lv)) {
                    auto u = realize(t, lv, phi);
                    REQUIRE(u.vectors.size() == static_cast<std::size_t>(n) + 1);
                    CHECK(u.closure_residual() <= tol);
                    CHECK(std::abs(norm(u.vectors[0]) - lv.d) <= tol);
                    for (int i = 1; i <= n; ++i)
                        CHECK(std::abs(norm(u.vectors[i]) - lv.c[i - 1]) <= tol);
                    for (const auto& e : edges) {
                        auto part = index_partition(t, e);
                        double bend = bending_value(u, part);
                        CHECK(std::abs(bend - phi.at(e)) <= tol);
                        // the two sides of the cut measure the same diagonal
                        double other = 0.0;
                        Vec3 sum{0, 0, 0};
                        for (int i : part.far_side)
                            for (int k = 0; k < 3; ++k) sum[k] += u.vectors[i][k];
                        other = norm(sum);
                        CHECK(std::abs(bend - other) <= 2 * tol);
                    }
                }
                int j = 0;
                while (j <= n && ++point[j] > 3) point[j++] = 0;
                if (j > n) break;
            }
        }
}

TEST_CASE("zero lengths give exactly zero vectors") {
    RibbonTree t = caterpillar(3);
    Labeling all_zero{{EdgeRef{}, 0}, {EdgeRef{0}, 0},    {EdgeRef{1}, 0},
                      {EdgeRef{1, 0}, 0}, {EdgeRef{1, 1}, 0}};
    auto u = realize(t, {0, {0, 0, 0}}, all_zero);
    for (const auto& v : u.vectors) CHECK(v == Vec3{0.0, 0.0, 0.0});

    Labeling mixed{{EdgeRef{}, 1}, {EdgeRef{0}, 1},    {EdgeRef{1}, 0},
                   {EdgeRef{1, 0}, 0}, {EdgeRef{1, 1}, 0}};
    auto w = realize(t, {1, {1, 0, 0}}, mixed);
    CHECK(w.vectors[2] == Vec3{0.0, 0.0, 0.0});
    CHECK(w.vectors[3] == Vec3{0.0, 0.0, 0.0});
    CHECK(norm(w.vectors[1]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("inadmissible labelings are rejected") {
    RibbonTree t = caterpillar(3);
    Labeling bad{{EdgeRef{}, 1}, {EdgeRef{0}, 1},    {EdgeRef{1}, 3},
                 {EdgeRef{1, 0}, 1}, {EdgeRef{1, 1}, 1}};
    CHECK_THROWS_AS(realize(t, {1, {1, 1, 1}}, bad), std::invalid_argument);
}
