#include <random>

#include "doctest.h"

#include "gridmatch/complex.hpp"
#include "gridmatch/errors.hpp"
#include "gridmatch/families.hpp"
#include "gridmatch/homology.hpp"
#include "gridmatch/integer_matrix.hpp"
#include "support.hpp"

using namespace gridmatch;

namespace {

std::vector<Integer> factors(const std::vector<std::vector<long>>& rows)
{
    return smith_normal_form(SparseIntMatrix::from_dense(rows)).invariant_factors;
}

std::vector<Integer> ints(std::initializer_list<long> values)
{
    std::vector<Integer> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

SimplicialComplex hollow_triangle()
{
    auto a = VertexLabel::raw("a"), b = VertexLabel::raw("b"), c = VertexLabel::raw("c");
    return SimplicialComplex::from_facets({a, b, c}, {{a, b}, {b, c}, {a, c}});
}

}  // namespace

TEST_CASE("sparse matrix basics")
{
    SparseIntMatrix m = SparseIntMatrix::from_dense({{1, 0, 2}, {0, -3, 0}});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.nonzeros() == 3);
    CHECK(m.get(1, 1) == -3);
    m.set(1, 1, 0);
    CHECK(m.nonzeros() == 2);
    SparseIntMatrix id = SparseIntMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(m.multiply(id).to_dense() == m.to_dense());
    CHECK_THROWS(m.set_column(0, {{5, 1}}));
}

TEST_CASE("Smith normal form examples")
{
    CHECK(factors({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == ints({1, 1, 1}));
    CHECK(factors({{2, 4}, {6, 8}}) == ints({2, 4}));
    CHECK(smith_normal_form(SparseIntMatrix(3, 4)).rank() == 0);
    CHECK(factors({{0, 0}, {0, 0}}).empty());
    CHECK(factors({{6}}) == ints({6}));
    CHECK(factors({{-6}}) == ints({6}));
    CHECK(factors({{2, 0}, {0, 3}}) == ints({1, 6}));
    CHECK(factors({{4, 0}, {0, 6}}) == ints({2, 12}));
    CHECK(smith_normal_form(SparseIntMatrix::from_dense({{2, 4}, {6, 8}})).torsion() == ints({2, 4}));
    CHECK(normalize_diagonal(ints({6, 4, 1})) == ints({1, 2, 12}));
}

TEST_CASE("Smith normal form agrees with determinantal divisors")
{
    std::mt19937_64 rng(testing::kSeed + 20);
    for (int trial = 0; trial < 150; ++trial) {
        auto m = testing::random_matrix(rng, 5, 9);
        CHECK(factors(m) == testing::determinantal_factors(m));
    }
}

TEST_CASE("large entries stay exact")
{
    // det = 10^12 + 1 - 10^12 = 1 after mixing big coefficients.
    std::vector<std::vector<long>> m{{1000000, 999999}, {1000001, 1000000}};
    CHECK(factors(m) == ints({1, 1}));
    std::vector<std::vector<long>> big{{1L << 40, 0}, {0, 3L << 40}};
    CHECK(factors(big) == testing::determinantal_factors(big));
}

TEST_CASE("boundary matrices")
{
    auto tri = hollow_triangle();
    auto d1 = boundary_matrix(tri, 1).to_dense();
    REQUIRE(d1.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        int plus = 0, minus = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (d1[i][j] == 1)
                ++plus;
            if (d1[i][j] == -1)
                ++minus;
        }
        CHECK(plus == 1);
        CHECK(minus == 1);
    }

    auto c = independence_complex(cycle_graph(6));
    auto d0 = boundary_matrix(c, 0).to_dense();
    REQUIRE(d0.size() == 1);
    CHECK(d0[0] == std::vector<Integer>(6, Integer(1)));

    auto a = VertexLabel::raw("a"), b = VertexLabel::raw("b"), cc = VertexLabel::raw("c");
    auto simplex = SimplicialComplex::from_facets({a, b, cc}, {{a, b, cc}});
    auto d2 = boundary_matrix(simplex, 2).to_dense();
    REQUIRE(d2.size() == 3);
    // Rows: faces bc, ac, ab in lexicographic order ab, ac, bc.
    CHECK(d2[0][0] == 1);   // ab: removed position 2
    CHECK(d2[1][0] == -1);  // ac: removed position 1
    CHECK(d2[2][0] == 1);   // bc: removed position 0
}

TEST_CASE("boundary of a boundary vanishes")
{
    std::mt19937_64 rng(testing::kSeed + 21);
    for (int trial = 0; trial < 20; ++trial) {
        auto c = independence_complex(testing::random_graph(rng, 10, 0.25));
        for (int d = 1; d <= c.dimension(); ++d)
            CHECK(boundary_matrix(c, d - 1).multiply(boundary_matrix(c, d)).is_zero());
    }
    auto rp2 = testing::projective_plane();
    CHECK(boundary_matrix(rp2, 1).multiply(boundary_matrix(rp2, 2)).is_zero());
    CHECK(boundary_matrix(rp2, 0).multiply(boundary_matrix(rp2, 1)).is_zero());
}

TEST_CASE("reduced homology examples")
{
    auto point = independence_complex(edgeless_graph(1));
    CHECK(reduced_homology(point).acyclic());

    auto h = reduced_homology(independence_complex(delta_graph(2, 3)));
    CHECK(h.betti == BettiMap{{1, 2}});
    CHECK(h.torsion_free());

    auto rp2 = testing::projective_plane();
    CHECK(rp2.face_count(0) == 6);
    CHECK(rp2.face_count(1) == 15);
    CHECK(rp2.face_count(2) == 10);
    auto hr = reduced_homology(rp2);
    CHECK(hr.betti.empty());
    REQUIRE(hr.torsion.size() == 1);
    CHECK(hr.torsion.at(1) == ints({2}));
    CHECK(to_json(hr).dump() == R"({"torsion":{"1":[2]}})");

    CHECK(reduced_homology(hollow_triangle()).betti == BettiMap{{1, 1}});
    CHECK(reduced_homology(SimplicialComplex()).acyclic());
}

TEST_CASE("Betti numbers agree with an independent rank computation")
{
    std::mt19937_64 rng(testing::kSeed + 22);
    for (double p : {0.2, 0.4, 0.6}) {
        for (int trial = 0; trial < 15; ++trial) {
            auto c = independence_complex(testing::random_graph(rng, 10, p));
            auto h = reduced_homology(c);
            CHECK(h.betti == testing::betti_mod_p(c));
            CHECK(h.torsion_free());
        }
    }
}

TEST_CASE("frozen Betti numbers of I(Delta^m_n)")
{
    struct Row {
        int m, n;
        BettiMap betti;
    };
    const std::vector<Row> table{
        {1, 2, {{0, 1}}},         {1, 4, {{1, 1}}},         {1, 5, {}},
        {1, 6, {{2, 1}}},         {1, 8, {{3, 1}}},         {2, 1, {}},
        {2, 2, {{0, 1}}},         {2, 3, {{1, 2}}},         {2, 4, {{2, 1}}},
        {2, 5, {{2, 2}}},         {2, 6, {{3, 5}}},         {2, 7, {{4, 4}}},
        {2, 8, {{4, 4}, {5, 1}}}, {3, 3, {{1, 1}, {2, 1}}}, {3, 4, {{3, 1}}},
        {3, 5, {{2, 1}, {3, 1}}}, {3, 6, {{3, 1}, {4, 3}, {5, 1}}},
        {4, 3, {{1, 1}, {3, 1}}}, {4, 4, {{4, 1}}},         {4, 5, {{2, 1}, {4, 1}}},
    };
    for (const auto& row : table) {
        CAPTURE(row.m);
        CAPTURE(row.n);
        auto c = independence_complex(delta_graph(row.m, row.n));
        auto h = reduced_homology(c);
        CHECK(h.betti == row.betti);
        CHECK(h.torsion_free());
        CHECK(testing::betti_mod_p(c) == row.betti);
    }
}

TEST_CASE("Euler characteristic identity")
{
    auto point = independence_complex(edgeless_graph(1));
    CHECK(reduced_euler_characteristic(point) == 0);
    CHECK(reduced_euler_characteristic(independence_complex(complete_graph(2))) == 1);
    CHECK(reduced_euler_characteristic(independence_complex(delta_graph(2, 3))) == -2);

    std::mt19937_64 rng(testing::kSeed + 23);
    for (int trial = 0; trial < 30; ++trial) {
        auto c = independence_complex(testing::random_graph(rng, 11, 0.35));
        CHECK(reduced_euler_characteristic(c) == alternating_sum(reduced_homology(c).betti));
    }
}

TEST_CASE("homology does not depend on the vertex order")
{
    std::mt19937_64 rng(testing::kSeed + 24);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = testing::random_graph(rng, 10, 0.3);
        std::vector<std::size_t> order(g.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(reduced_homology(independence_complex(g, order)) == reduced_homology(independence_complex(g)));
    }
}

TEST_CASE("homology options")
{
    auto c = independence_complex(delta_graph(2, 6));
    HomologyOptions threaded;
    threaded.threads = 4;
    CHECK(reduced_homology(c, threaded) == reduced_homology(c));

    HomologyOptions low;
    low.max_dim = 2;
    CHECK(reduced_homology(c, low).betti.empty());

    HomologyOptions capped;
    capped.max_matrix = 10;
    CHECK_THROWS_AS(reduced_homology(c, capped), ResourceLimitError);
}

TEST_CASE("Betti helpers")
{
    CHECK(shift(BettiMap{{0, 1}, {2, 3}}, 2) == BettiMap{{2, 1}, {4, 3}});
    CHECK(add(BettiMap{{1, 1}}, BettiMap{{1, 2}, {3, 1}}) == BettiMap{{1, 3}, {3, 1}});
    CHECK(alternating_sum(BettiMap{{-1, 1}, {0, 2}, {1, 5}}) == -1 + 2 - 5);
    CHECK(betti_to_json(BettiMap{{2, 2}}).dump() == R"({"2":2})");
    CHECK(to_json(HomologyResult{}).dump() == "{}");
}
