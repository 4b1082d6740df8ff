#pragma once

// Test-side oracles and generators.  Nothing here calls the library's
// elimination code, so the checks built on it are independent.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gridmatch/complex.hpp"
#include "gridmatch/graph.hpp"
#include "gridmatch/homology.hpp"

namespace testing {

inline constexpr std::uint64_t kSeed = 0x5eed'2024'0611ULL;

inline gridmatch::Graph random_graph(std::mt19937_64& rng, int vertices, double p)
{
    std::vector<gridmatch::VertexLabel> vs;
    for (int i = 1; i <= vertices; ++i)
        vs.push_back(gridmatch::VertexLabel::raw("v" + std::to_string(i)));
    std::bernoulli_distribution coin(p);
    std::vector<gridmatch::LabelEdge> edges;
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j)
            if (coin(rng))
                edges.emplace_back(vs[i], vs[j]);
    return gridmatch::Graph(std::move(vs), edges);
}

// Rank over GF(p) by dense Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p = 2147483647)
{
    auto power = [p](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        b %= p;
        while (e > 0) {
            if (e & 1)
                r = static_cast<std::int64_t>((__int128)r * b % p);
            b = static_cast<std::int64_t>((__int128)b * b % p);
            e >>= 1;
        }
        return r;
    };
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& x : row)
            x = ((x % p) + p) % p;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        const std::int64_t inv = power(a[rank][c], p - 2);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const std::int64_t factor = static_cast<std::int64_t>((__int128)a[r][c] * inv % p);
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] = static_cast<std::int64_t>(((a[r][k] - (__int128)factor * a[rank][k]) % p + p) % p);
        }
        ++rank;
    }
    return rank;
}

// Boundary matrix of dimension d built straight from the face lists.
inline std::vector<std::vector<std::int64_t>> dense_boundary(const gridmatch::SimplicialComplex& c, int d)
{
    const std::size_t rows = c.face_count(d - 1);
    const std::size_t cols = c.face_count(d);
    std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(cols, 0));
    std::map<std::vector<gridmatch::VertexIndex>, std::size_t> index;
    for (std::size_t i = 0; i < rows; ++i) {
        auto f = c.face(d - 1, i);
        index[std::vector<gridmatch::VertexIndex>(f.begin(), f.end())] = i;
    }
    for (std::size_t j = 0; j < cols; ++j) {
        auto f = c.face(d, j);
        std::vector<gridmatch::VertexIndex> face(f.begin(), f.end());
        for (std::size_t p = 0; p < face.size(); ++p) {
            auto sub = face;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(p));
            out[index.at(sub)][j] = p % 2 == 0 ? 1 : -1;
        }
    }
    return out;
}

// Reduced Betti numbers over GF(p): the rational Betti numbers whenever the
// matrices have no p-torsion, which holds for every complex in the tests.
inline gridmatch::BettiMap betti_mod_p(const gridmatch::SimplicialComplex& c)
{
    gridmatch::BettiMap out;
    if (c.is_void())
        return out;
    const int top = c.dimension();
    std::vector<std::size_t> rank(static_cast<std::size_t>(top + 3), 0);
    for (int d = 0; d <= top; ++d)
        rank[static_cast<std::size_t>(d + 1)] = rank_mod_p(dense_boundary(c, d));
    for (int d = -1; d <= top; ++d) {
        const auto b = static_cast<std::int64_t>(c.face_count(d)) -
                       static_cast<std::int64_t>(rank[static_cast<std::size_t>(d + 1)]) -
                       static_cast<std::int64_t>(rank[static_cast<std::size_t>(d + 2)]);
        if (b != 0)
            out[d] = b;
    }
    return out;
}

// Fraction-free determinant.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0)
                ++s;
            if (s == n)
                return 0;
            std::swap(a[s], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    if (k > n)
        return;
    while (true) {
        out.push_back(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

// Invariant factors d_k = D_k / D_{k-1}, where D_k is the gcd of all k x k minors.
inline std::vector<mpz_class> determinantal_factors(const std::vector<std::vector<long>>& m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<mpz_class> out;
    mpz_class previous = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rsets, csets;
        combinations(rows, k, rsets);
        combinations(cols, k, csets);
        mpz_class g = 0;
        for (const auto& rs : rsets) {
            for (const auto& cs : csets) {
                std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = m[rs[i]][cs[j]];
                mpz_class det = bareiss_det(std::move(sub));
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            }
        }
        if (g == 0)
            break;
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

inline std::vector<std::vector<long>> random_matrix(std::mt19937_64& rng, int max_dim, int bound)
{
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-bound, bound);
    std::uniform_int_distribution<int> density(0, 3);
    const int rows = dim(rng), cols = dim(rng);
    const int sparsity = density(rng);  // 0: dense, 3: mostly zero
    std::uniform_int_distribution<int> keep(0, 3);
    std::vector<std::vector<long>> out(rows, std::vector<long>(cols, 0));
    for (auto& row : out)
        for (auto& x : row)
            if (keep(rng) >= sparsity)
                x = entry(rng);
    // Occasionally force a rank drop by copying a scaled row.
    if (rows > 1 && keep(rng) == 0) {
        const long factor = entry(rng);
        for (int j = 0; j < cols; ++j)
            out[rows - 1][j] = factor * out[0][j];
    }
    return out;
}

// The 6-vertex triangulation of the real projective plane.
inline gridmatch::SimplicialComplex projective_plane()
{
    using gridmatch::VertexLabel;
    std::vector<VertexLabel> vs;
    for (int i = 1; i <= 6; ++i)
        vs.push_back(VertexLabel::raw(std::to_string(i)));
    const int triangles[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                  {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
    std::vector<std::vector<VertexLabel>> facets;
    for (const auto& t : triangles)
        facets.push_back({vs[t[0] - 1], vs[t[1] - 1], vs[t[2] - 1]});
    return gridmatch::SimplicialComplex::from_facets(vs, facets);
}

}  // namespace testing
