#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gridmatch/graph.hpp"

namespace gridmatch {

/// Grid graph Gamma(rows, cols): lattice points (i, j), adjacent at L1 distance 1.
Graph grid_graph(int rows, int cols);

/// Label of the line-graph vertex standing for edge {a, b}.  Edges between
/// grid nodes get GridEdge labels; anything else gets a raw "le(a,b)" name.
VertexLabel edge_label(const VertexLabel& a, const VertexLabel& b);

/// Line graph L(G): one vertex per edge, adjacent when the edges share an endpoint.
Graph line_graph(const Graph& g);

/// The graph Delta^m_n: spine e_1..e_n and m rows f^k_1..f^k_{n-1} with
/// f^k_i ~ f^k_{i+1} and e_i ~ f^k_i ~ e_{i+1}.
Graph delta_graph(int m, int n);

/// Intermediate graphs of the splitting argument for I(Delta^m_n).
enum class NamedSubgraphKind { X, Y, Z, Zprime, Zdoubleprime, W };

std::string to_string(NamedSubgraphKind kind);
/// Accepts X, Y, Z, Zprime, Zdoubleprime, W (and Z', Z'').
NamedSubgraphKind parse_named_kind(std::string_view text);
/// Smallest n for which the kind is defined.
int minimum_n(NamedSubgraphKind kind);

/// X_n = Delta \ e_{n-1},  Y_n = X_n \ e_{n-2},
/// Z_n = Y_n \ ({f^k_{n-4}} u {e_{n-3}} u N[e_n]),
/// Z'_n = Y_n \ ({f^k_{n-4}} u {e_{n-3}, e_n}),
/// Z''_n = Y_n \ (N[e_{n-3}] u {e_n}),
/// W_n = Y_n \ ({f^k_{n-3}} u {e_n}).
/// Requires m >= 2 and n >= minimum_n(kind).
Graph named_subgraph(NamedSubgraphKind kind, int m, int n);

// Small fixtures over raw labels "v1".."vk" (or caller-supplied names).
Graph path_graph(const std::vector<std::string>& names);
Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);
Graph edgeless_graph(int k);

}  // namespace gridmatch
