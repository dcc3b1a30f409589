#pragma once

#include "rainbow/graph.hpp"

namespace rainbow {

/// Spanning subgraph H with delta^c(H) = delta^c(g) from which no single edge
/// can be removed without lowering delta^c.
///
/// Edges are tried in sorted (u, v) order, pass after pass, until a pass
/// removes nothing. An edge {u, v} of color a is dropped when, at each
/// endpoint, either a occurs again or the color degree exceeds delta^c.
EdgeColoredGraph edge_minimal_reduce(const EdgeColoredGraph &g);

/// True iff no three equally colored edges {u,v}, {v,w}, {w,x} exist
/// (x = u allowed, i.e. monochromatic triangles count as well).
bool check_no_mono_3path(const EdgeColoredGraph &g);

/// True iff removing any one edge lowers delta^c. Quadratic; intended for checks.
bool is_edge_minimal(const EdgeColoredGraph &g);

} // namespace rainbow
