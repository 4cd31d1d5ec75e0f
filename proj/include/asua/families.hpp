#pragma once

#include "asua/closed_forms.hpp"
#include "asua/graph.hpp"
#include "asua/rng.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace asua {

/// v_1 - v_2 - ... - v_n, absorbing at v_n unless overridden.
Graph gen_path(std::size_t n, std::optional<VertexId> absorber = std::nullopt);
/// v_1 ... v_n closed into a cycle, absorbing at v_n unless overridden.
Graph gen_cycle(std::size_t n, std::optional<VertexId> absorber = std::nullopt);
/// Center v_1 joined to leaves v_2..v_n, absorbing at the center unless
/// overridden.
Graph gen_star(std::size_t n, std::optional<VertexId> absorber = std::nullopt);

/// Spine v_1..v_n first, then attached vertices by (position, stem index,
/// distance from the spine). Absorber v_n.
Graph gen_sea_dragon(const SeaDragonSpec& spec);

/// AHU-style string of the tree rooted at each center, minimum taken.
/// Equal strings iff isomorphic trees. Throws BadSpec if g is not a tree.
std::string canonical_tree_string(const Graph& g);

/// One representative per isomorphism class of unlabeled trees on n
/// vertices, 2 <= n <= 10, sorted by canonical string. Vertices are numbered
/// in preorder from a center; no absorbing vertex is set.
std::vector<Graph> enumerate_trees(std::size_t n);

bool is_star(const Graph& g);
bool is_path(const Graph& g);

/// Uniform random recursive tree: vertex v > 0 attaches to a uniformly
/// chosen earlier vertex. No absorbing vertex set.
Graph random_tree(std::size_t n, Xoshiro256& rng);

/// Random connected multigraph: a random tree plus `extra_edges` random
/// non-loop edges; every edge gets multiplicity in 1..max_multiplicity.
Graph random_connected_graph(std::size_t n, std::size_t extra_edges,
                             Multiplicity max_multiplicity, Xoshiro256& rng);

}  // namespace asua
