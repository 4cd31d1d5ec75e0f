#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace asua {

/// 0-based vertex index. Every file format and CLI surface shows it 1-based.
using VertexId = std::size_t;
using Multiplicity = std::uint64_t;

struct EdgeSpec {
  VertexId u;
  VertexId v;
  Multiplicity multiplicity = 1;
};

struct Neighbor {
  VertexId to;
  Multiplicity multiplicity;
};

/// Undirected multigraph with a designated absorbing vertex set.
///
/// Immutable once built. Adjacency lists are sorted by neighbor id and hold
/// one entry per distinct neighbor with the summed multiplicity, so
/// `degree(v)` is the multiplicity-weighted neighbor count used by the walk.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_.at(v); }
  Multiplicity degree(VertexId v) const;
  Multiplicity multiplicity(VertexId u, VertexId v) const;
  /// Sum of all edge multiplicities.
  Multiplicity total_multiplicity() const noexcept;

  bool is_absorbing(VertexId v) const { return absorbing_flags_.at(v); }
  const std::vector<VertexId>& absorbing() const noexcept { return absorbing_; }
  std::vector<VertexId> transient() const;

  /// Each undirected edge once, as (min, max, multiplicity), sorted.
  std::vector<EdgeSpec> edges() const;

  /// Same vertices and edges, different absorbing set.
  Graph with_absorbing(std::span<const VertexId> absorbing) const;

  friend Graph build_graph(std::size_t, std::span<const EdgeSpec>,
                           std::span<const VertexId>);

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<bool> absorbing_flags_;
  std::vector<VertexId> absorbing_;
};

/// Validates ids and multiplicities; duplicate edge entries sum. An empty
/// absorbing set is allowed here and rejected by the solvers.
Graph build_graph(std::size_t vertex_count, std::span<const EdgeSpec> edges,
                  std::span<const VertexId> absorbing);

inline Graph build_graph(std::size_t vertex_count,
                         std::initializer_list<EdgeSpec> edges,
                         std::initializer_list<VertexId> absorbing) {
  return build_graph(vertex_count, std::span<const EdgeSpec>(edges.begin(), edges.size()),
                     std::span<const VertexId>(absorbing.begin(), absorbing.size()));
}

/// Throws EmptyAbsorbingSet, or UnreachableAbsorber listing every transient
/// vertex with no path to an absorber.
void validate_reachability(const Graph& g);

/// Identifies x and y. The merged vertex takes index min(x, y); vertices
/// above max(x, y) shift down by one (see merge_map). Edges between x and y
/// vanish, parallel edges onto the merged vertex sum.
Graph merge_absorbers(const Graph& g, VertexId x, VertexId y);

/// Image of each original vertex under merge_absorbers(g, x, y).
std::vector<VertexId> merge_map(std::size_t vertex_count, VertexId x, VertexId y);

struct DegreeProfile {
  std::vector<Multiplicity> degrees;
  /// One entry per unit of multiplicity.
  std::vector<std::vector<VertexId>> neighbors;
};

DegreeProfile degree_profile(const Graph& g);

enum class TreeShape { NotATree, SeaDragon, TreeWithoutSpine };

struct SeaDragonClass {
  TreeShape shape = TreeShape::NotATree;
  /// Canonical spine, first id < last id. Empty unless shape == SeaDragon.
  std::vector<VertexId> spine;
};

/// A tree is a sea dragon when all its vertices of degree >= 3 lie on one
/// path. The reported spine runs between the two branch vertices farthest
/// apart and is extended at each end through the smallest-id free neighbor
/// until it reaches a leaf.
SeaDragonClass classify_sea_dragon(const Graph& g);

/// Edge-list text format:
///   # comment
///   vertices N
///   absorb i [j ...]
///   i j [m]
/// Ids are 1-based; m defaults to 1.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace asua
