#include "asua/families.hpp"

#include "asua/error.hpp"

#include <algorithm>
#include <set>

namespace asua {

namespace {

std::vector<VertexId> absorber_or(std::optional<VertexId> absorber, VertexId fallback) {
  return {absorber.value_or(fallback)};
}

}  // namespace

Graph gen_path(std::size_t n, std::optional<VertexId> absorber) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "path needs n >= 2");
  std::vector<EdgeSpec> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
  return build_graph(n, edges, absorber_or(absorber, n - 1));
}

Graph gen_cycle(std::size_t n, std::optional<VertexId> absorber) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "cycle needs n >= 3");
  std::vector<EdgeSpec> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 1});
  return build_graph(n, edges, absorber_or(absorber, n - 1));
}

Graph gen_star(std::size_t n, std::optional<VertexId> absorber) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "star needs n >= 2");
  std::vector<EdgeSpec> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({0, v, 1});
  return build_graph(n, edges, absorber_or(absorber, 0));
}

Graph gen_sea_dragon(const SeaDragonSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<EdgeSpec> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});

  VertexId next = n;
  auto add_stem = [&](VertexId anchor, std::int64_t length) {
    VertexId prev = anchor;
    for (std::int64_t j = 0; j < length; ++j) {
      edges.push_back({prev, next, 1});
      prev = next++;
    }
  };

  switch (spec.variant) {
    case SeaDragonVariant::SD1:
      for (auto k : spec.leaf_positions) add_stem(static_cast<VertexId>(k - 1), 1);
      break;
    case SeaDragonVariant::SD2:
      for (std::int64_t j = 0; j < spec.leaf_count; ++j) add_stem(static_cast<VertexId>(spec.k - 1), 1);
      break;
    case SeaDragonVariant::SD3:
    case SeaDragonVariant::SD4:
      for (auto c : spec.stem_lengths) add_stem(static_cast<VertexId>(spec.k - 1), c);
      break;
  }
  const VertexId absorber[] = {n - 1};
  return build_graph(next, edges, absorber);
}

namespace {

std::string rooted_code(const Graph& g, VertexId v, VertexId parent) {
  std::vector<std::string> children;
  for (const auto& nb : g.neighbors(v))
    if (nb.to != parent) children.push_back(rooted_code(g, nb.to, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

std::vector<VertexId> centers(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = g.neighbors(v).size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<VertexId> next;
    for (VertexId v : layer)
      for (const auto& nb : g.neighbors(v))
        if (--degree[nb.to] == 1) next.push_back(nb.to);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

Graph tree_from_code(const std::string& code) {
  std::vector<EdgeSpec> edges;
  std::vector<VertexId> stack;
  VertexId count = 0;
  for (char ch : code) {
    if (ch == '(') {
      if (!stack.empty()) edges.push_back({stack.back(), count, 1});
      stack.push_back(count++);
    } else {
      stack.pop_back();
    }
  }
  return build_graph(count, edges, std::span<const VertexId>{});
}

}  // namespace

std::string canonical_tree_string(const Graph& g) {
  if (classify_sea_dragon(g).shape == TreeShape::NotATree)
    throw Error(ErrorKind::BadSpec, "canonical form requested for a non-tree");
  std::string best;
  for (VertexId c : centers(g)) {
    auto code = rooted_code(g, c, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<Graph> enumerate_trees(std::size_t n) {
  if (n < 2 || n > 10) throw Error(ErrorKind::OutOfRange, "tree enumeration supports 2 <= n <= 10");
  std::set<std::string> level{"()"};
  for (std::size_t m = 2; m <= n; ++m) {
    std::set<std::string> grown;
    for (const auto& code : level) {
      const Graph base = tree_from_code(code);
      auto edges = base.edges();
      for (VertexId v = 0; v < base.vertex_count(); ++v) {
        edges.push_back({v, base.vertex_count(), 1});
        grown.insert(canonical_tree_string(build_graph(m, edges, std::span<const VertexId>{})));
        edges.pop_back();
      }
    }
    level = std::move(grown);
  }
  std::vector<Graph> out;
  for (const auto& code : level) out.push_back(tree_from_code(code));
  return out;
}

bool is_star(const Graph& g) {
  if (classify_sea_dragon(g).shape == TreeShape::NotATree) return false;
  const std::size_t n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) + 1 == n) return true;
  return n == 1;
}

bool is_path(const Graph& g) {
  if (classify_sea_dragon(g).shape == TreeShape::NotATree) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

Graph random_tree(std::size_t n, Xoshiro256& rng) {
  std::vector<EdgeSpec> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({static_cast<VertexId>(rng.below(v)), v, 1});
  return build_graph(n, edges, std::span<const VertexId>{});
}

Graph random_connected_graph(std::size_t n, std::size_t extra_edges,
                             Multiplicity max_multiplicity, Xoshiro256& rng) {
  std::vector<EdgeSpec> edges;
  auto mult = [&] { return max_multiplicity <= 1 ? 1 : 1 + rng.below(max_multiplicity); };
  for (VertexId v = 1; v < n; ++v) edges.push_back({static_cast<VertexId>(rng.below(v)), v, mult()});
  if (n >= 2) {
    for (std::size_t e = 0; e < extra_edges; ++e) {
      auto u = static_cast<VertexId>(rng.below(n));
      auto v = static_cast<VertexId>(rng.below(n - 1));
      if (v >= u) ++v;
      edges.push_back({u, v, mult()});
    }
  }
  return build_graph(n, edges, std::span<const VertexId>{});
}

}  // namespace asua
