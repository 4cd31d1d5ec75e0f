#include "asua/graph.hpp"

#include "asua/error.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>

namespace asua {

namespace {

std::string one_based(VertexId v) { return "v" + std::to_string(v + 1); }

}  // namespace

Multiplicity Graph::degree(VertexId v) const {
  Multiplicity d = 0;
  for (const auto& nb : adjacency_.at(v)) d += nb.multiplicity;
  return d;
}

Multiplicity Graph::multiplicity(VertexId u, VertexId v) const {
  const auto& list = adjacency_.at(u);
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& nb, VertexId id) { return nb.to < id; });
  return it != list.end() && it->to == v ? it->multiplicity : 0;
}

Multiplicity Graph::total_multiplicity() const noexcept {
  Multiplicity twice = 0;
  for (const auto& list : adjacency_)
    for (const auto& nb : list) twice += nb.multiplicity;
  return twice / 2;
}

std::vector<VertexId> Graph::transient() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (!absorbing_flags_[v]) out.push_back(v);
  return out;
}

std::vector<EdgeSpec> Graph::edges() const {
  std::vector<EdgeSpec> out;
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (const auto& nb : adjacency_[u])
      if (u < nb.to) out.push_back({u, nb.to, nb.multiplicity});
  return out;
}

Graph Graph::with_absorbing(std::span<const VertexId> absorbing) const {
  auto e = edges();
  return build_graph(vertex_count(), e, absorbing);
}

Graph build_graph(std::size_t vertex_count, std::span<const EdgeSpec> edges,
                  std::span<const VertexId> absorbing) {
  std::vector<std::map<VertexId, Multiplicity>> acc(vertex_count);
  for (const auto& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw Error(ErrorKind::IdOutOfRange,
                  "edge " + one_based(e.u) + "-" + one_based(e.v) + " with " +
                      std::to_string(vertex_count) + " vertices");
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "self-loop at " + one_based(e.u));
    if (e.multiplicity == 0)
      throw Error(ErrorKind::ZeroMultiplicity,
                  "edge " + one_based(e.u) + "-" + one_based(e.v));
    acc[e.u][e.v] += e.multiplicity;
    acc[e.v][e.u] += e.multiplicity;
  }

  Graph g;
  g.adjacency_.resize(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v)
    for (const auto& [to, m] : acc[v]) g.adjacency_[v].push_back({to, m});

  g.absorbing_flags_.assign(vertex_count, false);
  for (VertexId a : absorbing) {
    if (a >= vertex_count)
      throw Error(ErrorKind::IdOutOfRange, "absorbing vertex " + one_based(a));
    g.absorbing_flags_[a] = true;
  }
  for (VertexId v = 0; v < vertex_count; ++v)
    if (g.absorbing_flags_[v]) g.absorbing_.push_back(v);
  return g;
}

void validate_reachability(const Graph& g) {
  if (g.absorbing().empty())
    throw Error(ErrorKind::EmptyAbsorbingSet, "graph has no absorbing vertex");

  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<VertexId> frontier;
  for (VertexId a : g.absorbing()) {
    seen[a] = true;
    frontier.push(a);
  }
  while (!frontier.empty()) {
    VertexId v = frontier.front();
    frontier.pop();
    for (const auto& nb : g.neighbors(v))
      if (!seen[nb.to]) {
        seen[nb.to] = true;
        frontier.push(nb.to);
      }
  }

  std::vector<VertexId> stranded;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) stranded.push_back(v);
  if (!stranded.empty()) {
    std::string list;
    for (VertexId v : stranded) list += (list.empty() ? "" : " ") + one_based(v);
    throw Error(ErrorKind::UnreachableAbsorber, "no absorbing vertex reachable from " + list,
                stranded);
  }
}

std::vector<VertexId> merge_map(std::size_t vertex_count, VertexId x, VertexId y) {
  const VertexId lo = std::min(x, y), hi = std::max(x, y);
  std::vector<VertexId> image(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v)
    image[v] = v == hi ? lo : (v > hi ? v - 1 : v);
  return image;
}

Graph merge_absorbers(const Graph& g, VertexId x, VertexId y) {
  if (x >= g.vertex_count() || y >= g.vertex_count())
    throw Error(ErrorKind::IdOutOfRange, "merge of " + one_based(x) + " and " + one_based(y));
  if (x == y) throw Error(ErrorKind::SameVertex, "cannot merge " + one_based(x) + " with itself");

  const auto image = merge_map(g.vertex_count(), x, y);
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    VertexId a = image[e.u], b = image[e.v];
    if (a != b) edges.push_back({a, b, e.multiplicity});
  }
  std::vector<VertexId> absorbing;
  for (VertexId a : g.absorbing()) absorbing.push_back(image[a]);
  std::sort(absorbing.begin(), absorbing.end());
  absorbing.erase(std::unique(absorbing.begin(), absorbing.end()), absorbing.end());
  return build_graph(g.vertex_count() - 1, edges, absorbing);
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.vertex_count());
  p.neighbors.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const auto& nb : g.neighbors(v)) {
      p.degrees[v] += nb.multiplicity;
      p.neighbors[v].insert(p.neighbors[v].end(), nb.multiplicity, nb.to);
    }
  }
  return p;
}

namespace {

bool is_tree(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  if (g.total_multiplicity() != n - 1) return false;
  for (VertexId v = 0; v < n; ++v)
    for (const auto& nb : g.neighbors(v))
      if (nb.multiplicity != 1) return false;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(v))
      if (!seen[nb.to]) {
        seen[nb.to] = true;
        ++reached;
        stack.push_back(nb.to);
      }
  }
  return reached == n;
}

// Parents from a BFS rooted at `root`, plus distances.
void bfs(const Graph& g, VertexId root, std::vector<std::size_t>& dist,
         std::vector<VertexId>& parent) {
  const auto none = static_cast<std::size_t>(-1);
  dist.assign(g.vertex_count(), none);
  parent.assign(g.vertex_count(), none);
  std::queue<VertexId> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (const auto& nb : g.neighbors(v))
      if (dist[nb.to] == none) {
        dist[nb.to] = dist[v] + 1;
        parent[nb.to] = v;
        q.push(nb.to);
      }
  }
}

// Walk off the spine starting with `first`, whose predecessor is `from`,
// until a leaf. Off-spine vertices of a sea dragon have degree <= 2.
std::vector<VertexId> leg(const Graph& g, VertexId from, VertexId first) {
  std::vector<VertexId> out{first};
  VertexId prev = from, cur = first;
  for (;;) {
    VertexId next = cur;
    for (const auto& nb : g.neighbors(cur))
      if (nb.to != prev) {
        next = nb.to;
        break;
      }
    if (next == cur) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace

SeaDragonClass classify_sea_dragon(const Graph& g) {
  SeaDragonClass result;
  if (!is_tree(g)) return result;

  const std::size_t n = g.vertex_count();
  std::vector<VertexId> branch;
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) >= 3) branch.push_back(v);

  std::vector<VertexId> spine;
  if (branch.empty()) {
    VertexId start = 0;
    while (start < n && g.degree(start) > 1) ++start;
    spine = leg(g, start, start);
  } else {
    VertexId best_a = branch.front(), best_b = branch.front();
    std::size_t best = 0;
    std::vector<std::size_t> dist;
    std::vector<VertexId> parent;
    for (VertexId a : branch) {
      bfs(g, a, dist, parent);
      for (VertexId b : branch)
        if (b > a && dist[b] > best) {
          best = dist[b];
          best_a = a;
          best_b = b;
        }
    }
    bfs(g, best_a, dist, parent);
    std::vector<VertexId> core;
    for (VertexId v = best_b; v != best_a; v = parent[v]) core.push_back(v);
    core.push_back(best_a);
    std::reverse(core.begin(), core.end());

    std::vector<bool> on_core(n, false);
    for (VertexId v : core) on_core[v] = true;
    for (VertexId b : branch)
      if (!on_core[b]) {
        result.shape = TreeShape::TreeWithoutSpine;
        return result;
      }

    auto free_neighbors = [&](VertexId v) {
      std::vector<VertexId> out;
      for (const auto& nb : g.neighbors(v))
        if (!on_core[nb.to]) out.push_back(nb.to);
      return out;
    };
    const auto front_free = free_neighbors(core.front());
    std::vector<VertexId> head = leg(g, core.front(), front_free.at(0));
    std::vector<VertexId> tail;
    if (core.size() == 1) {
      tail = leg(g, core.front(), front_free.at(1));
    } else {
      tail = leg(g, core.back(), free_neighbors(core.back()).at(0));
    }
    spine.assign(head.rbegin(), head.rend());
    spine.insert(spine.end(), core.begin(), core.end());
    spine.insert(spine.end(), tail.begin(), tail.end());
  }

  if (spine.front() > spine.back()) std::reverse(spine.begin(), spine.end());
  result.shape = TreeShape::SeaDragon;
  result.spine = std::move(spine);
  return result;
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(ErrorKind::Parse,
                "line " + std::to_string(line_no) + ": expected integer, got '" +
                    std::string(tok) + "'");
  return value;
}

VertexId parse_id(std::string_view tok, std::size_t line_no, std::size_t n) {
  auto id = parse_uint(tok, line_no);
  if (id == 0 || id > n)
    throw Error(ErrorKind::IdOutOfRange, "line " + std::to_string(line_no) + ": vertex " +
                                             std::string(tok) + " not in 1.." +
                                             std::to_string(n));
  return static_cast<VertexId>(id - 1);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::optional<std::vector<VertexId>> absorbing;
  std::vector<EdgeSpec> edges;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    const auto where = "line " + std::to_string(line_no) + ": ";
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "vertices")
        throw Error(ErrorKind::Parse, where + "expected 'vertices N'");
      n = parse_uint(tokens[1], line_no);
      continue;
    }
    if (tokens[0] == "absorb") {
      if (absorbing) throw Error(ErrorKind::Parse, where + "duplicate 'absorb' line");
      absorbing.emplace();
      for (std::size_t i = 1; i < tokens.size(); ++i)
        absorbing->push_back(parse_id(tokens[i], line_no, *n));
      continue;
    }
    if (tokens.size() != 2 && tokens.size() != 3)
      throw Error(ErrorKind::Parse, where + "expected 'i j [m]'");
    EdgeSpec e{parse_id(tokens[0], line_no, *n), parse_id(tokens[1], line_no, *n), 1};
    if (tokens.size() == 3) e.multiplicity = parse_uint(tokens[2], line_no);
    edges.push_back(e);
  }
  if (!n) throw Error(ErrorKind::Parse, "missing 'vertices N' line");
  if (!absorbing) throw Error(ErrorKind::Parse, "missing 'absorb' line");
  return build_graph(*n, edges, *absorbing);
}

Graph read_edge_list(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "vertices " << g.vertex_count() << '\n' << "absorb";
  for (VertexId a : g.absorbing()) out << ' ' << a + 1;
  out << '\n';
  for (const auto& e : g.edges()) {
    out << e.u + 1 << ' ' << e.v + 1;
    if (e.multiplicity != 1) out << ' ' << e.multiplicity;
    out << '\n';
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace asua
