#include "asua/survey.hpp"

#include "asua/chain.hpp"
#include "asua/error.hpp"
#include "asua/families.hpp"

#include <algorithm>
#include <queue>

namespace asua {

const char* to_string(AbsorberConvention c) noexcept {
  switch (c) {
    case AbsorberConvention::Max: return "max";
    case AbsorberConvention::Min: return "min";
    case AbsorberConvention::Each: return "each";
  }
  return "?";
}

const char* to_string(PairConvention c) noexcept {
  return c == PairConvention::MaxPair ? "max-pair" : "diametral";
}

AbsorberConvention parse_absorber_convention(const std::string& name) {
  if (name == "max") return AbsorberConvention::Max;
  if (name == "min") return AbsorberConvention::Min;
  if (name == "each") return AbsorberConvention::Each;
  throw Error(ErrorKind::BadSpec, "absorber convention must be max, min or each");
}

namespace {

std::vector<std::size_t> distances_from(const Graph& g, VertexId root) {
  std::vector<std::size_t> dist(g.vertex_count(), static_cast<std::size_t>(-1));
  std::queue<VertexId> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (const auto& nb : g.neighbors(v))
      if (dist[nb.to] == static_cast<std::size_t>(-1)) {
        dist[nb.to] = dist[v] + 1;
        q.push(nb.to);
      }
  }
  return dist;
}

SurveyTree measure(const Graph& tree, std::size_t index) {
  const std::size_t n = tree.vertex_count();
  SurveyTree s;
  s.index = index;
  s.code = canonical_tree_string(tree);
  for (const auto& e : tree.edges())
    s.edges += (s.edges.empty() ? "" : " ") + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
  s.star = is_star(tree);
  s.path = is_path(tree);

  // hit[v][u] = t(T, v, u)
  std::vector<std::vector<Rational>> hit(n, std::vector<Rational>(n));
  for (VertexId u = 0; u < n; ++u) {
    const VertexId absorber[] = {u};
    const auto t = solve_asua(tree.with_absorbing(absorber));
    Rational sum = 0;
    for (VertexId v = 0; v < n; ++v) {
      hit[v][u] = t[v];
      sum += t[v];
    }
    s.tsigma.push_back(sum);
  }
  s.tsigma_min = *std::min_element(s.tsigma.begin(), s.tsigma.end());
  s.tsigma_max = *std::max_element(s.tsigma.begin(), s.tsigma.end());

  std::size_t diameter = 0;
  VertexId da = 0, db = 0;
  for (VertexId v = 0; v < n; ++v) {
    const auto dist = distances_from(tree, v);
    for (VertexId u = v + 1; u < n; ++u) {
      const Rational rt = hit[v][u] + hit[u][v];
      if (rt > s.round_trip_max_pair) s.round_trip_max_pair = rt;
      if (dist[u] > diameter) {
        diameter = dist[u];
        da = v;
        db = u;
      }
    }
  }
  if (n >= 2) s.round_trip_diametral = hit[da][db] + hit[db][da];
  return s;
}

template <typename ValuesOf>
Extremes extremes(const std::string& name, const std::vector<SurveyTree>& trees, ValuesOf values_of) {
  Extremes ex;
  ex.convention = name;
  bool first = true;
  for (const auto& t : trees)
    for (const auto& v : values_of(t)) {
      if (first || v < ex.min) ex.min = v;
      if (first || v > ex.max) ex.max = v;
      first = false;
    }
  for (const auto& t : trees) {
    const auto vals = values_of(t);
    if (std::find(vals.begin(), vals.end(), ex.min) != vals.end()) {
      ex.min_trees.push_back(t.index);
      ex.star_attains_min |= t.star;
    }
    if (std::find(vals.begin(), vals.end(), ex.max) != vals.end()) {
      ex.max_trees.push_back(t.index);
      ex.path_attains_max |= t.path;
    }
  }
  return ex;
}

}  // namespace

SurveyLevel survey_order(std::size_t n, const std::vector<AbsorberConvention>& conventions) {
  SurveyLevel level;
  level.n = n;
  const auto trees = enumerate_trees(n);
  for (std::size_t i = 0; i < trees.size(); ++i) level.trees.push_back(measure(trees[i], i + 1));

  for (auto c : conventions) {
    const std::string name = std::string("tsigma:") + to_string(c);
    switch (c) {
      case AbsorberConvention::Max:
        level.tsigma.push_back(extremes(name, level.trees, [](const SurveyTree& t) {
          return std::vector<Rational>{t.tsigma_max};
        }));
        break;
      case AbsorberConvention::Min:
        level.tsigma.push_back(extremes(name, level.trees, [](const SurveyTree& t) {
          return std::vector<Rational>{t.tsigma_min};
        }));
        break;
      case AbsorberConvention::Each:
        level.tsigma.push_back(extremes(name, level.trees, [](const SurveyTree& t) { return t.tsigma; }));
        break;
    }
  }
  level.round_trip.push_back(extremes("round-trip:max-pair", level.trees, [](const SurveyTree& t) {
    return std::vector<Rational>{t.round_trip_max_pair};
  }));
  level.round_trip.push_back(extremes("round-trip:diametral", level.trees, [](const SurveyTree& t) {
    return std::vector<Rational>{t.round_trip_diametral};
  }));
  return level;
}

}  // namespace asua
