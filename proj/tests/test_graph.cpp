#include "asua/chain.hpp"
#include "asua/error.hpp"
#include "asua/families.hpp"
#include "asua/graph.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <sstream>

using namespace asua;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected asua::Error");
  return ErrorKind::Parse;
}

void check_invariants(const Graph& g) {
  Multiplicity degree_sum = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    CHECK(g.multiplicity(v, v) == 0);
    for (const auto& nb : g.neighbors(v)) CHECK(g.multiplicity(nb.to, v) == nb.multiplicity);
    degree_sum += g.degree(v);
  }
  CHECK(degree_sum == 2 * g.total_multiplicity());
}

}  // namespace

TEST_CASE("build_graph") {
  SUBCASE("smallest path") {
    auto g = build_graph(2, {{0, 1}}, {1});
    CHECK(g.vertex_count() == 2);
    CHECK(g.absorbing() == std::vector<VertexId>{1});
    CHECK(g.degree(0) == 1);
  }
  SUBCASE("introductory example") {
    auto g = fixtures::intro_graph();
    CHECK(g.total_multiplicity() == 5);
    check_invariants(g);
  }
  SUBCASE("multiplicity semantics") {
    auto g = build_graph(3, {{0, 1, 2}, {1, 2, 1}}, {2});
    CHECK(g.multiplicity(1, 0) == 2);
    CHECK(g.degree(1) == 3);
  }
  SUBCASE("duplicate entries sum") {
    auto g = build_graph(2, {{0, 1}, {1, 0, 2}}, {1});
    CHECK(g.multiplicity(0, 1) == 3);
  }
  SUBCASE("errors") {
    CHECK(kind_of([] { build_graph(2, {{0, 0}}, {1}); }) == ErrorKind::SelfLoop);
    CHECK(kind_of([] { build_graph(2, {{0, 2}}, {1}); }) == ErrorKind::IdOutOfRange);
    CHECK(kind_of([] { build_graph(2, {{0, 1}}, {5}); }) == ErrorKind::IdOutOfRange);
    CHECK(kind_of([] { build_graph(2, {{0, 1, 0}}, {1}); }) == ErrorKind::ZeroMultiplicity);
    // Empty absorbing set is fine until a solve.
    auto g = build_graph(2, {{0, 1}}, {});
    CHECK(kind_of([&] { solve_asua(g); }) == ErrorKind::EmptyAbsorbingSet);
  }
}

TEST_CASE("validate_reachability") {
  CHECK_NOTHROW(validate_reachability(gen_path(3)));
  CHECK_NOTHROW(validate_reachability(gen_cycle(4)));

  auto g = build_graph(4, {{0, 1}, {2, 3}}, {1});
  try {
    validate_reachability(g);
    FAIL("expected UnreachableAbsorber");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnreachableAbsorber);
    CHECK(e.vertices() == std::vector<std::size_t>{2, 3});
  }
  // An isolated transient vertex is stranded too.
  auto lonely = build_graph(3, {{0, 1}}, {1});
  CHECK(kind_of([&] { validate_reachability(lonely); }) == ErrorKind::UnreachableAbsorber);
}

TEST_CASE("merge_absorbers") {
  SUBCASE("C_4 merge v2 v4") {
    auto m = merge_absorbers(gen_cycle(4, 1), 1, 3);
    REQUIRE(m.vertex_count() == 3);
    CHECK(m.multiplicity(1, 0) == 2);
    CHECK(m.multiplicity(1, 2) == 2);
    CHECK(m.multiplicity(0, 2) == 0);
    CHECK(m.is_absorbing(1));
    check_invariants(m);
  }
  SUBCASE("P_3 merge v1 v3") {
    auto m = merge_absorbers(gen_path(3), 0, 2);
    REQUIRE(m.vertex_count() == 2);
    CHECK(m.multiplicity(0, 1) == 2);
    CHECK(m.is_absorbing(0));
    CHECK_FALSE(m.is_absorbing(1));
  }
  SUBCASE("native and contracted multi-absorber solves agree on C_4") {
    auto c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {1, 3});
    auto native = solve_asua(c4);
    CHECK(native[0] == 1);
    CHECK(native[2] == 1);
    auto merged = solve_asua(merge_absorbers(c4, 1, 3));
    const auto image = merge_map(4, 1, 3);
    for (VertexId v = 0; v < 4; ++v) CHECK(native[v] == merged[image[v]]);
  }
  SUBCASE("edge between the merged vertices disappears") {
    auto g = build_graph(3, {{0, 1, 2}, {1, 2}, {0, 2}}, {0, 1});
    auto m = merge_absorbers(g, 0, 1);
    CHECK(m.total_multiplicity() == g.total_multiplicity() - g.multiplicity(0, 1));
  }
  CHECK(kind_of([] { merge_absorbers(gen_path(3), 1, 1); }) == ErrorKind::SameVertex);
}

TEST_CASE("degree_profile") {
  CHECK(degree_profile(gen_path(3)).degrees == std::vector<Multiplicity>{1, 2, 1});
  auto intro = degree_profile(fixtures::intro_graph());
  CHECK(intro.degrees == std::vector<Multiplicity>{2, 2, 3, 2, 1});
  auto multi = degree_profile(build_graph(2, {{0, 1, 2}}, {1}));
  CHECK(multi.degrees[0] == 2);
  CHECK(multi.neighbors[0] == std::vector<VertexId>{1, 1});
}

TEST_CASE("classify_sea_dragon") {
  SUBCASE("star") {
    auto c = classify_sea_dragon(gen_star(5));
    CHECK(c.shape == TreeShape::SeaDragon);
    CHECK(c.spine.size() == 3);
  }
  SUBCASE("spider with three legs of length 2") {
    auto g = build_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}, {});
    auto c = classify_sea_dragon(g);
    CHECK(c.shape == TreeShape::SeaDragon);
    CHECK(c.spine == std::vector<VertexId>{2, 1, 0, 3, 4});
  }
  SUBCASE("H tree") {
    // Branch vertices 0 and 1; legs 0-2-3, 0-4-5, 1-6-7, 1-8-9.
    auto g = build_graph(10, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {1, 6}, {6, 7}, {1, 8}, {8, 9}}, {});
    auto c = classify_sea_dragon(g);
    CHECK(c.shape == TreeShape::SeaDragon);
    CHECK(c.spine == std::vector<VertexId>{3, 2, 0, 1, 6, 7});
  }
  SUBCASE("branch vertices off any single path") {
    // Center 0 with three arms each ending in a degree-3 vertex.
    auto g = build_graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}}, {});
    CHECK(classify_sea_dragon(g).shape == TreeShape::TreeWithoutSpine);
  }
  SUBCASE("not a tree") {
    CHECK(classify_sea_dragon(gen_cycle(4)).shape == TreeShape::NotATree);
    CHECK(classify_sea_dragon(build_graph(2, {{0, 1, 2}}, {})).shape == TreeShape::NotATree);
    CHECK(classify_sea_dragon(build_graph(4, {{0, 1}, {2, 3}}, {})).shape == TreeShape::NotATree);
  }
  SUBCASE("path") {
    auto c = classify_sea_dragon(gen_path(4));
    CHECK(c.spine == std::vector<VertexId>{0, 1, 2, 3});
  }
}

TEST_CASE("edge-list format") {
  const char* text =
      "# introductory example\n"
      "vertices 5\n"
      "absorb 5\n"
      "1 2\n1 3\n2 4\n3 4\n3 5\n";
  auto g = parse_edge_list(text);
  CHECK(g.vertex_count() == 5);
  CHECK(g.absorbing() == std::vector<VertexId>{4});
  CHECK(g.total_multiplicity() == 5);

  SUBCASE("writer sorts edges and prints multiplicity only when > 1") {
    auto m = build_graph(3, {{2, 1}, {1, 0, 3}}, {2});
    CHECK(format_edge_list(m) == "vertices 3\nabsorb 3\n1 2 3\n2 3\n");
  }
  SUBCASE("round trip") {
    Xoshiro256 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      auto r = random_connected_graph(1 + rng.below(9), rng.below(5), 3, rng);
      const VertexId a[] = {0};
      r = r.with_absorbing(a);
      auto back = parse_edge_list(format_edge_list(r));
      CHECK(format_edge_list(back) == format_edge_list(r));
    }
  }
  SUBCASE("errors") {
    CHECK(kind_of([] { parse_edge_list("absorb 1\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_edge_list("vertices 2\n1 2\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_edge_list("vertices 2\nabsorb 2\n1 x\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_edge_list("vertices 2\nabsorb 2\n1 3\n"); }) == ErrorKind::IdOutOfRange);
    CHECK(kind_of([] { parse_edge_list("vertices 2\nabsorb 2\n2 2\n"); }) == ErrorKind::SelfLoop);
    CHECK(kind_of([] { parse_edge_list("vertices 2\nabsorb 2\nabsorb 1\n"); }) == ErrorKind::Parse);
  }
}

TEST_CASE("random graphs satisfy graph invariants") {
  Xoshiro256 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_connected_graph(2 + rng.below(10), rng.below(8), 3, rng);
    check_invariants(g);
    const auto n = g.vertex_count();
    const auto x = static_cast<VertexId>(rng.below(n));
    auto y = static_cast<VertexId>(rng.below(n - 1));
    if (y >= x) ++y;
    auto m = merge_absorbers(g, x, y);
    check_invariants(m);
    CHECK(m.total_multiplicity() == g.total_multiplicity() - g.multiplicity(x, y));
  }
}
