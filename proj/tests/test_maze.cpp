#include "asua/chain.hpp"
#include "asua/error.hpp"
#include "asua/families.hpp"
#include "asua/maze.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace asua;
using fixtures::q;

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

AsuaVector solve_text(std::string_view text) {
  return solve_asua(maze_to_graph(parse_maze(text)).graph);
}

}  // namespace

TEST_CASE("parse_maze") {
  auto m = parse_maze("#.\n.T\n");
  CHECK(m.rows == 2);
  CHECK(m.cols == 2);
  CHECK(m.at(0, 0) == Cell::Wall);
  CHECK(m.at(1, 1) == Cell::Target);
  CHECK(kind_of([] { parse_maze(""); }) == ErrorKind::EmptyMaze);
  CHECK(kind_of([] { parse_maze("..x\n..T"); }) == ErrorKind::IllegalCharacter);
  CHECK(kind_of([] { parse_maze("...\n.T"); }) == ErrorKind::RaggedRows);
  CHECK(kind_of([] { parse_maze("...\n..."); }) == ErrorKind::NoTarget);
}

TEST_CASE("maze values") {
  CHECK(solve_text(".T")[0] == 1);
  auto square = solve_text("..\n.T");
  CHECK(square[0] == 4);
  CHECK(square[1] == 3);
  CHECK(square[2] == 3);

  auto wide = solve_text("...\nT..");
  CHECK(wide[0] == q(77, 15));
  CHECK(wide[1] == q(124, 15));
  CHECK(wide[2] == q(49, 5));
  CHECK(wide[4] == q(103, 15));
  CHECK(wide[5] == q(28, 3));
}

TEST_CASE("2x2 open maze is C_4") {
  auto mg = maze_to_graph(parse_maze("..\n.T"));
  for (VertexId v = 0; v < 4; ++v) CHECK(mg.graph.degree(v) == 2);
  CHECK(mg.graph.edges().size() == 4);
  const auto cyc = solve_asua(gen_cycle(4));
  // Opposite corner of the target is the cycle's far vertex.
  CHECK(solve_asua(mg.graph)[0] == cyc[1]);
}

TEST_CASE("walls split the grid") {
  auto mg = maze_to_graph(parse_maze(".#.\n.#T"));
  CHECK(mg.graph.vertex_count() == 4);
  CHECK_FALSE(mg.vertex_of[1].has_value());
  CHECK(kind_of([&] { solve_asua(mg.graph); }) == ErrorKind::UnreachableAbsorber);
}

TEST_CASE("render") {
  auto m = parse_maze("#.\n.T");
  auto mg = maze_to_graph(m);
  const auto out = render_maze_asua(m, mg, solve_asua(mg.graph));
  CHECK(out == "####    1\n   1    0\n");
}
