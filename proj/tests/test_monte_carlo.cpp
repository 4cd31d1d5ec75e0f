#include "asua/error.hpp"
#include "asua/families.hpp"
#include "asua/monte_carlo.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <cmath>

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

}  // namespace

TEST_CASE("P_2 is deterministic") {
  auto est = simulate(gen_path(2), {.start = 0, .walk_count = 1000, .seed = 1});
  CHECK(est.mean == 1.0);
  CHECK(est.stderr_ == 0.0);
  CHECK(est.walks_completed == 1000);
}

TEST_CASE("P_5 estimate brackets 16") {
  auto est = simulate(gen_path(5), {.start = 0, .walk_count = 100000, .seed = 42});
  CHECK(std::fabs(est.mean - 16.0) <= 4 * est.stderr_);
  CHECK(est.stderr_ > 0.0);
  CHECK(est.walks_capped == 0);
}

TEST_CASE("chain estimate brackets 14 on the printed D*A chain") {
  auto est = simulate(fixtures::intro_chain(), {.start = 1, .walk_count = 100000, .seed = 5});
  CHECK(std::fabs(est.mean - 14.0) <= 4 * est.stderr_);
}

TEST_CASE("thread count never changes the result") {
  auto g = fixtures::intro_graph();
  WalkConfig cfg{.start = 0, .walk_count = 20000, .seed = 123, .threads = 1};
  const auto one = simulate(g, cfg);
  for (unsigned t : {2u, 3u, 8u}) {
    cfg.threads = t;
    const auto many = simulate(g, cfg);
    CHECK(many.mean == one.mean);
    CHECK(many.stderr_ == one.stderr_);
  }
  cfg.seed = 124;
  CHECK(simulate(g, cfg).mean != one.mean);
}

TEST_CASE("step cap") {
  auto est = simulate(gen_path(30), {.start = 0, .walk_count = 200, .seed = 9, .step_cap = 5});
  CHECK(est.walks_capped == 200);
  CHECK(est.walks_completed == 0);
}

TEST_CASE("errors") {
  CHECK(kind_of([] { simulate(gen_path(3), {.start = 2}); }) == ErrorKind::StartIsAbsorbing);
  CHECK(kind_of([] { simulate(gen_path(3), {.start = 7}); }) == ErrorKind::IdOutOfRange);
  auto split = build_graph(4, {{0, 1}, {2, 3}}, {1});
  CHECK(kind_of([&] { simulate(split, {.start = 2}); }) == ErrorKind::UnreachableAbsorber);
}
