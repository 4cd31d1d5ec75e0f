#include "asua/monte_carlo.hpp"

#include "asua/error.hpp"
#include "asua/rng.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

namespace asua {

namespace {

__extension__ using u128 = unsigned __int128;

// Per-state cumulative integer weights.
struct WalkTable {
  struct Row {
    std::vector<std::size_t> targets;
    std::vector<std::uint64_t> cumulative;
  };
  std::vector<Row> rows;
  std::vector<bool> absorbing;

  std::size_t step(std::size_t state, Xoshiro256& rng) const {
    const auto& row = rows[state];
    const std::uint64_t r = rng.below(row.cumulative.back());
    const auto it = std::upper_bound(row.cumulative.begin(), row.cumulative.end(), r);
    return row.targets[static_cast<std::size_t>(it - row.cumulative.begin())];
  }
};

WalkTable table_from_graph(const Graph& g) {
  WalkTable t;
  t.rows.resize(g.vertex_count());
  t.absorbing.assign(g.vertex_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    t.absorbing[v] = g.is_absorbing(v);
    std::uint64_t acc = 0;
    for (const auto& nb : g.neighbors(v)) {
      acc += nb.multiplicity;
      t.rows[v].targets.push_back(nb.to);
      t.rows[v].cumulative.push_back(acc);
    }
  }
  return t;
}

WalkTable table_from_chain(const TransitionMatrix& tm) {
  WalkTable t;
  t.rows.resize(tm.order());
  t.absorbing.assign(tm.order(), false);
  for (std::size_t s = 0; s < tm.order(); ++s) {
    t.absorbing[s] = tm.is_absorbing(s);
    if (t.absorbing[s]) continue;
    const auto& row = tm.row(s);
    mpz_class common = 1;
    for (const auto& p : row)
      if (sgn(p) != 0) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), p.get_den_mpz_t());
    if (!mpz_fits_ulong_p(common.get_mpz_t()))
      throw Error(ErrorKind::OutOfRange, "row " + std::to_string(s + 1) + " denominators exceed 64 bits");
    std::uint64_t acc = 0;
    for (std::size_t u = 0; u < row.size(); ++u) {
      if (sgn(row[u]) == 0) continue;
      mpz_class w = row[u].get_num() * (common / row[u].get_den());
      acc += w.get_ui();
      t.rows[s].targets.push_back(u);
      t.rows[s].cumulative.push_back(acc);
    }
  }
  return t;
}

SimEstimate run(const WalkTable& table, const WalkConfig& cfg) {
  if (cfg.start >= table.rows.size())
    throw Error(ErrorKind::IdOutOfRange, "start vertex " + std::to_string(cfg.start + 1));
  if (table.absorbing[cfg.start])
    throw Error(ErrorKind::StartIsAbsorbing, "start vertex v" + std::to_string(cfg.start + 1) + " is absorbing");
  if (cfg.walk_count == 0) throw Error(ErrorKind::OutOfRange, "walk_count must be >= 1");

  constexpr std::uint64_t capped = ~std::uint64_t{0};
  std::vector<std::uint64_t> steps(cfg.walk_count);

  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t w = begin; w < end; ++w) {
      auto rng = Xoshiro256::substream(cfg.seed, w);
      std::size_t state = cfg.start;
      std::uint64_t n = 0;
      while (!table.absorbing[state]) {
        if (n == cfg.step_cap) {
          n = capped;
          break;
        }
        state = table.step(state, rng);
        ++n;
      }
      steps[w] = n;
    }
  };

  unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, cfg.walk_count));
  if (threads <= 1) {
    worker(0, cfg.walk_count);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (cfg.walk_count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(cfg.walk_count, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
  }

  // Integer accumulation in walk order.
  SimEstimate est;
  u128 sum = 0, sum_sq = 0;
  for (std::uint64_t n : steps) {
    if (n == capped) {
      ++est.walks_capped;
      continue;
    }
    ++est.walks_completed;
    sum += n;
    sum_sq += static_cast<u128>(n) * n;
  }
  if (est.walks_completed == 0) return est;
  const auto count = static_cast<long double>(est.walks_completed);
  est.mean = static_cast<double>(static_cast<long double>(sum) / count);
  if (est.walks_completed > 1) {
    // n * sum_sq - sum^2 is exact and non-negative (Cauchy-Schwarz).
    const u128 spread = est.walks_completed * sum_sq - sum * sum;
    const long double var = static_cast<long double>(spread) / (count * (count - 1));
    est.stderr_ = static_cast<double>(std::sqrt(var / count));
  }
  return est;
}

}  // namespace

SimEstimate simulate(const Graph& g, const WalkConfig& cfg) {
  validate_reachability(g);
  return run(table_from_graph(g), cfg);
}

SimEstimate simulate(const TransitionMatrix& tm, const WalkConfig& cfg) {
  return run(table_from_chain(tm), cfg);
}

}  // namespace asua
