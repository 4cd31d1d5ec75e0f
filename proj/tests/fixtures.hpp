#pragma once

#include "asua/chain.hpp"
#include "asua/graph.hpp"

#include <vector>

namespace asua::fixtures {

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

/// The introductory example as an undirected graph: degrees 2,2,3,2,1.
inline Graph intro_graph() {
  return build_graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}}, {4});
}

/// D and A exactly as printed for the introductory example; A is not
/// symmetric (A[3][2] = 1 but A[2][3] = 0).
inline std::vector<std::vector<Rational>> printed_d() {
  return {{q(1, 2), 0, 0, 0, 0}, {0, q(1, 2), 0, 0, 0}, {0, 0, q(1, 3), 0, 0},
          {0, 0, 0, q(1, 2), 0}, {0, 0, 0, 0, 1}};
}
inline std::vector<std::vector<Rational>> printed_a() {
  return {{0, 1, 1, 0, 0}, {1, 0, 0, 1, 0}, {1, 1, 0, 0, 1}, {0, 1, 1, 0, 0}, {0, 0, 0, 0, 1}};
}

/// The transition matrix printed beside D and A, entry for entry.
inline std::vector<std::vector<Rational>> printed_t() {
  return {{0, q(1, 2), q(1, 2), 0, 0},
          {q(1, 2), 0, 0, q(1, 2), 0},
          {q(1, 3), 0, 0, q(1, 3), q(1, 3)},
          {0, q(1, 2), q(1, 2), 0, 0},
          {0, 0, 0, 0, 1}};
}

inline std::vector<std::vector<Rational>> multiply(const std::vector<std::vector<Rational>>& x,
                                                   const std::vector<std::vector<Rational>>& y) {
  const std::size_t n = x.size();
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += x[i][k] * y[k][j];
  return out;
}

/// T = D * A from the printed factors; this chain reproduces the printed
/// fundamental matrix and t = [13, 14, 10, 13].
inline TransitionMatrix intro_chain() {
  const std::size_t absorbing[] = {4};
  return TransitionMatrix::from_rows(multiply(printed_d(), printed_a()), absorbing);
}

}  // namespace asua::fixtures
