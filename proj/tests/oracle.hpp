#pragma once

// Test-only reference solver, independent of chain.cpp: Cramer's rule with
// fraction-free (Bareiss) determinants over integers. Rows of (I - Q) t = 1
// are scaled by the common denominator of the row, so every determinant is
// over mpz only.

#include "asua/chain.hpp"
#include "asua/graph.hpp"

#include <gmpxx.h>

#include <vector>

namespace asua::oracle {

inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Integer system rows: coefficient matrix plus right-hand side.
struct IntSystem {
  std::vector<std::vector<mpz_class>> a;
  std::vector<mpz_class> b;
};

inline std::vector<mpq_class> cramer(const IntSystem& sys) {
  const std::size_t k = sys.a.size();
  const mpz_class det = bareiss_det(sys.a);
  std::vector<mpq_class> x(k);
  for (std::size_t c = 0; c < k; ++c) {
    auto m = sys.a;
    for (std::size_t r = 0; r < k; ++r) m[r][c] = sys.b[r];
    x[c] = mpq_class(bareiss_det(std::move(m)), det);
    x[c].canonicalize();
  }
  return x;
}

// deg(v) t(v) - sum_u m(v,u) t(u) = deg(v) over transient v.
inline std::vector<mpq_class> graph_asua(const Graph& g) {
  const auto transient = g.transient();
  std::vector<long> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < transient.size(); ++i) index[transient[i]] = static_cast<long>(i);
  IntSystem sys;
  for (VertexId v : transient) {
    std::vector<mpz_class> row(transient.size(), 0);
    const auto deg = static_cast<unsigned long>(g.degree(v));
    row[static_cast<std::size_t>(index[v])] = deg;
    for (const auto& nb : g.neighbors(v))
      if (index[nb.to] >= 0) row[static_cast<std::size_t>(index[nb.to])] -= static_cast<unsigned long>(nb.multiplicity);
    sys.a.push_back(std::move(row));
    sys.b.emplace_back(deg);
  }
  const auto x = cramer(sys);
  std::vector<mpq_class> out(g.vertex_count(), 0);
  for (std::size_t i = 0; i < transient.size(); ++i) out[transient[i]] = x[i];
  return out;
}

// Raw chain: rows of (I - Q) scaled by the lcm of their denominators.
inline std::vector<mpq_class> chain_asua(const std::vector<std::vector<mpq_class>>& rows,
                                         const std::vector<bool>& absorbing) {
  std::vector<std::size_t> transient;
  for (std::size_t s = 0; s < rows.size(); ++s)
    if (!absorbing[s]) transient.push_back(s);
  IntSystem sys;
  for (std::size_t s : transient) {
    std::vector<mpq_class> row;
    for (std::size_t u : transient) row.push_back((s == u ? mpq_class(1) : mpq_class(0)) - rows[s][u]);
    mpz_class scale = 1;
    for (const auto& q : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> irow;
    for (const auto& q : row) irow.push_back(q.get_num() * (scale / q.get_den()));
    sys.a.push_back(std::move(irow));
    sys.b.push_back(scale);
  }
  const auto x = cramer(sys);
  std::vector<mpq_class> out(rows.size(), 0);
  for (std::size_t i = 0; i < transient.size(); ++i) out[transient[i]] = x[i];
  return out;
}

}  // namespace asua::oracle
