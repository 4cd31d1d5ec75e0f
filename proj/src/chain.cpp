#include "asua/chain.hpp"

#include "asua/error.hpp"
#include "asua/simd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace asua {

namespace {

mpz_class to_mpz(Multiplicity m) {
  static_assert(sizeof(unsigned long) >= sizeof(Multiplicity));
  return mpz_class(static_cast<unsigned long>(m));
}

}  // namespace

TransitionMatrix TransitionMatrix::from_rows(std::vector<std::vector<Rational>> rows,
                                             std::span<const std::size_t> absorbing) {
  const std::size_t n = rows.size();
  TransitionMatrix tm;
  tm.transient_index_.assign(n, 0);
  for (std::size_t a : absorbing) {
    if (a >= n)
      throw Error(ErrorKind::IdOutOfRange, "absorbing state " + std::to_string(a + 1) +
                                               " of " + std::to_string(n));
    tm.transient_index_[a] = -1;
  }
  for (std::size_t s = 0; s < n; ++s) {
    const auto& row = rows[s];
    const auto where = "row " + std::to_string(s + 1);
    if (row.size() != n) throw Error(ErrorKind::NotStochastic, where + " has wrong length");
    Rational sum = 0;
    for (const auto& p : row) {
      if (sgn(p) < 0) throw Error(ErrorKind::NotStochastic, where + " has a negative entry");
      sum += p;
    }
    if (sum != 1) throw Error(ErrorKind::NotStochastic, where + " sums to " + format_fraction(sum));
    if (tm.transient_index_[s] < 0) {
      if (row[s] != 1) throw Error(ErrorKind::NotStochastic, where + " is absorbing but not an identity row");
      tm.absorbing_.push_back(s);
    } else {
      tm.transient_index_[s] = static_cast<std::ptrdiff_t>(tm.transient_.size());
      tm.transient_.push_back(s);
    }
  }
  tm.entries_ = std::move(rows);
  return tm;
}

std::optional<std::size_t> TransitionMatrix::transient_index(std::size_t state) const {
  auto idx = transient_index_.at(state);
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::vector<std::vector<Rational>> TransitionMatrix::q_block() const {
  std::vector<std::vector<Rational>> q;
  for (std::size_t s : transient_) {
    auto& row = q.emplace_back();
    for (std::size_t t : transient_) row.push_back(entries_[s][t]);
  }
  return q;
}

std::vector<std::vector<Rational>> TransitionMatrix::r_block() const {
  std::vector<std::vector<Rational>> r;
  for (std::size_t s : transient_) {
    auto& row = r.emplace_back();
    for (std::size_t a : absorbing_) row.push_back(entries_[s][a]);
  }
  return r;
}

AsuaVector AsuaVector::from_transient(const Graph& g, std::span<const Rational> transient_values) {
  const auto transient = g.transient();
  if (transient.size() != transient_values.size())
    throw Error(ErrorKind::IndexMismatch,
                std::to_string(transient_values.size()) + " values for " +
                    std::to_string(transient.size()) + " transient vertices");
  AsuaVector t;
  t.values.assign(g.vertex_count(), Rational(0));
  t.absorbing.assign(g.vertex_count(), false);
  for (VertexId a : g.absorbing()) t.absorbing[a] = true;
  for (std::size_t i = 0; i < transient.size(); ++i) t.values[transient[i]] = transient_values[i];
  return t;
}

TransitionMatrix build_transition(const Graph& g) {
  validate_reachability(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (VertexId v = 0; v < n; ++v) {
    if (g.is_absorbing(v)) {
      rows[v][v] = 1;
      continue;
    }
    const mpz_class degree = to_mpz(g.degree(v));
    for (const auto& nb : g.neighbors(v)) {
      rows[v][nb.to] = Rational(to_mpz(nb.multiplicity), degree);
      rows[v][nb.to].canonicalize();
    }
  }
  const auto& absorbing = g.absorbing();
  return TransitionMatrix::from_rows(std::move(rows), absorbing);
}

AsuaVector solve_asua(const TransitionMatrix& tm) {
  const auto& transient = tm.transient();
  const std::size_t k = transient.size();

  // Augmented [I - Q | 1].
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < k; ++r) {
    const auto& row = tm.row(transient[r]);
    for (std::size_t c = 0; c < k; ++c) {
      const Rational& p = row[transient[c]];
      if (sgn(p) != 0) a[r][c] = -p;
    }
    a[r][r] += 1;
    a[r][k] = 1;
  }

  Rational factor, scratch;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = k;
    for (std::size_t r = c; r < k; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      if (pivot == k || cmp(abs(a[r][c]), abs(a[pivot][c])) > 0) pivot = r;
    }
    if (pivot == k)
      throw Error(ErrorKind::SingularSystem,
                  "I - Q is singular; state " + std::to_string(transient[c] + 1) +
                      " does not reach an absorbing state");
    if (pivot != c) std::swap(a[pivot], a[c]);

    const auto& prow = a[c];
    for (std::size_t r = c + 1; r < k; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      factor = a[r][c] / prow[c];
      auto& row = a[r];
      row[c] = 0;
      for (std::size_t j = c + 1; j <= k; ++j) {
        if (sgn(prow[j]) == 0) continue;
        scratch = factor * prow[j];
        row[j] -= scratch;
      }
    }
  }

  std::vector<Rational> x(k);
  for (std::size_t i = k; i-- > 0;) {
    Rational acc = a[i][k];
    for (std::size_t j = i + 1; j < k; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      scratch = a[i][j] * x[j];
      acc -= scratch;
    }
    x[i] = acc / a[i][i];
  }

  AsuaVector t;
  t.values.assign(tm.order(), Rational(0));
  t.absorbing.assign(tm.order(), false);
  for (std::size_t s : tm.absorbing()) t.absorbing[s] = true;
  for (std::size_t r = 0; r < k; ++r) t.values[transient[r]] = std::move(x[r]);
  return t;
}

AsuaVector solve_asua(const Graph& g) { return solve_asua(build_transition(g)); }

namespace {

// Dense row-major (I - Q) in doubles, solved in place by LU with partial
// pivoting. `original` is kept for the residual.
FloatAsua solve_dense(std::vector<double> m, std::size_t k, const std::vector<std::size_t>& transient,
                      std::size_t order) {
  const auto& kern = simd::active();
  const std::vector<double> original = m;
  std::vector<double> rhs(k, 1.0);

  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    double best = std::fabs(m[c * k + c]);
    for (std::size_t r = c + 1; r < k; ++r) {
      double v = std::fabs(m[r * k + c]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (!(best > 0.0) || !std::isfinite(best))
      throw Error(ErrorKind::SingularSystem,
                  "I - Q is singular at state " + std::to_string(transient[c] + 1));
    if (pivot != c) {
      std::swap_ranges(m.begin() + pivot * k, m.begin() + pivot * k + k, m.begin() + c * k);
      std::swap(rhs[pivot], rhs[c]);
    }
    const double* prow = &m[c * k];
    for (std::size_t r = c + 1; r < k; ++r) {
      double* row = &m[r * k];
      if (row[c] == 0.0) continue;
      const double f = row[c] / prow[c];
      row[c] = 0.0;
      kern.axpy(-f, prow + c + 1, row + c + 1, k - c - 1);
      rhs[r] -= f * rhs[c];
    }
  }

  std::vector<double> x(k);
  for (std::size_t i = k; i-- > 0;) {
    const double* row = &m[i * k];
    double acc = rhs[i] - kern.dot(row + i + 1, x.data() + i + 1, k - i - 1);
    x[i] = acc / row[i];
  }

  std::vector<double> res(k);
  for (std::size_t r = 0; r < k; ++r) res[r] = kern.dot(&original[r * k], x.data(), k) - 1.0;

  FloatAsua out;
  out.residual = kern.max_abs(res.data(), k);
  out.values.assign(order, 0.0);
  for (std::size_t r = 0; r < k; ++r) out.values[transient[r]] = x[r];
  return out;
}

}  // namespace

FloatAsua solve_asua_float(const TransitionMatrix& tm) {
  const auto& transient = tm.transient();
  const std::size_t k = transient.size();
  std::vector<double> m(k * k, 0.0);
  for (std::size_t r = 0; r < k; ++r) {
    const auto& row = tm.row(transient[r]);
    for (std::size_t c = 0; c < k; ++c) {
      const Rational& p = row[transient[c]];
      if (sgn(p) != 0) m[r * k + c] = -p.get_d();
    }
    m[r * k + r] += 1.0;
  }
  return solve_dense(std::move(m), k, transient, tm.order());
}

FloatAsua solve_asua_float(const Graph& g) {
  validate_reachability(g);
  const auto transient = g.transient();
  const std::size_t k = transient.size();
  std::vector<std::ptrdiff_t> index(g.vertex_count(), -1);
  for (std::size_t r = 0; r < k; ++r) index[transient[r]] = static_cast<std::ptrdiff_t>(r);

  std::vector<double> m(k * k, 0.0);
  for (std::size_t r = 0; r < k; ++r) {
    const VertexId v = transient[r];
    const double degree = static_cast<double>(g.degree(v));
    for (const auto& nb : g.neighbors(v))
      if (index[nb.to] >= 0)
        m[r * k + static_cast<std::size_t>(index[nb.to])] = -static_cast<double>(nb.multiplicity) / degree;
    m[r * k + r] += 1.0;
  }
  return solve_dense(std::move(m), k, transient, g.vertex_count());
}

Rational asua_sum(const Graph& g) {
  if (g.absorbing().empty()) throw Error(ErrorKind::EmptyAbsorbingSet, "t_sigma needs one absorber");
  if (g.absorbing().size() > 1)
    throw Error(ErrorKind::MultipleAbsorbers,
                "t_sigma is defined for a single absorber, got " + std::to_string(g.absorbing().size()));
  const auto t = solve_asua(g);
  Rational sum = 0;
  for (const auto& value : t.values) sum += value;
  return sum;
}

Rational round_trip(const Graph& g, VertexId v, VertexId u) {
  if (v >= g.vertex_count() || u >= g.vertex_count())
    throw Error(ErrorKind::IdOutOfRange, "round trip endpoint out of range");
  if (v == u) throw Error(ErrorKind::SameVertex, "round trip needs two distinct vertices");
  const VertexId to_u[] = {u};
  const VertexId to_v[] = {v};
  const auto there = solve_asua(g.with_absorbing(to_u));
  const auto back = solve_asua(g.with_absorbing(to_v));
  return there[v] + back[u];
}

std::vector<Rational> asua_equation_residuals(const Graph& g, const AsuaVector& t) {
  if (t.size() != g.vertex_count())
    throw Error(ErrorKind::IndexMismatch, std::to_string(t.size()) + " values for " +
                                              std::to_string(g.vertex_count()) + " vertices");
  std::vector<Rational> out;
  for (VertexId v : g.transient()) {
    Rational weighted = 0;
    for (const auto& nb : g.neighbors(v))
      if (!g.is_absorbing(nb.to)) weighted += t[nb.to] * Rational(to_mpz(nb.multiplicity));
    Rational mean = weighted / Rational(to_mpz(g.degree(v)));
    out.push_back(t[v] - mean - 1);
  }
  return out;
}

std::vector<Rational> asua_equation_residuals(const TransitionMatrix& tm, const AsuaVector& t) {
  if (t.size() != tm.order())
    throw Error(ErrorKind::IndexMismatch, std::to_string(t.size()) + " values for " +
                                              std::to_string(tm.order()) + " states");
  std::vector<Rational> out;
  for (std::size_t s : tm.transient()) {
    Rational expected = 0;
    const auto& row = tm.row(s);
    for (std::size_t u = 0; u < tm.order(); ++u)
      if (sgn(row[u]) != 0 && !tm.is_absorbing(u)) expected += row[u] * t[u];
    out.push_back(t[s] - expected - 1);
  }
  return out;
}

}  // namespace asua
