#pragma once

#include "asua/graph.hpp"
#include "asua/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace asua {

/// Row-stochastic matrix over all states. Absorbing rows are identity rows;
/// transient rows form the Q and R blocks of the canonical form once states
/// are reordered transient-first.
class TransitionMatrix {
 public:
  /// Takes rows verbatim. Every row must be non-negative and sum to exactly
  /// 1; rows listed in `absorbing` must be identity rows. Throws
  /// NotStochastic / IdOutOfRange otherwise.
  static TransitionMatrix from_rows(std::vector<std::vector<Rational>> rows,
                                    std::span<const std::size_t> absorbing);

  std::size_t order() const noexcept { return entries_.size(); }
  const Rational& at(std::size_t from, std::size_t to) const { return entries_.at(from).at(to); }
  const std::vector<Rational>& row(std::size_t from) const { return entries_.at(from); }

  bool is_absorbing(std::size_t state) const { return transient_index_.at(state) < 0; }
  const std::vector<std::size_t>& absorbing() const noexcept { return absorbing_; }
  const std::vector<std::size_t>& transient() const noexcept { return transient_; }
  /// Position of `state` in the Q block, or nullopt for absorbing states.
  std::optional<std::size_t> transient_index(std::size_t state) const;

  /// The Q block in transient order.
  std::vector<std::vector<Rational>> q_block() const;
  /// The R block: transient rows, absorbing columns.
  std::vector<std::vector<Rational>> r_block() const;

 private:
  std::vector<std::vector<Rational>> entries_;
  std::vector<std::ptrdiff_t> transient_index_;
  std::vector<std::size_t> transient_;
  std::vector<std::size_t> absorbing_;
};

/// Exact ASUA per state; absorbing states hold 0.
struct AsuaVector {
  std::vector<Rational> values;
  std::vector<bool> absorbing;

  const Rational& operator[](std::size_t v) const { return values.at(v); }
  std::size_t size() const noexcept { return values.size(); }

  /// Builds a full vector from values listed for transient vertices only,
  /// in ascending id order. Throws IndexMismatch on a length mismatch.
  static AsuaVector from_transient(const Graph& g, std::span<const Rational> transient_values);
};

struct FloatAsua {
  std::vector<double> values;
  /// max_i |((I - Q) t - 1)_i|
  double residual = 0.0;
};

/// Rows p(v,u) = multiplicity(v,u) / degree(v); identity rows for absorbers.
/// Throws EmptyAbsorbingSet / UnreachableAbsorber.
TransitionMatrix build_transition(const Graph& g);

/// Solves (I - Q) t = 1 by exact Gaussian elimination with partial pivoting.
/// Throws SingularSystem when some transient state never absorbs.
AsuaVector solve_asua(const TransitionMatrix& tm);
AsuaVector solve_asua(const Graph& g);

/// Double-precision LU of (I - Q) with the dispatched SIMD kernels.
FloatAsua solve_asua_float(const TransitionMatrix& tm);
FloatAsua solve_asua_float(const Graph& g);

/// Sum of ASUAs over all vertices for the single absorber of g.
Rational asua_sum(const Graph& g);

/// t(v -> u) + t(u -> v), each from its own solve with the respective
/// endpoint as the only absorber. g's own absorbing set is ignored.
Rational round_trip(const Graph& g, VertexId v, VertexId u);

/// Per transient vertex v (ascending id): t(v) - mean of t over the
/// neighbor multiset - 1, with absorbing neighbors contributing 0.
std::vector<Rational> asua_equation_residuals(const Graph& g, const AsuaVector& t);

/// Chain form: t(s) - sum_u p(s,u) t(u) - 1 per transient state.
std::vector<Rational> asua_equation_residuals(const TransitionMatrix& tm, const AsuaVector& t);

}  // namespace asua
