#include "asua/closed_forms.hpp"

#include "asua/error.hpp"

#include <algorithm>
#include <numeric>

namespace asua {

namespace {

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw Error(kind, what);
}

void require_spine_index(std::int64_t n, std::int64_t i) {
  require(i >= 1 && i <= n - 1, ErrorKind::OutOfRange,
          "spine index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
}

std::int64_t sq(std::int64_t x) { return x * x; }

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

}  // namespace

const char* to_string(SeaDragonVariant v) noexcept {
  switch (v) {
    case SeaDragonVariant::SD1: return "sd1";
    case SeaDragonVariant::SD2: return "sd2";
    case SeaDragonVariant::SD3: return "sd3";
    case SeaDragonVariant::SD4: return "sd4";
  }
  return "?";
}

SeaDragonSpec SeaDragonSpec::sd1(std::int64_t n, std::vector<std::int64_t> positions) {
  require(n >= 2, ErrorKind::BadSpec, "SD1 needs n >= 2");
  for (std::size_t j = 0; j < positions.size(); ++j) {
    require(positions[j] >= 2 && positions[j] <= n - 1, ErrorKind::BadSpec,
            "SD1 leaf position " + std::to_string(positions[j]) + " outside 2.." +
                std::to_string(n - 1));
    require(j == 0 || positions[j - 1] < positions[j], ErrorKind::BadSpec,
            "SD1 leaf positions must be strictly increasing");
  }
  SeaDragonSpec s;
  s.variant = SeaDragonVariant::SD1;
  s.n = n;
  s.leaf_positions = std::move(positions);
  return s;
}

namespace {

SeaDragonSpec single_position(SeaDragonVariant variant, std::int64_t n, std::int64_t k) {
  require(n >= 3, ErrorKind::BadSpec, "sea dragon with an attachment needs n >= 3");
  require(k >= 2 && k <= n - 1, ErrorKind::BadSpec,
          "attachment position " + std::to_string(k) + " outside 2.." + std::to_string(n - 1));
  SeaDragonSpec s;
  s.variant = variant;
  s.n = n;
  s.k = k;
  return s;
}

}  // namespace

SeaDragonSpec SeaDragonSpec::sd2(std::int64_t n, std::int64_t k, std::int64_t b) {
  auto s = single_position(SeaDragonVariant::SD2, n, k);
  require(b >= 1, ErrorKind::BadSpec, "SD2 needs b >= 1");
  s.leaf_count = b;
  return s;
}

SeaDragonSpec SeaDragonSpec::sd3(std::int64_t n, std::int64_t k, std::int64_t c) {
  auto s = single_position(SeaDragonVariant::SD3, n, k);
  require(c >= 1, ErrorKind::BadSpec, "SD3 needs c >= 1");
  s.stem_lengths = {c};
  return s;
}

SeaDragonSpec SeaDragonSpec::sd4(std::int64_t n, std::int64_t k, std::vector<std::int64_t> stems) {
  auto s = single_position(SeaDragonVariant::SD4, n, k);
  require(!stems.empty(), ErrorKind::BadSpec, "SD4 needs at least one stem");
  for (auto c : stems) require(c >= 1, ErrorKind::BadSpec, "SD4 stem lengths must be >= 1");
  s.stem_lengths = std::move(stems);
  return s;
}

std::int64_t SeaDragonSpec::stem_mass() const {
  switch (variant) {
    case SeaDragonVariant::SD1: return 0;
    case SeaDragonVariant::SD2: return leaf_count;
    case SeaDragonVariant::SD3:
    case SeaDragonVariant::SD4:
      return std::accumulate(stem_lengths.begin(), stem_lengths.end(), std::int64_t{0});
  }
  return 0;
}

SeaDragonSpec SeaDragonSpec::as_sd4() const {
  switch (variant) {
    case SeaDragonVariant::SD1: throw Error(ErrorKind::BadSpec, "SD1 has no SD4 form");
    case SeaDragonVariant::SD2:
      return sd4(n, k, std::vector<std::int64_t>(static_cast<std::size_t>(leaf_count), 1));
    case SeaDragonVariant::SD3:
    case SeaDragonVariant::SD4: return sd4(n, k, stem_lengths);
  }
  return *this;
}

std::int64_t SeaDragonSpec::vertex_count() const {
  if (variant == SeaDragonVariant::SD1) return n + static_cast<std::int64_t>(leaf_positions.size());
  return n + stem_mass();
}

std::string SeaDragonSpec::label() const {
  const auto N = std::to_string(n), K = std::to_string(k);
  switch (variant) {
    case SeaDragonVariant::SD1: return "T(" + N + ",{" + join(leaf_positions) + "})";
    case SeaDragonVariant::SD2: return "T(" + N + ",(" + K + "," + std::to_string(leaf_count) + "))";
    case SeaDragonVariant::SD3: return "T(" + N + "," + K + "^(" + std::to_string(stem_lengths.at(0)) + "))";
    case SeaDragonVariant::SD4: return "T(" + N + "," + K + ",(" + join(stem_lengths) + "))";
  }
  return "T(?)";
}

std::int64_t path_asua(std::int64_t n, std::int64_t i) {
  require(n >= 2, ErrorKind::OutOfRange, "path needs n >= 2");
  require_spine_index(n, i);
  return sq(n - 1) - sq(i - 1);
}

std::int64_t cycle_asua(std::int64_t n, std::int64_t i) {
  require(n >= 3, ErrorKind::OutOfRange, "cycle needs n >= 3");
  require_spine_index(n, i);
  return i * (n - i);
}

std::int64_t stem_offset(std::int64_t l, std::int64_t j) {
  require(l >= 1, ErrorKind::OutOfRange, "stem length must be >= 1");
  require(j >= 1 && j <= l + 1, ErrorKind::OutOfRange,
          "stem index " + std::to_string(j) + " outside 1.." + std::to_string(l + 1));
  return sq(l) - sq(j - 1);
}

std::int64_t sd1_piece(const SeaDragonSpec& spec, std::int64_t s, std::int64_t i) {
  require(spec.variant == SeaDragonVariant::SD1, ErrorKind::BadSpec, "not an SD1 spec");
  const auto& ks = spec.leaf_positions;
  const auto a = static_cast<std::int64_t>(ks.size());
  require(s >= 0 && s <= a, ErrorKind::OutOfRange, "SD1 section index out of range");
  std::int64_t tail = 0;  // sum_{j=s+1}^{a} k_j
  for (std::int64_t j = s + 1; j <= a; ++j) tail += ks[static_cast<std::size_t>(j - 1)];
  const std::int64_t n = spec.n;
  return sq(n) - sq(i) + 2 * (a - 1) * n - 2 * (s - 1) * i - 2 * tail;
}

std::int64_t sd1_asua(const SeaDragonSpec& spec, std::int64_t i) {
  require(spec.variant == SeaDragonVariant::SD1, ErrorKind::BadSpec, "not an SD1 spec");
  require_spine_index(spec.n, i);
  const auto& ks = spec.leaf_positions;
  if (ks.empty()) return path_asua(spec.n, i);
  // Largest s with k_s <= i, where k_0 = 1.
  const auto s = std::upper_bound(ks.begin(), ks.end(), i) - ks.begin();
  return sd1_piece(spec, s, i);
}

namespace {

std::int64_t sd4_shape(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t i,
                       std::int64_t prefix_square) {
  require_spine_index(n, i);
  if (i <= k - 1) return sq(n) - sq(k) + 2 * (d - 1) * (n - k) + prefix_square - sq(i - 1);
  return sq(n) - sq(i) + 2 * (d - 1) * (n - i);
}

}  // namespace

std::int64_t sd4_asua(const SeaDragonSpec& spec, std::int64_t i) {
  require(spec.variant != SeaDragonVariant::SD1, ErrorKind::BadSpec, "SD1 spec given to SD4 formula");
  return sd4_shape(spec.n, spec.k, spec.stem_mass(), i, sq(spec.k - 1));
}

std::int64_t sd2_asua(const SeaDragonSpec& spec, std::int64_t i) {
  require(spec.variant == SeaDragonVariant::SD2, ErrorKind::BadSpec, "not an SD2 spec");
  return sd4_asua(spec, i);
}

std::int64_t sd3_asua(const SeaDragonSpec& spec, std::int64_t i) {
  require(spec.variant == SeaDragonVariant::SD3, ErrorKind::BadSpec, "not an SD3 spec");
  return sd4_asua(spec, i);
}

std::int64_t sd23_printed_asua(const SeaDragonSpec& spec, std::int64_t i) {
  require(spec.variant != SeaDragonVariant::SD1, ErrorKind::BadSpec, "SD1 spec given to SD2/SD3 formula");
  return sd4_shape(spec.n, spec.k, spec.stem_mass(), i, sq(spec.k + 1));
}

std::int64_t spine_asua(const SeaDragonSpec& spec, std::int64_t i) {
  switch (spec.variant) {
    case SeaDragonVariant::SD1: return sd1_asua(spec, i);
    case SeaDragonVariant::SD2: return sd2_asua(spec, i);
    case SeaDragonVariant::SD3: return sd3_asua(spec, i);
    case SeaDragonVariant::SD4: return sd4_asua(spec, i);
  }
  return 0;
}

std::vector<std::int64_t> sea_dragon_values(const SeaDragonSpec& spec) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(spec.vertex_count()));
  for (std::int64_t i = 1; i <= spec.n - 1; ++i) out.push_back(spine_asua(spec, i));
  out.push_back(0);

  if (spec.variant == SeaDragonVariant::SD1) {
    for (auto k : spec.leaf_positions) out.push_back(sd1_asua(spec, k) + 1);
  } else if (spec.variant == SeaDragonVariant::SD2) {
    const auto at_k = spine_asua(spec, spec.k);
    for (std::int64_t j = 0; j < spec.leaf_count; ++j) out.push_back(at_k + 1);
  } else {
    const auto at_k = spine_asua(spec, spec.k);
    for (auto c : spec.stem_lengths)
      for (std::int64_t dist = 1; dist <= c; ++dist) out.push_back(at_k + stem_offset(c, c + 1 - dist));
  }
  return out;
}

Rational local_rule_degree3(const Rational& tx, const Rational& ty) {
  return Rational((tx + ty) / 2 + 2);
}

Rational local_rule_stem_branch(const Rational& tx, const Rational& ty, std::int64_t d) {
  require(d >= 1, ErrorKind::BadSpec, "stem mass d must be >= 1");
  return Rational((tx + ty) / 2 + Rational(static_cast<long>(d)) + 1);
}

}  // namespace asua
