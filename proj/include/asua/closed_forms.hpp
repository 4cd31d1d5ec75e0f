#pragma once

#include "asua/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Closed-form ASUAs for paths, cycles, stems and the sea-dragon families.
// Spine indices are 1-based and the absorber is always v_n.

namespace asua {

enum class SeaDragonVariant { SD1, SD2, SD3, SD4 };

const char* to_string(SeaDragonVariant v) noexcept;

/// Parameters identifying one sea-dragon family member.
///   SD1  T(n, {k_1..k_a})      single leaves at distinct spine positions
///   SD2  T(n, (k, b))          b leaves on v_k
///   SD3  T(n, k^(c))           one stem of length c on v_k
///   SD4  T(n, k, (c_1..c_r))   r stems on v_k
/// Construct through the factories, which enforce the family invariants and
/// throw BadSpec.
struct SeaDragonSpec {
  SeaDragonVariant variant = SeaDragonVariant::SD1;
  std::int64_t n = 0;
  std::vector<std::int64_t> leaf_positions;  // SD1
  std::int64_t k = 0;                        // SD2, SD3, SD4
  std::int64_t leaf_count = 0;               // SD2: b
  std::vector<std::int64_t> stem_lengths;    // SD3: {c}; SD4: c_1..c_r

  static SeaDragonSpec sd1(std::int64_t n, std::vector<std::int64_t> positions);
  static SeaDragonSpec sd2(std::int64_t n, std::int64_t k, std::int64_t b);
  static SeaDragonSpec sd3(std::int64_t n, std::int64_t k, std::int64_t c);
  static SeaDragonSpec sd4(std::int64_t n, std::int64_t k, std::vector<std::int64_t> stems);

  /// Stem mass d on v_k: b, c, or sum c_i. Zero for SD1.
  std::int64_t stem_mass() const;
  /// The same tree seen as SD4 (SD2 -> b unit stems, SD3 -> one stem).
  /// Throws BadSpec for SD1.
  SeaDragonSpec as_sd4() const;
  /// Spine plus attached vertices.
  std::int64_t vertex_count() const;
  std::string label() const;
};

/// (n-1)^2 - (i-1)^2 for 1 <= i <= n-1.
std::int64_t path_asua(std::int64_t n, std::int64_t i);

/// i (n - i) for 1 <= i <= n-1, n >= 3.
std::int64_t cycle_asua(std::int64_t n, std::int64_t i);

/// l^2 - (j-1)^2: how far stem vertex u_j sits above its attachment vertex
/// (u_1 is the free end, u_{l+1} is the attachment vertex itself).
std::int64_t stem_offset(std::int64_t l, std::int64_t j);

/// SD1 spine value. Section s covers k_s <= i <= k_{s+1} with k_0 = 1; the
/// last section (s = a) runs to n-1 and its sum of positions is empty.
std::int64_t sd1_asua(const SeaDragonSpec& spec, std::int64_t i);

/// One SD1 piece evaluated at i without range selection; adjacent pieces
/// agree at their shared boundary.
std::int64_t sd1_piece(const SeaDragonSpec& spec, std::int64_t s, std::int64_t i);

/// SD4 spine value with d the total stem mass:
///   i <= k-1 : n^2 - k^2 + 2(d-1)(n-k) + (k-1)^2 - (i-1)^2
///   i >= k   : n^2 - i^2 + 2(d-1)(n-i)
std::int64_t sd4_asua(const SeaDragonSpec& spec, std::int64_t i);

/// SD2/SD3 through the SD4 formula. The constant is (k-1)^2, not the
/// commonly quoted (k+1)^2: the prefix v_1..v_{k-1} is a stem on v_k.
std::int64_t sd2_asua(const SeaDragonSpec& spec, std::int64_t i);
std::int64_t sd3_asua(const SeaDragonSpec& spec, std::int64_t i);

/// The SD2/SD3 formula with the wrong (k+1)^2 constant, for the
/// --sd23-printed-constant comparison only.
std::int64_t sd23_printed_asua(const SeaDragonSpec& spec, std::int64_t i);

/// Dispatch on spec.variant.
std::int64_t spine_asua(const SeaDragonSpec& spec, std::int64_t i);

/// Closed-form value of every vertex of gen_sea_dragon(spec), 0-based in
/// the generator's numbering; the absorber v_n holds 0. Leaves use
/// t(leaf) = t(v) + 1 and stem vertices t(v_k) + stem_offset.
std::vector<std::int64_t> sea_dragon_values(const SeaDragonSpec& spec);

/// t(v) = (t(x) + t(y)) / 2 + 2 for N(v) = {x, y, leaf}.
Rational local_rule_degree3(const Rational& tx, const Rational& ty);

/// t(v) = (t(x) + t(y)) / 2 + d + 1 for spine neighbors x, y and stems of
/// total length d on v. Throws BadSpec for d < 1.
Rational local_rule_stem_branch(const Rational& tx, const Rational& ty, std::int64_t d);

}  // namespace asua
