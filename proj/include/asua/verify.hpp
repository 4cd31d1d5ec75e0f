#pragma once

#include "asua/closed_forms.hpp"
#include "asua/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Formula-versus-solver sweeps. Every closed-form value is compared for exact
// rational equality against solve_asua on the generated graph; the float
// solver is checked against the exact one along the way.

namespace asua {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
};

/// Parses `a..b` or a single integer `a`.
IntRange parse_range(const std::string& text);

struct VerifyOptions {
  IntRange n{0, -1};  // empty -> family default
  IntRange d{1, 5};   // SD2 b, SD3 c, SD4 total stem mass
  std::int64_t max_stems = 3;
  bool printed_constant = false;
  bool check_float = true;
  double float_tolerance = 1e-9;
  std::size_t stem_trials = 50;
  std::uint64_t seed = 20240101;
};

struct VerifyReport {
  std::string family;
  std::size_t instances = 0;
  std::size_t values = 0;
  std::size_t mismatches = 0;
  std::size_t float_failures = 0;
  double max_float_rel_error = 0.0;
  /// Only filled when printed_constant is requested (SD2/SD3/SD4).
  std::size_t printed_instances = 0;
  std::size_t printed_mismatched_instances = 0;
  std::vector<std::string> failures;  // first few mismatches

  bool ok() const noexcept { return mismatches == 0 && float_failures == 0; }
};

/// Families: path, cycle, stem, sd1, sd2, sd3, sd4. Throws BadSpec on an
/// unknown family.
VerifyReport verify_family(const std::string& family, const VerifyOptions& opts);

/// The full default sweep, one report per family.
std::vector<VerifyReport> verify_all(const VerifyOptions& opts);

const std::vector<std::string>& verify_families();

/// Every SD4 stem composition (ordered, parts >= 1) with total in `mass`
/// and at most `max_parts` parts.
std::vector<std::vector<std::int64_t>> stem_compositions(IntRange mass, std::int64_t max_parts);

/// Relative error used by the float/exact checks: |f - e| / |e|, or |f|
/// when e == 0.
double relative_error(double approx, double exact);

}  // namespace asua
