#pragma once

#include "asua/graph.hpp"
#include "asua/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

// Empirical look at the conjectured extremal trees: over all trees of order
// n, is t_sigma (and the round trip t') smallest on the star and largest on
// the path? The survey reports; it does not assert.

namespace asua {

/// How a tree with n possible absorbers is reduced to comparable values.
///   Max  - the tree's largest t_sigma over absorber choices
///   Min  - the tree's smallest t_sigma over absorber choices
///   Each - every (tree, absorber) pair is a separate value
enum class AbsorberConvention { Max, Min, Each };

/// Round-trip pair conventions.
///   MaxPair   - max over all pairs v != u
///   Diametral - endpoints of the lexicographically smallest diametral pair
enum class PairConvention { MaxPair, Diametral };

const char* to_string(AbsorberConvention c) noexcept;
const char* to_string(PairConvention c) noexcept;

struct SurveyTree {
  std::size_t index = 0;  // 1-based within its order
  std::string code;       // canonical string
  std::string edges;      // compact 1-based edge list, e.g. "1-2 1-3"
  bool star = false;
  bool path = false;
  std::vector<Rational> tsigma;  // per absorber vertex
  Rational tsigma_min, tsigma_max;
  Rational round_trip_max_pair;
  Rational round_trip_diametral;
};

struct Extremes {
  std::string convention;
  Rational min, max;
  std::vector<std::size_t> min_trees, max_trees;  // 1-based tree indices
  bool star_attains_min = false;
  bool path_attains_max = false;
};

struct SurveyLevel {
  std::size_t n = 0;
  std::vector<SurveyTree> trees;
  std::vector<Extremes> tsigma;      // one per requested absorber convention
  std::vector<Extremes> round_trip;  // MaxPair, Diametral
};

SurveyLevel survey_order(std::size_t n, const std::vector<AbsorberConvention>& conventions);

AbsorberConvention parse_absorber_convention(const std::string& name);

}  // namespace asua
