#include "asua/verify.hpp"

#include "asua/chain.hpp"
#include "asua/error.hpp"
#include "asua/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>

namespace asua {

namespace {

constexpr std::size_t kMaxFailuresListed = 20;

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::Parse, "expected integer, got '" + std::string(s) + "'");
  return v;
}

class Sweep {
 public:
  Sweep(std::string family, const VerifyOptions& opts) : opts_(opts) { report_.family = std::move(family); }

  // Compares expected[v] against the exact solve for every listed vertex.
  void check(const std::string& label, const Graph& g, const std::vector<std::int64_t>& expected,
             const std::vector<VertexId>& vertices) {
    ++report_.instances;
    const auto exact = solve_asua(g);
    for (VertexId v : vertices) {
      ++report_.values;
      if (exact[v] != Rational(static_cast<long>(expected[v]))) {
        ++report_.mismatches;
        fail(label + " v" + std::to_string(v + 1) + ": formula " + std::to_string(expected[v]) +
             " solver " + format_compact(exact[v]));
      }
    }
    if (opts_.check_float) compare_float(label, g, exact);
  }

  void compare_float(const std::string& label, const Graph& g, const AsuaVector& exact) {
    const auto approx = solve_asua_float(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const double err = relative_error(approx.values[v], exact[v].get_d());
      report_.max_float_rel_error = std::max(report_.max_float_rel_error, err);
      if (!(err <= opts_.float_tolerance)) {
        ++report_.float_failures;
        fail(label + " v" + std::to_string(v + 1) + ": float relative error " + std::to_string(err));
      }
    }
  }

  void fail(std::string message) {
    if (report_.failures.size() < kMaxFailuresListed) report_.failures.push_back(std::move(message));
  }

  VerifyReport& report() { return report_; }

 private:
  const VerifyOptions& opts_;
  VerifyReport report_;
};

std::vector<VertexId> all_vertices(const Graph& g) {
  std::vector<VertexId> v(g.vertex_count());
  for (VertexId i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

IntRange or_default(IntRange r, IntRange fallback) { return r.lo <= r.hi ? r : fallback; }

VerifyReport verify_path(const VerifyOptions& opts) {
  Sweep sweep("path", opts);
  const auto range = or_default(opts.n, {2, 200});
  for (auto n = range.lo; n <= range.hi; ++n) {
    const auto g = gen_path(static_cast<std::size_t>(n));
    std::vector<std::int64_t> expected;
    for (std::int64_t i = 1; i < n; ++i) expected.push_back(path_asua(n, i));
    expected.push_back(0);
    sweep.check("P_" + std::to_string(n), g, expected, all_vertices(g));
  }
  return sweep.report();
}

VerifyReport verify_cycle(const VerifyOptions& opts) {
  Sweep sweep("cycle", opts);
  const auto range = or_default(opts.n, {3, 200});
  for (auto n = range.lo; n <= range.hi; ++n) {
    const auto g = gen_cycle(static_cast<std::size_t>(n));
    std::vector<std::int64_t> expected;
    for (std::int64_t i = 1; i < n; ++i) expected.push_back(cycle_asua(n, i));
    expected.push_back(0);
    sweep.check("C_" + std::to_string(n), g, expected, all_vertices(g));
    // Reflection symmetry t(v_i) = t(v_{n-i}) on the solver output itself.
    const auto t = solve_asua(g);
    for (std::int64_t i = 1; i < n; ++i) {
      ++sweep.report().values;
      if (t[static_cast<VertexId>(i - 1)] != t[static_cast<VertexId>(n - i - 1)]) {
        ++sweep.report().mismatches;
        sweep.fail("C_" + std::to_string(n) + " symmetry broken at i=" + std::to_string(i));
      }
    }
  }
  return sweep.report();
}

VerifyReport verify_stem(const VerifyOptions& opts) {
  Sweep sweep("stem", opts);
  Xoshiro256 rng(opts.seed);
  for (std::size_t trial = 0; trial < opts.stem_trials; ++trial) {
    const auto n = static_cast<std::size_t>(1 + rng.below(10));
    const auto l = static_cast<std::int64_t>(1 + rng.below(4));
    const auto anchor = static_cast<VertexId>(rng.below(n));
    const auto absorber = static_cast<VertexId>(rng.below(n));

    auto edges = random_tree(n, rng).edges();
    // Stem vertices n, n+1, ...: u_l next to the anchor, u_1 at the free end.
    VertexId prev = anchor;
    for (std::int64_t s = 0; s < l; ++s) {
      edges.push_back({prev, n + static_cast<VertexId>(s), 1});
      prev = n + static_cast<VertexId>(s);
    }
    const VertexId absorbing[] = {absorber};
    const auto g = build_graph(n + static_cast<std::size_t>(l), edges, absorbing);
    const auto t = solve_asua(g);

    const std::string label = "trial " + std::to_string(trial) + " (n=" + std::to_string(n) +
                              ", l=" + std::to_string(l) + ")";
    ++sweep.report().instances;
    for (std::int64_t j = 1; j <= l + 1; ++j) {
      const VertexId u = j == l + 1 ? anchor : n + static_cast<VertexId>(l - j);
      ++sweep.report().values;
      const Rational excess = t[u] - t[anchor];
      if (excess != Rational(static_cast<long>(stem_offset(l, j)))) {
        ++sweep.report().mismatches;
        sweep.fail(label + " u_" + std::to_string(j) + ": excess " + format_compact(excess) +
                   " expected " + std::to_string(stem_offset(l, j)));
      }
    }
    if (opts.check_float) sweep.compare_float(label, g, t);
  }
  return sweep.report();
}

void check_sea_dragon(Sweep& sweep, const SeaDragonSpec& spec, const VerifyOptions& opts) {
  const auto g = gen_sea_dragon(spec);
  sweep.check(spec.label(), g, sea_dragon_values(spec), all_vertices(g));
  if (opts.printed_constant && spec.variant != SeaDragonVariant::SD1) {
    const auto t = solve_asua(g);
    ++sweep.report().printed_instances;
    bool differs = false;
    for (std::int64_t i = 1; i < spec.n; ++i)
      differs |= t[static_cast<VertexId>(i - 1)] != Rational(static_cast<long>(sd23_printed_asua(spec, i)));
    if (differs) ++sweep.report().printed_mismatched_instances;
  }
}

VerifyReport verify_sd1(const VerifyOptions& opts) {
  Sweep sweep("sd1", opts);
  const auto range = or_default(opts.n, {3, 12});
  for (auto n = std::max<std::int64_t>(range.lo, 3); n <= range.hi; ++n) {
    const std::int64_t slots = n - 2;  // positions 2..n-1
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots); ++mask) {
      std::vector<std::int64_t> ks;
      for (std::int64_t b = 0; b < slots; ++b)
        if (mask >> b & 1) ks.push_back(b + 2);
      check_sea_dragon(sweep, SeaDragonSpec::sd1(n, ks), opts);
    }
  }
  return sweep.report();
}

VerifyReport verify_single_position(
    const std::string& family, const VerifyOptions& opts,
    const std::function<std::vector<SeaDragonSpec>(std::int64_t, std::int64_t)>& specs_at) {
  Sweep sweep(family, opts);
  const auto range = or_default(opts.n, {3, 12});
  for (auto n = std::max<std::int64_t>(range.lo, 3); n <= range.hi; ++n)
    for (std::int64_t k = 2; k <= n - 1; ++k)
      for (const auto& spec : specs_at(n, k)) check_sea_dragon(sweep, spec, opts);
  return sweep.report();
}

}  // namespace

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  return {parse_int(std::string_view(text).substr(0, dots)),
          parse_int(std::string_view(text).substr(dots + 2))};
}

double relative_error(double approx, double exact) {
  if (exact == 0.0) return std::fabs(approx);
  return std::fabs(approx - exact) / std::fabs(exact);
}

std::vector<std::vector<std::int64_t>> stem_compositions(IntRange mass, std::int64_t max_parts) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> parts;
  std::function<void(std::int64_t)> extend = [&](std::int64_t total) {
    if (!parts.empty() && total >= mass.lo && total <= mass.hi) out.push_back(parts);
    if (static_cast<std::int64_t>(parts.size()) == max_parts) return;
    for (std::int64_t c = 1; total + c <= mass.hi; ++c) {
      parts.push_back(c);
      extend(total + c);
      parts.pop_back();
    }
  };
  extend(0);
  return out;
}

const std::vector<std::string>& verify_families() {
  static const std::vector<std::string> names{"path", "cycle", "stem", "sd1", "sd2", "sd3", "sd4"};
  return names;
}

VerifyReport verify_family(const std::string& family, const VerifyOptions& opts) {
  if (family == "path") return verify_path(opts);
  if (family == "cycle") return verify_cycle(opts);
  if (family == "stem") return verify_stem(opts);
  if (family == "sd1") return verify_sd1(opts);
  if (family == "sd2")
    return verify_single_position("sd2", opts, [&](std::int64_t n, std::int64_t k) {
      std::vector<SeaDragonSpec> out;
      for (auto b = std::max<std::int64_t>(opts.d.lo, 1); b <= opts.d.hi; ++b) out.push_back(SeaDragonSpec::sd2(n, k, b));
      return out;
    });
  if (family == "sd3")
    return verify_single_position("sd3", opts, [&](std::int64_t n, std::int64_t k) {
      std::vector<SeaDragonSpec> out;
      for (auto c = std::max<std::int64_t>(opts.d.lo, 1); c <= opts.d.hi; ++c) out.push_back(SeaDragonSpec::sd3(n, k, c));
      return out;
    });
  if (family == "sd4") {
    const auto compositions = stem_compositions(opts.d, opts.max_stems);
    return verify_single_position("sd4", opts, [&](std::int64_t n, std::int64_t k) {
      std::vector<SeaDragonSpec> out;
      for (const auto& c : compositions) out.push_back(SeaDragonSpec::sd4(n, k, c));
      return out;
    });
  }
  throw Error(ErrorKind::BadSpec, "unknown family '" + family + "'");
}

std::vector<VerifyReport> verify_all(const VerifyOptions& opts) {
  std::vector<VerifyReport> out;
  for (const auto& f : verify_families()) out.push_back(verify_family(f, opts));
  return out;
}

}  // namespace asua
