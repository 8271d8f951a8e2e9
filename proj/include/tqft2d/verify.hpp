#pragma once

// Randomised verification of the functor: decomposition independence under
// Kohno moves, functoriality of gluing, monoidality, and gluing = evaluation.
// Every trial seeds its own generator from (seed, trial), so reports do not
// depend on evaluation order.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tqft2d/formats.hpp"
#include "tqft2d/functor.hpp"
#include "tqft2d/surface.hpp"
#include "tqft2d/tensor.hpp"
#include "tqft2d/tqft_data.hpp"

namespace tqft2d {

struct ReportLine {
  bool pass = true;
  std::string name;
  std::string detail;
};

struct Report {
  std::vector<ReportLine> lines;

  bool pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& l : lines) n += !l.pass;
    return n;
  }
  void append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }

  // One line per check; failing checks echo their evidence on indented lines.
  std::string to_text() const {
    std::string out;
    for (const auto& l : lines) {
      out += (l.pass ? "PASS " : "FAIL ") + l.name + "\n";
      if (!l.detail.empty()) {
        std::size_t start = 0;
        while (start < l.detail.size()) {
          std::size_t end = l.detail.find('\n', start);
          if (end == std::string::npos) end = l.detail.size();
          out += "  " + l.detail.substr(start, end - start) + "\n";
          start = end + 1;
        }
      }
    }
    return out;
  }
};

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

// Uniform in [0, bound).
inline std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return bound == 0 ? 0 : static_cast<std::size_t>(rng() % bound);
}

struct RandomSurfaceOptions {
  std::size_t max_components = 3;
  int max_genus = 2;
  std::size_t max_boundary_per_component = 3;
  std::size_t max_total_boundary = 5;
};

inline Surface random_surface(std::mt19937_64& rng, const std::string& prefix,
                              const RandomSurfaceOptions& opt = {}) {
  Surface s;
  const std::size_t comps = 1 + draw(rng, opt.max_components);
  std::size_t used = 0;
  for (std::size_t c = 0; c < comps; ++c) {
    ConnectedSurface cs;
    cs.genus = static_cast<int>(draw(rng, static_cast<std::size_t>(opt.max_genus) + 1));
    cs.orientation = draw(rng, 2) ? Orientation::Minus : Orientation::Plus;
    std::size_t room = opt.max_total_boundary - used;
    std::size_t n = draw(rng, std::min(opt.max_boundary_per_component, room) + 1);
    for (std::size_t k = 0; k < n; ++k)
      cs.boundary.push_back({prefix + std::to_string(used++), draw(rng, 2) ? Orientation::Minus : Orientation::Plus});
    s.components.push_back(std::move(cs));
  }
  return s;
}

// Random legal spec: up to `max_pairs` disjoint (+, -) pairs among `circles`.
inline GlueSpec random_glue_spec(std::mt19937_64& rng, const std::vector<BoundaryCircle>& circles,
                                 std::size_t max_pairs) {
  std::vector<std::string> pos, neg;
  for (const auto& b : circles) (b.orientation == Orientation::Plus ? pos : neg).push_back(b.label);
  std::shuffle(pos.begin(), pos.end(), rng);
  std::shuffle(neg.begin(), neg.end(), rng);
  const std::size_t limit = std::min({pos.size(), neg.size(), max_pairs});
  const std::size_t count = draw(rng, limit + 1);
  GlueSpec spec;
  for (std::size_t k = 0; k < count; ++k) {
    if (draw(rng, 2))
      spec.pairs.emplace_back(pos[k], neg[k]);
    else
      spec.pairs.emplace_back(neg[k], pos[k]);
  }
  return spec;
}

inline PantsDecomposition random_type_one_moves(std::mt19937_64& rng, PantsDecomposition dec,
                                                std::size_t moves) {
  for (std::size_t m = 0; m < moves; ++m) {
    auto movable = movable_circles(dec);
    if (movable.empty()) break;
    dec = type_one_move(dec, movable[draw(rng, movable.size())], static_cast<int>(draw(rng, 2)));
  }
  return dec;
}

namespace detail {

template <class S>
std::string mismatch_detail(const std::string& what_a, const LabeledTensor<S>& a,
                            const std::string& what_b, const LabeledTensor<S>& b) {
  return what_a + "\n" + format_tensor(a) + what_b + "\n" + format_tensor(b);
}

template <class S>
bool relations_hold(const TqftData<S>& data, RelationPolicy policy, Report& report) {
  if (policy == RelationPolicy::Override || check_relations(data).pass()) return true;
  report.lines.push_back({false, "relations", "TQFT data does not satisfy the defining relations"});
  return false;
}

}  // namespace detail

// Compares the chain decomposition against the alternate one and against
// `trials` random sequences of Type I moves for each connected (g, n) with
// 2g - 2 + n >= 2 inside the bounds. The one-holed torus gets a Type II
// check. Comparisons are exact for rationals.
template <class S>
Report verify_decomposition_invariance(const TqftData<S>& data, int g_max, std::size_t n_max,
                                       std::size_t trials, std::uint64_t seed,
                                       RelationPolicy policy = RelationPolicy::Enforce,
                                       double tol = kDefaultTolerance) {
  Report report;
  if (!detail::relations_hold(data, policy, report)) return report;

  if (g_max >= 1 && n_max >= 1) {
    auto dec = pants_decomposition(1, 1, DecompositionStrategy::Chain);
    auto moved = type_two_move(dec, dec.pants.front().legs[0]);
    auto a = decomposition_tensor(data, dec), b = decomposition_tensor(data, moved);
    bool ok = equal(a, b, tol);
    report.lines.push_back({ok, "moves g=1 n=1 type-II",
                            ok ? "" : detail::mismatch_detail(format_decomposition(dec), a, format_decomposition(moved), b)});
  }

  for (int g = 0; g <= g_max; ++g)
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (2L * g - 2 + static_cast<long>(n) < 2) continue;
      const auto chain = pants_decomposition(g, n, DecompositionStrategy::Chain);
      const auto reference = decomposition_tensor(data, chain);
      std::vector<PantsDecomposition> others{pants_decomposition(g, n, DecompositionStrategy::Alternate)};
      for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, static_cast<std::uint64_t>(g) * 64 + n, t);
        others.push_back(random_type_one_moves(rng, chain, 1 + draw(rng, 4)));
      }
      ReportLine line{true, "moves g=" + std::to_string(g) + " n=" + std::to_string(n) +
                                " decompositions=" + std::to_string(others.size() + 1), ""};
      for (const auto& other : others) {
        auto problems = validate(other, g);
        if (!problems.empty()) {
          line.pass = false;
          line.detail = "invalid decomposition " + format_decomposition(other) + ": " + problems.front();
          break;
        }
        auto value = decomposition_tensor(data, other);
        if (!equal(canonical(reference), canonical(value), tol)) {
          line.pass = false;
          line.detail = detail::mismatch_detail(format_decomposition(chain), reference,
                                                format_decomposition(other), value);
          break;
        }
      }
      report.lines.push_back(std::move(line));
    }
  return report;
}

// Two-stage gluing versus the composite spec versus the glued surface.
template <class S>
Report verify_functoriality(const TqftData<S>& data, std::size_t trials, std::uint64_t seed,
                            double tol = kDefaultTolerance) {
  Report report;
  if (!detail::relations_hold(data, RelationPolicy::Enforce, report)) return report;
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 1, t);
    Surface s = random_surface(rng, "a");
    GlueSpec first = random_glue_spec(rng, s.boundary(), 2);
    Surface mid = glue(s, first);
    GlueSpec second = random_glue_spec(rng, mid.boundary(), 2);
    GlueSpec both = compose_glue(first, second);

    auto z = invariant(data, s);
    auto staged = canonical(apply_gluing(apply_gluing(z, first), second));
    auto composite = canonical(apply_gluing(z, both));
    auto glued = canonical(invariant(data, glue(mid, second)));
    bool surfaces_agree = component_multiset(glue(mid, second)) == component_multiset(glue(s, both));
    if (surfaces_agree && equal(staged, composite, tol) && equal(staged, glued, tol)) continue;
    ++failures;
    report.lines.push_back({false, "functor trial=" + std::to_string(t),
                            "surface\n" + format_surface(s) + "first=" + format_glue_spec(first) +
                                " second=" + format_glue_spec(second) + "\n" +
                                detail::mismatch_detail("staged", staged, "glued", glued)});
  }
  report.lines.insert(report.lines.begin(),
                      {failures == 0, "functor trials=" + std::to_string(trials) +
                                          " mismatches=" + std::to_string(failures), ""});
  return report;
}

template <class S>
Report verify_monoidal(const TqftData<S>& data, std::size_t trials, std::uint64_t seed,
                       double tol = kDefaultTolerance) {
  Report report;
  if (!detail::relations_hold(data, RelationPolicy::Enforce, report)) return report;
  std::size_t failures = 0;
  RandomSurfaceOptions opt;
  opt.max_components = 2;
  opt.max_total_boundary = 3;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 2, t);
    Surface s1 = draw(rng, 8) == 0 ? Surface{} : random_surface(rng, "l", opt);
    Surface s2 = draw(rng, 8) == 0 ? Surface{} : random_surface(rng, "r", opt);
    auto joint = invariant(data, disjoint_union(s1, s2));
    auto product = tensor_product(invariant(data, s1), invariant(data, s2));
    if (equal(joint, product, tol)) continue;
    ++failures;
    report.lines.push_back({false, "monoidal trial=" + std::to_string(t),
                            "first\n" + format_surface(s1) + "second\n" + format_surface(s2) +
                                detail::mismatch_detail("union", joint, "product", product)});
  }
  report.lines.insert(report.lines.begin(),
                      {failures == 0, "monoidal trials=" + std::to_string(trials) +
                                          " mismatches=" + std::to_string(failures), ""});
  return report;
}

// Z(glue(s, spec)) == apply_gluing(Z(s), spec) for random legal specs.
template <class S>
Report verify_gluing(const TqftData<S>& data, std::size_t trials, std::uint64_t seed,
                     double tol = kDefaultTolerance) {
  Report report;
  if (!detail::relations_hold(data, RelationPolicy::Enforce, report)) return report;
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 3, t);
    Surface s = random_surface(rng, "g");
    GlueSpec spec = random_glue_spec(rng, s.boundary(), 3);
    auto lhs = canonical(invariant(data, glue(s, spec)));
    auto rhs = canonical(apply_gluing(invariant(data, s), spec));
    if (equal(lhs, rhs, tol)) continue;
    ++failures;
    report.lines.push_back({false, "gluing trial=" + std::to_string(t),
                            "surface\n" + format_surface(s) + "pairs=" + format_glue_spec(spec) + "\n" +
                                detail::mismatch_detail("glued surface", lhs, "evaluated tensor", rhs)});
  }
  report.lines.insert(report.lines.begin(),
                      {failures == 0, "gluing trials=" + std::to_string(trials) +
                                          " mismatches=" + std::to_string(failures), ""});
  return report;
}

}  // namespace tqft2d
