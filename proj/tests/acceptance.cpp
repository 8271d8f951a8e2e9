// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "test_support.hpp"

using namespace tqft2d;
using tqft2d::testing::q;
using tqft2d::testing::qs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

// 1. Dimension-1 grid search at height 3 against the brute-force enumerator
// and the closed form {(0, 0)} ∪ {(t, 1/t)}, in under a second.
Outcome relation_suite() {
  auto start = Clock::now();
  auto found = grid_search_dim1(3);
  double elapsed = seconds_since(start);

  std::set<std::pair<std::pair<long, long>, std::pair<long, long>>> got;
  for (const auto& s : found) {
    const Rational &d = s.d(0), &p = s.p(0, 0, 0);
    got.insert({{d.get_num().get_si(), d.get_den().get_si()}, {p.get_num().get_si(), p.get_den().get_si()}});
  }
  std::set<std::pair<std::pair<long, long>, std::pair<long, long>>> closed{{{0, 1}, {0, 1}}};
  for (const auto& t : rationals_of_height(3))
    if (sgn(t) != 0) {
      Rational inv = 1 / t;
      closed.insert({{t.get_num().get_si(), t.get_den().get_si()}, {inv.get_num().get_si(), inv.get_den().get_si()}});
    }
  bool ok = got == tqft2d::testing::brute_force_dim1(3) && got == closed && got.size() == found.size() && elapsed < 1.0;
  return {ok, "solutions=" + std::to_string(found.size()) + " expected=" + std::to_string(closed.size()) +
                  " seconds=" + std::to_string(elapsed)};
}

// 2. Base table for 50 random diagonal data against index loops.
Outcome table_reproduction() {
  std::size_t bad = 0;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng(trial_rng(2, 0, trial)());
    auto data = tqft2d::testing::random_diagonal(rng, 4);
    auto b = base_invariants(data);
    const std::size_t n = data.dim();
    bool ok = b.empty.value() == 1 && b.sphere.value() == tqft2d::testing::oracle_sphere(data) &&
              b.torus.value() == tqft2d::testing::oracle_torus(data);
    for (std::size_t i = 0; i < n; ++i) {
      ok = ok && b.disk(i) == data.d(i);
      for (std::size_t j = 0; j < n; ++j) {
        Rational c = 0;
        for (std::size_t k = 0; k < n; ++k) c += data.d(k) * data.p(k, i, j);
        ok = ok && b.annulus(i, j) == c;
      }
    }
    bad += !ok;
  }
  return {bad == 0, "trials=50 mismatches=" + std::to_string(bad)};
}

// 3. Decomposition independence, g <= 3, n <= 4, 25 rewrites each.
Outcome decomposition_independence() {
  auto start = Clock::now();
  auto report = verify_decomposition_invariance(diagonal_family(qs({2, -3})), 3, 4, 25, 2024);
  double elapsed = seconds_since(start);
  return {report.pass() && elapsed < 30.0, "lines=" + std::to_string(report.lines.size()) +
                                               " failures=" + std::to_string(report.failures()) +
                                               " seconds=" + std::to_string(elapsed)};
}

// 4. Functoriality and monoidality, 200 trials each, dimensions 1 to 3.
Outcome functor_monoidal() {
  std::size_t failures = 0;
  std::vector<TqftData<Rational>> cases{diagonal_family(qs({3})),
                                        tqft2d::testing::change_basis(diagonal_family(qs({2, -1})),
                                                                      tqft2d::testing::rotation_345()),
                                        diagonal_family(std::vector<Rational>{q(1), q(-2), q(1, 3)})};
  for (std::size_t k = 0; k < cases.size(); ++k) {
    failures += verify_functoriality(cases[k], 200, 40 + k).failures();
    failures += verify_monoidal(cases[k], 200, 40 + k).failures();
  }
  return {failures == 0, "dims=1..3 trials=200 failures=" + std::to_string(failures)};
}

// 5. Gluing equals evaluation on 100 random pairs.
Outcome gluing_is_evaluation() {
  auto data = tqft2d::testing::change_basis(diagonal_family(qs({5, -2})), tqft2d::testing::rotation_345());
  std::size_t bad = 0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    auto rng = trial_rng(5, 0, trial);
    Surface s = random_surface(rng, "a");
    GlueSpec spec = random_glue_spec(rng, s.boundary(), 3);
    auto glued = canonical(invariant(data, glue(s, spec)));
    auto contracted = canonical(apply_gluing(invariant(data, s), spec));
    bad += !equal(glued, contracted);
  }
  return {bad == 0, "trials=100 mismatches=" + std::to_string(bad)};
}

// 6. Closed surfaces in dimension 1: t^(2 - 2g), cross-checked by a state sum.
Outcome dimension_one_closed_form() {
  std::size_t bad = 0;
  for (const Rational& t : {q(1), q(2), q(1, 3), q(-2)}) {
    auto data = diagonal_family(std::vector<Rational>{t});
    for (int g = 0; g <= 6; ++g) {
      Rational expected = tqft2d::testing::power(t, 2 - 2 * g);
      Rational oracle = g == 0   ? tqft2d::testing::oracle_sphere(data)
                        : g == 1 ? tqft2d::testing::oracle_torus(data)
                                 : tqft2d::testing::oracle_state_sum(data, pants_decomposition(g, 0, DecompositionStrategy::Chain)).value();
      Rational got = closed_invariant(data, g);
      bad += !(got == expected && oracle == expected);
    }
  }
  return {bad == 0, "cases=28 mismatches=" + std::to_string(bad)};
}

// 7. Real data is Hermitian on random surfaces; complex t = i has a disk witness.
Outcome hermitian() {
  auto data = tqft2d::testing::change_basis(diagonal_family(qs({3, -1})), tqft2d::testing::rotation_345());
  std::size_t bad = 0;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    auto rng = trial_rng(7, 0, trial);
    Surface s = random_surface(rng, "h");
    auto z = invariant(data, s);
    bad += !equal(conjugate_entries(z), z) || !satisfies_hermitian_condition(data, s);
  }
  TqftData<Complex> t_i(1, {Complex(0, 1)}, {Complex(0, -1)});
  auto witness = find_hermitian_witness(t_i);
  bool disk = witness && witness->components.size() == 1 && witness->components[0].genus == 0 &&
              witness->components[0].boundary.size() == 1;
  bool ok = bad == 0 && check_relations(t_i).pass() && !hermitian_check(t_i) && disk;
  return {ok, "real_mismatches=" + std::to_string(bad) + " complex_witness=" +
                  (disk ? std::string("disk") : std::string("none"))};
}

// 8. Euler characteristic is unchanged by 500 random gluings.
Outcome euler_conservation() {
  std::size_t bad = 0;
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    auto rng = trial_rng(8, 0, trial);
    Surface s = random_surface(rng, "e");
    GlueSpec spec = random_glue_spec(rng, s.boundary(), 3);
    long before = 0, after = 0;
    for (const auto& c : s.components) before += 2 - 2L * c.genus - static_cast<long>(c.boundary.size());
    for (const auto& c : glue(s, spec).components) after += 2 - 2L * c.genus - static_cast<long>(c.boundary.size());
    bad += before != after || euler_characteristic(s) != before;
  }
  return {bad == 0, "trials=500 mismatches=" + std::to_string(bad)};
}

// 9. Data breaking relation 1 gives a four-holed sphere mismatch.
Outcome negative_control() {
  auto bad = tqft2d::testing::relation_one_breaker();
  auto report = verify_decomposition_invariance(bad, 0, 4, 5, 9, RelationPolicy::Override);
  bool mismatch = false;
  for (const auto& line : report.lines)
    if (!line.pass && line.name.starts_with("moves g=0 n=4")) mismatch = true;
  return {!check_relations(bad).relations[0].pass && mismatch,
          std::string("relation1=") + (check_relations(bad).relations[0].pass ? "pass" : "fail") +
              " mismatch_0_4=" + (mismatch ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"relation-suite", relation_suite},
      {"table-reproduction", table_reproduction},
      {"decomposition-independence", decomposition_independence},
      {"functoriality-monoidality", functor_monoidal},
      {"gluing-equals-evaluation", gluing_is_evaluation},
      {"dimension-one-closed-form", dimension_one_closed_form},
      {"hermitian", hermitian},
      {"euler-characteristic", euler_conservation},
      {"negative-control", negative_control},
  };
  int failed = 0;
  int number = 0;
  for (const auto& [name, run] : criteria) {
    ++number;
    Outcome out{false, ""};
    try {
      out = run();
    } catch (const std::exception& e) {
      out.detail = std::string("exception: ") + e.what();
    }
    failed += !out.pass;
    std::printf("%s %d %s %s\n", out.pass ? "PASS" : "FAIL", number, name.c_str(), out.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
