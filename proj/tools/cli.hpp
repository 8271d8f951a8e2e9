#pragma once

// Command-line front end. Exit codes: 0 success, 1 a relation or
// verification check failed, 2 bad input (usage, parse, label or orientation
// errors), 3 internal invariant violation.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tqft2d/tqft2d.hpp"

namespace tqft2d::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kBadInput = 2, kInternal = 3 };

class InternalViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Parse error tagged with the file it came from.
class FileParseError : public Error {
 public:
  FileParseError(const std::string& path, const ParseError& e)
      : Error(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
              e.message()) {}
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class F>
auto parse_file(const std::string& path, F&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw FileParseError(path, e);
  }
}

inline AnyTqftData load_tqft(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return parse_tqft(t); });
}

inline Surface load_surface(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return parse_surface(t); });
}

template <class S>
int run_check(const TqftData<S>& data, std::ostream& out) {
  const auto report = check_relations(data);
  for (std::size_t k = 0; k < 4; ++k)
    out << (k ? " " : "") << (report.relations[k].pass ? "PASS" : "FAIL");
  out << "\n";
  for (std::size_t k = 0; k < 4; ++k)
    out << "relation " << k + 1 << " " << (report.relations[k].pass ? "PASS" : "FAIL")
        << " max_violation=" << scalar_traits<S>::format_magnitude(report.relations[k].max_violation)
        << "\n";
  return report.pass() ? kOk : kCheckFailed;
}

template <class S>
int run_glue_tensor(const TqftData<S>& data, const Surface& s, const GlueSpec& spec, std::ostream& out) {
  auto evaluated = apply_gluing(invariant(data, s), spec);
  auto glued = invariant(data, glue(s, spec));
  if (!equal(canonical(evaluated), canonical(glued)))
    throw InternalViolation("gluing the surface and contracting its tensor disagree");
  out << format_tensor(glued);
  return kOk;
}

template <class S>
int run_verify(const TqftData<S>& data, const std::string& suite, std::size_t trials,
               std::uint64_t seed, std::ostream& out) {
  Report report;
  if (suite == "all" || suite == "moves") report.append(verify_decomposition_invariance(data, 3, 4, trials, seed));
  if (suite == "all" || suite == "functor") {
    report.append(verify_functoriality(data, trials, seed));
    report.append(verify_gluing(data, trials, seed));
  }
  if (suite == "all" || suite == "monoidal") report.append(verify_monoidal(data, trials, seed));
  out << report.to_text();
  return report.pass() ? kOk : kCheckFailed;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor calculus for two-dimensional topological quantum field theories", "tqft"};
  app.require_subcommand(1);

  std::string tqft_path, surface_path, pairs, emit_tensor_path, suite = "all";
  bool emit_surface = false;
  int genus = 0, dim = 1, height = 1;
  std::size_t trials = 25;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "Check the four defining relations");
  check->add_option("tqft-file", tqft_path)->required();

  auto* inv = app.add_subcommand("invariant", "Print the tensor of a surface");
  inv->add_option("tqft-file", tqft_path)->required();
  inv->add_option("surface-file", surface_path)->required();

  auto* gl = app.add_subcommand("glue", "Glue boundary circles of a surface");
  gl->add_option("surface-file", surface_path)->required();
  gl->add_option("--pairs", pairs, "Pairs to glue, e.g. a:b,c:d")->required();
  auto* es = gl->add_flag("--emit-surface", emit_surface, "Print the glued surface (default)");
  auto* et = gl->add_option("--emit-tensor", emit_tensor_path, "Print the glued surface's tensor for this TQFT");
  es->excludes(et);

  auto* cl = app.add_subcommand("closed", "Invariant of the closed surface of a given genus");
  cl->add_option("tqft-file", tqft_path)->required();
  cl->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);

  auto* ver = app.add_subcommand("verify", "Run the randomised verification suites");
  ver->add_option("tqft-file", tqft_path)->required();
  ver->add_option("--suite", suite)->check(CLI::IsMember({"all", "moves", "functor", "monoidal"}));
  ver->add_option("--trials", trials)->check(CLI::PositiveNumber);
  ver->add_option("--seed", seed);

  auto* se = app.add_subcommand("search", "Exhaustive search for one-dimensional solutions");
  se->add_option("--dim", dim)->check(CLI::IsMember({1}));
  se->add_option("--height", height)->required()->check(CLI::Range(1, kMaxSearchHeight));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*check) return std::visit([&](const auto& d) { return run_check(d, out); }, load_tqft(tqft_path));

    if (*inv) {
      auto s = load_surface(surface_path);
      return std::visit([&](const auto& d) {
        out << format_tensor(invariant(d, s));
        return int{kOk};
      }, load_tqft(tqft_path));
    }

    if (*gl) {
      auto s = load_surface(surface_path);
      GlueSpec spec;
      try {
        spec = parse_glue_spec(pairs);
      } catch (const ParseError& e) {
        throw FileParseError("--pairs", e);
      }
      if (emit_tensor_path.empty()) {
        out << format_surface(glue(s, spec));
        return kOk;
      }
      return std::visit([&](const auto& d) { return run_glue_tensor(d, s, spec, out); },
                        load_tqft(emit_tensor_path));
    }

    if (*cl)
      return std::visit([&](const auto& d) {
        out << scalar_traits<typename std::decay_t<decltype(d)>::scalar_type>::format(closed_invariant(d, genus))
            << "\n";
        return int{kOk};
      }, load_tqft(tqft_path));

    if (*ver)
      return std::visit([&](const auto& d) { return run_verify(d, suite, trials, seed, out); },
                        load_tqft(tqft_path));

    if (*se) {
      auto found = grid_search_dim1(height);
      for (const auto& sol : found)
        out << "d=" << sol.d(0).get_str() << " p=" << sol.p(0, 0, 0).get_str() << "\n";
      out << "solutions=" << found.size() << "\n";
      return kOk;
    }
  } catch (const RelationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kBadInput;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace tqft2d::cli
