#pragma once

// Combinatorial model of compact oriented surfaces with labelled, oriented
// boundary circles. A connected surface is determined up to homeomorphism by
// its genus and its boundary circles, which is all the functor needs.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tqft2d/error.hpp"
#include "tqft2d/orientation.hpp"

namespace tqft2d {

struct BoundaryCircle {
  std::string label;
  Orientation orientation = Orientation::Plus;

  friend bool operator==(const BoundaryCircle&, const BoundaryCircle&) = default;
};

inline BoundaryCircle plus(std::string label) { return {std::move(label), Orientation::Plus}; }
inline BoundaryCircle minus(std::string label) { return {std::move(label), Orientation::Minus}; }

struct ConnectedSurface {
  int genus = 0;
  Orientation orientation = Orientation::Plus;
  std::vector<BoundaryCircle> boundary;

  std::size_t boundary_count() const noexcept { return boundary.size(); }

  friend bool operator==(const ConnectedSurface&, const ConnectedSurface&) = default;
};

// Disjoint union of connected components. No components is the unit object.
struct Surface {
  std::vector<ConnectedSurface> components;

  bool empty() const noexcept { return components.empty(); }

  std::vector<BoundaryCircle> boundary() const {
    std::vector<BoundaryCircle> out;
    for (const auto& c : components) out.insert(out.end(), c.boundary.begin(), c.boundary.end());
    return out;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& c : components)
      for (const auto& b : c.boundary) out.push_back(b.label);
    return out;
  }

  friend bool operator==(const Surface&, const Surface&) = default;
};

inline ConnectedSurface component(int genus, std::vector<BoundaryCircle> boundary,
                                  Orientation orientation = Orientation::Plus) {
  return {genus, orientation, std::move(boundary)};
}

inline Surface surface(std::vector<ConnectedSurface> components) {
  return {std::move(components)};
}

struct GlueSpec {
  std::vector<std::pair<std::string, std::string>> pairs;

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& [a, b] : pairs) {
      out.push_back(a);
      out.push_back(b);
    }
    return out;
  }

  friend bool operator==(const GlueSpec&, const GlueSpec&) = default;
};

// Every invariant violation, empty when the surface is valid.
inline std::vector<std::string> validate(const Surface& s) {
  std::vector<std::string> violations;
  std::set<std::string> seen, reported;
  for (std::size_t k = 0; k < s.components.size(); ++k) {
    const auto& c = s.components[k];
    if (c.genus < 0)
      violations.push_back("negative genus " + std::to_string(c.genus) + " in component " +
                           std::to_string(k));
    for (const auto& b : c.boundary) {
      if (b.label.empty()) violations.push_back("empty label in component " + std::to_string(k));
      if (!seen.insert(b.label).second && reported.insert(b.label).second)
        violations.push_back("duplicate label " + b.label);
    }
  }
  return violations;
}

inline void require_valid(const Surface& s) {
  auto v = validate(s);
  if (v.empty()) return;
  std::string msg = "invalid surface:";
  for (const auto& line : v) msg += " " + line + ";";
  if (v.front().starts_with("duplicate")) throw LabelError(msg);
  throw InvalidArgument(msg);
}

inline long euler_characteristic(const ConnectedSurface& c) {
  return 2 - 2 * static_cast<long>(c.genus) - static_cast<long>(c.boundary.size());
}

inline long euler_characteristic(const Surface& s) {
  long chi = 0;
  for (const auto& c : s.components) chi += euler_characteristic(c);
  return chi;
}

inline Surface disjoint_union(const Surface& a, const Surface& b) {
  std::set<std::string> labels;
  for (const auto& l : a.labels()) labels.insert(l);
  for (const auto& l : b.labels())
    if (labels.count(l)) throw LabelError("label collision on '" + l + "'");
  Surface out = a;
  out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  return out;
}

inline Surface reverse_orientation(const Surface& s) {
  Surface out = s;
  for (auto& c : out.components) {
    c.orientation = -c.orientation;
    for (auto& b : c.boundary) b.orientation = -b.orientation;
  }
  return out;
}

// Checks that a spec never mentions a label twice and never pairs a label with
// itself.
inline void require_distinct_labels(const GlueSpec& spec) {
  std::set<std::string> used;
  for (const auto& l : spec.labels())
    if (!used.insert(l).second) throw LabelError("label '" + l + "' used twice in glue spec");
}

// Glues the circles of each pair, one pair at a time. Joining two circles of
// one component adds a handle; joining circles of two components merges them
// into the earlier component's slot, keeping its orientation and listing its
// remaining boundary first.
inline Surface glue(const Surface& s, const GlueSpec& spec) {
  require_valid(s);
  require_distinct_labels(spec);
  Surface out = s;

  auto locate = [&](const std::string& label) {
    for (std::size_t c = 0; c < out.components.size(); ++c) {
      const auto& bd = out.components[c].boundary;
      for (std::size_t k = 0; k < bd.size(); ++k)
        if (bd[k].label == label) return std::pair{c, k};
    }
    throw LabelError("unknown boundary label '" + label + "'");
  };

  for (const auto& [la, lb] : spec.pairs) {
    auto [ca, ka] = locate(la);
    auto [cb, kb] = locate(lb);
    if (out.components[ca].boundary[ka].orientation == out.components[cb].boundary[kb].orientation)
      throw OrientationMismatch("circles '" + la + "' and '" + lb + "' have the same orientation");
    auto drop = [](std::vector<BoundaryCircle>& bd, const std::string& label) {
      bd.erase(std::remove_if(bd.begin(), bd.end(),
                              [&](const BoundaryCircle& b) { return b.label == label; }),
               bd.end());
    };
    if (ca == cb) {
      auto& c = out.components[ca];
      drop(c.boundary, la);
      drop(c.boundary, lb);
      c.genus += 1;
      continue;
    }
    std::size_t keep = std::min(ca, cb), gone = std::max(ca, cb);
    ConnectedSurface merged = out.components[keep];
    const ConnectedSurface& other = out.components[gone];
    merged.genus += other.genus;
    merged.boundary.insert(merged.boundary.end(), other.boundary.begin(), other.boundary.end());
    drop(merged.boundary, la);
    drop(merged.boundary, lb);
    out.components[keep] = std::move(merged);
    out.components.erase(out.components.begin() + static_cast<std::ptrdiff_t>(gone));
  }
  return out;
}

// Composite of two gluings applied in sequence: the union of their pairs.
inline GlueSpec compose_glue(const GlueSpec& first, const GlueSpec& second) {
  require_distinct_labels(first);
  require_distinct_labels(second);
  std::set<std::string> consumed;
  for (const auto& l : first.labels()) consumed.insert(l);
  for (const auto& l : second.labels())
    if (consumed.count(l))
      throw LabelError("label '" + l + "' was already consumed by the first gluing");
  GlueSpec out = first;
  out.pairs.insert(out.pairs.end(), second.pairs.begin(), second.pairs.end());
  return out;
}

// Order-insensitive description of a surface: sorted list of
// (genus, sorted boundary, orientation) per component.
using ComponentKey = std::tuple<int, std::vector<std::pair<std::string, char>>, char>;

inline std::vector<ComponentKey> component_multiset(const Surface& s) {
  std::vector<ComponentKey> keys;
  for (const auto& c : s.components) {
    std::vector<std::pair<std::string, char>> bd;
    for (const auto& b : c.boundary) bd.emplace_back(b.label, to_char(b.orientation));
    std::sort(bd.begin(), bd.end());
    keys.emplace_back(c.genus, std::move(bd), to_char(c.orientation));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace tqft2d
