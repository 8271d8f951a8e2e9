#pragma once

// The functor Z: surfaces to tensors. Surfaces without a pants decomposition
// take their tensor from the base table; every other connected surface is cut
// into pairs of pants, each pants gets a copy of p, and the cutting circles
// are contracted. Disjoint unions multiply.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tqft2d/error.hpp"
#include "tqft2d/network.hpp"
#include "tqft2d/surface.hpp"
#include "tqft2d/tensor.hpp"
#include "tqft2d/tqft_data.hpp"

namespace tqft2d {

struct Pants {
  std::array<std::string, 3> legs;

  friend bool operator==(const Pants&, const Pants&) = default;
};

// Internal labels start with '#', which surface labels never do. An internal
// label sits in two pants slots, possibly two slots of one pants (a handle).
struct PantsDecomposition {
  std::vector<Pants> pants;
  std::vector<std::string> external;
  std::vector<std::string> internal;

  friend bool operator==(const PantsDecomposition&, const PantsDecomposition&) = default;
};

enum class DecompositionStrategy { Chain, Alternate };

enum class RelationPolicy { Enforce, Override };

inline bool admits_pants_decomposition(int genus, std::size_t boundary) {
  return genus >= 0 && 2 * genus - 2 + static_cast<long>(boundary) >= 1;
}

// Empty when `dec` is a valid decomposition of the connected (g, n) surface.
inline std::vector<std::string> validate(const PantsDecomposition& dec, int genus) {
  std::vector<std::string> problems;
  const long n = static_cast<long>(dec.external.size());
  const long expected_pants = 2L * genus - 2 + n;
  const long expected_internal = 3L * genus - 3 + n;
  if (static_cast<long>(dec.pants.size()) != expected_pants)
    problems.push_back("expected " + std::to_string(expected_pants) + " pants, found " +
                       std::to_string(dec.pants.size()));
  if (static_cast<long>(dec.internal.size()) != expected_internal)
    problems.push_back("expected " + std::to_string(expected_internal) +
                       " internal circles, found " + std::to_string(dec.internal.size()));

  std::map<std::string, int> uses;
  for (const auto& pt : dec.pants) {
    for (const auto& l : pt.legs) ++uses[l];
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        if (pt.legs[a] == pt.legs[b] && !pt.legs[a].starts_with('#'))
          problems.push_back("external label " + pt.legs[a] + " repeated within one pants");
  }
  std::set<std::string> ext(dec.external.begin(), dec.external.end());
  std::set<std::string> in(dec.internal.begin(), dec.internal.end());
  for (const auto& l : dec.external)
    if (uses[l] != 1) problems.push_back("external label " + l + " used " + std::to_string(uses[l]) + " times");
  for (const auto& l : dec.internal)
    if (uses[l] != 2) problems.push_back("internal label " + l + " used " + std::to_string(uses[l]) + " times");
  for (const auto& [l, count] : uses)
    if (!ext.count(l) && !in.count(l)) problems.push_back("stray label " + l);

  // Connectivity of the pants graph.
  if (!dec.pants.empty()) {
    std::vector<bool> reached(dec.pants.size(), false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      for (const auto& l : dec.pants[cur].legs) {
        if (!in.count(l)) continue;
        for (std::size_t o = 0; o < dec.pants.size(); ++o)
          if (!reached[o] && std::count(dec.pants[o].legs.begin(), dec.pants[o].legs.end(), l)) {
            reached[o] = true;
            stack.push_back(o);
          }
      }
    }
    if (std::count(reached.begin(), reached.end(), false) != 0)
      problems.push_back("pants graph is disconnected");
  }
  return problems;
}

namespace detail {

inline std::string fresh_internal(const PantsDecomposition& dec) {
  int top = 0;
  for (const auto& l : dec.internal)
    if (l.size() > 1 && l[0] == '#') top = std::max(top, std::stoi(l.substr(1)));
  return "#" + std::to_string(top + 1);
}

inline void rename_leg(std::vector<Pants>& pants, const std::string& from, const std::string& to) {
  for (auto& pt : pants)
    for (auto& l : pt.legs)
      if (l == from) l = to;
}

// Pants indices that carry `label`.
inline std::vector<std::size_t> holders(const PantsDecomposition& dec, const std::string& label) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < dec.pants.size(); ++k)
    for (const auto& l : dec.pants[k].legs)
      if (l == label) out.push_back(k);
  return out;
}

}  // namespace detail

// Internal circles that join two different pants, i.e. where a Type I move
// applies.
inline std::vector<std::string> movable_circles(const PantsDecomposition& dec) {
  std::vector<std::string> out;
  for (const auto& l : dec.internal) {
    auto h = detail::holders(dec, l);
    if (h.size() == 2 && h[0] != h[1]) out.push_back(l);
  }
  return out;
}

// Type I move: the two pants A = (a1, a2, e) and B = (e, b1, b2) form a
// four-holed sphere; replace e by the curve separating {a1, b1} from
// {a2, b2} (variant 0) or {a1, b2} from {a2, b1} (variant 1).
inline PantsDecomposition type_one_move(const PantsDecomposition& dec, const std::string& circle,
                                        int variant) {
  auto h = detail::holders(dec, circle);
  if (h.size() != 2 || h[0] == h[1])
    throw InvalidArgument("circle '" + circle + "' does not join two distinct pants");
  auto others = [&](std::size_t idx) {
    std::vector<std::string> rest;
    for (const auto& l : dec.pants[idx].legs)
      if (l != circle) rest.push_back(l);
    return rest;
  };
  const auto a = others(h[0]);
  auto b = others(h[1]);
  if (variant % 2 == 1) std::swap(b[0], b[1]);

  PantsDecomposition out = dec;
  const std::string fresh = detail::fresh_internal(dec);
  out.pants[h[0]] = Pants{{a[0], b[0], fresh}};
  out.pants[h[1]] = Pants{{fresh, a[1], b[1]}};
  std::replace(out.internal.begin(), out.internal.end(), circle, fresh);
  return out;
}

// Type II move: inside a one-holed torus (h, h, e) the handle curve is
// replaced by a dual curve meeting it once. Cutting along the dual curve
// again gives one pants with two legs glued, so in this model the move only
// renames the handle circle.
inline PantsDecomposition type_two_move(const PantsDecomposition& dec, const std::string& handle) {
  auto h = detail::holders(dec, handle);
  if (h.size() != 2 || h[0] != h[1])
    throw InvalidArgument("circle '" + handle + "' is not a handle curve");
  PantsDecomposition out = dec;
  const std::string fresh = detail::fresh_internal(dec);
  detail::rename_leg(out.pants, handle, fresh);
  std::replace(out.internal.begin(), out.internal.end(), handle, fresh);
  return out;
}

// Caterpillar decomposition: boundary circles and handles hang off a linear
// spine of pants; each handle is a pants with two legs glued together and
// comes after the boundary legs. `Alternate` applies one Type I move to the
// chain.
inline PantsDecomposition pants_decomposition(int genus, std::vector<std::string> external,
                                              DecompositionStrategy strategy) {
  const std::size_t n = external.size();
  if (!admits_pants_decomposition(genus, n))
    throw InvalidArgument("surface of genus " + std::to_string(genus) + " with " +
                          std::to_string(n) + " boundary circles has no pants decomposition");
  PantsDecomposition dec;
  dec.external = std::move(external);
  int counter = 0;
  auto next = [&] {
    std::string l = "#" + std::to_string(++counter);
    dec.internal.push_back(l);
    return l;
  };

  std::vector<std::string> leaves = dec.external;
  std::vector<Pants> handles;
  for (int h = 0; h < genus; ++h) {
    std::string stem = next();
    std::string loop = next();
    handles.push_back(Pants{{loop, loop, stem}});
    leaves.push_back(stem);
  }

  if (leaves.size() == 2) {
    // A single edge joins the two leaves; at least one is a handle stem.
    const std::string keep = leaves[0].starts_with('#') ? leaves[1] : leaves[0];
    const std::string drop = keep == leaves[0] ? leaves[1] : leaves[0];
    detail::rename_leg(handles, drop, keep);
    dec.internal.erase(std::remove(dec.internal.begin(), dec.internal.end(), drop),
                       dec.internal.end());
  } else {
    std::string carry = leaves[0];
    for (std::size_t k = 1; k + 2 < leaves.size(); ++k) {
      std::string spine = next();
      dec.pants.push_back(Pants{{carry, leaves[k], spine}});
      carry = spine;
    }
    dec.pants.push_back(Pants{{carry, leaves[leaves.size() - 2], leaves.back()}});
  }
  dec.pants.insert(dec.pants.end(), handles.begin(), handles.end());

  if (strategy == DecompositionStrategy::Alternate) {
    auto movable = movable_circles(dec);
    if (!movable.empty()) dec = type_one_move(dec, movable.front(), 0);
  }
  return dec;
}

inline PantsDecomposition pants_decomposition(int genus, std::size_t boundary,
                                              DecompositionStrategy strategy) {
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= boundary; ++k) labels.push_back("x" + std::to_string(k));
  return pants_decomposition(genus, std::move(labels), strategy);
}

// Contracts one copy of p per pants over the internal circles. Result indices
// follow `dec.external`, all `+`.
template <class S>
LabeledTensor<S> decomposition_tensor(const TqftData<S>& data, const PantsDecomposition& dec) {
  std::set<std::string> internal(dec.internal.begin(), dec.internal.end());
  std::set<std::string> seen;
  std::vector<LabeledTensor<S>> tensors;
  std::vector<LabelPair> pairs;
  for (const auto& pt : dec.pants) {
    std::vector<std::string> labels;
    std::vector<Orientation> signs;
    for (const auto& l : pt.legs) {
      if (internal.count(l) && !seen.insert(l).second) {
        labels.push_back(l + "~");
        signs.push_back(Orientation::Minus);
        pairs.emplace_back(l, l + "~");
      } else {
        labels.push_back(l);
        signs.push_back(Orientation::Plus);
      }
    }
    tensors.push_back(with_signs(relabel(data.pants(), labels), signs));
  }
  return reorder(contract_network(std::move(tensors), std::move(pairs)), dec.external);
}

template <class S>
void require_relations(const TqftData<S>& data, RelationPolicy policy) {
  if (policy == RelationPolicy::Enforce && !check_relations(data).pass())
    throw RelationFailure("TQFT data does not satisfy the defining relations");
}

// Tensor of one connected surface. Index k is boundary circle k with that
// circle's orientation as sign.
template <class S>
LabeledTensor<S> component_invariant(const TqftData<S>& data, const ConnectedSurface& c) {
  std::vector<std::string> labels;
  std::vector<Orientation> signs;
  for (const auto& b : c.boundary) {
    labels.push_back(b.label);
    signs.push_back(b.orientation);
  }
  LabeledTensor<S> t;
  if (admits_pants_decomposition(c.genus, labels.size())) {
    t = decomposition_tensor(data, pants_decomposition(c.genus, labels, DecompositionStrategy::Chain));
  } else {
    auto base = base_invariants(data);
    if (c.genus == 0 && labels.size() == 0)
      t = base.sphere;
    else if (c.genus == 0 && labels.size() == 1)
      t = relabel(base.disk, labels);
    else if (c.genus == 0 && labels.size() == 2)
      t = relabel(base.annulus, labels);
    else
      t = base.torus;
  }
  return with_signs(t, signs);
}

template <class S>
LabeledTensor<S> invariant(const TqftData<S>& data, const Surface& s,
                           RelationPolicy policy = RelationPolicy::Enforce) {
  require_valid(s);
  require_relations(data, policy);
  auto result = LabeledTensor<S>::scalar(scalar_traits<S>::one(), data.dim());
  for (const auto& c : s.components) result = tensor_product(result, component_invariant(data, c));
  return result;
}

template <class S>
S closed_invariant(const TqftData<S>& data, int genus,
                   RelationPolicy policy = RelationPolicy::Enforce) {
  if (genus < 0) throw InvalidArgument("genus must be non-negative");
  return invariant(data, surface({component(genus, {})}), policy).value();
}

// Contracts each glued pair through the delta pairing.
template <class S>
LabeledTensor<S> apply_gluing(const LabeledTensor<S>& t, const GlueSpec& spec) {
  require_distinct_labels(spec);
  LabeledTensor<S> out = t;
  for (const auto& [a, b] : spec.pairs) out = contract(out, a, b);
  return out;
}

// Image of an isomorphism: reorder the boundary circles, then switch the
// named circles between V and its conjugate. Entries are not touched by the
// switch.
template <class S>
LabeledTensor<S> apply_isomorphism(const LabeledTensor<S>& t, const Permutation& perm,
                                   const std::vector<std::string>& flips) {
  return flip_labels(permute_indices(t, perm), flips);
}

// Reversing the orientation of a surface must conjugate its tensor.
template <class S>
bool satisfies_hermitian_condition(const TqftData<S>& data, const Surface& s,
                                   double tol = kDefaultTolerance) {
  auto reversed = flip_signs(invariant(data, reverse_orientation(s)));
  return equal(reversed, conjugate_entries(invariant(data, s)), tol);
}

// Smallest connected surface (by genus, then boundary count) violating the
// hermitian condition, if any within the bounds.
template <class S>
std::optional<Surface> find_hermitian_witness(const TqftData<S>& data, int max_genus = 2,
                                              std::size_t max_boundary = 3,
                                              double tol = kDefaultTolerance) {
  for (int g = 0; g <= max_genus; ++g)
    for (std::size_t n = 0; n <= max_boundary; ++n) {
      std::vector<BoundaryCircle> bd;
      for (std::size_t k = 1; k <= n; ++k) bd.push_back(plus("x" + std::to_string(k)));
      Surface s = surface({component(g, bd)});
      if (!satisfies_hermitian_condition(data, s, tol)) return s;
    }
  return std::nullopt;
}

}  // namespace tqft2d
