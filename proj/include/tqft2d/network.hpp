#pragma once

// Contraction of a network of labelled tensors joined by (label, label)
// pairs. Pairs within one tensor are traced first; after that the two
// tensors whose joint contraction leaves the smallest intermediate rank are
// merged, repeatedly. Tensors that end up disconnected are multiplied
// together in their original order.

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tqft2d/error.hpp"
#include "tqft2d/tensor.hpp"

namespace tqft2d {

using LabelPair = std::pair<std::string, std::string>;

template <class S>
LabeledTensor<S> contract_network(std::vector<LabeledTensor<S>> tensors,
                                  std::vector<LabelPair> pairs) {
  if (tensors.empty()) return LabeledTensor<S>::scalar(scalar_traits<S>::one());

  auto owner = [&](const std::string& label) {
    for (std::size_t t = 0; t < tensors.size(); ++t)
      if (tensors[t].has(label)) return t;
    throw LabelError("no tensor carries index '" + label + "'");
  };

  while (!pairs.empty()) {
    // Traces first.
    bool traced = false;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      std::size_t ta = owner(pairs[k].first), tb = owner(pairs[k].second);
      if (ta == tb) {
        tensors[ta] = contract(tensors[ta], pairs[k].first, pairs[k].second);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
        traced = true;
        break;
      }
    }
    if (traced) continue;

    // Greedy merge: minimise the rank left after contracting all links
    // between the chosen two tensors.
    std::size_t best_a = 0, best_b = 0;
    std::size_t best_rank = std::numeric_limits<std::size_t>::max();
    for (const auto& [la, lb] : pairs) {
      std::size_t ta = owner(la), tb = owner(lb);
      if (ta > tb) std::swap(ta, tb);
      std::size_t links = 0;
      for (const auto& [x, y] : pairs) {
        std::size_t ox = owner(x), oy = owner(y);
        if ((ox == ta && oy == tb) || (ox == tb && oy == ta)) ++links;
      }
      std::size_t rank = tensors[ta].rank() + tensors[tb].rank() - 2 * links;
      if (rank < best_rank) {
        best_rank = rank;
        best_a = ta;
        best_b = tb;
      }
    }

    std::vector<std::pair<std::size_t, std::size_t>> links;
    std::vector<LabelPair> remaining;
    for (const auto& pr : pairs) {
      std::size_t ox = owner(pr.first), oy = owner(pr.second);
      if (ox == best_a && oy == best_b) {
        if (tensors[best_a].indices()[tensors[best_a].find(pr.first)].sign ==
            tensors[best_b].indices()[tensors[best_b].find(pr.second)].sign)
          throw OrientationMismatch("indices '" + pr.first + "' and '" + pr.second +
                                    "' have the same sign");
        links.emplace_back(tensors[best_a].find(pr.first), tensors[best_b].find(pr.second));
      } else if (ox == best_b && oy == best_a) {
        if (tensors[best_a].indices()[tensors[best_a].find(pr.second)].sign ==
            tensors[best_b].indices()[tensors[best_b].find(pr.first)].sign)
          throw OrientationMismatch("indices '" + pr.first + "' and '" + pr.second +
                                    "' have the same sign");
        links.emplace_back(tensors[best_a].find(pr.second), tensors[best_b].find(pr.first));
      } else {
        remaining.push_back(pr);
      }
    }
    tensors[best_a] = contract_between(tensors[best_a], tensors[best_b],
                                       std::span<const std::pair<std::size_t, std::size_t>>(links));
    tensors.erase(tensors.begin() + static_cast<std::ptrdiff_t>(best_b));
    pairs = std::move(remaining);
  }

  LabeledTensor<S> result = std::move(tensors.front());
  for (std::size_t t = 1; t < tensors.size(); ++t) result = tensor_product(result, tensors[t]);
  return result;
}

}  // namespace tqft2d
