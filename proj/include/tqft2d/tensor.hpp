#pragma once

// Dense tensors whose indices carry a label and an orientation sign. A `+`
// index lives in V (basis e_i), a `-` index in the conjugate space (basis
// ē_i). The pairing between the two is the Kronecker delta, so contraction of
// a `+` index against a `-` index is a plain diagonal sum.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tqft2d/error.hpp"
#include "tqft2d/orientation.hpp"
#include "tqft2d/scalar.hpp"

namespace tqft2d {

struct SignedIndex {
  std::string label;
  Orientation sign = Orientation::Plus;

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

using Permutation = std::vector<std::size_t>;

template <class S>
class LabeledTensor {
 public:
  using scalar_type = S;
  using traits = scalar_traits<S>;

  LabeledTensor() : LabeledTensor(1, {}, {traits::zero()}) {}

  // Row-major storage, first index most significant.
  LabeledTensor(std::size_t dim, std::vector<SignedIndex> indices, std::vector<S> entries)
      : dim_(dim), indices_(std::move(indices)), entries_(std::move(entries)) {
    if (dim_ == 0) throw InvalidArgument("tensor dimension must be positive");
    std::unordered_set<std::string> seen;
    for (const auto& ix : indices_)
      if (!seen.insert(ix.label).second)
        throw LabelError("duplicate index label '" + ix.label + "'");
    if (entries_.size() != volume(dim_, indices_.size()))
      throw DimensionMismatch("entry count " + std::to_string(entries_.size()) +
                              " does not equal dim^rank");
  }

  static LabeledTensor scalar(S value, std::size_t dim = 1) {
    return LabeledTensor(dim, {}, {std::move(value)});
  }

  static LabeledTensor zeros(std::size_t dim, std::vector<SignedIndex> indices) {
    std::size_t n = volume(dim, indices.size());
    return LabeledTensor(dim, std::move(indices), std::vector<S>(n, traits::zero()));
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return indices_.size(); }
  const std::vector<SignedIndex>& indices() const noexcept { return indices_; }
  const std::vector<S>& entries() const noexcept { return entries_; }
  std::vector<S>& entries() noexcept { return entries_; }

  // Position of `label`, or rank() when absent.
  std::size_t find(const std::string& label) const {
    auto it = std::find_if(indices_.begin(), indices_.end(),
                           [&](const SignedIndex& ix) { return ix.label == label; });
    return static_cast<std::size_t>(it - indices_.begin());
  }
  bool has(const std::string& label) const { return find(label) != rank(); }

  std::size_t offset(std::span<const std::size_t> multi) const {
    std::size_t off = 0;
    for (std::size_t v : multi) off = off * dim_ + v;
    return off;
  }

  const S& at(std::span<const std::size_t> multi) const { return entries_[offset(multi)]; }
  S& at(std::span<const std::size_t> multi) { return entries_[offset(multi)]; }

  template <class... I>
  const S& operator()(I... i) const {
    const std::size_t multi[] = {static_cast<std::size_t>(i)...};
    return at(multi);
  }
  template <class... I>
  S& operator()(I... i) {
    const std::size_t multi[] = {static_cast<std::size_t>(i)...};
    return at(multi);
  }

  // Value of a rank-0 tensor.
  const S& value() const {
    if (rank() != 0) throw InvalidArgument("value() on a tensor of rank " + std::to_string(rank()));
    return entries_.front();
  }

  static std::size_t volume(std::size_t dim, std::size_t rank) {
    std::size_t n = 1;
    for (std::size_t k = 0; k < rank; ++k) n *= dim;
    return n;
  }

 private:
  std::size_t dim_;
  std::vector<SignedIndex> indices_;
  std::vector<S> entries_;
};

namespace detail {

// Odometer over {0..dim-1}^rank. Returns false after the last multi-index.
inline bool next_multi(std::vector<std::size_t>& multi, std::size_t dim) {
  for (std::size_t k = multi.size(); k-- > 0;) {
    if (++multi[k] < dim) return true;
    multi[k] = 0;
  }
  return false;
}

inline std::vector<std::size_t> strides(std::size_t dim, std::size_t rank) {
  std::vector<std::size_t> s(rank, 1);
  for (std::size_t k = rank; k-- > 1;) s[k - 1] = s[k] * dim;
  return s;
}

template <class S>
std::size_t common_dim(const LabeledTensor<S>& a, const LabeledTensor<S>& b) {
  if (a.rank() == 0) return b.dim();
  if (b.rank() == 0) return a.dim();
  if (a.dim() != b.dim())
    throw DimensionMismatch("dimension " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  return a.dim();
}

}  // namespace detail

template <class S>
LabeledTensor<S> tensor_product(const LabeledTensor<S>& a, const LabeledTensor<S>& b) {
  const std::size_t dim = detail::common_dim(a, b);
  std::vector<SignedIndex> indices = a.indices();
  for (const auto& ix : b.indices()) {
    if (a.has(ix.label)) throw LabelError("label collision on '" + ix.label + "'");
    indices.push_back(ix);
  }
  std::vector<S> entries;
  entries.reserve(a.entries().size() * b.entries().size());
  for (const S& x : a.entries())
    for (const S& y : b.entries()) entries.push_back(x * y);
  return LabeledTensor<S>(dim, std::move(indices), std::move(entries));
}

// Contracts every (position in a, position in b) pair in one pass. The result
// carries a's free indices followed by b's free indices. Signs are not
// checked here; callers enforce the +/- pairing.
template <class S>
LabeledTensor<S> contract_between(const LabeledTensor<S>& a, const LabeledTensor<S>& b,
                                  std::span<const std::pair<std::size_t, std::size_t>> links) {
  const std::size_t dim = detail::common_dim(a, b);
  std::vector<bool> a_linked(a.rank(), false), b_linked(b.rank(), false);
  for (auto [pa, pb] : links) {
    a_linked.at(pa) = true;
    b_linked.at(pb) = true;
  }
  const auto sa = detail::strides(dim, a.rank());
  const auto sb = detail::strides(dim, b.rank());

  std::vector<SignedIndex> out_indices;
  std::vector<std::size_t> free_a_stride, free_b_stride;  // per output slot
  for (std::size_t k = 0; k < a.rank(); ++k)
    if (!a_linked[k]) {
      out_indices.push_back(a.indices()[k]);
      free_a_stride.push_back(sa[k]);
      free_b_stride.push_back(0);
    }
  for (std::size_t k = 0; k < b.rank(); ++k)
    if (!b_linked[k]) {
      if (a.has(b.indices()[k].label))
        throw LabelError("label collision on '" + b.indices()[k].label + "'");
      out_indices.push_back(b.indices()[k]);
      free_a_stride.push_back(0);
      free_b_stride.push_back(sb[k]);
    }
  std::vector<std::size_t> sum_a_stride, sum_b_stride;
  for (auto [pa, pb] : links) {
    sum_a_stride.push_back(sa[pa]);
    sum_b_stride.push_back(sb[pb]);
  }

  auto result = LabeledTensor<S>::zeros(dim, std::move(out_indices));
  std::vector<std::size_t> out_multi(result.rank(), 0);
  std::vector<std::size_t> sum_multi(links.size(), 0);
  std::size_t out_pos = 0;
  do {
    std::size_t base_a = 0, base_b = 0;
    for (std::size_t k = 0; k < out_multi.size(); ++k) {
      base_a += out_multi[k] * free_a_stride[k];
      base_b += out_multi[k] * free_b_stride[k];
    }
    S acc = scalar_traits<S>::zero();
    std::fill(sum_multi.begin(), sum_multi.end(), 0);
    do {
      std::size_t oa = base_a, ob = base_b;
      for (std::size_t k = 0; k < sum_multi.size(); ++k) {
        oa += sum_multi[k] * sum_a_stride[k];
        ob += sum_multi[k] * sum_b_stride[k];
      }
      acc += a.entries()[oa] * b.entries()[ob];
    } while (detail::next_multi(sum_multi, dim));
    result.entries()[out_pos++] = std::move(acc);
  } while (detail::next_multi(out_multi, dim));
  return result;
}

// Diagonal sum over the indices `a` and `b`, which must carry opposite signs.
// The remaining indices keep their relative order.
template <class S>
LabeledTensor<S> contract(const LabeledTensor<S>& t, const std::string& a, const std::string& b) {
  const std::size_t pa = t.find(a), pb = t.find(b);
  if (pa == t.rank()) throw LabelError("no index labelled '" + a + "'");
  if (pb == t.rank()) throw LabelError("no index labelled '" + b + "'");
  if (pa == pb) throw LabelError("cannot contract index '" + a + "' with itself");
  if (t.indices()[pa].sign == t.indices()[pb].sign)
    throw OrientationMismatch("indices '" + a + "' and '" + b + "' have the same sign");

  const std::size_t dim = t.dim();
  const auto st = detail::strides(dim, t.rank());
  std::vector<SignedIndex> out_indices;
  std::vector<std::size_t> free_stride;
  for (std::size_t k = 0; k < t.rank(); ++k)
    if (k != pa && k != pb) {
      out_indices.push_back(t.indices()[k]);
      free_stride.push_back(st[k]);
    }
  const std::size_t diag_stride = st[pa] + st[pb];
  auto result = LabeledTensor<S>::zeros(dim, std::move(out_indices));
  std::vector<std::size_t> multi(result.rank(), 0);
  std::size_t out_pos = 0;
  do {
    std::size_t base = 0;
    for (std::size_t k = 0; k < multi.size(); ++k) base += multi[k] * free_stride[k];
    S acc = scalar_traits<S>::zero();
    for (std::size_t v = 0; v < dim; ++v) acc += t.entries()[base + v * diag_stride];
    result.entries()[out_pos++] = std::move(acc);
  } while (detail::next_multi(multi, dim));
  return result;
}

inline bool is_permutation_of(const Permutation& perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

// Output slot k holds input index perm[k]:
//   out.indices[k] == t.indices[perm[k]],
//   out(j_0, ..., j_{r-1}) == t(i) where i[perm[k]] == j_k.
template <class S>
LabeledTensor<S> permute_indices(const LabeledTensor<S>& t, const Permutation& perm) {
  if (!is_permutation_of(perm, t.rank()))
    throw InvalidArgument("not a permutation of " + std::to_string(t.rank()) + " positions");
  const auto st = detail::strides(t.dim(), t.rank());
  std::vector<SignedIndex> indices;
  std::vector<std::size_t> src_stride;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    indices.push_back(t.indices()[perm[k]]);
    src_stride.push_back(st[perm[k]]);
  }
  auto out = LabeledTensor<S>::zeros(t.dim(), std::move(indices));
  std::vector<std::size_t> multi(t.rank(), 0);
  std::size_t pos = 0;
  do {
    std::size_t src = 0;
    for (std::size_t k = 0; k < multi.size(); ++k) src += multi[k] * src_stride[k];
    out.entries()[pos++] = t.entries()[src];
  } while (detail::next_multi(multi, t.dim()));
  return out;
}

// Permutation that puts the indices of `t` in the order given by `labels`.
template <class S>
Permutation permutation_to(const LabeledTensor<S>& t, const std::vector<std::string>& labels) {
  if (labels.size() != t.rank())
    throw LabelError("label list has " + std::to_string(labels.size()) + " entries, tensor rank " +
                     std::to_string(t.rank()));
  Permutation perm;
  for (const auto& l : labels) {
    std::size_t p = t.find(l);
    if (p == t.rank()) throw LabelError("no index labelled '" + l + "'");
    perm.push_back(p);
  }
  return perm;
}

template <class S>
LabeledTensor<S> reorder(const LabeledTensor<S>& t, const std::vector<std::string>& labels) {
  return permute_indices(t, permutation_to(t, labels));
}

// Indices sorted by label; the form used when two tensors are compared
// irrespective of index order.
template <class S>
LabeledTensor<S> canonical(const LabeledTensor<S>& t) {
  Permutation perm(t.rank());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return t.indices()[x].label < t.indices()[y].label;
  });
  return permute_indices(t, perm);
}

template <class S>
LabeledTensor<S> flip_signs(const LabeledTensor<S>& t) {
  auto indices = t.indices();
  for (auto& ix : indices) ix.sign = -ix.sign;
  return LabeledTensor<S>(t.dim(), std::move(indices), t.entries());
}

// Negates the sign of the named indices only.
template <class S>
LabeledTensor<S> flip_labels(const LabeledTensor<S>& t, const std::vector<std::string>& labels) {
  auto indices = t.indices();
  for (const auto& l : labels) {
    std::size_t p = t.find(l);
    if (p == t.rank()) throw LabelError("no index labelled '" + l + "'");
    indices[p].sign = -indices[p].sign;
  }
  return LabeledTensor<S>(t.dim(), std::move(indices), t.entries());
}

template <class S>
LabeledTensor<S> with_signs(const LabeledTensor<S>& t, const std::vector<Orientation>& signs) {
  if (signs.size() != t.rank()) throw InvalidArgument("sign list does not match rank");
  auto indices = t.indices();
  for (std::size_t k = 0; k < signs.size(); ++k) indices[k].sign = signs[k];
  return LabeledTensor<S>(t.dim(), std::move(indices), t.entries());
}

template <class S>
LabeledTensor<S> relabel(const LabeledTensor<S>& t, const std::vector<std::string>& labels) {
  if (labels.size() != t.rank()) throw InvalidArgument("label list does not match rank");
  auto indices = t.indices();
  for (std::size_t k = 0; k < labels.size(); ++k) indices[k].label = labels[k];
  return LabeledTensor<S>(t.dim(), std::move(indices), t.entries());
}

template <class S>
LabeledTensor<S> conjugate_entries(const LabeledTensor<S>& t) {
  std::vector<S> entries;
  entries.reserve(t.entries().size());
  for (const S& x : t.entries()) entries.push_back(scalar_traits<S>::conj(x));
  return LabeledTensor<S>(t.dim(), t.indices(), std::move(entries));
}

// Same index signature (labels, signs, order, dimension) and entries equal
// exactly for rationals or within `tol` for complex.
template <class S>
bool equal(const LabeledTensor<S>& a, const LabeledTensor<S>& b, double tol = kDefaultTolerance) {
  if (a.indices() != b.indices()) return false;
  if (a.rank() > 0 && a.dim() != b.dim()) return false;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    if (!scalar_traits<S>::near(a.entries()[k], b.entries()[k], tol)) return false;
  return true;
}

// Largest entrywise distance between two tensors of the same shape.
template <class S>
typename scalar_traits<S>::magnitude_type max_distance(const LabeledTensor<S>& a,
                                                       const LabeledTensor<S>& b) {
  if (a.entries().size() != b.entries().size()) throw DimensionMismatch("shape mismatch");
  typename scalar_traits<S>::magnitude_type worst{0};
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    auto dist = scalar_traits<S>::distance(a.entries()[k], b.entries()[k]);
    if (dist > worst) worst = dist;
  }
  return worst;
}

}  // namespace tqft2d
