#pragma once

// Classification data of a 2d TQFT: a disk vector d_i and a fully symmetric
// pants tensor p_ijk subject to
//
//   (1) p_ijk p_klm  = p_ilk p_kjm
//   (2) p_ijk = p_jik = p_ikj
//   (3) d_k p_kij d_j = d_i
//   (4) d_k p_kij p_jlm = p_ilm
//
// with summation over repeated indices.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tqft2d/error.hpp"
#include "tqft2d/scalar.hpp"
#include "tqft2d/tensor.hpp"

namespace tqft2d {

template <class S>
class TqftData {
 public:
  using scalar_type = S;
  using traits = scalar_traits<S>;

  // d has `dim` entries, p has dim^3 entries (row-major). Throws unless p is
  // fully symmetric.
  TqftData(std::size_t dim, std::vector<S> d, std::vector<S> p)
      : TqftData(dim, std::move(d), std::move(p), Unchecked{}) {
    if (!p_symmetric())
      throw InvalidArgument("pants tensor is not symmetric under index permutations");
  }

  // Skips the symmetry check. Only meant for exhibiting data that breaks the
  // relations.
  static TqftData unchecked(std::size_t dim, std::vector<S> d, std::vector<S> p) {
    return TqftData(dim, std::move(d), std::move(p), Unchecked{});
  }

  std::size_t dim() const noexcept { return dim_; }
  const S& d(std::size_t i) const { return d_.entries()[i]; }
  const S& p(std::size_t i, std::size_t j, std::size_t k) const {
    return p_.entries()[(i * dim_ + j) * dim_ + k];
  }

  // Disk tensor d_i e_i and pants tensor p_ijk e_i⊗e_j⊗e_k, all indices `+`.
  const LabeledTensor<S>& disk() const noexcept { return d_; }
  const LabeledTensor<S>& pants() const noexcept { return p_; }

  bool p_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (p(i, j, k) != p(j, i, k) || p(i, j, k) != p(i, k, j)) return false;
    return true;
  }

 private:
  struct Unchecked {};

  TqftData(std::size_t dim, std::vector<S> d, std::vector<S> p, Unchecked)
      : dim_(dim),
        d_(checked_dim(dim), {{"i", Orientation::Plus}}, std::move(d)),
        p_(dim, {{"i", Orientation::Plus}, {"j", Orientation::Plus}, {"k", Orientation::Plus}},
           std::move(p)) {}

  static std::size_t checked_dim(std::size_t dim) {
    if (dim == 0) throw InvalidArgument("TQFT dimension must be positive");
    return dim;
  }

  std::size_t dim_;
  LabeledTensor<S> d_;
  LabeledTensor<S> p_;
};

template <class S>
struct RelationResult {
  bool pass = true;
  typename scalar_traits<S>::magnitude_type max_violation{0};
};

template <class S>
struct RelationReport {
  std::array<RelationResult<S>, 4> relations;

  bool pass() const {
    return std::all_of(relations.begin(), relations.end(),
                       [](const RelationResult<S>& r) { return r.pass; });
  }
};

namespace detail {

template <class S>
void record(RelationResult<S>& r, const S& lhs, const S& rhs) {
  auto v = scalar_traits<S>::distance(lhs, rhs);
  if (v > r.max_violation) r.max_violation = v;
}

}  // namespace detail

template <class S>
RelationReport<S> check_relations(const TqftData<S>& data, double tol = kDefaultTolerance) {
  using T = scalar_traits<S>;
  const std::size_t n = data.dim();
  RelationReport<S> report;
  auto& [r1, r2, r3, r4] = report.relations;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
          S lhs = T::zero(), rhs = T::zero();
          for (std::size_t k = 0; k < n; ++k) {
            lhs += data.p(i, j, k) * data.p(k, l, m);
            rhs += data.p(i, l, k) * data.p(k, j, m);
          }
          detail::record(r1, lhs, rhs);
        }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        detail::record(r2, data.p(i, j, k), data.p(j, i, k));
        detail::record(r2, data.p(i, j, k), data.p(i, k, j));
      }

  for (std::size_t i = 0; i < n; ++i) {
    S lhs = T::zero();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) lhs += data.d(k) * data.p(k, i, j) * data.d(j);
    detail::record(r3, lhs, data.d(i));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m) {
        S lhs = T::zero();
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t j = 0; j < n; ++j)
            lhs += data.d(k) * data.p(k, i, j) * data.p(j, l, m);
        detail::record(r4, lhs, data.p(i, l, m));
      }

  for (auto& r : report.relations) r.pass = T::within(r.max_violation, tol);
  return report;
}

// c_ij = d_k p_kij, the cylinder. Indices default to `+`.
template <class S>
LabeledTensor<S> annulus_tensor(const TqftData<S>& data, const std::string& first = "i",
                                const std::string& second = "j") {
  const std::size_t n = data.dim();
  auto c = LabeledTensor<S>::zeros(n, {{first, Orientation::Plus}, {second, Orientation::Plus}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      S acc = scalar_traits<S>::zero();
      for (std::size_t k = 0; k < n; ++k) acc += data.d(k) * data.p(k, i, j);
      c(i, j) = acc;
    }
  return c;
}

// Tensors of the surfaces that admit no pants decomposition.
template <class S>
struct BaseInvariants {
  LabeledTensor<S> empty;    // 1
  LabeledTensor<S> sphere;   // d_i d_i
  LabeledTensor<S> disk;     // d_i
  LabeledTensor<S> annulus;  // d_k p_kij
  LabeledTensor<S> torus;    // d_k p_kii
};

template <class S>
BaseInvariants<S> base_invariants(const TqftData<S>& data) {
  using T = scalar_traits<S>;
  const std::size_t n = data.dim();
  S sphere = T::zero(), torus = T::zero();
  for (std::size_t i = 0; i < n; ++i) sphere += data.d(i) * data.d(i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) torus += data.d(k) * data.p(k, i, i);
  return {LabeledTensor<S>::scalar(T::one(), n), LabeledTensor<S>::scalar(sphere, n),
          data.disk(), annulus_tensor(data), LabeledTensor<S>::scalar(torus, n)};
}

// Unitary data: every entry of d and p is real.
template <class S>
bool hermitian_check(const TqftData<S>& data, double tol = kDefaultTolerance) {
  auto real = [&](const LabeledTensor<S>& t) {
    return std::all_of(t.entries().begin(), t.entries().end(),
                       [&](const S& x) { return scalar_traits<S>::is_real(x, tol); });
  };
  return real(data.disk()) && real(data.pants());
}

// Direct sum of one-dimensional solutions: d_i = t_i, p_iii = 1/t_i.
template <class S>
TqftData<S> diagonal_family(const std::vector<S>& t) {
  using T = scalar_traits<S>;
  const std::size_t n = t.size();
  if (n == 0) throw InvalidArgument("diagonal family needs at least one parameter");
  std::vector<S> p(n * n * n, T::zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (T::is_zero(t[i])) throw InvalidArgument("diagonal family parameter must be nonzero");
    p[(i * n + i) * n + i] = T::inverse(t[i]);
  }
  return TqftData<S>(n, t, std::move(p));
}

inline constexpr int kMaxSearchHeight = 6;

// Distinct rationals a/b with |a| <= height and 1 <= b <= height, ascending.
inline std::vector<Rational> rationals_of_height(int height) {
  std::vector<Rational> values;
  for (int b = 1; b <= height; ++b)
    for (int a = -height; a <= height; ++a) {
      Rational q(a, b);
      q.canonicalize();
      values.push_back(q);
    }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// Every one-dimensional datum (d_1, p_111) on the height grid that passes
// check_relations, ordered by (d, p).
inline std::vector<TqftData<Rational>> grid_search_dim1(int height) {
  if (height < 1 || height > kMaxSearchHeight)
    throw InvalidArgument("search height must lie in [1, " + std::to_string(kMaxSearchHeight) +
                          "]");
  const auto values = rationals_of_height(height);
  std::vector<TqftData<Rational>> found;
  for (const auto& d : values)
    for (const auto& p : values) {
      TqftData<Rational> candidate(1, {d}, {p});
      if (check_relations(candidate).pass()) found.push_back(std::move(candidate));
    }
  return found;
}

}  // namespace tqft2d
