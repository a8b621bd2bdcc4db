#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "tdhom/error.hpp"
#include "tdhom/scalar.hpp"

namespace tdhom {

/// A permutation of {0, …, n−1} stored by its images.
///
/// Acting on argument lists, σ sends (x_0, …, x_{n−1}) to
/// (x_{σ(0)}, …, x_{σ(n−1)}); this is the convention used throughout for
/// h∘σ and for the Sweedler-leg routing of twisted operators.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto i : images_) {
      if (i >= images_.size() || seen[i])
        throw InvalidPermutation("image array is not a bijection of 0..n-1");
      seen[i] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Permutation(std::move(v));
  }

  /// Builds a permutation from 0-based disjoint cycles; (a b c) sends a→b→c→a.
  static Permutation from_cycles(std::size_t n, std::initializer_list<std::vector<std::size_t>> cycles) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    std::vector<bool> touched(n, false);
    for (const auto& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const auto from = cycle[k];
        const auto to = cycle[(k + 1) % cycle.size()];
        if (from >= n || to >= n || touched[from]) throw InvalidPermutation("bad cycle notation");
        touched[from] = true;
        v[from] = to;
      }
    }
    return Permutation(std::move(v));
  }

  /// All of S_n in lexicographic order of image arrays.
  static std::vector<Permutation> all(std::size_t n) {
    std::vector<Permutation> out;
    auto v = identity(n).images_;
    do {
      out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// +1 or −1 by inversion count.
  int sign() const {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t j = i + 1; j < images_.size(); ++j)
        if (images_[i] > images_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
  }

  /// (a∘b)(i) = a(b(i)).
  friend Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw InvalidPermutation("composing permutations of different sizes");
    std::vector<std::size_t> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.images_[b.images_[i]];
    return Permutation(std::move(v));
  }

  /// Reorders a list so that out[i] = in[σ(i)].
  template <class T>
  std::vector<T> apply_to(const std::vector<T>& in) const {
    if (in.size() != images_.size()) throw ShapeError("permutation size does not match list length");
    std::vector<T> out;
    out.reserve(in.size());
    for (auto i : images_) out.push_back(in[i]);
    return out;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(images_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

 private:
  std::vector<std::size_t> images_;
};

/// (−1)^σ as an exact scalar.
inline Scalar permutation_sign(const Permutation& p) { return Scalar(p.sign()); }

}  // namespace tdhom
