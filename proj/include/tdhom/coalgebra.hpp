#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tdhom/error.hpp"
#include "tdhom/multilinear_map.hpp"
#include "tdhom/scalar.hpp"

namespace tdhom {

/// Δ(c_source) ∋ coeff · c_left ⊗ c_right.
struct CoproductTerm {
  std::size_t source = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  Scalar coeff;

  friend bool operator==(const CoproductTerm&, const CoproductTerm&) = default;
};

/// Sparse element of C^{⊗n}: index tuple ↦ coefficient.
using SweedlerExpansion = std::map<std::vector<std::size_t>, Scalar>;

enum class SymmetryClass { cocommutative, skew_cocommutative, neither };

inline std::string to_string(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::cocommutative:
      return "cocommutative";
    case SymmetryClass::skew_cocommutative:
      return "skew_cocommutative";
    case SymmetryClass::neither:
      break;
  }
  return "neither";
}

/// Sweedler expansions of Δ^{(n−1)}(c) for every basis element c.
struct IteratedCoproduct {
  std::size_t order = 1;
  std::vector<SweedlerExpansion> expansions;
};

/// Applies Δ to leg `leg` of every expansion, raising the order by one.
inline IteratedCoproduct apply_coproduct_at_leg(const IteratedCoproduct& in,
                                                const std::vector<SweedlerExpansion>& delta, std::size_t leg) {
  if (leg >= in.order) throw ArgumentError("coproduct leg out of range");
  IteratedCoproduct out{in.order + 1, std::vector<SweedlerExpansion>(in.expansions.size())};
  for (std::size_t c = 0; c < in.expansions.size(); ++c) {
    for (const auto& [tuple, q] : in.expansions[c]) {
      for (const auto& [split, p] : delta[tuple[leg]]) {
        std::vector<std::size_t> t(tuple.begin(), tuple.begin() + leg);
        t.push_back(split[0]);
        t.push_back(split[1]);
        t.insert(t.end(), tuple.begin() + leg + 1, tuple.end());
        auto& slot = out.expansions[c][t];
        slot += q * p;
        if (slot == 0) out.expansions[c].erase(t);
      }
    }
  }
  return out;
}

namespace detail {

inline std::string tuple_label(const BasedSpace& space, const std::vector<std::size_t>& t) {
  std::string s;
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "⊗" : "") + space.labels[t[k]];
  return s;
}

}  // namespace detail

/// A finite-dimensional, counit-free coalgebra given by sparse coproduct
/// constants. Copies share the underlying data and its coproduct cache.
class Coalgebra {
 public:
  Coalgebra() : impl_(std::make_shared<Impl>()) {}

  Coalgebra(BasedSpace space, std::vector<CoproductTerm> terms) : impl_(std::make_shared<Impl>()) {
    impl_->space = std::move(space);
    const auto n = impl_->space.dim();
    impl_->delta.resize(n);
    for (const auto& t : terms) {
      if (t.source >= n || t.left >= n || t.right >= n)
        throw ArgumentError("malformed coalgebra " + impl_->space.name + ": coproduct index out of range");
      auto& slot = impl_->delta[t.source][{t.left, t.right}];
      slot += t.coeff;
      if (slot == 0) impl_->delta[t.source].erase({t.left, t.right});
    }
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [split, q] : impl_->delta[i]) impl_->terms.push_back({i, split[0], split[1], q});
  }

  const BasedSpace& space() const { return impl_->space; }
  std::size_t dim() const { return impl_->space.dim(); }
  const std::string& name() const { return impl_->space.name; }

  /// Canonical (sorted, merged, nonzero) coproduct terms.
  const std::vector<CoproductTerm>& terms() const { return impl_->terms; }

  /// Δ(c_i) as a Sweedler expansion with 2-tuples.
  const SweedlerExpansion& coproduct(std::size_t i) const { return impl_->delta.at(i); }
  const std::vector<SweedlerExpansion>& coproduct_table() const { return impl_->delta; }

  bool is_zero() const { return impl_->terms.empty(); }

  /// Δ^{(n−1)} = (Δ⊗1⊗…⊗1)∘…∘(Δ⊗1)∘Δ, cached; no axiom check.
  const IteratedCoproduct& iterated_unchecked(std::size_t n) const {
    if (n == 0) throw ArgumentError("iterated coproduct order must be at least 1");
    std::lock_guard lock(impl_->mutex);
    auto& cache = impl_->iterated;
    if (cache.empty()) {
      IteratedCoproduct id{1, std::vector<SweedlerExpansion>(dim())};
      for (std::size_t i = 0; i < dim(); ++i) id.expansions[i][{i}] = 1;
      cache.push_back(std::make_unique<IteratedCoproduct>(std::move(id)));
    }
    while (cache.size() < n)
      cache.push_back(std::make_unique<IteratedCoproduct>(apply_coproduct_at_leg(*cache.back(), impl_->delta, 0)));
    return *cache[n - 1];
  }

  /// Result of comparing (Δ⊗1)Δ with (1⊗Δ)Δ; computed once per coalgebra.
  const CheckResult& coassociativity() const {
    const auto& once = iterated_unchecked(2);
    std::lock_guard lock(impl_->mutex);
    if (!impl_->coassociativity) {
      const auto left = apply_coproduct_at_leg(once, impl_->delta, 0);
      const auto right = apply_coproduct_at_leg(once, impl_->delta, 1);
      CheckResult r{"coassociativity", true, std::nullopt, {}};
      for (std::size_t i = 0; i < dim() && r.passed; ++i) {
        auto diff = left.expansions[i];
        for (const auto& [t, q] : right.expansions[i]) {
          auto& slot = diff[t];
          slot -= q;
          if (slot == 0) diff.erase(t);
        }
        if (diff.empty()) continue;
        Witness w;
        w.tuple = {space().labels[i]};
        for (const auto& [t, q] : diff) w.residual.emplace_back(detail::tuple_label(space(), t), q);
        r.passed = false;
        r.witness = std::move(w);
      }
      impl_->coassociativity = std::move(r);
    }
    return *impl_->coassociativity;
  }

  /// C→C⊗C as a multilinear map with codomain C⊗C.
  MultilinearMap as_map() const {
    const auto cc = tensor_space({space(), space()});
    MultilinearMap m({space()}, cc);
    for (const auto& t : terms()) m.add({t.source}, t.left * dim() + t.right, t.coeff);
    return m;
  }

 private:
  struct Impl {
    BasedSpace space;
    std::vector<SweedlerExpansion> delta;
    std::vector<CoproductTerm> terms;
    std::mutex mutex;
    std::vector<std::unique_ptr<IteratedCoproduct>> iterated;
    std::optional<CheckResult> coassociativity;
  };
  std::shared_ptr<Impl> impl_;
};

/// Compares (Δ⊗1)Δ with (1⊗Δ)Δ on every basis element.
inline CheckResult check_coassociativity(const Coalgebra& c) { return c.coassociativity(); }

/// Δ^{(n−1)}: C → C^{⊗n}; refuses non-coassociative input.
inline const IteratedCoproduct& iterated_coproduct(const Coalgebra& c, std::size_t n) {
  if (n == 0) throw ArgumentError("iterated coproduct order must be at least 1");
  if (n >= 2) {
    const auto& check = c.coassociativity();
    if (!check.passed)
      throw AxiomFailure("coalgebra " + c.name() + " is not coassociative " + check.witness->describe());
  }
  return c.iterated_unchecked(n);
}

inline SymmetryClass symmetry_class(const Coalgebra& c) {
  bool symmetric = true;
  bool skew = true;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const auto& d = c.coproduct(i);
    for (const auto& [t, q] : d) {
      auto it = d.find({t[1], t[0]});
      const Scalar swapped = it == d.end() ? Scalar(0) : it->second;
      if (swapped != q) symmetric = false;
      if (swapped != -q) skew = false;
    }
  }
  if (symmetric) return SymmetryClass::cocommutative;
  if (skew) return SymmetryClass::skew_cocommutative;
  return SymmetryClass::neither;
}

/// τΔ = −Δ. Δ = 0 is both cocommutative and skew cocommutative.
inline bool is_skew_cocommutative(const Coalgebra& c) {
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const auto& d = c.coproduct(i);
    for (const auto& [t, q] : d) {
      auto it = d.find({t[1], t[0]});
      if (it == d.end() || it->second != -q) return false;
    }
  }
  return true;
}

/// Δ = 0 on the given space.
inline Coalgebra build_zero_coalgebra(BasedSpace space) { return Coalgebra(std::move(space), {}); }

/// Tensor coalgebra on V truncated at word length maxdeg, with deconcatenation.
/// The reduced form has no empty word; `counital` adds it (label "1").
inline Coalgebra build_tensor_coalgebra(const BasedSpace& v, std::size_t maxdeg, bool counital = false,
                                        std::string name = "") {
  if (maxdeg < 1) throw ArgumentError("tensor coalgebra needs maxdeg >= 1");
  std::vector<std::vector<std::size_t>> words;
  if (counital) words.push_back({});
  std::vector<std::vector<std::size_t>> level{{}};
  for (std::size_t len = 1; len <= maxdeg; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : level)
      for (std::size_t a = 0; a < v.dim(); ++a) {
        auto x = w;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    words.insert(words.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::map<std::vector<std::size_t>, std::size_t> index;
  BasedSpace space{name.empty() ? "T" + std::to_string(maxdeg) + "(" + v.name + ")" : name, {}};
  for (const auto& w : words) {
    index[w] = space.labels.size();
    std::string label;
    for (auto a : w) label += v.labels[a];
    space.labels.push_back(w.empty() ? "1" : label);
  }
  std::vector<CoproductTerm> terms;
  for (const auto& w : words) {
    const std::size_t lo = counital ? 0 : 1;
    const std::size_t hi = counital ? w.size() : w.size() - std::min<std::size_t>(w.size(), 1);
    for (std::size_t cut = lo; cut <= hi && !w.empty(); ++cut) {
      std::vector<std::size_t> a(w.begin(), w.begin() + cut), b(w.begin() + cut, w.end());
      terms.push_back({index[w], index[a], index[b], Scalar(1)});
    }
    if (w.empty() && counital) terms.push_back({index[w], index[w], index[w], Scalar(1)});
  }
  return Coalgebra(std::move(space), std::move(terms));
}

/// Symmetric tensors of degree 1..maxdeg in the monomial basis with the
/// reduced deshuffle coproduct Δ(x^α) = Σ_{0<β<α} C(α,β) x^β ⊗ x^{α−β}.
inline Coalgebra build_symmetric_coalgebra(const BasedSpace& v, std::size_t maxdeg, std::string name = "") {
  if (maxdeg < 1) throw ArgumentError("symmetric coalgebra needs maxdeg >= 1");
  // Multisets as sorted words, by degree then lexicographically.
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::vector<std::size_t>> level{{}};
  for (std::size_t deg = 1; deg <= maxdeg; ++deg) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : level)
      for (std::size_t a = s.empty() ? 0 : s.back(); a < v.dim(); ++a) {
        auto x = s;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    sets.insert(sets.end(), next.begin(), next.end());
    level = std::move(next);
  }
  auto counts = [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> c(v.dim(), 0);
    for (auto a : s) ++c[a];
    return c;
  };
  std::map<std::vector<std::size_t>, std::size_t> index;
  BasedSpace space{name.empty() ? "S" + std::to_string(maxdeg) + "(" + v.name + ")" : name, {}};
  for (const auto& s : sets) {
    index[counts(s)] = space.labels.size();
    std::string label;
    for (std::size_t k = 0; k < s.size(); ++k) label += (k ? "·" : "") + v.labels[s[k]];
    space.labels.push_back(label);
  }
  std::vector<CoproductTerm> terms;
  for (const auto& s : sets) {
    const auto alpha = counts(s);
    std::vector<std::size_t> beta(v.dim(), 0);
    // Enumerate 0 ≤ β ≤ α.
    while (true) {
      std::size_t deg_b = 0;
      for (auto b : beta) deg_b += b;
      if (deg_b > 0 && deg_b < s.size()) {
        mpz_class mult = 1;
        std::vector<std::size_t> gamma(v.dim());
        for (std::size_t a = 0; a < v.dim(); ++a) {
          mpz_class binom;
          mpz_bin_uiui(binom.get_mpz_t(), alpha[a], beta[a]);
          mult *= binom;
          gamma[a] = alpha[a] - beta[a];
        }
        terms.push_back({index[alpha], index[beta], index[gamma], Scalar(mult)});
      }
      std::size_t a = 0;
      while (a < v.dim() && beta[a] == alpha[a]) beta[a++] = 0;
      if (a == v.dim()) break;
      ++beta[a];
    }
  }
  return Coalgebra(std::move(space), std::move(terms));
}

/// V ⊕ Λ²V with Δ(v) = 0 and Δ(x∧y) = x⊗y − y⊗x; skew cocommutative.
inline Coalgebra build_exterior_square_coalgebra(const BasedSpace& v, std::string name = "") {
  if (v.dim() < 2) throw ArgumentError("exterior-square coalgebra needs dim V >= 2");
  BasedSpace space{name.empty() ? "E(" + v.name + ")" : name, v.labels};
  std::vector<CoproductTerm> terms;
  for (std::size_t x = 0; x < v.dim(); ++x)
    for (std::size_t y = x + 1; y < v.dim(); ++y) {
      const auto idx = space.labels.size();
      space.labels.push_back(v.labels[x] + "∧" + v.labels[y]);
      terms.push_back({idx, x, y, Scalar(1)});
      terms.push_back({idx, y, x, Scalar(-1)});
    }
  return Coalgebra(std::move(space), std::move(terms));
}

}  // namespace tdhom
