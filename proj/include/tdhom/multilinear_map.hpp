#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdhom/error.hpp"
#include "tdhom/permutation.hpp"
#include "tdhom/scalar.hpp"

namespace tdhom {

/// Finite-dimensional vector space with a named, ordered basis.
struct BasedSpace {
  std::string name;
  std::vector<std::string> labels;

  std::size_t dim() const { return labels.size(); }

  std::optional<std::size_t> index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return i;
    return std::nullopt;
  }

  /// The ground field as a 1-dimensional space.
  static BasedSpace ground(std::string name = "k") { return {std::move(name), {"1"}}; }

  friend bool operator==(const BasedSpace&, const BasedSpace&) = default;
};

/// V_1⊗…⊗V_n with row-major basis order and labels joined by "⊗".
inline BasedSpace tensor_space(const std::vector<BasedSpace>& factors) {
  BasedSpace out;
  out.labels = {""};
  for (std::size_t k = 0; k < factors.size(); ++k) {
    out.name += (k ? "⊗" : "") + factors[k].name;
    std::vector<std::string> next;
    for (const auto& prefix : out.labels)
      for (const auto& l : factors[k].labels) next.push_back(prefix.empty() ? l : prefix + "⊗" + l);
    out.labels = std::move(next);
  }
  if (factors.empty()) out = BasedSpace::ground();
  return out;
}

/// First failing basis tuple of an identity and the residual at that tuple.
struct Witness {
  std::vector<std::string> tuple;
  std::vector<std::pair<std::string, Scalar>> residual;

  std::string describe() const {
    std::string s = "at (";
    for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? ", " : "") + tuple[i];
    s += ") residual ";
    for (std::size_t i = 0; i < residual.size(); ++i)
      s += (i ? " + " : "") + to_string(residual[i].second) + "*" + residual[i].first;
    return s;
  }
};

/// A multilinear map V_1⊗…⊗V_n → W given by sparse structure constants.
///
/// Terms are keyed by (i_1, …, i_n, j) meaning e_{i_1}⊗…⊗e_{i_n} ↦ q·e_j.
/// Keys are kept sorted, so iteration order (and hence every witness) is
/// lexicographic in the input tuple.
class MultilinearMap {
 public:
  using Key = std::vector<std::size_t>;

  MultilinearMap() = default;
  MultilinearMap(std::vector<BasedSpace> domain, BasedSpace codomain)
      : domain_(std::move(domain)), codomain_(std::move(codomain)) {}

  std::size_t arity() const { return domain_.size(); }
  const std::vector<BasedSpace>& domain() const { return domain_; }
  const BasedSpace& codomain() const { return codomain_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::vector<std::size_t>& inputs, std::size_t output, const Scalar& coeff) {
    if (inputs.size() != domain_.size()) throw ShapeError("input tuple length does not match arity");
    for (std::size_t k = 0; k < inputs.size(); ++k)
      if (inputs[k] >= domain_[k].dim())
        throw ShapeError("input index out of range for space " + domain_[k].name);
    if (output >= codomain_.dim()) throw ShapeError("output index out of range for space " + codomain_.name);
    Key key = inputs;
    key.push_back(output);
    add_key(std::move(key), coeff);
  }

  /// Unchecked accumulation; the key must be in range.
  void add_key(Key key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Value on a basis tuple as a dense vector in W.
  Vector value(const std::vector<std::size_t>& inputs) const {
    Vector out(codomain_.dim(), Scalar(0));
    Key lo = inputs;
    lo.push_back(0);
    for (auto it = terms_.lower_bound(lo); it != terms_.end(); ++it) {
      if (!std::equal(inputs.begin(), inputs.end(), it->first.begin())) break;
      out[it->first.back()] += it->second;
    }
    return out;
  }

  Vector apply(const std::vector<Vector>& args) const {
    if (args.size() != arity()) throw ArityError("wrong number of arguments to multilinear map");
    for (std::size_t k = 0; k < args.size(); ++k)
      if (args[k].size() != domain_[k].dim()) throw ShapeError("argument has wrong dimension");
    Vector out(codomain_.dim(), Scalar(0));
    Scalar prod;
    for (const auto& [key, q] : terms_) {
      prod = q;
      for (std::size_t k = 0; k < args.size() && prod != 0; ++k) prod *= args[k][key[k]];
      if (prod != 0) out[key.back()] += prod;
    }
    return out;
  }

  /// h∘σ, i.e. (x_0, …, x_{n−1}) ↦ h(x_{σ(0)}, …, x_{σ(n−1)}).
  MultilinearMap permute_args(const Permutation& sigma) const {
    if (sigma.size() != arity()) throw ShapeError("permutation size does not match arity");
    std::vector<BasedSpace> dom(arity());
    for (std::size_t k = 0; k < arity(); ++k) dom[sigma(k)] = domain_[k];
    MultilinearMap out(std::move(dom), codomain_);
    for (const auto& [key, q] : terms_) {
      Key nk(key.size());
      for (std::size_t k = 0; k < arity(); ++k) nk[sigma(k)] = key[k];
      nk.back() = key.back();
      out.terms_.emplace(std::move(nk), q);
    }
    return out;
  }

  /// this∘(1^{⊗slot}⊗inner⊗1^{⊗…}); inner's codomain must be this map's slot-th factor.
  MultilinearMap compose(std::size_t slot, const MultilinearMap& inner) const {
    if (slot >= arity()) throw ShapeError("composition slot out of range");
    if (!(inner.codomain_ == domain_[slot]))
      throw ShapeError("cannot compose: " + inner.codomain_.name + " does not match slot space " + domain_[slot].name);
    std::vector<BasedSpace> dom(domain_.begin(), domain_.begin() + slot);
    dom.insert(dom.end(), inner.domain_.begin(), inner.domain_.end());
    dom.insert(dom.end(), domain_.begin() + slot + 1, domain_.end());
    MultilinearMap out(std::move(dom), codomain_);

    std::map<std::size_t, std::vector<std::pair<const Key*, const Scalar*>>> by_output;
    for (const auto& [key, q] : inner.terms_) by_output[key.back()].emplace_back(&key, &q);

    for (const auto& [key, q] : terms_) {
      auto found = by_output.find(key[slot]);
      if (found == by_output.end()) continue;
      for (const auto& [ikey, iq] : found->second) {
        Key nk(key.begin(), key.begin() + slot);
        nk.insert(nk.end(), ikey->begin(), ikey->end() - 1);
        nk.insert(nk.end(), key.begin() + slot + 1, key.end());
        out.add_key(std::move(nk), q * *iq);
      }
    }
    return out;
  }

  MultilinearMap scaled(const Scalar& c) const {
    MultilinearMap out(domain_, codomain_);
    if (c == 0) return out;
    for (const auto& [key, q] : terms_) out.terms_.emplace(key, q * c);
    return out;
  }

  MultilinearMap& operator+=(const MultilinearMap& other) {
    require_same_shape(other);
    for (const auto& [key, q] : other.terms_) add_key(key, q);
    return *this;
  }
  MultilinearMap& operator-=(const MultilinearMap& other) {
    require_same_shape(other);
    for (const auto& [key, q] : other.terms_) add_key(key, -q);
    return *this;
  }
  friend MultilinearMap operator+(MultilinearMap a, const MultilinearMap& b) { return a += b; }
  friend MultilinearMap operator-(MultilinearMap a, const MultilinearMap& b) { return a -= b; }

  friend bool operator==(const MultilinearMap&, const MultilinearMap&) = default;

  bool same_shape(const MultilinearMap& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_;
  }

  /// The lexicographically first input tuple with a nonzero value, if any.
  std::optional<Witness> first_nonzero() const {
    if (terms_.empty()) return std::nullopt;
    const auto& first = terms_.begin()->first;
    Witness w;
    for (std::size_t k = 0; k < arity(); ++k) w.tuple.push_back(domain_[k].labels[first[k]]);
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (!std::equal(first.begin(), first.end() - 1, it->first.begin())) break;
      w.residual.emplace_back(codomain_.labels[it->first.back()], it->second);
    }
    return w;
  }

 private:
  void require_same_shape(const MultilinearMap& other) const {
    if (other.arity() != arity() || other.codomain_.dim() != codomain_.dim())
      throw ShapeError("adding multilinear maps of different shapes");
    for (std::size_t k = 0; k < arity(); ++k)
      if (other.domain_[k].dim() != domain_[k].dim()) throw ShapeError("adding multilinear maps of different shapes");
  }

  std::vector<BasedSpace> domain_;
  BasedSpace codomain_;
  std::map<Key, Scalar> terms_;
};

/// A constant (arity 0) map picking out a vector of W.
inline MultilinearMap constant_map(const BasedSpace& codomain, const Vector& value) {
  MultilinearMap m({}, codomain);
  for (std::size_t j = 0; j < value.size(); ++j) m.add({}, j, value[j]);
  return m;
}

/// Identity W → W as an arity-1 map.
inline MultilinearMap identity_map(const BasedSpace& space) {
  MultilinearMap m({space}, space);
  for (std::size_t i = 0; i < space.dim(); ++i) m.add({i}, i, 1);
  return m;
}

/// Outcome of one named identity check.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<Witness> witness;
  std::string detail;

  static CheckResult from_residual(std::string name, const MultilinearMap& residual) {
    CheckResult r{std::move(name), true, residual.first_nonzero(), {}};
    r.passed = !r.witness.has_value();
    return r;
  }
};

/// A group of checks; passes iff every member passes.
struct CheckReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }

  void append(const CheckReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

}  // namespace tdhom
