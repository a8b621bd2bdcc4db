#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tdhom/coalgebra.hpp"
#include "tdhom/error.hpp"
#include "tdhom/matrix.hpp"
#include "tdhom/multilinear_map.hpp"
#include "tdhom/permutation.hpp"

namespace tdhom {

/// Hom(C,V) with the matrix-unit basis E_{v,c}; E_{v,c} has index v·dim C + c
/// and label "c↦v".
inline BasedSpace hom_space(const BasedSpace& c, const BasedSpace& v) {
  BasedSpace h{"Hom(" + c.name + "," + v.name + ")", {}};
  h.labels.reserve(c.dim() * v.dim());
  for (const auto& lv : v.labels)
    for (const auto& lc : c.labels) h.labels.push_back(lc + "↦" + lv);
  return h;
}

/// A linear map source → target as a dim(target)×dim(source) matrix.
class HomElement {
 public:
  HomElement() = default;
  HomElement(BasedSpace source, BasedSpace target)
      : source_(std::move(source)), target_(std::move(target)), matrix_(target_.dim(), source_.dim()) {}
  HomElement(BasedSpace source, BasedSpace target, RationalMatrix m)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(m)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
      throw ShapeError("hom element matrix does not match " + source_.name + "→" + target_.name);
  }

  /// The matrix unit c_{source_index} ↦ v_{target_index}.
  static HomElement unit(const BasedSpace& source, const BasedSpace& target, std::size_t target_index,
                         std::size_t source_index) {
    HomElement h(source, target);
    h.matrix_(target_index, source_index) = 1;
    return h;
  }

  /// From coordinates in hom_space(source, target).
  static HomElement from_coordinates(const BasedSpace& source, const BasedSpace& target, const Vector& x) {
    if (x.size() != source.dim() * target.dim()) throw ShapeError("hom coordinates have wrong length");
    HomElement h(source, target);
    for (std::size_t v = 0; v < target.dim(); ++v)
      for (std::size_t c = 0; c < source.dim(); ++c) h.matrix_(v, c) = x[v * source.dim() + c];
    return h;
  }

  Vector coordinates() const {
    Vector x(source_.dim() * target_.dim());
    for (std::size_t v = 0; v < target_.dim(); ++v)
      for (std::size_t c = 0; c < source_.dim(); ++c) x[v * source_.dim() + c] = matrix_(v, c);
    return x;
  }

  const BasedSpace& source() const { return source_; }
  const BasedSpace& target() const { return target_; }
  const RationalMatrix& matrix() const { return matrix_; }
  Scalar& operator()(std::size_t v, std::size_t c) { return matrix_(v, c); }
  const Scalar& operator()(std::size_t v, std::size_t c) const { return matrix_(v, c); }

  /// f(c_i) as a vector in the target.
  Vector at(std::size_t i) const { return matrix_.column(i); }

  MultilinearMap as_map() const {
    MultilinearMap m({source_}, target_);
    for (std::size_t v = 0; v < target_.dim(); ++v)
      for (std::size_t c = 0; c < source_.dim(); ++c) m.add({c}, v, matrix_(v, c));
    return m;
  }

  HomElement& operator+=(const HomElement& o) {
    if (!(o.source_ == source_) || !(o.target_ == target_)) throw ShapeError("adding hom elements of different type");
    for (std::size_t v = 0; v < target_.dim(); ++v)
      for (std::size_t c = 0; c < source_.dim(); ++c) matrix_(v, c) += o.matrix_(v, c);
    return *this;
  }
  friend HomElement operator+(HomElement a, const HomElement& b) { return a += b; }
  HomElement scaled(const Scalar& s) const {
    HomElement h = *this;
    for (std::size_t v = 0; v < target_.dim(); ++v)
      for (std::size_t c = 0; c < source_.dim(); ++c) h.matrix_(v, c) *= s;
    return h;
  }

  friend bool operator==(const HomElement&, const HomElement&) = default;

 private:
  BasedSpace source_;
  BasedSpace target_;
  RationalMatrix matrix_;
};

/// g∘ζ for an arity-1 map ζ: A → source(g).
inline HomElement precompose(const HomElement& g, const MultilinearMap& zeta) {
  if (zeta.arity() != 1 || !(zeta.codomain() == g.source())) throw ShapeError("precomposition shape mismatch");
  HomElement out(zeta.domain()[0], g.target());
  for (const auto& [key, q] : zeta.terms())
    for (std::size_t v = 0; v < g.target().dim(); ++v) out(v, key[0]) += q * g(v, key[1]);
  return out;
}

/// ψ∘g for an arity-1 map ψ: target(g) → B.
inline HomElement postcompose(const MultilinearMap& psi, const HomElement& g) {
  if (psi.arity() != 1 || !(psi.domain()[0] == g.target())) throw ShapeError("postcomposition shape mismatch");
  HomElement out(g.source(), psi.codomain());
  for (const auto& [key, q] : psi.terms())
    for (std::size_t c = 0; c < g.source().dim(); ++c) out(key[1], c) += q * g(key[0], c);
  return out;
}

/// ζ_1⊗…⊗ζ_n for arity-1 maps, as an arity-1 map between tensor spaces.
inline MultilinearMap tensor_of_maps(const std::vector<MultilinearMap>& maps) {
  std::vector<BasedSpace> doms, cods;
  for (const auto& m : maps) {
    if (m.arity() != 1) throw ArityError("tensor_of_maps expects arity-1 maps");
    doms.push_back(m.domain()[0]);
    cods.push_back(m.codomain());
  }
  MultilinearMap out({tensor_space(doms)}, tensor_space(cods));
  std::vector<std::pair<std::size_t, std::size_t>> acc{{0, 0}};
  std::vector<Scalar> coeff{Scalar(1)};
  for (std::size_t k = 0; k < maps.size(); ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> next;
    std::vector<Scalar> next_coeff;
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (const auto& [key, q] : maps[k].terms()) {
        next.emplace_back(acc[a].first * doms[k].dim() + key[0], acc[a].second * cods[k].dim() + key[1]);
        next_coeff.push_back(coeff[a] * q);
      }
    acc = std::move(next);
    coeff = std::move(next_coeff);
  }
  for (std::size_t a = 0; a < acc.size(); ++a) out.add({acc[a].first}, acc[a].second, coeff[a]);
  return out;
}

/// σ_*: V_0⊗…⊗V_{n−1} → V_{σ(0)}⊗…⊗V_{σ(n−1)}, moving leg σ(i) to position i.
inline MultilinearMap leg_permutation_map(const std::vector<BasedSpace>& factors, const Permutation& sigma) {
  if (sigma.size() != factors.size()) throw ShapeError("permutation size does not match leg count");
  const auto src = tensor_space(factors);
  const auto dst = tensor_space(sigma.apply_to(factors));
  MultilinearMap out({src}, dst);
  std::vector<std::size_t> shape;
  for (const auto& f : factors) shape.push_back(f.dim());
  const auto dst_shape = sigma.apply_to(shape);
  std::vector<std::size_t> idx(factors.size(), 0);
  for (std::size_t flat = 0; flat < src.dim(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t k = factors.size(); k-- > 0;) {
      idx[k] = rest % shape[k];
      rest /= shape[k];
    }
    const auto moved = sigma.apply_to(idx);
    std::size_t target = 0;
    for (std::size_t k = 0; k < moved.size(); ++k) target = target * dst_shape[k] + moved[k];
    out.add({flat}, target, 1);
  }
  return out;
}

/// Λ(f_1⊗…⊗f_n): C_1×…×C_n → L_1⊗…⊗L_n, (c_1, …, c_n) ↦ f_1(c_1)⊗…⊗f_n(c_n).
inline MultilinearMap interchange(const std::vector<HomElement>& fs) {
  if (fs.empty()) throw ArityError("interchange needs at least one map");
  std::vector<BasedSpace> sources, targets;
  for (const auto& f : fs) {
    sources.push_back(f.source());
    targets.push_back(f.target());
  }
  MultilinearMap out(sources, tensor_space(targets));
  // Accumulate (source tuple, target flat index, coefficient) one factor at a time.
  struct Partial {
    std::vector<std::size_t> cs;
    std::size_t flat;
    Scalar q;
  };
  std::vector<Partial> acc{{{}, 0, Scalar(1)}};
  for (const auto& f : fs) {
    std::vector<Partial> next;
    for (const auto& p : acc)
      for (std::size_t c = 0; c < f.source().dim(); ++c)
        for (std::size_t v = 0; v < f.target().dim(); ++v) {
          if (f(v, c) == 0) continue;
          auto cs = p.cs;
          cs.push_back(c);
          next.push_back({std::move(cs), p.flat * f.target().dim() + v, p.q * f(v, c)});
        }
    acc = std::move(next);
  }
  for (const auto& p : acc) out.add(p.cs, p.flat, p.q);
  return out;
}

inline bool same_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  return a.space() == b.space() && a.terms() == b.terms();
}

/// Φ^σ = φ_*∘Δ^{(n−1)*}∘σ^*∘Λ for φ: L_0⊗…⊗L_{n−1} → V; σ = identity gives the
/// induced map Φ. Argument i is fed Sweedler leg σ(i).
class InducedOperator {
 public:
  InducedOperator() = default;
  InducedOperator(MultilinearMap base, Coalgebra c, Permutation twist)
      : base_(std::move(base)), coalgebra_(std::move(c)), twist_(std::move(twist)) {
    if (base_.arity() == 0) throw ArityError("induced operators need arity at least 1");
    if (twist_.size() != base_.arity()) throw ShapeError("twist size does not match arity");
    iterated_coproduct(coalgebra_, base_.arity());
  }

  std::size_t arity() const { return base_.arity(); }
  const MultilinearMap& base() const { return base_; }
  const Coalgebra& coalgebra() const { return coalgebra_; }
  const Permutation& twist() const { return twist_; }
  bool is_twisted() const { return !twist_.is_identity(); }

  std::vector<BasedSpace> domain() const {
    std::vector<BasedSpace> d;
    for (const auto& l : base_.domain()) d.push_back(hom_space(coalgebra_.space(), l));
    return d;
  }
  BasedSpace codomain() const { return hom_space(coalgebra_.space(), base_.codomain()); }

  InducedOperator with_twist(Permutation sigma) const { return InducedOperator(base_, coalgebra_, std::move(sigma)); }

  /// Φ^σ(f_0, …, f_{n−1})(c) = Σ φ(f_0(c_{σ(0)}), …, f_{n−1}(c_{σ(n−1)})).
  HomElement evaluate(const std::vector<HomElement>& args) const {
    if (args.size() != arity()) throw ArityError("wrong number of hom arguments");
    for (std::size_t i = 0; i < arity(); ++i)
      if (!(args[i].source() == coalgebra_.space()) || !(args[i].target() == base_.domain()[i]))
        throw ShapeError("hom argument " + std::to_string(i) + " has the wrong type");
    HomElement out(coalgebra_.space(), base_.codomain());
    const auto& expansions = iterated_coproduct(coalgebra_, arity()).expansions;
    std::vector<Vector> xs(arity());
    for (std::size_t c = 0; c < coalgebra_.dim(); ++c)
      for (const auto& [t, q] : expansions[c]) {
        for (std::size_t i = 0; i < arity(); ++i) xs[i] = args[i].at(t[twist_(i)]);
        const auto y = base_.apply(xs);
        for (std::size_t w = 0; w < y.size(); ++w)
          if (y[w] != 0) out(w, c) += q * y[w];
      }
    return out;
  }

  /// Structure constants of the operator on the matrix-unit bases.
  MultilinearMap materialize() const {
    MultilinearMap out(domain(), codomain());
    const auto dc = coalgebra_.dim();
    const auto& expansions = iterated_coproduct(coalgebra_, arity()).expansions;
    MultilinearMap::Key key(arity() + 1);
    for (std::size_t c = 0; c < dc; ++c)
      for (const auto& [t, q] : expansions[c])
        for (const auto& [phi_key, p] : base_.terms()) {
          for (std::size_t i = 0; i < arity(); ++i) key[i] = phi_key[i] * dc + t[twist_(i)];
          key.back() = phi_key.back() * dc + c;
          out.add_key(key, q * p);
        }
    return out;
  }

 private:
  MultilinearMap base_;
  Coalgebra coalgebra_;
  Permutation twist_;
};

/// Φ = φ_*∘Δ^{(n−1)*}∘Λ.
inline InducedOperator induced(const MultilinearMap& phi, const Coalgebra& c) {
  return InducedOperator(phi, c, Permutation::identity(phi.arity()));
}

/// Φ^σ.
inline InducedOperator twisted(const MultilinearMap& phi, const Coalgebra& c, const Permutation& sigma) {
  if (sigma.size() != phi.arity()) throw ShapeError("twist size does not match arity");
  return InducedOperator(phi, c, sigma);
}

/// Ψ∘(1^{⊗slot}⊗Φ⊗1^{⊗…}) as the operator induced by ψ∘(1^{⊗slot}⊗φ⊗1^{⊗…}).
inline InducedOperator compose_induced(const InducedOperator& psi, const InducedOperator& phi, std::size_t slot) {
  if (psi.is_twisted() || phi.is_twisted()) throw ArgumentError("compose_induced takes untwisted operators only");
  if (!same_coalgebra(psi.coalgebra(), phi.coalgebra()))
    throw ShapeError("compose_induced needs both operators over the same coalgebra");
  return induced(psi.base().compose(slot, phi.base()), psi.coalgebra());
}

/// Φ∘σ = (−1)^σ Φ^{σ⁻¹} for every σ ∈ S_n, as operator identities.
inline CheckReport check_td_skew(const MultilinearMap& phi, const Coalgebra& c, std::size_t max_arity = 4) {
  const auto n = phi.arity();
  if (n > max_arity)
    throw GuardRefusal("TD skew check refused for arity " + std::to_string(n) + " (limit " +
                       std::to_string(max_arity) + ")");
  CheckReport report{"td skew of " + c.name(), {}};
  const auto plain = induced(phi, c).materialize();
  for (const auto& sigma : Permutation::all(n)) {
    const auto rhs = twisted(phi, c, sigma.inverse()).materialize().scaled(permutation_sign(sigma));
    report.checks.push_back(CheckResult::from_residual("sigma=" + sigma.to_string(), plain.permute_args(sigma) - rhs));
  }
  return report;
}

}  // namespace tdhom
