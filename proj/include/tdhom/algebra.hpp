#pragma once

#include <string>
#include <utility>

#include "tdhom/conventions.hpp"
#include "tdhom/error.hpp"
#include "tdhom/multilinear_map.hpp"

namespace tdhom {

namespace detail {

inline void require_binary_on(const MultilinearMap& m, const BasedSpace& a, const BasedSpace& b, const BasedSpace& out,
                              const std::string& what) {
  if (m.arity() != 2 || !(m.domain()[0] == a) || !(m.domain()[1] == b) || !(m.codomain() == out))
    throw ShapeError(what + " must be a map " + a.name + "⊗" + b.name + "→" + out.name);
}

}  // namespace detail

/// (L, φ) with φ: L⊗L→L given by structure constants.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, MultilinearMap bracket) : name_(std::move(name)), bracket_(std::move(bracket)) {
    if (bracket_.arity() != 2) throw ShapeError("Lie bracket must be binary");
    detail::require_binary_on(bracket_, bracket_.codomain(), bracket_.codomain(), bracket_.codomain(), "Lie bracket");
  }

  const std::string& name() const { return name_; }
  const BasedSpace& space() const { return bracket_.codomain(); }
  const MultilinearMap& bracket() const { return bracket_; }

 private:
  std::string name_;
  MultilinearMap bracket_;
};

/// B with ψ: L⊗B→B.
class LieModule {
 public:
  LieModule() = default;
  LieModule(std::string name, LieAlgebra lie, MultilinearMap action)
      : name_(std::move(name)), lie_(std::move(lie)), action_(std::move(action)) {
    detail::require_binary_on(action_, lie_.space(), action_.codomain(), action_.codomain(), "module action");
  }

  const std::string& name() const { return name_; }
  const LieAlgebra& lie() const { return lie_; }
  const BasedSpace& space() const { return action_.codomain(); }
  const MultilinearMap& action() const { return action_; }

 private:
  std::string name_;
  LieAlgebra lie_;
  MultilinearMap action_;
};

/// (A, μ) with μ: A⊗A→A.
class AssociativeAlgebra {
 public:
  AssociativeAlgebra() = default;
  AssociativeAlgebra(std::string name, MultilinearMap product) : name_(std::move(name)), product_(std::move(product)) {
    detail::require_binary_on(product_, product_.codomain(), product_.codomain(), product_.codomain(), "product");
  }

  const std::string& name() const { return name_; }
  const BasedSpace& space() const { return product_.codomain(); }
  const MultilinearMap& product() const { return product_; }

 private:
  std::string name_;
  MultilinearMap product_;
};

/// (L, φ, μ): a Lie bracket and a commutative associative product on one space.
class PoissonAlgebra {
 public:
  PoissonAlgebra() = default;
  PoissonAlgebra(std::string name, MultilinearMap bracket, MultilinearMap product)
      : name_(std::move(name)), bracket_(std::move(bracket)), product_(std::move(product)) {
    const auto& l = bracket_.codomain();
    detail::require_binary_on(bracket_, l, l, l, "Poisson bracket");
    detail::require_binary_on(product_, l, l, l, "Poisson product");
  }

  const std::string& name() const { return name_; }
  const BasedSpace& space() const { return bracket_.codomain(); }
  const MultilinearMap& bracket() const { return bracket_; }
  const MultilinearMap& product() const { return product_; }
  LieAlgebra lie() const { return LieAlgebra(name_, bracket_); }

 private:
  std::string name_;
  MultilinearMap bracket_;
  MultilinearMap product_;
};

/// φ∘τ = −φ, checked on every ordered basis pair.
inline CheckResult check_skew_symmetry(const MultilinearMap& phi, std::string name = "skew symmetry") {
  return CheckResult::from_residual(std::move(name), phi.permute_args(conventions::swap_first_two(2)) + phi);
}

/// φ∘(1⊗φ)∘(1 + ξ + ξ²) = 0 on every ordered basis triple.
inline CheckResult check_jacobi(const MultilinearMap& phi, std::string name = "jacobi") {
  const auto nested = phi.compose(1, phi);
  const auto xi = conventions::jacobi_cycle();
  const auto xi2 = compose(xi, xi);
  return CheckResult::from_residual(std::move(name), nested + nested.permute_args(xi) + nested.permute_args(xi2));
}

inline CheckResult check_associativity(const MultilinearMap& mu, std::string name = "associativity") {
  return CheckResult::from_residual(std::move(name), mu.compose(0, mu) - mu.compose(1, mu));
}

inline CheckResult check_commutativity(const MultilinearMap& mu, std::string name = "commutativity") {
  return CheckResult::from_residual(std::move(name), mu.permute_args(conventions::swap_first_two(2)) - mu);
}

inline CheckReport check_lie(const LieAlgebra& l) {
  return {"lie " + l.name(), {check_skew_symmetry(l.bracket()), check_jacobi(l.bracket())}};
}

/// ψ(φ(x₁,x₂),b) = ψ(x₁,ψ(x₂,b)) − ψ(x₂,ψ(x₁,b)).
inline CheckReport check_module(const LieModule& m) {
  const auto& psi = m.action();
  const auto nested = psi.compose(1, psi);
  const auto residual = psi.compose(0, m.lie().bracket()) - nested + nested.permute_args(conventions::swap_first_two(3));
  return {"module " + m.name(), {CheckResult::from_residual("module identity", residual)}};
}

inline CheckReport check_associative(const AssociativeAlgebra& a) {
  return {"associative " + a.name(), {check_associativity(a.product())}};
}

/// Lie axioms, associativity, commutativity and the derivation rule
/// φ∘(1⊗μ) = μ∘(1⊗φ)∘ξ + μ∘(1⊗φ)∘(τ⊗1).
inline CheckReport check_poisson(const PoissonAlgebra& p) {
  const auto& phi = p.bracket();
  const auto& mu = p.product();
  const auto inner = mu.compose(1, phi);
  const auto derivation = phi.compose(1, mu) - inner.permute_args(conventions::poisson_cycle()) -
                          inner.permute_args(conventions::swap_first_two(3));
  return {"poisson " + p.name(),
          {check_skew_symmetry(phi), check_jacobi(phi), check_associativity(mu), check_commutativity(mu),
           CheckResult::from_residual("derivation", derivation)}};
}

inline LieAlgebra abelian_lie_algebra(const BasedSpace& space, std::string name = "") {
  return LieAlgebra(name.empty() ? "abelian(" + space.name + ")" : std::move(name), MultilinearMap({space, space}, space));
}

/// B = L with ψ = φ.
inline LieModule adjoint_module(const LieAlgebra& l) { return LieModule(l.name() + "-adjoint", l, l.bracket()); }

/// ψ = 0 on the given space.
inline LieModule trivial_module(const LieAlgebra& l, const BasedSpace& b) {
  return LieModule(l.name() + "-trivial", l, MultilinearMap({l.space(), b}, b));
}

}  // namespace tdhom
