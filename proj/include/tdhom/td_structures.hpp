#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tdhom/algebra.hpp"
#include "tdhom/coalgebra.hpp"
#include "tdhom/conventions.hpp"
#include "tdhom/convolution.hpp"
#include "tdhom/error.hpp"

namespace tdhom {

namespace detail {

inline void require_passing(const CheckReport& r, const std::string& what) {
  if (const auto* f = r.first_failure())
    throw PreconditionError(what + ": " + f->name + (f->witness ? " fails " + f->witness->describe() : " fails"));
}

inline void require_coassociative(const Coalgebra& c) {
  const auto& r = c.coassociativity();
  if (!r.passed) throw PreconditionError("coalgebra " + c.name() + " is not coassociative " + r.witness->describe());
}

/// (h^σ)∘σ for the operator induced by h: equals the operator induced by h∘σ.
inline MultilinearMap twisted_then_permuted(const MultilinearMap& h, const Coalgebra& c, const Permutation& sigma) {
  return twisted(h, c, sigma).materialize().permute_args(sigma);
}

/// M∘(1⊗M) + (M∘(1⊗M))∘ξ + (M∘(1⊗M))∘ξ² for a materialized binary operator.
inline MultilinearMap untwisted_jacobi_residual(const MultilinearMap& m) {
  const auto nested = m.compose(1, m);
  const auto xi = conventions::jacobi_cycle();
  return nested + nested.permute_args(xi) + nested.permute_args(compose(xi, xi));
}

}  // namespace detail

/// Φ = induced(φ) on Hom(C,L) for a Lie algebra L.
struct TDLieStructure {
  LieAlgebra lie;
  Coalgebra coalgebra;

  InducedOperator phi() const { return induced(lie.bracket(), coalgebra); }
};

/// Twisted skew symmetry Φ∘τ = −Φ^τ and the twisted Jacobi identity
/// Φ∘(1⊗Φ) + Φ∘(1⊗Φ)^ξ∘ξ + Φ∘(1⊗Φ)^{ξ²}∘ξ² = 0.
/// With check_axioms = false the Lie axioms of L are not required first.
inline CheckReport check_td_lie(const LieAlgebra& l, const Coalgebra& c, bool check_axioms = true) {
  if (check_axioms) detail::require_passing(check_lie(l), "check_td_lie needs a Lie algebra");
  detail::require_coassociative(c);
  const auto big_phi = induced(l.bracket(), c);
  const auto m = big_phi.materialize();
  const auto tau = conventions::swap_first_two(2);
  const auto skew = m.permute_args(tau) + twisted(l.bracket(), c, tau).materialize();

  // The first Jacobi term through compose_induced; the literal composite must agree.
  const auto nested = compose_induced(big_phi, big_phi, 1);
  const auto first = nested.materialize();
  const auto literal = m.compose(1, m);
  const auto xi = conventions::jacobi_cycle();
  const auto jacobi = first + detail::twisted_then_permuted(nested.base(), c, xi) +
                      detail::twisted_then_permuted(nested.base(), c, compose(xi, xi));

  CheckReport report{"td lie " + l.name() + " over " + c.name(), {}};
  report.checks.push_back(CheckResult::from_residual("twisted skew", skew));
  report.checks.push_back(CheckResult::from_residual("twisted jacobi", jacobi));
  report.checks.push_back(CheckResult::from_residual("composition is induced", first - literal));
  return report;
}

/// For cocommutative C: Φ∘τ = −Φ and the untwisted Jacobi identity.
inline CheckReport check_cocommutative_collapse(const LieAlgebra& l, const Coalgebra& c) {
  if (symmetry_class(c) != SymmetryClass::cocommutative)
    throw PreconditionError("coalgebra " + c.name() + " is " + to_string(symmetry_class(c)) + ", not cocommutative");
  detail::require_coassociative(c);
  const auto m = induced(l.bracket(), c).materialize();
  return {"cocommutative collapse " + l.name() + " over " + c.name(),
          {CheckResult::from_residual("skew symmetry", m.permute_args(conventions::swap_first_two(2)) + m),
           CheckResult::from_residual("jacobi", detail::untwisted_jacobi_residual(m))}};
}

/// For skew cocommutative C: Φ is symmetric and satisfies Jacobi; with
/// fg := Φ(f⊗g), on all matrix units f, g: fg = gf, (f²)f = 0 and
/// (f²g)f + f²(gf) = 0.
inline CheckReport check_jordan(const LieAlgebra& l, const Coalgebra& c) {
  if (!is_skew_cocommutative(c))
    throw PreconditionError("coalgebra " + c.name() + " is " + to_string(symmetry_class(c)) +
                            ", not skew cocommutative");
  detail::require_passing(check_lie(l), "check_jordan needs a Lie algebra");
  detail::require_coassociative(c);
  const auto op = induced(l.bracket(), c);
  const auto m = op.materialize();
  CheckReport report{"jordan " + l.name() + " over " + c.name(), {}};
  report.checks.push_back(
      CheckResult::from_residual("symmetry", m.permute_args(conventions::swap_first_two(2)) - m));
  report.checks.push_back(CheckResult::from_residual("jacobi", detail::untwisted_jacobi_residual(m)));

  const auto& cs = c.space();
  const auto& ls = l.space();
  std::vector<HomElement> units;
  for (std::size_t v = 0; v < ls.dim(); ++v)
    for (std::size_t k = 0; k < cs.dim(); ++k) units.push_back(HomElement::unit(cs, ls, v, k));
  const auto hom = hom_space(cs, ls);
  auto mul = [&](const HomElement& a, const HomElement& b) { return op.evaluate({a, b}); };
  auto fail_with = [&](CheckResult& r, std::vector<std::string> tuple, const HomElement& residual) {
    Witness w;
    w.tuple = std::move(tuple);
    const auto x = residual.coordinates();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) w.residual.emplace_back(hom.labels[i], x[i]);
    r.passed = false;
    r.witness = std::move(w);
  };

  CheckResult commutes{"fg = gf", true, std::nullopt, {}};
  CheckResult cube{"(f^2)f = 0", true, std::nullopt, {}};
  CheckResult jordan{"(f^2 g)f + f^2(gf) = 0", true, std::nullopt, {}};
  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto f2 = mul(units[i], units[i]);
    if (cube.passed) {
      const auto r = mul(f2, units[i]);
      if (!is_zero(r.coordinates())) fail_with(cube, {hom.labels[i]}, r);
    }
    for (std::size_t j = 0; j < units.size(); ++j) {
      const auto& f = units[i];
      const auto& g = units[j];
      if (commutes.passed) {
        const auto r = mul(f, g) + mul(g, f).scaled(-1);
        if (!is_zero(r.coordinates())) fail_with(commutes, {hom.labels[i], hom.labels[j]}, r);
      }
      if (jordan.passed) {
        const auto r = mul(mul(f2, g), f) + mul(f2, mul(g, f));
        if (!is_zero(r.coordinates())) fail_with(jordan, {hom.labels[i], hom.labels[j]}, r);
      }
    }
  }
  report.checks.push_back(std::move(commutes));
  report.checks.push_back(std::move(cube));
  report.checks.push_back(std::move(jordan));
  return report;
}

/// TD Lie for Φ, TD commutativity M∘τ = M^τ and the twisted derivation rule
/// Φ∘(1⊗M) = (M∘(1⊗Φ))^ξ∘ξ + (M∘(1⊗Φ))^{τ⊗1}∘(τ⊗1).
inline CheckReport check_td_poisson(const PoissonAlgebra& p, const Coalgebra& c, bool check_axioms = true) {
  if (check_axioms) detail::require_passing(check_poisson(p), "check_td_poisson needs a Poisson algebra");
  auto report = check_td_lie(p.lie(), c, false);
  report.subject = "td poisson " + p.name() + " over " + c.name();
  const auto tau2 = conventions::swap_first_two(2);
  const auto big_m = induced(p.product(), c).materialize();
  report.checks.push_back(CheckResult::from_residual(
      "td commutativity", big_m.permute_args(tau2) - twisted(p.product(), c, tau2).materialize()));

  const auto lhs = induced(p.bracket(), c).materialize().compose(1, big_m);
  const auto inner = p.product().compose(1, p.bracket());
  const auto rhs = detail::twisted_then_permuted(inner, c, conventions::poisson_cycle()) +
                   detail::twisted_then_permuted(inner, c, conventions::swap_first_two(3));
  report.checks.push_back(CheckResult::from_residual("twisted derivation", lhs - rhs));
  return report;
}

/// Hom(C,B) as a module over Hom(C,L) through Ψ = induced(ψ).
struct TDModuleStructure {
  LieModule module;
  Coalgebra coalgebra;

  TDLieStructure td() const { return {module.lie(), coalgebra}; }
  InducedOperator phi() const { return induced(module.lie().bracket(), coalgebra); }
  InducedOperator psi() const { return induced(module.action(), coalgebra); }
};

/// Ψ∘(Φ⊗1) = Ψ∘(1⊗Ψ) − (Ψ∘(1⊗Ψ))^τ∘τ with τ = (1 2) ∈ S_3.
inline CheckReport check_td_module(const TDModuleStructure& s, bool check_axioms = true) {
  if (check_axioms) detail::require_passing(check_module(s.module), "check_td_module needs a Lie module");
  detail::require_coassociative(s.coalgebra);
  const auto psi = s.psi().materialize();
  const auto phi = s.phi().materialize();
  const auto nested = s.module.action().compose(1, s.module.action());
  const auto residual = psi.compose(0, phi) - psi.compose(1, psi) +
                        detail::twisted_then_permuted(nested, s.coalgebra, conventions::swap_first_two(3));
  return {"td module " + s.module.name() + " over " + s.coalgebra.name(),
          {CheckResult::from_residual("td module identity", residual)}};
}

}  // namespace tdhom
