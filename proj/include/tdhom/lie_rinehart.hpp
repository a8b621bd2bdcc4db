#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdhom/algebra.hpp"
#include "tdhom/cohomology.hpp"
#include "tdhom/conventions.hpp"
#include "tdhom/convolution.hpp"
#include "tdhom/td_structures.hpp"

namespace tdhom {

/// (L, B) with ν: B⊗B→B, μ: B⊗L→L and ψ: L⊗B→B.
class LieRinehartPair {
 public:
  LieRinehartPair() = default;
  LieRinehartPair(std::string name, LieAlgebra lie, MultilinearMap nu, MultilinearMap mu, MultilinearMap psi)
      : name_(std::move(name)), lie_(std::move(lie)), nu_(std::move(nu)), mu_(std::move(mu)), psi_(std::move(psi)) {
    const auto& b = nu_.codomain();
    const auto& l = lie_.space();
    detail::require_binary_on(nu_, b, b, b, "Lie-Rinehart product");
    detail::require_binary_on(mu_, b, l, l, "Lie-Rinehart module product");
    detail::require_binary_on(psi_, l, b, b, "Lie-Rinehart action");
  }

  const std::string& name() const { return name_; }
  const LieAlgebra& lie() const { return lie_; }
  const BasedSpace& base_space() const { return nu_.codomain(); }
  const MultilinearMap& nu() const { return nu_; }
  const MultilinearMap& mu() const { return mu_; }
  const MultilinearMap& psi() const { return psi_; }
  LieModule module() const { return LieModule(name_ + "-action", lie_, psi_); }

 private:
  std::string name_;
  LieAlgebra lie_;
  MultilinearMap nu_;
  MultilinearMap mu_;
  MultilinearMap psi_;
};

namespace detail {

/// LRb residual φ∘(1⊗μ) − μ∘(1⊗φ)∘τ − μ∘(ψ⊗1) on L⊗B⊗L.
inline MultilinearMap lrb_residual(const LieRinehartPair& p) {
  const auto& phi = p.lie().bracket();
  return phi.compose(1, p.mu()) - p.mu().compose(1, phi).permute_args(conventions::swap_first_two(3)) -
         p.mu().compose(0, p.psi());
}

}  // namespace detail

/// Component axioms, the derivation rule, LRa, LRb and the rewritten LRb
/// φ∘(μ⊗1) = μ∘(1⊗φ) − μ∘(ψ⊗1)∘σ.
inline CheckReport check_lr(const LieRinehartPair& p) {
  const auto& phi = p.lie().bracket();
  const auto& nu = p.nu();
  const auto& mu = p.mu();
  const auto& psi = p.psi();
  const auto tau3 = conventions::swap_first_two(3);
  const auto sigma = conventions::lr_rewrite_cycle();

  CheckReport r{"lie-rinehart " + p.name(), {}};
  r.append(check_lie(p.lie()));
  r.checks.push_back(check_associativity(nu, "product associativity"));
  r.checks.push_back(CheckResult::from_residual("B-module on L", mu.compose(1, mu) - mu.compose(0, nu)));
  r.append(check_module(p.module()));
  r.checks.push_back(CheckResult::from_residual(
      "derivation", psi.compose(1, nu) - nu.compose(1, psi).permute_args(tau3) - nu.compose(0, psi)));
  r.checks.push_back(CheckResult::from_residual("LRa", psi.compose(0, mu) - nu.compose(1, psi)));
  const auto lrb = detail::lrb_residual(p);
  r.checks.push_back(CheckResult::from_residual("LRb", lrb));
  const auto rewritten = phi.compose(0, mu) - mu.compose(1, phi) + mu.compose(0, psi).permute_args(sigma);
  r.checks.push_back(CheckResult::from_residual("LRb rewritten", rewritten));
  r.checks.push_back(CheckResult::from_residual("LRb forms agree", rewritten + lrb.permute_args(sigma)));
  return r;
}

/// The induced operators Φ, Ψ, ν̄, μ̄ of a Lie–Rinehart pair over C.
struct TDLRStructure {
  LieRinehartPair pair;
  Coalgebra coalgebra;

  InducedOperator phi() const { return induced(pair.lie().bracket(), coalgebra); }
  InducedOperator psi() const { return induced(pair.psi(), coalgebra); }
  InducedOperator nu() const { return induced(pair.nu(), coalgebra); }
  InducedOperator mu() const { return induced(pair.mu(), coalgebra); }
  TDModuleStructure module() const { return {pair.module(), coalgebra}; }
};

/// TDLRa Ψ∘(μ̄⊗1) = ν̄∘(1⊗Ψ); TDLRb Φ∘(1⊗μ̄) = [μ̄∘(1⊗Φ)]^τ∘τ + μ̄∘(Ψ⊗1);
/// the twisted derivation rule Ψ∘(1⊗ν̄) = (ν̄∘(1⊗Ψ))^τ∘τ + ν̄∘(Ψ⊗1); the
/// rewritten TDLRb Φ∘(μ̄⊗1) = μ̄∘(1⊗Φ) − (μ̄∘(Ψ⊗1))^σ∘σ and the untwisted
/// module law μ̄∘(1⊗μ̄) = μ̄∘(ν̄⊗1).
inline CheckReport check_td_lr(const TDLRStructure& s, bool check_axioms = true) {
  if (check_axioms) detail::require_passing(check_lr(s.pair), "check_td_lr needs a Lie-Rinehart pair");
  detail::require_coassociative(s.coalgebra);
  const auto& c = s.coalgebra;
  const auto& p = s.pair;
  const auto phi = s.phi().materialize();
  const auto psi = s.psi().materialize();
  const auto nu = s.nu().materialize();
  const auto mu = s.mu().materialize();
  const auto tau3 = conventions::swap_first_two(3);
  const auto sigma = conventions::lr_rewrite_cycle();

  const auto tdlra = psi.compose(0, mu) - nu.compose(1, psi);
  const auto tdlrb = phi.compose(1, mu) -
                     detail::twisted_then_permuted(p.mu().compose(1, p.lie().bracket()), c, tau3) -
                     mu.compose(0, psi);
  const auto derivation = psi.compose(1, nu) - detail::twisted_then_permuted(p.nu().compose(1, p.psi()), c, tau3) -
                          nu.compose(0, psi);
  const auto rewritten = phi.compose(0, mu) - mu.compose(1, phi) +
                         detail::twisted_then_permuted(p.mu().compose(0, p.psi()), c, sigma);
  // The rewritten residual is the operator induced by −(LRb residual)∘σ.
  const auto agree = rewritten + detail::twisted_then_permuted(detail::lrb_residual(p), c, sigma);

  return {"td lie-rinehart " + p.name() + " over " + c.name(),
          {CheckResult::from_residual("TDLRa", tdlra), CheckResult::from_residual("TDLRb", tdlrb),
           CheckResult::from_residual("twisted derivation", derivation),
           CheckResult::from_residual("TDLRb rewritten", rewritten),
           CheckResult::from_residual("TDLRb forms agree", agree),
           CheckResult::from_residual("module over Hom(C,B)", mu.compose(1, mu) - mu.compose(0, nu))}};
}

namespace detail {

/// Per-slot Hom(C,B)-linearity residuals of the operator induced by f:
/// F(g_1, …, μ̄(β, g_i), …, g_n) − (ν̄∘(1⊗F))^π∘π for i = 1..n.
inline std::vector<MultilinearMap> blinear_residuals(const MultilinearMap& f, const TDLRStructure& s) {
  std::vector<MultilinearMap> out;
  const auto n = f.arity();
  const auto outer = s.pair.nu().compose(1, f);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto pi = conventions::blinear_twist(n, i);
    out.push_back(induced(f.compose(i - 1, s.pair.mu()), s.coalgebra).materialize() -
                  twisted_then_permuted(outer, s.coalgebra, pi));
  }
  return out;
}

}  // namespace detail

/// Hom(C,B)-linear TD n-cochains, as a subspace K_n of Alt^n (the cochains
/// whose induced operators are linear); dim is the dimension of its image ι(K_n).
struct BLinearSubspace {
  std::size_t degree = 0;
  std::vector<Vector> alt_basis;
  std::size_t dim = 0;
};

inline BLinearSubspace blinear_subspace(std::size_t n, const TDLRStructure& s, const Guard& guard = Guard::from_env()) {
  const auto& l = s.pair.lie().space();
  const auto& b = s.pair.base_space();
  const auto alt_dim = AltCochain::dimension(l.dim(), b.dim(), n);
  BLinearSubspace out{n, {}, 0};
  if (n == 0) {
    for (std::size_t j = 0; j < alt_dim; ++j) out.alt_basis.push_back(detail::unit_vector(alt_dim, j));
    out.dim = alt_dim;
    return out;
  }
  if (alt_dim == 0) return out;
  guard.check(n + 1, std::max(l.dim(), b.dim()), s.coalgebra.dim());
  std::vector<std::vector<MultilinearMap>> cols;
  for (std::size_t j = 0; j < alt_dim; ++j)
    cols.push_back(detail::blinear_residuals(AltCochain(l, b, n, detail::unit_vector(alt_dim, j)).to_map(), s));
  out.alt_basis = kernel_basis(detail::columns_matrix(cols));
  std::vector<MultilinearMap> images;
  for (const auto& v : out.alt_basis) images.push_back(induced(AltCochain(l, b, n, v).to_map(), s.coalgebra).materialize());
  out.dim = detail::rank_of_maps(images);
  return out;
}

namespace detail {

/// Coefficients expressing target in the span of cols, if it lies there.
inline std::optional<Vector> solve_in_span(const std::vector<MultilinearMap>& cols, const MultilinearMap& target) {
  std::vector<std::vector<MultilinearMap>> wrapped;
  for (const auto& c : cols) wrapped.push_back({c});
  wrapped.push_back({target});
  std::map<std::pair<std::size_t, MultilinearMap::Key>, std::size_t> rows;
  const auto all = columns_matrix(wrapped, &rows);
  RationalMatrix a(all.rows(), cols.size());
  Vector rhs(all.rows());
  for (std::size_t i = 0; i < all.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) a(i, j) = all(i, j);
    rhs[i] = all(i, cols.size());
  }
  return solve(a, rhs);
}

}  // namespace detail

/// δ maps Hom(C,B)-linear cochains to Hom(C,B)-linear cochains for n ≤ maxdeg.
/// Throws ConsistencyError naming the cochain and slot on a violation.
inline CheckReport check_subcomplex(const TDLRStructure& s, std::size_t maxdeg, const Guard& guard = Guard::from_env()) {
  const auto& l = s.pair.lie().space();
  const auto top = std::min(maxdeg, l.dim());
  const TDComplex complex(s.module(), top, guard);
  CheckReport report{"subcomplex " + s.pair.name() + " over " + s.coalgebra.name(), {}};
  auto next = blinear_subspace(0, s, guard);
  for (std::size_t n = 0; n <= top; ++n) {
    const auto here = std::move(next);
    next = blinear_subspace(n + 1, s, guard);
    std::vector<MultilinearMap> span;
    for (const auto& v : next.alt_basis) span.push_back(complex.iota(n + 1, v));
    for (std::size_t j = 0; j < here.alt_basis.size(); ++j) {
      const auto dv = complex.d(n, here.alt_basis[j]);
      const auto image = complex.iota(n + 1, dv);
      if (image.is_zero() || detail::solve_in_span(span, image)) continue;
      std::string where = "degree " + std::to_string(n) + " linear cochain " + std::to_string(j);
      const auto residuals = detail::blinear_residuals(complex.alt(n + 1, dv).to_map(), s);
      for (std::size_t i = 0; i < residuals.size(); ++i)
        if (const auto w = residuals[i].first_nonzero()) {
          where += ": slot " + std::to_string(i + 1) + " " + w->describe();
          break;
        }
      throw ConsistencyError("delta leaves the Hom(C,B)-linear cochains in " + where);
    }
    report.checks.push_back({"delta preserves linearity in degree " + std::to_string(n), true, std::nullopt,
                             std::to_string(here.alt_basis.size()) + " linear cochains, image dim " +
                                 std::to_string(here.dim)});
  }
  return report;
}

}  // namespace tdhom
