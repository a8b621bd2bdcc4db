// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "test_support.hpp"

using namespace tdtest;

namespace {

const Guard kRoomy{4, 10000000};

Coalgebra grouplike() { return Coalgebra({"G", {"g"}}, {{0, 0, 0, 1}}); }
Coalgebra S3() { return build_symmetric_coalgebra(V2(), 3, "S3"); }

std::vector<Coalgebra> all_coalgebras() {
  auto out = coalgebra_corpus();
  out.push_back(grouplike());
  return out;
}

std::vector<LieModule> modules() {
  std::vector<LieModule> out;
  for (const auto& l : lie_corpus()) {
    out.push_back(adjoint_module(l));
    out.push_back(trivial_module(l, BasedSpace::ground()));
  }
  return out;
}

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}
void require(const CheckReport& r) {
  if (!r.passed()) throw Failure{describe(r)};
}

bool td_skew() {
  std::mt19937 rng(10);
  const BasedSpace w{"W", {"x", "y"}};
  for (const auto& phi : {sl2().bracket(), heisenberg().bracket(), random_skew(sl2().space(), 3, w, rng)})
    for (const auto& c : builder_coalgebras()) require(check_td_skew(phi, c));
  return true;
}

bool td_lie() {
  for (const auto& l : lie_corpus())
    for (const auto& c : all_coalgebras()) require(check_td_lie(l, c));
  const auto perturbed = check_td_lie(sl2(3), T3(), false);
  const auto* j = perturbed.find("twisted jacobi");
  require(j && !j->passed && j->witness, "perturbed constant not detected");
  return true;
}

bool collapse() {
  for (const auto& l : lie_corpus())
    for (const auto& c : {S2(), S3()}) require(check_cocommutative_collapse(l, c));
  return true;
}

bool jordan() {
  for (const auto& l : lie_corpus()) {
    const auto r = check_jordan(l, E());
    require(r);
    require(r.checks.size() == 5, "missing Jordan identities");
  }
  return true;
}

bool td_poisson() {
  const auto corpus = load({"poisson"});
  require(!corpus.poisson.empty(), "no Poisson fixture");
  for (const auto& [name, p] : corpus.poisson)
    for (const auto& c : all_coalgebras()) require(check_td_poisson(p, c));
  return true;
}

bool operator_identities() {
  std::mt19937 rng(6);
  {
    const BasedSpace a{"A", {"a1", "a2", "a3"}}, c{"C", {"c1", "c2"}}, l{"L", {"x", "y"}}, b{"B", {"u", "v", "w"}};
    for (int t = 0; t < 5; ++t) {
      const auto f = random_hom(c, l, rng), g = random_hom(c, l, rng);
      const auto z1 = random_map({a}, c, rng), z2 = random_map({a}, c, rng);
      require(interchange({precompose(f, z1), precompose(g, z2)}) == interchange({f, g}).compose(0, z1).compose(1, z2),
              "naturality in the sources");
      const auto p1 = random_map({l}, b, rng), p2 = random_map({l}, b, rng);
      require(interchange({postcompose(p1, f), postcompose(p2, g)}) ==
                  tensor_of_maps({p1, p2}).compose(0, interchange({f, g})),
              "naturality in the targets");
    }
  }
  {
    const BasedSpace c1{"C1", {"p", "q"}}, c2{"C2", {"r", "s", "t"}}, c3{"C3", {"u"}};
    const BasedSpace l1{"L1", {"x", "y"}}, l2{"L2", {"z"}}, l3{"L3", {"w", "v"}};
    const std::vector<HomElement> fs{random_hom(c1, l1, rng), random_hom(c2, l2, rng), random_hom(c3, l3, rng)};
    for (const auto& s : Permutation::all(3))
      require(interchange(s.apply_to(fs)) ==
                  leg_permutation_map({l1, l2, l3}, s).compose(0, interchange(fs).permute_args(s.inverse())),
              "interchange symmetry");
  }
  const BasedSpace l{"L", {"x", "y"}}, v{"V", {"p", "q", "r"}};
  for (const auto& c : builder_coalgebras()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto phi = random_map(std::vector<BasedSpace>(n, l), v, rng);
      for (const auto& s : Permutation::all(n))
        require(induced(phi.permute_args(s), c).materialize() == twisted(phi, c, s).materialize().permute_args(s),
                "induced symmetry");
    }
    const auto psi = random_map({l, v, l}, l, rng);
    const auto phi = random_map({l, l}, v, rng);
    const auto big_psi = induced(psi, c), big_phi = induced(phi, c);
    require(compose_induced(big_psi, big_phi, 1).materialize() == big_psi.materialize().compose(1, big_phi.materialize()),
            "composition of induced maps");
  }
  return true;
}

bool classical_ce() {
  for (const auto& m : modules()) ce_complex(m, m.lie().space().dim());  // throws unless d∘d = 0
  require(cohomology_dims(ce_complex(trivial_module(sl2(), BasedSpace::ground()), 3)) ==
              std::vector<std::size_t>{1, 0, 0, 1},
          "sl2 trivial cohomology");
  return true;
}

bool td_complex() {
  for (const auto& m : modules())
    for (const auto& c : all_coalgebras()) {
      const TDComplex x({m, c}, 2, kRoomy);
      for (std::size_t n = 0; n <= 2; ++n) {
        for (const auto& r : {x.check_direct_matches_induced(n), x.check_well_defined(n)})
          require(r.passed, m.name() + " over " + c.name() + ": " + r.name);
        if (n < 2) require(x.check_delta_squared(n).passed, m.name() + " over " + c.name() + ": delta squared");
      }
    }
  return true;
}

bool h0() {
  for (const auto& m : modules())
    for (const auto& c : all_coalgebras()) {
      const TDModuleStructure s{m, c};
      const auto inv = invariants_h0(s);
      require(same_span(inv, TDComplex(s, 0, kRoomy).kernel_delta0(), m.space().dim()), m.name() + " over " + c.name());
      if (m.action().is_zero()) require(inv.size() == m.space().dim(), "trivial action invariants");
    }
  return true;
}

bool lie_rinehart() {
  const auto corpus = load({"lr-trivial", "dual-numbers-lr", "truncated-lr"});
  require(corpus.lie_rinehart.size() == 3, "missing Lie-Rinehart fixtures");
  for (const auto& [name, p] : corpus.lie_rinehart) {
    require(check_lr(p));
    for (const auto& c : all_coalgebras()) {
      require(check_td_lr({p, c}));
      require(check_subcomplex({p, c}, 2, kRoomy));
    }
  }
  return true;
}

bool infrastructure() {
  for (const auto& e : std::filesystem::directory_iterator(TDHOM_DATA_DIR)) {
    if (e.path().extension() != ".json") continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    require(serialize(parse_structure_file(ss.str())) == ss.str(), "round trip of " + e.path().filename().string());
  }
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(1 + rng() % 7, 1 + rng() % 7, rng);
    require(rank(m) + kernel_basis(m).size() == m.cols(), "rank + nullity");
  }
  for (int t = 0; t < 200; ++t) {
    const auto a = random_permutation(6, rng), b = random_permutation(6, rng);
    require(compose(a, b).sign() == a.sign() * b.sign(), "sign multiplicativity");
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"TD skew symmetry of induced skew maps", td_skew},
      {"TD Lie identities, perturbation detected", td_lie},
      {"cocommutative collapse", collapse},
      {"Jordan identities over the exterior square", jordan},
      {"TD Poisson", td_poisson},
      {"interchange and induced-map identities", operator_identities},
      {"classical Chevalley-Eilenberg complex", classical_ce},
      {"TD complex: direct = induced, well defined, delta^2 = 0", td_complex},
      {"H0 invariants = ker delta0", h0},
      {"Lie-Rinehart pairs and the linear subcomplex", lie_rinehart},
      {"infrastructure", infrastructure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const Failure& f) {
      why = f.what;
    } catch (const std::exception& e) {
      why = e.what();
    }
    std::cout << (ok ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << "\n";
    if (!ok) {
      std::cout << "     " << why << "\n";
      ++failed;
    }
  }
  return failed ? 1 : 0;
}
