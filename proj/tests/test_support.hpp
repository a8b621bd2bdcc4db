#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "tdhom/tdhom.hpp"

namespace tdtest {

using namespace tdhom;

inline BasedSpace V2() { return {"V", {"a", "b"}}; }

/// Bracket from [x,y] constants listed once per unordered pair.
inline MultilinearMap skew_bracket(const BasedSpace& l,
                                   const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, int>>& consts) {
  MultilinearMap m({l, l}, l);
  for (const auto& [x, y, z, q] : consts) {
    m.add({x, y}, z, q);
    m.add({y, x}, z, -q);
  }
  return m;
}

// h=0, e=1, f=2
inline LieAlgebra sl2(int he = 2) {
  BasedSpace l{"L", {"h", "e", "f"}};
  return LieAlgebra("sl2", skew_bracket(l, {{0, 1, 1, he}, {0, 2, 2, -2}, {1, 2, 0, 1}}));
}
inline LieAlgebra heisenberg() {
  BasedSpace l{"Hs", {"x", "y", "z"}};
  return LieAlgebra("heis", skew_bracket(l, {{0, 1, 2, 1}}));
}
inline LieAlgebra aff2() {
  BasedSpace l{"Af", {"x", "y"}};
  return LieAlgebra("aff2", skew_bracket(l, {{0, 1, 1, 1}}));
}
inline LieAlgebra abelian(std::size_t n) {
  BasedSpace l{"A" + std::to_string(n), {}};
  for (std::size_t i = 0; i < n; ++i) l.labels.push_back(std::string(1, char('a' + i)));
  return abelian_lie_algebra(l, "abelian" + std::to_string(n));
}
inline std::vector<LieAlgebra> lie_corpus() { return {sl2(), heisenberg(), aff2(), abelian(2)}; }

inline Coalgebra T3() { return build_tensor_coalgebra(V2(), 3, false, "T3"); }
inline Coalgebra T2() { return build_tensor_coalgebra(V2(), 2, false, "T2"); }
inline Coalgebra S2() { return build_symmetric_coalgebra(V2(), 2, "S2"); }
inline Coalgebra E() { return build_exterior_square_coalgebra(V2(), "E"); }
inline Coalgebra Z() { return build_zero_coalgebra({"Z", {"z1", "z2"}}); }
inline std::vector<Coalgebra> builder_coalgebras() { return {T3(), S2(), E()}; }
inline std::vector<Coalgebra> coalgebra_corpus() { return {T3(), T2(), S2(), E(), Z()}; }

inline std::string data_path(const std::string& stem) { return std::string(TDHOM_DATA_DIR) + "/" + stem + ".json"; }

inline Corpus load(const std::vector<std::string>& stems, bool check_axioms = true) {
  std::vector<StructureFile> files;
  for (const auto& s : stems) files.push_back(read_structure_file(data_path(s)));
  return load_corpus(files, check_axioms);
}

inline Scalar small(std::mt19937& rng, int lo = -3, int hi = 3) {
  return Scalar(std::uniform_int_distribution<int>(lo, hi)(rng));
}

/// Random structure constants with roughly half the entries nonzero.
inline MultilinearMap random_map(const std::vector<BasedSpace>& dom, const BasedSpace& cod, std::mt19937& rng) {
  MultilinearMap m(dom, cod);
  std::vector<std::size_t> idx(dom.size(), 0);
  while (true) {
    for (std::size_t w = 0; w < cod.dim(); ++w)
      if (rng() % 2) m.add(idx, w, small(rng));
    std::size_t k = 0;
    while (k < dom.size() && ++idx[k] == dom[k].dim()) idx[k++] = 0;
    if (k == dom.size()) break;
  }
  return m;
}

/// Antisymmetrization of a random map on n copies of l.
inline MultilinearMap random_skew(const BasedSpace& l, std::size_t n, const BasedSpace& cod, std::mt19937& rng) {
  const auto m = random_map(std::vector<BasedSpace>(n, l), cod, rng);
  MultilinearMap out(m.domain(), cod);
  for (const auto& s : Permutation::all(n)) out += m.permute_args(s).scaled(permutation_sign(s));
  return out;
}

inline HomElement random_hom(const BasedSpace& c, const BasedSpace& l, std::mt19937& rng) {
  HomElement h(c, l);
  for (std::size_t v = 0; v < l.dim(); ++v)
    for (std::size_t j = 0; j < c.dim(); ++j) h(v, j) = small(rng);
  return h;
}

inline std::vector<HomElement> units(const BasedSpace& c, const BasedSpace& l) {
  std::vector<HomElement> out;
  for (std::size_t v = 0; v < l.dim(); ++v)
    for (std::size_t j = 0; j < c.dim(); ++j) out.push_back(HomElement::unit(c, l, v, j));
  return out;
}

inline RationalMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % 3 ? Scalar(0) : small(rng, -4, 4);
  return m;
}

inline Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

inline std::string describe(const CheckReport& r) {
  std::string s = r.subject;
  for (const auto& c : r.checks)
    if (!c.passed) s += "\n  " + c.name + (c.witness ? " " + c.witness->describe() : std::string());
  return s;
}

}  // namespace tdtest
