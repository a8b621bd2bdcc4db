#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"

using namespace tdtest;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parse_error(const std::string& text) {
  try {
    parse_structure_file(text, "t.json");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* kSpace = R"("spaces": [{"name": "V", "labels": ["a", "b"]}])";

}  // namespace

TEST(StructureFile, DataFilesRoundTripByteIdentically) {
  std::size_t n = 0;
  for (const auto& e : std::filesystem::directory_iterator(TDHOM_DATA_DIR)) {
    if (e.path().extension() != ".json") continue;
    ++n;
    const auto text = slurp(e.path().string());
    EXPECT_EQ(serialize(parse_structure_file(text, e.path().string())), text) << e.path();
  }
  EXPECT_GE(n, 10u);
}

TEST(StructureFile, LoadsAllFixturesTogether) {
  const auto c = load({"sl2", "heisenberg", "aff2", "abelian", "coalgebras", "poisson", "dual-numbers-lr",
                       "truncated-lr", "lr-trivial"});
  EXPECT_EQ(c.lie.at("sl2").bracket().value({1, 2}), (Vector{1, 0, 0}));
  EXPECT_EQ(c.coalgebras.at("T3").dim(), 14u);
  EXPECT_TRUE(c.modules.count("sl2-adjoint"));
  EXPECT_TRUE(c.poisson.count("poisson-xy"));
  EXPECT_EQ(c.lie_rinehart.size(), 3u);
}

TEST(StructureFile, FileCoalgebrasMatchBuilders) {
  const auto c = load({"coalgebras"});
  EXPECT_EQ(c.coalgebras.at("T3").space().labels, T3().space().labels);
  for (const auto& b : coalgebra_corpus()) {
    const auto& f = c.coalgebras.at(b.name());
    ASSERT_EQ(f.dim(), b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) EXPECT_EQ(f.coproduct(i), b.coproduct(i)) << b.name() << " " << i;
  }
}

TEST(StructureFile, ParseErrorsNameTheirLocation) {
  EXPECT_NE(parse_error("{}").find("format"), std::string::npos);
  EXPECT_NE(parse_error("[1]").find("object"), std::string::npos);
  EXPECT_NE(parse_error("{\"format\": \"tdhom/1\", \"colour\": 1}").find("unknown key \"colour\""), std::string::npos);
  EXPECT_NE(parse_error("{not json").find("t.json"), std::string::npos);

  const std::string map_prefix = std::string("{\"format\": \"tdhom/1\", ") + kSpace + ", \"maps\": [";
  const auto bad_label = parse_error(
      map_prefix + R"({"name": "m", "domain": ["V"], "codomain": "V", "entries": [{"in": ["c"], "out": "a", "coeff": "1"}]}]})");
  EXPECT_NE(bad_label.find("maps[0] 'm' entry 0"), std::string::npos) << bad_label;
  EXPECT_NE(bad_label.find("label 'c'"), std::string::npos) << bad_label;
  const auto bad_coeff = parse_error(
      map_prefix + R"({"name": "m", "domain": ["V"], "codomain": "V", "entries": [{"in": ["a"], "out": "a", "coeff": "0.5"}]}]})");
  EXPECT_NE(bad_coeff.find("entry 0"), std::string::npos) << bad_coeff;
  const auto arity = parse_error(
      map_prefix + R"({"name": "m", "domain": ["V"], "codomain": "V", "entries": [{"in": ["a", "b"], "out": "a", "coeff": "1"}]}]})");
  EXPECT_NE(arity.find("length"), std::string::npos) << arity;
  const auto dup = parse_error(map_prefix + R"({"name": "V", "domain": ["V"], "codomain": "V", "entries": []}]})");
  EXPECT_NE(dup.find("duplicate name 'V'"), std::string::npos) << dup;
  const auto space = parse_error(map_prefix + R"({"name": "m", "domain": ["W"], "codomain": "V", "entries": []}]})");
  EXPECT_NE(space.find("unknown space 'W'"), std::string::npos) << space;
}

TEST(StructureFile, EagerLoadRejectsBrokenAxioms) {
  try {
    load({"broken-jacobi"});
    FAIL() << "expected an axiom failure";
  } catch (const AxiomFailure& e) {
    EXPECT_NE(std::string(e.what()).find("jacobi"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load({"poisson-broken"}), AxiomFailure);
  EXPECT_THROW(load({"noncoassociative"}), AxiomFailure);
  EXPECT_NO_THROW(load({"broken-jacobi", "poisson-broken", "noncoassociative"}, false));
}

TEST(StructureFile, SpacesAreSharedOnlyWhenIdentical) {
  const auto a = parse_structure_file(std::string("{\"format\": \"tdhom/1\", ") + kSpace + "}");
  Corpus c;
  c.add(a);
  EXPECT_NO_THROW(c.add(a));
  const auto b = parse_structure_file(R"({"format": "tdhom/1", "spaces": [{"name": "V", "labels": ["a"]}]})");
  EXPECT_THROW(c.add(b), ParseError);
}

TEST(StructureFile, DuplicateStructureNamesAcrossFilesAreRejected) {
  EXPECT_THROW(load({"sl2", "sl2"}), ParseError);
}
