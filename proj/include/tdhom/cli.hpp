#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tdhom/cohomology.hpp"
#include "tdhom/lie_rinehart.hpp"
#include "tdhom/report.hpp"
#include "tdhom/structure_file.hpp"
#include "tdhom/td_structures.hpp"

namespace tdhom::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kInputError = 2, kGuardRefusal = 3 };

/// A built-in fixture: name and canonical structure-file text.
struct Fixture {
  std::string name;
  std::string text;
};

struct Context {
  std::vector<Fixture> fixtures;
  std::ostream* out;
  std::ostream* err;
};

namespace detail {

/// "@name" loads a built-in fixture, anything else is a file path.
inline StructureFile load_source(const std::string& source, const Context& ctx) {
  if (!source.empty() && source.front() == '@') {
    for (const auto& f : ctx.fixtures)
      if (f.name == source.substr(1)) return parse_structure_file(f.text, source);
    throw ParseError("unknown example '" + source.substr(1) + "'");
  }
  return read_structure_file(source);
}

inline Corpus load_all(const std::vector<std::string>& sources, const Context& ctx, bool check_axioms) {
  std::vector<StructureFile> files;
  for (const auto& s : sources) files.push_back(load_source(s, ctx));
  return load_corpus(files, check_axioms);
}

inline Guard make_guard(std::size_t guard_limit, std::size_t max_arity) {
  auto g = Guard::from_env();
  if (guard_limit) g.max_entries = guard_limit;
  if (max_arity) g.max_arity = max_arity;
  return g;
}

struct VerifyOptions {
  std::vector<std::string> sources;
  std::string suite = "all";
  bool unsafe = false;
  bool json = false;
  std::size_t maxdeg = 2;
  std::size_t guard_limit = 0;
  std::size_t max_arity = 0;
};

inline bool wants(const std::string& suite, const char* s) { return suite == "all" || suite == s; }

inline Report verify(const Corpus& corpus, const VerifyOptions& opt) {
  Report report{"verify --suite " + opt.suite, {}, {}};
  const auto guard = make_guard(opt.guard_limit, opt.max_arity);
  const bool axioms = !opt.unsafe;
  auto ok = [&](const CheckReport& r) { return !axioms || r.passed(); };

  std::map<std::string, bool> coalgebra_ok;
  for (const auto& [name, c] : corpus.coalgebras) {
    const auto& r = c.coassociativity();
    coalgebra_ok[name] = r.passed;
    if (opt.suite != "lie") {
      CheckReport cr{"coalgebra " + name, {r}};
      cr.checks.back().detail = "symmetry class " + to_string(symmetry_class(c));
      report.add(cr);
    }
  }
  auto each_coalgebra = [&](const std::string& subject, auto&& run) {
    for (const auto& [cname, c] : corpus.coalgebras) {
      if (!coalgebra_ok[cname]) {
        report.skip(subject + " over " + cname, "all", "coalgebra is not coassociative");
        continue;
      }
      try {
        run(c);
      } catch (const GuardRefusal& e) {
        report.skip(subject + " over " + cname, "guard", e.what());
        report.refused = true;
      }
    }
  };

  if (wants(opt.suite, "lie") || wants(opt.suite, "td-lie")) {
    for (const auto& [name, l] : corpus.lie) {
      const auto axiom_report = check_lie(l);
      if (axioms) report.add(axiom_report);
      if (!wants(opt.suite, "td-lie")) continue;
      if (!ok(axiom_report)) {
        report.skip("td lie " + name, "all", "Lie axioms fail");
        continue;
      }
      each_coalgebra("td lie " + name, [&](const Coalgebra& c) {
        report.add(check_td_skew(l.bracket(), c, guard.max_arity));
        report.add(check_td_lie(l, c, false));
        const auto cls = symmetry_class(c);
        if (cls == SymmetryClass::cocommutative) report.add(check_cocommutative_collapse(l, c));
        if (is_skew_cocommutative(c) && check_lie(l).passed()) report.add(check_jordan(l, c));
      });
    }
  }
  if (wants(opt.suite, "lie") || wants(opt.suite, "td-module")) {
    for (const auto& [name, m] : corpus.modules) {
      const auto axiom_report = check_module(m);
      if (axioms) report.add(axiom_report);
      if (!wants(opt.suite, "td-module")) continue;
      if (!ok(axiom_report)) {
        report.skip("td module " + name, "all", "module axioms fail");
        continue;
      }
      each_coalgebra("td module " + name,
                     [&](const Coalgebra& c) { report.add(check_td_module({m, c}, false)); });
    }
  }
  if (wants(opt.suite, "lie")) {
    for (const auto& [name, a] : corpus.associative) report.add(check_associative(a));
  }
  if (wants(opt.suite, "lie") || wants(opt.suite, "td-poisson")) {
    for (const auto& [name, p] : corpus.poisson) {
      const auto axiom_report = check_poisson(p);
      if (axioms) report.add(axiom_report);
      if (!wants(opt.suite, "td-poisson")) continue;
      if (!ok(axiom_report)) {
        report.skip("td poisson " + name, "all", "Poisson axioms fail");
        continue;
      }
      each_coalgebra("td poisson " + name, [&](const Coalgebra& c) { report.add(check_td_poisson(p, c, false)); });
    }
  }
  if (wants(opt.suite, "lie") || wants(opt.suite, "lie-rinehart")) {
    for (const auto& [name, p] : corpus.lie_rinehart) {
      const auto axiom_report = check_lr(p);
      if (axioms) report.add(axiom_report);
      if (!wants(opt.suite, "lie-rinehart")) continue;
      if (!ok(axiom_report)) {
        report.skip("td lie-rinehart " + name, "all", "Lie-Rinehart axioms fail");
        continue;
      }
      each_coalgebra("td lie-rinehart " + name, [&](const Coalgebra& c) {
        const TDLRStructure s{p, c};
        const auto td = check_td_lr(s, false);
        report.add(td);
        if (td.passed()) {
          try {
            report.add(check_subcomplex(s, opt.maxdeg, guard));
          } catch (const ConsistencyError& e) {
            report.checks.push_back({"subcomplex " + name + " over " + c.name(), "delta preserves linearity", "fail",
                                     "", e.what()});
          }
        }
      });
    }
  }
  return report;
}

struct CohomologyOptions {
  std::vector<std::string> sources;
  std::string module;
  std::string coalgebra;
  std::size_t maxdeg = 0;
  bool maxdeg_set = false;
  bool td = false;
  bool json = false;
  bool unsafe = false;
  std::size_t guard_limit = 0;
  std::size_t max_arity = 0;
};

inline Report cohomology(const Corpus& corpus, const CohomologyOptions& opt) {
  LieModule m;
  if (auto it = corpus.modules.find(opt.module); it != corpus.modules.end()) {
    m = it->second;
  } else if (auto lr = corpus.lie_rinehart.find(opt.module); lr != corpus.lie_rinehart.end()) {
    m = lr->second.module();
  } else {
    throw ParseError("unknown module '" + opt.module + "'");
  }
  const auto dim_l = m.lie().space().dim();
  Report report{"cohomology --module " + opt.module + (opt.td ? " --td --coalgebra " + opt.coalgebra : ""), {}, {}};

  const auto classical_deg = opt.maxdeg_set ? opt.maxdeg : dim_l;
  if (classical_deg > dim_l) throw ArgumentError("--maxdeg exceeds dim L = " + std::to_string(dim_l));
  const auto cm = ce_complex(m, classical_deg);
  CohomologyTable classical{"module " + m.name(), "classical", {}, {}, {}, {}, cohomology_dims(cm), {}};
  for (std::size_t k = 0; k <= classical_deg; ++k) {
    classical.cochain_dims.push_back(cm.dims[k]);
    classical.ranks.push_back(rank(cm.d[k]));
  }
  report.tables.push_back(classical);
  if (!opt.td) return report;

  auto cit = corpus.coalgebras.find(opt.coalgebra);
  if (cit == corpus.coalgebras.end()) throw ParseError("unknown coalgebra '" + opt.coalgebra + "'");
  const auto td_deg = opt.maxdeg_set ? opt.maxdeg : std::min<std::size_t>(2, dim_l);
  const TDModuleStructure s{m, cit->second};
  const TDComplex complex(s, td_deg, make_guard(opt.guard_limit, opt.max_arity));
  CohomologyTable t{"module " + m.name() + " over " + cit->first, "td", {}, {}, complex.cochain_dims(),
                    complex.differential_ranks(), complex.cohomology_dims(), {}};
  for (std::size_t k = 0; k <= td_deg; ++k) {
    t.alt_dims.push_back(complex.alt_dim(k));
    t.iota_kernel_dims.push_back(complex.iota_kernel_dim(k));
  }
  CheckReport checks{"td complex " + m.name() + " over " + cit->first, {}};
  for (std::size_t n = 0; n <= td_deg; ++n) {
    checks.checks.push_back(complex.check_direct_matches_induced(n));
    checks.checks.push_back(complex.check_well_defined(n));
    if (n + 1 <= td_deg) checks.checks.push_back(complex.check_delta_squared(n));
  }
  const auto inv = invariants_h0(s);
  CheckResult h0{"H0 invariants = ker delta0", same_span(inv, complex.kernel_delta0(), m.space().dim()),
                 std::nullopt, "dim " + std::to_string(inv.size())};
  checks.checks.push_back(h0);
  for (const auto& c : checks.checks) t.facts.emplace_back(c.name, c.passed ? "pass" : "fail");
  report.add(checks);
  report.tables.push_back(t);
  return report;
}

inline std::string classify(const StructureFile& f) {
  std::vector<std::string> parts;
  for (const auto& c : f.coalgebras)
    parts.push_back("coalgebra " + c.name + " (" + to_string(symmetry_class(c.coalgebra)) + ")");
  for (const auto& r : f.structures) parts.push_back(r.role + " " + r.name);
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

inline void emit(const Report& r, bool json, const Context& ctx) {
  const auto j = r.to_json();
  if (json)
    *ctx.out << j.dump(2) << "\n";
  else
    *ctx.out << render_text(j);
}

}  // namespace detail

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, const Context& ctx) {
  CLI::App app{"Twisted-domain structures on Hom(C,L): verification and cohomology", "tdhom"};
  app.require_subcommand(1);

  detail::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run identity checks on structure files");
  verify->add_option("sources", vopt.sources, "Structure files, or @name for a built-in example")->required();
  verify->add_option("--suite", vopt.suite, "Which checks to run")
      ->check(CLI::IsMember({"coalgebra", "lie", "td-lie", "td-poisson", "td-module", "lie-rinehart", "all"}));
  verify->add_flag("--unsafe-skip-axioms", vopt.unsafe, "Load and run TD checks without checking axioms first");
  verify->add_flag("--json", vopt.json, "Machine-readable report");
  verify->add_option("--maxdeg", vopt.maxdeg, "Top degree for the Lie-Rinehart subcomplex check");
  verify->add_option("--guard-limit", vopt.guard_limit, "Materialization entry limit");
  verify->add_option("--max-arity", vopt.max_arity, "Materialization arity limit");

  detail::CohomologyOptions copt;
  auto* coh = app.add_subcommand("cohomology", "Cohomology of the classical or TD Chevalley-Eilenberg complex");
  coh->add_option("sources", copt.sources, "Structure files, or @name for a built-in example")->required();
  coh->add_option("--module", copt.module, "Module (or Lie-Rinehart pair) name")->required();
  coh->add_option("--coalgebra", copt.coalgebra, "Coalgebra name for --td");
  auto* maxdeg = coh->add_option("--maxdeg", copt.maxdeg, "Top degree");
  coh->add_flag("--td", copt.td, "Also compute the TD complex");
  coh->add_flag("--json", copt.json, "Machine-readable report");
  coh->add_flag("--unsafe-skip-axioms", copt.unsafe, "Skip eager axiom checks on load");
  coh->add_option("--guard-limit", copt.guard_limit, "Materialization entry limit");
  coh->add_option("--max-arity", copt.max_arity, "Materialization arity limit");

  auto* ex = app.add_subcommand("examples", "List or export the built-in examples");
  ex->require_subcommand(1);
  auto* ex_list = ex->add_subcommand("list", "List examples with their classifications");
  std::string export_name, export_path;
  auto* ex_export = ex->add_subcommand("export", "Write an example structure file");
  ex_export->add_option("name", export_name)->required();
  ex_export->add_option("-o,--output", export_path, "Output path (default stdout)");

  std::string fmt_path;
  auto* fmt = app.add_subcommand("fmt", "Print a structure file in canonical form");
  fmt->add_option("source", fmt_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e, *ctx.out, *ctx.err);
    return code == 0 ? kPass : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    if (*verify) {
      const auto corpus = detail::load_all(vopt.sources, ctx, false);
      if (vopt.suite != "coalgebra" && vopt.suite != "lie" && vopt.suite != "all" && corpus.coalgebras.empty())
        throw ParseError("suite " + vopt.suite + " needs at least one coalgebra");
      const auto r = detail::verify(corpus, vopt);
      detail::emit(r, vopt.json, ctx);
      code = !r.passed() ? kCheckFailure : r.refused ? kGuardRefusal : kPass;
    } else if (*coh) {
      copt.maxdeg_set = maxdeg->count() > 0;
      if (copt.td && copt.coalgebra.empty()) throw ParseError("--td needs --coalgebra");
      const auto corpus = detail::load_all(copt.sources, ctx, !copt.unsafe);
      const auto r = detail::cohomology(corpus, copt);
      detail::emit(r, copt.json, ctx);
      code = r.passed() ? kPass : kCheckFailure;
    } else if (*ex_list) {
      for (const auto& f : ctx.fixtures)
        *ctx.out << f.name << "  " << detail::classify(parse_structure_file(f.text, "@" + f.name)) << "\n";
    } else if (*ex_export) {
      const Fixture* found = nullptr;
      for (const auto& f : ctx.fixtures)
        if (f.name == export_name) found = &f;
      if (!found) throw ParseError("unknown example '" + export_name + "'");
      if (export_path.empty()) {
        *ctx.out << found->text;
      } else {
        std::ofstream o(export_path, std::ios::binary);
        if (!(o << found->text)) throw ParseError(export_path + ": cannot write");
      }
    } else if (*fmt) {
      *ctx.out << serialize(detail::load_source(fmt_path, ctx));
    }
  } catch (const GuardRefusal& e) {
    *ctx.err << "guard: " << e.what() << "\n";
    return kGuardRefusal;
  } catch (const AxiomFailure& e) {
    *ctx.err << "axiom failure: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const ConsistencyError& e) {
    *ctx.err << "consistency failure: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const PreconditionError& e) {
    *ctx.err << "precondition: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const Error& e) {
    *ctx.err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  *ctx.err << "elapsed " << elapsed.count() << " s\n";
  return code;
}

}  // namespace tdhom::cli
