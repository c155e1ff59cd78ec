#include "itp/cli.hpp"

#include "itp/construct.hpp"
#include "itp/exhaustive.hpp"
#include "itp/maehara.hpp"
#include "itp/prover.hpp"
#include "itp/resolution.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace itp {

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a file name is read, anything else is taken as the text itself
// "-" is stdin; an existing file is read; anything else is the text itself
std::string text_of(const std::string& arg) {
  std::stringstream ss;
  if (arg == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  ss << in.rdbuf();
  return ss.str();
}

F formula_arg(const std::string& arg) { return parse_formula(text_of(arg)); }

System system_arg(const std::string& name) {
  auto s = system_from_name(name);
  if (!s) throw CLI::ValidationError("--system", "unknown system " + name);
  return *s;
}

void print_text(const Node& n, int depth, std::ostream& out) {
  out << std::string(2 * depth, ' ') << rule_name(n.rule) << " " << print_sequent(n.concl) << "\n";
  for (const auto& k : n.kids) print_text(*k, depth + 1, out);
}

void print_p(const P& p, const std::string& format, std::ostream& out) {
  if (format == "text")
    print_text(*p, 0, out);
  else
    out << print_proof(p) << "\n";
}

// Maehara needs monochromatic cuts; atomic and literal cuts are oriented first
Annotated annotate(const P& p, System sys) {
  try {
    return maehara(p, sys);
  } catch (const NonMonochromaticCut&) {
    if (sys == System::LKat || sys == System::LKlit || sys == System::LK) return maehara(monochromatize(p), sys);
    throw;
  }
}

bool k_equiv(F a, F b, System sys) { return provable(a, b, sys) && provable(b, a, sys); }

struct Checks {
  std::ostream& out;
  bool ok = true;
  void operator()(bool cond, const std::string& what) {
    out << "assert " << what << ": " << (cond ? "ok" : "FAILED") << "\n";
    ok = ok && cond;
  }
};

int repro_cutfree_witness(std::ostream& out) {
  F a = parse_formula("p & q"), b = parse_formula("p | q");
  auto r = enumerate_cutfree(split_sequent({a}, {}, {}, {b}), System::LKminus, 6);
  out << "cut-free proofs of p & q ; => ; p | q with at most 6 nodes per branch: " << r.proofs << "\n";
  out << "interpolant classes:\n";
  for (F f : r.interpolants) out << "  " << str(f) << "\n";
  Checks c{out};
  bool only = !r.interpolants.empty();
  for (F f : r.interpolants) only = only && (equiv(f, atom("p")) || equiv(f, atom("q")));
  c(only, "every interpolant is equivalent to p or q");
  bool none = true;
  for (F f : r.interpolants) none = none && !equiv(f, a) && !equiv(f, b);
  c(none, "no interpolant is equivalent to p & q or p | q");
  return c.ok ? 0 : 1;
}

int repro_refutation_witness(std::ostream& out) {
  auto r = enumerate_refutations(parse_clause_set("p\nq"), parse_clause_set("~p\n~q"), 6);
  out << "weakening-free refutations with at most 6 nodes: " << r.refutations.size() << "\n";
  Checks c{out};
  bool only = !r.refutations.empty(), none = true;
  for (std::size_t i = 0; i < r.refutations.size(); ++i) {
    out << print_refutation(r.refutations[i]) << "interpolant " << str(r.interpolants[i]) << "\n";
    F f = r.interpolants[i];
    only = only && (equiv(f, atom("p")) || equiv(f, atom("q")));
    none = none && !equiv(f, parse_formula("p & q")) && !equiv(f, parse_formula("p | q"));
  }
  c(only, "every interpolant is equivalent to p or q");
  c(none, "neither p & q nor p | q is reachable");
  return c.ok ? 0 : 1;
}

int repro_class_realization(std::ostream& out) {
  F a = parse_formula("p & q"), b = parse_formula("p | q");
  Checks c{out};
  for (F target : enumerate_interpolants(a, b)) {
    P p = realize_interpolant(a, b, target, System::LKat);
    F m = interpolant(p);
    out << "target " << str(target) << ": " << p->size << " nodes, " << count_cuts(p) << " cuts, interpolant " << str(m)
        << "\n";
    c(!check_proof(p, System::LKat) && equiv(m, target), "lk-at proof realizes " + str(target));
  }
  return c.ok ? 0 : 1;
}

int repro_modal_witness(std::ostream& out) {
  F a = parse_formula("[](p & q)"), b = parse_formula("[](p | q)");
  auto r = enumerate_cutfree(split_sequent({a}, {}, {}, {b}), System::K, 6);
  out << "cut-free K proofs of [](p & q) ; => ; [](p | q) with at most 6 nodes per branch: " << r.proofs << "\n";
  out << "interpolants:\n";
  for (F f : r.interpolants) out << "  " << str(f) << "\n";
  Checks c{out};
  c(!r.interpolants.empty(), "some proof exists");
  for (const char* t : {"[](p & q)", "[](p | q)", "[]p & []q"}) {
    bool none = true;
    for (F f : r.interpolants) none = none && !k_equiv(f, parse_formula(t), System::K);
    c(none, std::string("no interpolant is K-equivalent to ") + t);
  }
  return c.ok ? 0 : 1;
}

int repro_modal_realization(std::ostream& out) {
  F a = parse_formula("[](p & q)"), b = parse_formula("[](p | q)");
  Checks c{out};
  for (const char* t : {"[](p & q)", "[](p | q)", "[]p & []q"}) {
    F target = parse_formula(t);
    P p = realize_interpolant(a, b, target, System::K);
    F m = interpolant(p);
    out << "target " << t << ": " << p->size << " nodes, " << count_cuts(p) << " cuts, interpolant " << str(m) << "\n";
    P fwd = prove_or_throw(split_sequent({m}, {}, {}, {target}), System::K);
    P back = prove_or_throw(split_sequent({target}, {}, {}, {m}), System::K);
    out << "  certificate => : " << fwd->size << " nodes; <= : " << back->size << " nodes\n";
    c(!check_proof(p, System::K) && !check_proof(fwd, System::K) && !check_proof(back, System::K),
      std::string("K proof realizes ") + t);
  }
  return c.ok ? 0 : 1;
}

int repro_pruned_pipeline(std::ostream& out) {
  F a = parse_formula("p & q"), b = parse_formula("p | q");
  ClauseSet cs = parse_clause_set("p\nq");
  P p = realize_pruned(a, b, cs);
  auto r = eliminate_cuts(p);
  out << "input: " << p->size << " nodes, " << count_cuts(p) << " cuts, cnf\n" << print_clause_set(r.initial);
  out << print_trace(r);
  out << "result: " << r.proof->size << " nodes, interpolant " << str(interpolant(r.proof)) << "\n";
  Checks c{out};
  c(is_tame(p).tame && cnf(interpolant(p)) == cs, "realized proof is tame with cnf {p} {q}");
  c(count_cuts(r.proof) == 0 && !check_proof(r.proof, System::LKminus), "result is a cut-free lk-minus proof");
  c(subsumes(cs, cnf(interpolant(r.proof))), "{p} {q} subsumes into the final cnf");
  c(trace_subsumption_ok(r), "every step keeps subsumption");
  return c.ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"interpolation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string system = "lk", format = "sexpr";
  std::uint64_t seed = 1;
  int max_shared = 4;
  std::size_t cap = kDefaultCminusCap;
  bool trace = false;
  app.add_option("--system", system, "proof system")->check([](const std::string& v) {
    return system_from_name(v) ? std::string() : "unknown system " + v;
  });
  app.add_option("--seed", seed, "random seed");
  app.add_option("--format", format, "proof output format")->check(CLI::IsMember({"sexpr", "text"}));
  std::function<int()> action;

  auto* parse = app.add_subcommand("parse", "print a formula canonically");
  std::string a1, a2, a3;
  parse->add_option("formula", a1)->required();
  parse->callback([&] { action = [&] { out << str(formula_arg(a1)) << "\n"; return 0; }; });

  auto* prove = app.add_subcommand("prove", "cut-free proof search for a split sequent");
  prove->add_option("sequent", a1)->required();
  prove->callback([&] {
    action = [&] {
      auto r = prove_cutfree(parse_sequent(text_of(a1)), system_arg(system));
      if (r.proof) {
        print_p(r.proof, format, out);
        return 0;
      }
      out << "not provable\n";
      if (r.countermodel) out << print_countermodel(*r.countermodel);
      return 1;
    };
  });

  auto* check = app.add_subcommand("check-proof", "check a proof in a system");
  check->add_option("proof", a1)->required();
  check->callback([&] {
    action = [&] {
      auto e = check_proof(parse_proof(text_of(a1)), system_arg(system));
      if (!e) {
        out << "ok\n";
        return 0;
      }
      out << "node " << e->node << ": " << e->reason << "\n";
      return 1;
    };
  });

  auto* interp = app.add_subcommand("interpolate", "Maehara interpolant of a proof");
  interp->add_option("proof", a1)->required();
  interp->callback([&] {
    action = [&] {
      out << print_annotated(annotate(parse_proof(text_of(a1)), system_arg(system)));
      return 0;
    };
  });

  auto* ref = app.add_subcommand("refute", "resolution refutation of A-clauses and B-clauses");
  ref->add_option("a", a1)->required();
  ref->add_option("b", a2)->required();
  ref->callback([&] {
    action = [&] {
      auto r = refute(parse_clause_set(text_of(a1)), parse_clause_set(text_of(a2)));
      if (auto* rp = std::get_if<ResolutionProof>(&r)) {
        out << print_refutation(*rp);
        return 0;
      }
      out << "satisfiable:";
      for (const auto& [v, b] : std::get<Satisfiable>(r).model) out << " " << v << "=" << (b ? 1 : 0);
      out << "\n";
      return 1;
    };
  });

  auto* resi = app.add_subcommand("res-interpolate", "interpolant of a resolution refutation");
  resi->add_option("refutation", a1)->required();
  resi->callback([&] {
    action = [&] {
      ResolutionProof rp = parse_refutation(text_of(a1));
      if (auto v = check_refutation(rp)) {
        out << "node " << v->node << ": " << v->reason << "\n";
        return 1;
      }
      out << str(interpolant_from_refutation(rp)) << "\n";
      return 0;
    };
  });

  auto* en = app.add_subcommand("enumerate", "all interpolants up to equivalence");
  en->add_option("a", a1)->required();
  en->add_option("b", a2)->required();
  en->add_option("--max-shared-vars", max_shared);
  en->callback([&] {
    action = [&] {
      for (F f : enumerate_interpolants(formula_arg(a1), formula_arg(a2), max_shared)) out << str(f) << "\n";
      return 0;
    };
  });

  auto* pr = app.add_subcommand("prune", "prune a clause set");
  pr->add_option("clauses", a1)->required();
  pr->callback([&] {
    action = [&] {
      out << print_clause_set(prune(parse_clause_set(text_of(a1))));
      return 0;
    };
  });

  auto* real = app.add_subcommand("realize", "a proof of A => B with the given interpolant");
  std::string target;
  real->add_option("--interpolant", target)->required();
  real->add_option("a", a1)->required();
  real->add_option("b", a2)->required();
  real->add_option("--cminus-cap", cap);
  real->callback([&] {
    action = [&] {
      print_p(realize_interpolant(formula_arg(a1), formula_arg(a2), formula_arg(target), system_arg(system), cap), format,
              out);
      return 0;
    };
  });

  auto* ce = app.add_subcommand("cut-eliminate", "eliminate cuts from a tame proof with type R cuts");
  ce->add_option("proof", a1)->required();
  ce->add_flag("--trace", trace);
  ce->callback([&] {
    action = [&] {
      auto r = eliminate_cuts(parse_proof(text_of(a1)));
      if (trace) out << print_trace(r);
      print_p(r.proof, format, out);
      return 0;
    };
  });

  auto* pipe = app.add_subcommand("pipeline", "realize a pruned interpolant, then eliminate cuts");
  pipe->add_option("a", a1)->required();
  pipe->add_option("b", a2)->required();
  pipe->add_option("clauses", a3)->required();
  pipe->add_option("--cminus-cap", cap);
  pipe->add_flag("--trace", trace);
  pipe->callback([&] {
    action = [&] {
      ClauseSet cs = parse_clause_set(text_of(a3));
      auto r = pruned_subsumption_pipeline(formula_arg(a1), formula_arg(a2), cs, cap);
      if (trace) out << print_trace(r);
      print_p(r.proof, format, out);
      ClauseSet fin = cnf(interpolant(r.proof));
      out << "initial cnf:\n" << print_clause_set(r.initial) << "final cnf:\n" << print_clause_set(fin);
      return subsumes(cs, fin) ? 0 : 1;
    };
  });

  auto* rep = app.add_subcommand("repro", "reproduce a worked example");
  rep->add_option("which", a1)->required()->check(CLI::IsMember({"prop3.2", "prop3.3", "thm6.1", "prop7.1", "thm7.2", "thm5.4"}));
  rep->callback([&] {
    action = [&] {
      if (a1 == "prop3.2") return repro_cutfree_witness(out);
      if (a1 == "prop3.3") return repro_refutation_witness(out);
      if (a1 == "thm6.1") return repro_class_realization(out);
      if (a1 == "prop7.1") return repro_modal_witness(out);
      if (a1 == "thm7.2") return repro_modal_realization(out);
      return repro_pruned_pipeline(out);
    };
  });

  std::vector<std::string> argv_s{"itpcli"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_s) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const NotProvable& e) {
    err << e.what() << "\n";
    if (e.countermodel) err << print_countermodel(*e.countermodel);
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace itp
