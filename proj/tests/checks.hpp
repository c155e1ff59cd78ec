#pragma once

// Property checks shared by the property tests (small n) and the acceptance
// binary (full n). Each returns ok plus a line describing the first failure.

#include "itp/construct.hpp"
#include "itp/exhaustive.hpp"
#include "itp/maehara.hpp"
#include "itp/random.hpp"
#include "oracle.hpp"

#include <functional>
#include <sstream>

namespace checks {

using namespace itp;

struct Outcome {
  bool ok = true;
  std::string detail;
  int count = 0;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

inline bool flank_ok(const std::vector<F>& ante, const std::vector<F>& succ) {
  return oracle::entails(conj_all(ante), disj_all(succ));
}

inline bool atoms_within(F f, const std::set<std::string>& vs) {
  std::set<std::string> a;
  oracle::atoms_of(f, a);
  for (const auto& v : a)
    if (!vs.count(v)) return false;
  return true;
}

inline std::set<std::string> sequent_atoms(const Sequent& s, int side) {
  std::set<std::string> out;
  for (const auto& o : s)
    if (side_of(o.comp) == side) oracle::atoms_of(o.f, out);
  return out;
}

// 1: reverse interpolants from random refutations
inline Outcome resolution_soundness(std::uint64_t seed, int n) {
  Rng rng(seed);
  Outcome out;
  for (int i = 0; i < n; ++i, ++out.count) {
    auto in = random_unsat_cnf(rng, 5, 8);
    auto r = refute(in.a, in.b);
    if (!std::holds_alternative<ResolutionProof>(r)) {
      out.fail("refute found a model of an unsatisfiable set");
      continue;
    }
    const auto& rp = std::get<ResolutionProof>(r);
    if (auto v = check_refutation(rp)) out.fail("bad refutation: " + v->reason);
    F c = interpolant_from_refutation(rp);
    F a = clause_set_formula(in.a), b = clause_set_formula(in.b);
    std::set<std::string> va, vb;
    oracle::atoms_of(a, va);
    oracle::atoms_of(b, vb);
    std::set<std::string> shared;
    for (const auto& v : va)
      if (vb.count(v)) shared.insert(v);
    if (!oracle::entails(a, c)) out.fail("A does not entail " + str(c));
    if (!oracle::entails(conj(b, c), bot())) out.fail("B and " + str(c) + " are satisfiable together");
    if (!atoms_within(c, shared)) out.fail(str(c) + " uses non-shared atoms");
  }
  return out;
}

// 2: cut-free proofs of p & q => p | q only give p or q
inline Outcome cutfree_witness(int depth) {
  Outcome out;
  F a = parse_formula("p & q"), b = parse_formula("p | q");
  auto r = enumerate_cutfree(split_sequent({a}, {}, {}, {b}), System::LKminus, depth);
  out.count = static_cast<int>(r.proofs);
  if (r.interpolants.empty()) out.fail("no proofs found");
  for (F f : r.interpolants) {
    if (!oracle::equiv(f, atom("p")) && !oracle::equiv(f, atom("q"))) out.fail("interpolant " + str(f));
    if (oracle::equiv(f, a) || oracle::equiv(f, b)) out.fail("reached " + str(f));
  }
  return out;
}

// 3: weakening-free refutations of {p},{q} | {~p},{~q}
inline Outcome refutation_witness(int nodes) {
  Outcome out;
  auto r = enumerate_refutations(parse_clause_set("p\nq"), parse_clause_set("~p\n~q"), nodes);
  out.count = static_cast<int>(r.refutations.size());
  if (r.refutations.empty()) out.fail("no refutations found");
  for (std::size_t i = 0; i < r.refutations.size(); ++i) {
    if (check_refutation(r.refutations[i])) out.fail("enumerated an invalid refutation");
    F f = r.interpolants[i];
    if (!oracle::equiv(f, atom("p")) && !oracle::equiv(f, atom("q"))) out.fail("interpolant " + str(f));
  }
  return out;
}

// 4: every interpolant class of random valid implications is realized in LKat
inline Outcome lkat_completeness(std::uint64_t seed, int n) {
  Rng rng(seed);
  Outcome out;
  for (int i = 0; i < n; ++i) {
    auto [a, b] = random_valid_implication(rng, 3);
    std::vector<std::string> shared;
    auto tables = oracle::interpolant_tables(a, b, &shared);
    auto reps = enumerate_interpolants(a, b, 3);
    if (reps.size() != tables.size()) {
      out.fail("class count " + std::to_string(reps.size()) + " vs oracle " + std::to_string(tables.size()));
      continue;
    }
    std::set<unsigned long> seen;
    for (F c : reps) seen.insert(oracle::table(c, shared));
    if (seen != std::set<unsigned long>(tables.begin(), tables.end())) out.fail("classes differ from the oracle");
    for (F c : reps) {
      ++out.count;
      try {
        P p = realize_interpolant(a, b, c, System::LKat);
        if (auto e = check_proof(p, System::LKat)) out.fail("proof check: " + e->reason);
        if (!oracle::equiv(interpolant(p), c)) out.fail("realized " + str(interpolant(p)) + " for " + str(c));
      } catch (const std::exception& e) {
        out.fail(std::string("realize ") + str(c) + ": " + e.what());
      }
    }
  }
  return out;
}

// 5: realize_pruned then eliminate_cuts
inline Outcome pruned_pipeline(std::uint64_t seed, int n) {
  Rng rng(seed);
  Outcome out;
  for (int i = 0; i < n; ++i, ++out.count) {
    auto in = random_pruned_instance(rng);
    try {
      P p = realize_pruned(in.a, in.b, in.cs);
      if (auto e = check_proof(p, System::LKat)) out.fail("realized proof: " + e->reason);
      if (!is_tame(p).tame) out.fail("realized proof is not tame");
      auto nodes = preorder(p);
      for (std::size_t k = 0; k < nodes.size(); ++k)
        if (nodes[k]->rule == Rule::Cut && !classify_cut(p, static_cast<int>(k)).type_r) out.fail("type L cut");
      if (cnf(interpolant(p)) != in.cs) out.fail("cnf differs from the target");
      auto r = eliminate_cuts(p);
      if (count_cuts(r.proof) != 0) out.fail("cuts remain");
      if (auto e = check_proof(r.proof, System::LKminus)) out.fail("result: " + e->reason);
      if (!oracle::subsumes(in.cs, cnf(interpolant(r.proof)))) out.fail("target does not subsume the result");
      if (!same_sequent(r.proof->concl, p->concl)) out.fail("end-sequent changed");
      ClauseSet prev = r.initial;
      for (const auto& s : r.trace) {
        if (!oracle::subsumes(prev, s.cnf)) out.fail("trace step " + s.kind + " breaks subsumption");
        prev = s.cnf;
      }
      if (!trace_measure_ok(r)) out.fail("measure did not decrease");
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what() + " on " + str(in.a) + " / " + str(in.b));
    }
  }
  return out;
}

// random valid sequent with top-level negations in random components
inline Sequent negated_sequent(Rng& rng) {
  auto [a, b] = random_valid_implication(rng, 2);
  auto side = [&] { return std::uniform_int_distribution<int>(1, 2)(rng); };
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return {{fresh_id(), a, make_comp(true, side())}, {fresh_id(), neg(b), make_comp(true, side())}};
    case 1: return {{fresh_id(), neg(a), make_comp(false, side())}, {fresh_id(), b, make_comp(false, side())}};
    case 2: return {{fresh_id(), neg(b), make_comp(true, side())}, {fresh_id(), neg(a), make_comp(false, side())}};
    default: return {{fresh_id(), neg(neg(a)), make_comp(true, side())}, {fresh_id(), b, make_comp(false, side())}};
  }
}

inline Outcome neg_inversion(std::uint64_t seed, int n) {
  Rng rng(seed);
  Outcome out;
  while (out.count < n) {
    Sequent s = negated_sequent(rng);
    P p = prove_or_throw(s, System::LKminus);
    for (const auto& o : p->concl) {
      if (o.f->op != Op::Neg) continue;
      ++out.count;
      P q = neg_invert(p, o.id);
      if (auto e = check_proof(q, System::LKminus)) out.fail("inverted proof: " + e->reason);
      if (interpolant(q) != interpolant(p)) out.fail("interpolant changed: " + str(interpolant(p)) + " vs " + str(interpolant(q)));
      if (q->size > 2 * p->size) out.fail("size " + std::to_string(q->size) + " > 2*" + std::to_string(p->size));
      const Occ& t = get(q->concl, o.id);
      if (t.f != o.f->l || t.comp != flip(o.comp)) out.fail("target not moved");
    }
  }
  return out;
}

inline Outcome literal_cuts(std::uint64_t seed, int n) {
  Rng rng(seed);
  Outcome out;
  while (out.count < n) {
    auto [a, b] = random_valid_implication(rng, 3);
    (void)b;
    auto vs = oracle::atoms({a});
    Table t = truth_table(a, vs);
    ClauseSet pis = prime_implicates(t, vs);
    if (pis.empty() || pis[0].empty()) continue;
    const Clause& c = pis[std::uniform_int_distribution<std::size_t>(0, pis.size() - 1)(rng)];
    P p = realize_clause(a, c);
    ++out.count;
    P q = literal_cuts_to_atomic(p);
    if (auto e = check_proof(q, System::LKat)) out.fail("converted proof: " + e->reason);
    if (cnf(interpolant(q)) != cnf(interpolant(p))) out.fail("cnf changed for clause " + str(c));
    if (!same_sequent(q->concl, p->concl)) out.fail("end-sequent changed");
    for (const Node* nd : preorder(q))
      if (nd->rule == Rule::Cut && get(nd->kids[0]->concl, nd->aux[0].id).f->op == Op::Neg &&
          !is_top(get(nd->kids[0]->concl, nd->aux[0].id).f))
        out.fail("negated cut left");
  }
  return out;
}

inline Outcome weakening_reduction(std::uint64_t seed, int n) {
  Rng rng(seed);
  Outcome out;
  for (int i = 0; i < n; ++i, ++out.count) {
    P p;
    if (i % 2 == 0) {
      auto in = random_pruned_instance(rng);
      p = realize_pruned(in.a, in.b, in.cs);
    } else {
      p = prove_or_throw(negated_sequent(rng), System::LKminus);
      // weakenings at the root travel all the way up
      for (int k = 0; k < 2; ++k)
        p = weaken(p, random_formula(rng, {"s0", "x0"}, 1), make_comp(k == 0, 1 + (i / 2) % 2));
    }
    P q = w_reduce(p);
    if (!is_w_reduced(q)) out.fail("output is not w-reduced");
    if (interpolant(q) != interpolant(p)) out.fail("interpolant changed");
    if (auto e = check_proof(q, System::LKat)) out.fail("reduced proof: " + e->reason);
    if (q->concl != p->concl) out.fail("end-sequent changed");
    for (const auto& o : p->concl)
      if (occurrence_metrics(p, o.id).weight != occurrence_metrics(q, o.id).weight) out.fail("weight of " + str(o.f) + " changed");
    if (print_proof(w_reduce(q)) != print_proof(q)) out.fail("not idempotent");
  }
  return out;
}

// 7: clause set algebra
inline ClauseSet random_cs(Rng& rng, int atoms, int max_clauses) {
  std::vector<std::string> vs;
  for (int i = 0; i < atoms; ++i) vs.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Clause> cs;
  int n = std::uniform_int_distribution<int>(0, max_clauses)(rng);
  for (int i = 0; i < n; ++i) cs.push_back(random_clause(rng, vs, 3));
  return make_clause_set(cs);
}

inline Outcome cnf_algebra(std::uint64_t seed, int n) {
  Rng rng(seed);
  Outcome out;
  std::vector<std::string> vs{"a", "b", "c"};
  for (int i = 0; i < n; ++i, ++out.count) {
    F a = random_formula(rng, vs, 3), b = random_formula(rng, vs, 3), c = random_formula(rng, vs, 3);
    F deep = random_formula(rng, vs, 6);
    F l = std::bernoulli_distribution(0.5)(rng) ? atom("a") : neg(atom("b"));
    if (!oracle::equiv(clause_set_formula(cnf(deep)), deep)) out.fail("(1) " + str(deep));
    if (cnf(conj(a, b)) != cnf(conj(b, a)) || cnf(disj(a, b)) != cnf(disj(b, a))) out.fail("(2) " + str(a) + ", " + str(b));
    if (cnf(conj(conj(a, b), c)) != cnf(conj(a, conj(b, c))) || cnf(disj(disj(a, b), c)) != cnf(disj(a, disj(b, c))))
      out.fail("(3) " + str(a) + ", " + str(b) + ", " + str(c));
    if (cnf(conj(a, a)) != cnf(a)) out.fail("(4) " + str(a));
    if (cnf(disj(l, l)) != cnf(l)) out.fail("(5) " + str(l));
    if (cnf(conj(a, top())) != cnf(a)) out.fail("(6) " + str(a));
    if (cnf(disj(a, bot())) != cnf(a)) out.fail("(7) " + str(a));
  }
  return out;
}

inline Outcome subsumption_algebra(std::uint64_t seed, int n) {
  Rng rng(seed);
  Outcome out;
  for (int i = 0; i < n; ++i, ++out.count) {
    ClauseSet a = random_cs(rng, 4, 4), b = random_cs(rng, 4, 4), c = random_cs(rng, 4, 4);
    // (1) supersets subsume
    ClauseSet sub;
    for (const auto& x : a)
      if (std::bernoulli_distribution(0.5)(rng)) sub.push_back(x);
    if (!subsumes(a, sub)) out.fail("(1)");
    bool ab = subsumes(a, b), bc = subsumes(b, c);
    if (ab != oracle::subsumes(a, b)) out.fail("subsumes disagrees with the definition");
    if (ab && bc && !subsumes(a, c)) out.fail("(2)");
    // force a subsumption pair for (3) and (4)
    ClauseSet bigger = cs_product(a, random_cs(rng, 4, 2));
    if (!subsumes(a, cs_union(a, bigger))) out.fail("union with weaker clauses");
    ClauseSet a2 = a, b2 = cs_union(cs_product(a, {Clause{lit("d")}}), a);
    if (subsumes(a2, b2)) {
      if (!subsumes(cs_union(a2, c), cs_union(b2, c))) out.fail("(3)");
      if (!subsumes(cs_product(a2, c), cs_product(b2, c))) out.fail("(4)");
    }
    if (ab) {
      if (!subsumes(cs_union(a, c), cs_union(b, c))) out.fail("(3)");
      if (!subsumes(cs_product(a, c), cs_product(b, c))) out.fail("(4)");
    }
    if (!subsumes(cs_union(cs_product(a, b), c), cs_product(cs_union(a, c), cs_union(b, c)))) out.fail("(5)");
    // subsumption implies entailment
    if (ab) {
      std::vector<std::string> vs{"a", "b", "c", "d"};
      oracle::each_env(vs, [&](const oracle::Env& e) {
        if (oracle::models(e, a) && !oracle::models(e, b)) out.fail("subsumption without entailment");
      });
    }
  }
  return out;
}

inline Outcome prune_properties(std::uint64_t seed, int n) {
  Rng rng(seed);
  Outcome out;
  std::vector<std::string> vs{"a", "b", "c", "d"};
  for (int i = 0; i < n; ++i, ++out.count) {
    ClauseSet cs = random_cs(rng, 4, 5);
    if (std::bernoulli_distribution(0.2)(rng)) cs = cs_union(cs, {Clause{Literal{true, bot()}, lit("a")}});
    ClauseSet pr = prune(cs);
    if (!is_pruned(pr)) out.fail("output not pruned: " + print_clause_set(pr));
    for (const auto& c : pr)
      for (const auto& l : c)
        if (l.is_top()) out.fail("true literal left");
    auto kept = oracle::cs_atoms(pr);
    std::vector<std::string> reduced(kept.begin(), kept.end()), dropped;
    for (const auto& v : vs)
      if (!kept.count(v)) dropped.push_back(v);
    oracle::each_env(vs, [&](const oracle::Env& e) {
      if (oracle::models(e, cs) && !oracle::models(e, pr)) out.fail("(1) a model of cs is lost: " + print_clause_set(cs));
    });
    // (2) models of the pruned set over its language extend to models of cs
    oracle::each_env(reduced, [&](const oracle::Env& e) {
      if (!oracle::models(e, pr)) return;
      bool ext = false;
      oracle::each_env(dropped, [&](const oracle::Env& d) {
        oracle::Env full = e;
        full.insert(d.begin(), d.end());
        ext = ext || oracle::models(full, cs);
      });
      if (!ext) out.fail("(2) a model of prune(cs) does not extend: " + print_clause_set(cs));
    });
  }
  return out;
}

// 8: Maehara soundness on random proofs
inline Outcome maehara_soundness(std::uint64_t seed, int n) {
  Rng rng(seed);
  Outcome out;
  const System systems[] = {System::LKminus, System::LKat, System::LKmono};
  for (int i = 0; i < n; ++i, ++out.count) {
    System sys = systems[i % 3];
    P p = random_proof(rng, sys);
    if (auto e = check_proof(p, sys)) {
      out.fail("generated proof: " + e->reason);
      continue;
    }
    P q = sys == System::LKat ? monochromatize(p) : p;
    F m = maehara(q, sys).root;
    auto s1 = sequent_atoms(q->concl, 1), s2 = sequent_atoms(q->concl, 2);
    std::set<std::string> both;
    for (const auto& v : s1)
      if (s2.count(v)) both.insert(v);
    if (!atoms_within(m, both)) out.fail("variable condition: " + str(m));
    std::vector<F> g1 = formulas(q->concl, Comp::G1), g2 = formulas(q->concl, Comp::G2);
    std::vector<F> d1 = formulas(q->concl, Comp::D1), d2 = formulas(q->concl, Comp::D2);
    d1.push_back(m);
    g2.push_back(m);
    if (!flank_ok(g1, d1)) out.fail("G1 => D1, M fails for " + str(m));
    if (!flank_ok(g2, d2)) out.fail("M, G2 => D2 fails for " + str(m));
    if (formula_length(m) > q->length) out.fail("|M| > |proof|");
    if (!is_nnf(m)) out.fail("not in NNF: " + str(m));
  }
  return out;
}

// 9: modal witness and modal completeness
inline bool k_equiv(F a, F b) { return provable(a, b, System::K) && provable(b, a, System::K); }

inline Outcome modal_witness(int depth) {
  Outcome out;
  F a = parse_formula("[](p & q)"), b = parse_formula("[](p | q)");
  auto r = enumerate_cutfree(split_sequent({a}, {}, {}, {b}), System::K, depth);
  out.count = static_cast<int>(r.proofs);
  if (r.interpolants.empty()) out.fail("no proofs found");
  for (const char* t : {"[](p & q)", "[](p | q)", "[]p & []q"})
    for (F f : r.interpolants)
      if (k_equiv(f, parse_formula(t))) out.fail(str(f) + " is K-equivalent to " + t);
  for (const char* t : {"[](p & q)", "[](p | q)", "[]p & []q"}) {
    F c = parse_formula(t);
    try {
      P p = realize_interpolant(a, b, c, System::K);
      if (auto e = check_proof(p, System::K)) out.fail(std::string("realized proof for ") + t + ": " + e->reason);
      P fwd = prove_cutfree(split_sequent({interpolant(p)}, {}, {}, {c}), System::K).proof;
      P back = prove_cutfree(split_sequent({c}, {}, {}, {interpolant(p)}), System::K).proof;
      if (!fwd || !back || check_proof(fwd, System::K) || check_proof(back, System::K))
        out.fail(std::string("no equivalence certificate for ") + t);
      for (const Node* nd : preorder(p))
        if (nd->rule == Rule::Cut) {
          F f = get(nd->kids[0]->concl, nd->aux[0].id).f;
          if (f->op != Op::Atom && f->op != Op::Box && f->op != Op::Bot && !is_top(f)) out.fail("cut on " + str(f));
        }
    } catch (const std::exception& e) {
      out.fail(std::string("realize ") + t + ": " + e.what());
    }
  }
  return out;
}

// 10: parse . print round trips
inline Outcome round_trips(std::uint64_t seed, int n) {
  Rng rng(seed);
  Outcome out;
  std::vector<std::string> vs{"p", "q", "r", "x1", "y_2"};
  for (int i = 0; i < n; ++i, ++out.count) {
    F f = random_formula(rng, vs, 5, i % 2 == 1);
    std::string t = str(f);
    F g = parse_formula(t);
    if (g != f || str(g) != t) out.fail("formula " + t);

    const System systems[] = {System::LKminus, System::LKat, System::LKmono};
    P p = random_proof(rng, systems[i % 3]);
    std::string pt = print_proof(p);
    P q = parse_proof(pt);
    if (print_proof(q) != pt) out.fail("proof text differs");
    if (check_proof(q, systems[i % 3])) out.fail("parsed proof does not check");

    auto in = random_unsat_cnf(rng, 5, 8);
    auto r = refute(in.a, in.b);
    const auto& rp = std::get<ResolutionProof>(r);
    std::string rt = print_refutation(rp);
    if (print_refutation(parse_refutation(rt)) != rt) out.fail("refutation text differs");

    ClauseSet cs = random_cs(rng, 4, 4);
    if (parse_clause_set(print_clause_set(cs)) != cs) out.fail("clause set text differs");
  }
  return out;
}

}  // namespace checks
