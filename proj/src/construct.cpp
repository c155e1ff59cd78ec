#include "itp/construct.hpp"

#include "itp/maehara.hpp"
#include "itp/resolution.hpp"

#include <algorithm>

namespace itp {

namespace {

bool derives(const std::vector<F>& ante, F succ, System sys) {
  if (!is_modal(sys)) return entails(conj_all(ante), succ);
  return prove_cutfree(split_sequent(ante, {}, {}, {succ}), sys).proof != nullptr;
}

System search_system(System sys) { return is_modal(sys) ? sys : System::LKminus; }

// a clause literal sits in a sequent either as itself in D2 or as its dual in G2
struct Built {
  P proof;
  std::map<Literal, int> occ;
  int a_id, b_id;
};

bool negated_occ(const P& p, int id) {
  F f = get(p->concl, id).f;
  return f->op == Op::Neg && !is_top(f);
}

// literal in the other form: ~X in D2 <-> X in G2 and X in D2 <-> ~X in G2
P switch_form(const P& p, int id) { return neg_invert(p, id); }

Built leaf_plus(const P& pi, const Clause& c, F a, F b) {
  std::map<int, int> m;
  P q = refresh(pi, &m);
  Built out{nullptr, {}, -1, -1};
  std::set<int> used;
  for (const auto& o : q->concl)
    if (o.comp == Comp::G1 && o.f == a && out.a_id < 0) {
      out.a_id = o.id;
      used.insert(o.id);
    }
  for (const auto& l : c)
    for (const auto& o : q->concl)
      if (!used.count(o.id) && o.comp == Comp::D2 && o.f == l.formula()) {
        out.occ[l] = o.id;
        used.insert(o.id);
        break;
      }
  out.b_id = fresh_id();
  out.proof = weaken(q, b, Comp::D2, out.b_id);
  return out;
}

Built leaf_minus(const P& sigma, const Clause& d, F a, F b) {
  std::map<int, int> m;
  P q = refresh(sigma, &m);
  Built out{nullptr, {}, -1, -1};
  std::set<int> used;
  for (const auto& o : q->concl)
    if (o.comp == Comp::D2 && o.f == b && out.b_id < 0) {
      out.b_id = o.id;
      used.insert(o.id);
    }
  // clause literal l of the C- clause sits as its dual in G2
  for (const auto& l : d)
    for (const auto& o : q->concl)
      if (!used.count(o.id) && o.comp == Comp::G2 && o.f == l.dual().formula()) {
        out.occ[l] = o.id;
        used.insert(o.id);
        break;
      }
  out.a_id = fresh_id();
  out.proof = weaken(q, a, Comp::G1, out.a_id);
  return out;
}

// context-sharing cut of l (pivot positive) and r (pivot negative)
Built resolve_step(Built l, Built r, F pivot) {
  Literal pos{false, pivot}, negl{true, pivot};
  int pl = l.occ.at(pos), pr = r.occ.at(negl);
  l.occ.erase(pos);
  r.occ.erase(negl);
  // shared literals: same form on both sides, same id
  for (auto& [lit, rid] : r.occ) {
    auto it = l.occ.find(lit);
    if (it == l.occ.end()) continue;
    const Occ& lo = get(l.proof->concl, it->second);
    const Occ& ro = get(r.proof->concl, rid);
    if (lo.comp != ro.comp) {
      if (negated_occ(r.proof, rid))
        r.proof = switch_form(r.proof, rid);
      else
        l.proof = switch_form(l.proof, it->second);
    }
    r.proof = rename(r.proof, rid, it->second);
    rid = it->second;
  }
  r.proof = rename(r.proof, r.a_id, l.a_id);
  r.proof = rename(r.proof, r.b_id, l.b_id);
  for (const auto& [lit, rid] : r.occ)
    if (!l.occ.count(lit)) {
      const Occ& o = get(r.proof->concl, rid);
      l.proof = weaken(l.proof, o.f, o.comp, o.id);
    }
  for (const auto& [lit, lid] : l.occ)
    if (!r.occ.count(lit)) {
      const Occ& o = get(l.proof->concl, lid);
      r.proof = weaken(r.proof, o.f, o.comp, o.id);
    }
  // the pivot: X in D2 on the left, X in G2 on the right
  Comp cl = get(l.proof->concl, pl).comp, cr = get(r.proof->concl, pr).comp;
  P out;
  if (cl == Comp::D2 && cr == Comp::G2) {
    out = cut(l.proof, r.proof, pl, pr);
  } else if (cl == Comp::G2 && cr == Comp::D2) {
    out = cut(r.proof, l.proof, pr, pl);  // on ~X
  } else if (cl == Comp::D2) {
    out = cut(l.proof, switch_form(r.proof, pr), pl, pr);
  } else {
    out = cut(switch_form(l.proof, pl), r.proof, pl, pr);
  }
  for (const auto& [lit, rid] : r.occ) l.occ[lit] = rid;
  l.proof = out;
  return l;
}

void check_end(const P& p, F a, const Clause& c, std::size_t i) {
  std::vector<std::string> want, got;
  want.push_back("G1:" + str(a));
  for (const auto& l : c) want.push_back("D2:" + str(l.formula()));
  for (const auto& o : p->concl) got.push_back(std::string(comp_name(o.comp)) + ":" + str(o.f));
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got) throw SubproofMismatch("subproof " + std::to_string(i) + " does not prove A ; => ; " + str(c));
}

}  // namespace

P realize_clause(F a, const Clause& c, System sys) {
  std::vector<F> ls;
  for (const auto& l : c) ls.push_back(l.formula());
  if (!derives({a}, disj_all(ls), sys)) throw NotEntailed(str(a) + " does not entail " + str(c));
  Sequent s = split_sequent({a}, {}, ls, {});
  P p = prove_or_throw(s, search_system(sys));
  for (std::size_t i = 0; i < ls.size(); ++i) {
    int li = s[i + 1].id;
    int y = fresh_id(), x = fresh_id();
    p = weaken(p, ls[i], Comp::D2, y);
    Sequent ctx;
    for (const auto& o : p->concl)
      if (o.id != li && o.id != y) ctx.push_back(o);
    P w = wax(ls[i], Comp::G1, Comp::D2, ctx, x, y);
    p = cut(p, w, li, x);
  }
  return p;
}

P conjoin(F a, F b, const ClauseSet& cs, const std::vector<P>& pis, System sys, std::size_t cap) {
  if (pis.size() != cs.size()) throw SubproofMismatch("one subproof per clause is needed");
  for (std::size_t i = 0; i < cs.size(); ++i) check_end(pis[i], a, cs[i], i);
  if (!derives({a}, clause_set_formula(cs), sys) || !derives({clause_set_formula(cs)}, b, sys))
    throw NotAnInterpolant(print_clause_set(cs) + " is not an interpolant of " + str(a) + " -> " + str(b));

  // one dual literal per clause
  std::set<Clause> minus{Clause{}};
  for (const auto& c : cs) {
    std::set<Clause> next;
    for (const auto& d : minus)
      for (const auto& l : c) {
        Clause e = d;
        e.push_back(l.dual());
        next.insert(make_clause(e));
        if (next.size() > cap) throw CapExceeded("C- has more than " + std::to_string(cap) + " clauses");
      }
    minus = std::move(next);
  }
  std::vector<Clause> all(cs.begin(), cs.end());
  for (const auto& d : minus)
    if (!tautological(d)) all.push_back(d);
  auto res = refute(make_clause_set(all));
  if (!std::holds_alternative<ResolutionProof>(res)) throw std::logic_error("conjoin: C+ and C- are satisfiable together");
  const ResolutionProof& rp = std::get<ResolutionProof>(res);

  std::map<Clause, P> sigma;
  System ss = search_system(sys);
  std::vector<Built> built(rp.nodes.size());
  for (std::size_t i = 0; i < rp.nodes.size(); ++i) {
    const ResNode& n = rp.nodes[i];
    switch (n.kind) {
      case ResNode::Input: {
        auto it = std::find(cs.begin(), cs.end(), n.clause);
        if (it != cs.end()) {
          built[i] = leaf_plus(pis[it - cs.begin()], n.clause, a, b);
          break;
        }
        if (!sigma.count(n.clause)) {
          std::vector<F> g2;
          for (const auto& l : n.clause) g2.push_back(l.dual().formula());
          sigma[n.clause] = prove_or_throw(split_sequent({}, g2, {}, {b}), ss);
        }
        built[i] = leaf_minus(sigma[n.clause], n.clause, a, b);
        break;
      }
      case ResNode::Res: built[i] = resolve_step(built[n.left], built[n.right], n.pivot); break;
      case ResNode::Weak: {
        Built w = built[n.left];
        for (const auto& l : n.added)
          if (!w.occ.count(l)) {
            int id = fresh_id();
            w.proof = weaken(w.proof, l.formula(), Comp::D2, id);
            w.occ[l] = id;
          }
        built[i] = w;
        break;
      }
    }
  }
  const Built& root = built.back();
  if (!root.occ.empty()) throw std::logic_error("conjoin: refutation does not end in the empty clause");
  P p = literal_cuts_to_atomic(root.proof);
  Sequent order{get(p->concl, root.a_id), get(p->concl, root.b_id)};
  return make_node(p->rule, order, p->kids, p->main, p->aux, p->links);
}

P realize_interpolant(F a, F b, F c, System sys, std::size_t cap) {
  Verdict v = verify_interpolant(a, b, c, sys);
  if (!v.ok) throw NotAnInterpolant(str(c) + ": " + v.reason);
  ClauseSet cs;
  for (const auto& cl : is_modal(sys) ? mcnf(c) : cnf(c))
    if (!tautological(cl)) cs.push_back(cl);
  std::vector<P> pis;
  for (const auto& cl : cs) pis.push_back(realize_clause(a, cl, sys));
  return conjoin(a, b, cs, pis, sys, cap);
}

P realize_pruned(F a, F b, const ClauseSet& cs, std::size_t cap) {
  if (!is_pruned_interpolant(cs, a, b)) throw NotPrunedInterpolant(print_clause_set(cs) + " is not a pruned interpolant");
  std::vector<P> pis;
  for (const auto& c : cs) {
    std::vector<F> ls;
    for (const auto& l : c) ls.push_back(l.formula());
    pis.push_back(prove_or_throw(split_sequent({a}, {}, {}, ls), System::LKminus));
  }
  return conjoin(a, b, cs, pis, System::LKat, cap);
}

CutElimResult pruned_subsumption_pipeline(F a, F b, const ClauseSet& cs, std::size_t cap) {
  return eliminate_cuts(realize_pruned(a, b, cs, cap));
}

}  // namespace itp
