#include "itp/maehara.hpp"
#include "itp/transform.hpp"

#include <functional>
#include <sstream>

namespace itp {

namespace {

const Node* wax_axiom(const P& p) {
  const Node* n = p.get();
  while (is_weakening(n->rule)) n = n->kids[0].get();
  return is_axiom(n->rule) ? n : nullptr;
}

P weaken_occ(const P& p, const Occ& o) {
  if (find(p->concl, o.id)) throw std::logic_error("cut elimination: id clash on " + std::to_string(o.id));
  return weaken(p, o.f, o.comp, o.id);
}

std::vector<Occ> aux_occs(const Node& n, int kid) {
  std::vector<Occ> out;
  for (const auto& a : n.aux)
    if (a.kid == kid) out.push_back(get(n.kids[kid]->concl, a.id));
  return out;
}

// rebuild the unary inference r on top of kid, main occurrence under a new id
P reapply(const Node& r, const P& kid, int main_id) {
  std::set<int> ax;
  for (const auto& a : r.aux) ax.insert(a.id);
  Sequent s;
  for (const auto& o : kid->concl)
    if (!ax.count(o.id)) s.push_back(o);
  const Occ& m = get(r.concl, r.main);
  s.push_back({main_id, m.f, m.comp});
  return make_node(r.rule, std::move(s), {kid}, main_id, r.aux, r.links);
}

// contract the copies `a` (old main id) and `b`, naming the result `a`
P merge(const P& p, int a, int b) {
  int m = fresh_id();
  return rename(contract(p, a, b, m), m, a);
}

P merge_as(const P& p, int a, int b, int id) {
  int m = fresh_id();
  return rename(contract(p, a, b, m), m, id);
}

P order_like(const P& p, const Sequent& order) {
  Sequent s;
  for (const auto& o : order) s.push_back(get(p->concl, o.id));
  return make_node(p->rule, s, p->kids, p->main, p->aux, p->links);
}

// C(ida in ca) => C(ids in cs) from atomic axioms; the last rule introduces
// the succedent occurrence when succ_principal, else the antecedent one
P expand_axiom(F c, Comp ca, Comp cs, int ida, int ids, bool succ_principal) {
  switch (c->op) {
    case Op::Atom:
    case Op::Bot:
    case Op::Box: return ax(c, ca, cs, ida, ids);
    case Op::Neg: {
      int x = fresh_id(), y = fresh_id();
      P inner = expand_axiom(c->l, flip(cs), flip(ca), x, y, true);
      if (succ_principal) return neg_r(neg_l(inner, y, ida), x, ids);
      return neg_l(neg_r(inner, x, ids), y, ida);
    }
    case Op::And: {
      int a1 = fresh_id(), a2 = fresh_id(), s1 = fresh_id(), s2 = fresh_id(), x1 = fresh_id(), x2 = fresh_id();
      P l = and_l(expand_axiom(c->l, ca, cs, a1, s1, true), a1, c->r, true, x1);
      P r = and_l(expand_axiom(c->r, ca, cs, a2, s2, true), a2, c->l, false, x2);
      if (succ_principal) return rename(and_r(l, r, s1, s2, ids), x1, ida);
      l = weaken(l, c, ca, x2);
      r = weaken(r, c, ca, x1);
      return merge_as(and_r(l, r, s1, s2, ids), x1, x2, ida);
    }
    case Op::Or: {
      int a1 = fresh_id(), a2 = fresh_id(), s1 = fresh_id(), s2 = fresh_id(), y1 = fresh_id(), y2 = fresh_id();
      P l = or_r(expand_axiom(c->l, ca, cs, a1, s1, false), s1, c->r, true, y1);
      P r = or_r(expand_axiom(c->r, ca, cs, a2, s2, false), s2, c->l, false, y2);
      if (!succ_principal) return rename(or_l(l, r, a1, a2, ida), y1, ids);
      l = weaken(l, c, cs, y2);
      r = weaken(r, c, cs, y1);
      return merge_as(or_l(l, r, a1, a2, ida), y1, y2, ids);
    }
    default: break;
  }
  throw std::logic_error("unreachable");
}


struct Step {
  P proof;
  std::string kind;
};

const Occ& ante_occ(const Node& a) { return is_ante(a.concl[0].comp) ? a.concl[0] : a.concl[1]; }
const Occ& succ_occ(const Node& a) { return is_ante(a.concl[0].comp) ? a.concl[1] : a.concl[0]; }

P binary_like(const Node& r, const P& l, const P& k, int al, int ar, int id) {
  return r.rule == Rule::RAnd ? and_r(l, k, al, ar, id) : or_l(l, k, al, ar, id);
}

P weaken_all(P p, const Sequent& ctx, const std::set<int>& skip) {
  for (const auto& o : ctx)
    if (!skip.count(o.id)) p = weaken_occ(p, o);
  return p;
}

Step permute_left(const P& L, const P& R, int u1, int u2) {
  const Node& r = *L;
  Occ m = get(r.concl, r.main);
  int m2 = fresh_id();
  if (r.kids.size() == 1) {
    P k1 = w_reduce(weaken_occ(r.kids[0], m));
    P k2 = R;
    for (const auto& x : aux_occs(r, 0)) k2 = weaken_occ(k2, x);
    P cc = cut(k1, w_reduce(k2), u1, u2);
    return {merge(reapply(r, cc, m2), m.id, m2), "permute-unary-left"};
  }
  Occ xa = aux_occs(r, 0)[0], xb = aux_occs(r, 1)[0];
  P k1 = w_reduce(weaken_occ(r.kids[0], m)), k2 = w_reduce(weaken_occ(r.kids[1], m));
  P r1 = w_reduce(weaken_occ(R, xa)), r2 = w_reduce(weaken_occ(fresh_inside(R), xb));
  P c1 = cut(k1, r1, u1, u2), c2 = cut(k2, r2, u1, u2);
  return {merge(binary_like(r, c1, c2, xa.id, xb.id, m2), m.id, m2), "permute-binary-left"};
}

Step permute_right(const P& L, const P& R, int u1, int u2) {
  const Node& r = *R;
  Occ m = get(r.concl, r.main);
  int m2 = fresh_id();
  if (r.kids.size() == 1) {
    P k2 = w_reduce(weaken_occ(r.kids[0], m));
    P k1 = L;
    for (const auto& x : aux_occs(r, 0)) k1 = weaken_occ(k1, x);
    P cc = cut(w_reduce(k1), k2, u1, u2);
    return {merge(reapply(r, cc, m2), m.id, m2), "permute-unary-right"};
  }
  Occ xa = aux_occs(r, 0)[0], xb = aux_occs(r, 1)[0];
  P l1 = w_reduce(weaken_occ(L, xa)), l2 = w_reduce(weaken_occ(fresh_inside(L), xb));
  P k1 = w_reduce(weaken_occ(r.kids[0], m)), k2 = w_reduce(weaken_occ(r.kids[1], m));
  P c1 = cut(l1, k1, u1, u2), c2 = cut(l2, k2, u1, u2);
  return {merge(binary_like(r, c1, c2, xa.id, xb.id, m2), m.id, m2), "permute-binary-right"};
}

Step contraction_left(const P& L, const P& R, int u1, int u2) {
  const P& k = L->kids[0];
  int ia = L->aux[0].id, ib = L->aux[1].id;
  Ancestry an(k);
  for (int pass = 0; pass < 2; ++pass) {
    if (an.weak({0, ia})) return {cut(rename(delete_weak(k, ia), ib, u1), R, u1, u2), "contraction-weak-left"};
    std::swap(ia, ib);
  }
  P r2 = w_reduce(weaken_occ(R, get(k->concl, ib)));
  P c1 = cut(k, r2, ia, u2);
  return {cut(c1, fresh_inside(R), ib, u2), "contraction-left"};
}

Step contraction_right(const P& L, const P& R, int u1, int u2) {
  const P& k = R->kids[0];
  int ia = R->aux[0].id, ib = R->aux[1].id;
  Ancestry an(k);
  for (int pass = 0; pass < 2; ++pass) {
    if (an.weak({0, ia})) return {cut(L, rename(delete_weak(k, ia), ib, u2), u1, u2), "contraction-weak-right"};
    std::swap(ia, ib);
  }
  P l2 = w_reduce(weaken_occ(L, get(k->concl, ib)));
  P c1 = cut(l2, k, u1, ia);
  return {cut(fresh_inside(L), c1, u1, ib), "contraction-right"};
}

Step axiom_case(const Node& axl, const Node& axr, const Sequent& concl) {
  const Occ& la = ante_occ(axl);
  if (axr.rule == Rule::Bot) return {weaken_all(bot_ax(la.comp, la.id), concl, {la.id}), "axiom"};
  const Occ& rs = succ_occ(axr);
  int sa = side_of(la.comp), ss = side_of(rs.comp);
  if (sa == 1 && ss == 1) throw NotTame("cut between an L/R and an R/L axiom");
  std::string kind = std::string("axiom ") + (sa == 1 ? "L/R" : "R/R") + "-" + (ss == 1 ? "R/L" : "R/R");
  return {weaken_all(ax(la.f, la.comp, rs.comp, la.id, rs.id), concl, {la.id, rs.id}), kind};
}

Step degree_case(const P& L, const P& R, F c) {
  auto bad = [&]() { return std::logic_error(std::string("cut elimination: rules ") + rule_name(L->rule) + "/" + rule_name(R->rule) + " on " + str(c)); };
  switch (c->op) {
    case Op::And:
      if (L->rule != Rule::RAnd) throw bad();
      if (R->rule == Rule::LAnd1) return {cut(L->kids[0], R->kids[0], L->aux[0].id, R->aux[0].id), "degree-and"};
      if (R->rule == Rule::LAnd2) return {cut(L->kids[1], R->kids[0], L->aux[1].id, R->aux[0].id), "degree-and"};
      throw bad();
    case Op::Or:
      if (R->rule != Rule::LOr) throw bad();
      if (L->rule == Rule::ROr1) return {cut(L->kids[0], R->kids[0], L->aux[0].id, R->aux[0].id), "degree-or"};
      if (L->rule == Rule::ROr2) return {cut(L->kids[0], R->kids[1], L->aux[0].id, R->aux[1].id), "degree-or"};
      throw bad();
    case Op::Neg:
      if (L->rule != Rule::RNeg || R->rule != Rule::LNeg) throw bad();
      return {cut(R->kids[0], L->kids[0], R->aux[0].id, L->aux[0].id), "degree-neg"};
    default: throw bad();
  }
}

Step reduce(const P& chi) {
  const Node& c = *chi;
  P L = c.kids[0], R = c.kids[1];
  int u1 = c.aux[0].id, u2 = c.aux[1].id;
  if (is_modal_rule(L->rule) || is_modal_rule(R->rule)) throw std::invalid_argument("cut elimination handles propositional proofs only");
  Ancestry an(chi);
  if (an.weak({an.kid(0, 0), u1})) return {delete_weak(L, u1), "weak-cut-formula-left"};
  if (an.weak({an.kid(0, 1), u2})) return {delete_weak(R, u2), "weak-cut-formula-right"};
  const Node* axl = wax_axiom(L);
  const Node* axr = wax_axiom(R);
  if (!axl && L->main != u1) return permute_left(L, R, u1, u2);
  if (!axr && R->main != u2) return permute_right(L, R, u1, u2);
  if (!axl && is_contraction(L->rule)) return contraction_left(L, R, u1, u2);
  if (!axr && is_contraction(R->rule)) return contraction_right(L, R, u1, u2);
  if (axl && axr) return axiom_case(*axl, *axr, c.concl);
  F f = get(L->concl, u1).f;
  if (axl) {
    const Occ& la = ante_occ(*axl);
    P e = expand_axiom(f, la.comp, get(L->concl, u1).comp, la.id, u1, true);
    e = w_reduce(weaken_all(e, L->concl, {la.id, u1}));
    return {cut(e, R, u1, u2), "axiom-expansion"};
  }
  if (axr) {
    const Occ& rs = succ_occ(*axr);
    P e = expand_axiom(f, get(R->concl, u2).comp, rs.comp, u2, rs.id, false);
    e = w_reduce(weaken_all(e, R->concl, {rs.id, u2}));
    return {cut(L, e, u1, u2), "axiom-expansion"};
  }
  return degree_case(L, R, f);
}

// leftmost cut with no cut above it
std::optional<std::pair<int, P>> uppermost_cut(const P& root) {
  int counter = 0;
  std::optional<std::pair<int, P>> hit;
  std::function<void(const P&)> go = [&](const P& p) {
    int me = counter++;
    if (hit) return;
    if (p->rule == Rule::Cut && p->cuts == 1) {
      hit = std::make_pair(me, p);
      return;
    }
    for (const auto& k : p->kids) {
      if (hit) return;
      if (!k->cuts) {
        counter += k->size;
        continue;
      }
      go(k);
    }
  };
  if (root->cuts) go(root);
  return hit;
}

ClauseSet root_cnf(const P& p) { return cnf(interpolant(p)); }

}  // namespace

CutElimResult eliminate_cuts(const P& input, std::size_t max_steps) {
  for (const Node* n : preorder(input))
    if (is_modal_rule(n->rule)) throw std::invalid_argument("cut elimination handles propositional proofs only");
  if (auto e = check_proof(input, System::LKmono)) {
    if (e->reason.find("monochromatic") != std::string::npos) throw NonMonochromaticCut(e->reason);
    throw std::invalid_argument("input does not check: " + e->reason);
  }
  {
    auto ns = preorder(input);
    for (int i = 0; i < static_cast<int>(ns.size()); ++i)
      if (ns[i]->rule == Rule::Cut && side_of(get(ns[i]->kids[0]->concl, ns[i]->aux[0].id).comp) != 2)
        throw NotTypeR("cut at node " + std::to_string(i) + " is of type L");
  }
  if (!is_tame(input).tame) throw NotTame("input proof is not tame");

  CutElimResult out;
  out.initial = root_cnf(input);
  P p = w_reduce(fresh_inside(input));
  while (auto hit = uppermost_cut(p)) {
    if (out.trace.size() >= max_steps) throw std::runtime_error("cut elimination exceeded the step limit");
    auto [idx, chi] = *hit;
    Ancestry an(chi);
    TraceStep st;
    st.cut = idx;
    st.degree = connectives(get(chi->kids[0]->concl, chi->aux[0].id).f);
    st.weight = an.cut_weight(0);
    Step s = reduce(chi);
    P np = order_like(s.proof, chi->concl);
    st.kind = s.kind;
    Ancestry an2(np);
    const auto& ns = an2.nodes();
    for (int i = 0; i < static_cast<int>(ns.size()); ++i)
      if (ns[i]->rule == Rule::Cut) st.replaced_by.push_back({connectives(get(ns[i]->kids[0]->concl, ns[i]->aux[0].id).f), an2.cut_weight(i)});
    p = replace_at(p, idx, np);
    st.cnf = root_cnf(p);
    out.trace.push_back(std::move(st));
  }
  out.proof = p;
  return out;
}

bool trace_subsumption_ok(const CutElimResult& r) {
  const ClauseSet* prev = &r.initial;
  for (const auto& s : r.trace) {
    if (!subsumes(*prev, s.cnf)) return false;
    prev = &s.cnf;
  }
  return true;
}

bool trace_measure_ok(const CutElimResult& r) {
  for (const auto& s : r.trace)
    for (auto [d, w] : s.replaced_by) {
      if (s.kind == "axiom-expansion") {
        if (d != s.degree) return false;
      } else if (!(d < s.degree || (d == s.degree && w < s.weight))) {
        return false;
      }
    }
  return true;
}

std::string print_trace(const CutElimResult& r) {
  std::ostringstream out;
  for (const auto& s : r.trace) {
    out << s.kind << " cut=" << s.cut << " (" << s.degree << "," << s.weight << ") ";
    for (std::size_t i = 0; i < s.cnf.size(); ++i) out << (i ? " " : "") << "{" << str(s.cnf[i]) << "}";
    out << "\n";
  }
  return out.str();
}

}  // namespace itp
