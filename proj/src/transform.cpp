#include "itp/transform.hpp"

#include <algorithm>

namespace itp {

namespace {

Sequent swap_occ(const Sequent& s, const Occ& o) {
  Sequent out = s;
  for (auto& x : out)
    if (x.id == o.id) x = o;
  return out;
}

P ni(const P& p, int t) {
  const Node& n = *p;
  const Occ& o = get(n.concl, t);
  F a = o.f->l;
  Comp to = flip(o.comp);

  if (n.rule == Rule::Ax) {
    const Occ& other = n.concl[0].id == t ? n.concl[1] : n.concl[0];
    int x = fresh_id();
    if (is_ante(o.comp)) {
      // ~A (target) => ~A (other): A'' => A ; then R~ rebuilds the other
      P q = ax(a, flip(other.comp), to, x, t);
      return neg_r(q, x, other.id);
    }
    P q = ax(a, to, flip(other.comp), t, x);
    return neg_l(q, x, other.id);
  }
  if (n.main == t) {
    if (is_weakening(n.rule)) return weaken(n.kids[0], a, to, t);
    if (is_contraction(n.rule)) {
      P k = ni(ni(n.kids[0], n.aux[0].id), n.aux[1].id);
      int m = fresh_id();
      return rename(contract(k, n.aux[0].id, n.aux[1].id, m), m, t);
    }
    if (n.rule == Rule::LNeg || n.rule == Rule::RNeg) return rename(n.kids[0], n.aux[0].id, t);
    throw std::logic_error("neg_invert: unexpected main rule " + std::string(rule_name(n.rule)));
  }
  if (!n.links.empty() || n.rule == Rule::K || n.rule == Rule::D) throw std::logic_error("neg_invert: target inside a modal context");
  std::vector<P> kids;
  for (const auto& k : n.kids) kids.push_back(find(k->concl, t) ? ni(k, t) : k);
  return make_node(n.rule, swap_occ(n.concl, {t, a, to}), std::move(kids), n.main, n.aux, n.links);
}

bool negated_cut_formula(F f) { return f->op == Op::Neg && !is_top(f); }

}  // namespace

P neg_invert(const P& p, int target) {
  const Occ* o = find(p->concl, target);
  if (!o) throw std::logic_error("neg_invert: no occurrence " + std::to_string(target));
  if (o->f->op != Op::Neg) throw TargetNotNegation("neg_invert: " + str(o->f) + " is not a negation");
  return ni(p, target);
}

P literal_cuts_to_atomic(const P& p) {
  std::vector<P> kids;
  bool changed = false;
  for (const auto& k : p->kids) {
    P nk = k->cuts ? literal_cuts_to_atomic(k) : k;
    changed = changed || nk != k;
    kids.push_back(nk);
  }
  P q = changed ? with_kids(*p, std::move(kids)) : p;
  if (q->rule != Rule::Cut) return q;
  P l = q->kids[0], r = q->kids[1];
  int cl = q->aux[0].id, cr = q->aux[1].id;
  while (negated_cut_formula(get(l->concl, cl).f)) {
    // ~X on the left succedent is X on the left antecedent and vice versa
    P nl = neg_invert(r, cr), nr = neg_invert(l, cl);
    l = nl;
    r = nr;
    std::swap(cl, cr);
  }
  if (l == q->kids[0]) return q;
  P c = cut(l, r, cl, cr);
  // keep the end-sequent order of the original cut
  Sequent s;
  for (const auto& o : q->concl) s.push_back(get(c->concl, o.id));
  return make_node(Rule::Cut, s, c->kids, -1, c->aux);
}

namespace {

// weaken p with o, then move that weakening as high as it goes
P push_weakening(const P& p, const Occ& o) {
  const Node& n = *p;
  if (is_axiom(n.rule) || is_weakening(n.rule) || is_modal_rule(n.rule)) return weaken(p, o.f, o.comp, o.id);
  std::vector<Aux> aux = n.aux;
  std::vector<Link> links = n.links;
  std::vector<P> kids;
  for (std::size_t k = 0; k < n.kids.size(); ++k) {
    P kid = n.kids[k];
    if (find(kid->concl, o.id)) {
      int f = fresh_id();
      kid = rename(kid, o.id, f);
      for (auto& a : aux)
        if (a.kid == static_cast<int>(k) && a.id == o.id) a.id = f;
      for (auto& l : links)
        if (l.kid == static_cast<int>(k) && l.from == o.id) l.from = f;
    }
    kids.push_back(push_weakening(kid, o));
  }
  Sequent s = n.concl;
  s.push_back(o);
  return make_node(n.rule, std::move(s), std::move(kids), n.main, std::move(aux), std::move(links));
}

}  // namespace

P w_reduce(const P& p) {
  std::vector<P> kids;
  bool changed = false;
  for (const auto& k : p->kids) {
    P nk = w_reduce(k);
    changed = changed || nk != k;
    kids.push_back(nk);
  }
  P q = changed ? with_kids(*p, std::move(kids)) : p;
  if (!is_weakening(q->rule)) return q;
  const P& k = q->kids[0];
  if (is_axiom(k->rule) || is_weakening(k->rule) || is_modal_rule(k->rule)) return q;
  P r = push_weakening(k, get(q->concl, q->main));
  // conclusion order as before
  Sequent s;
  for (const auto& o : q->concl) s.push_back(get(r->concl, o.id));
  return make_node(r->rule, s, r->kids, r->main, r->aux, r->links);
}

P delete_weak(const P& p, int id) {
  const Node& n = *p;
  if (n.main == id) {
    if (is_weakening(n.rule)) return n.kids[0];
    if (is_contraction(n.rule)) return delete_weak(delete_weak(n.kids[0], n.aux[0].id), n.aux[1].id);
    throw std::logic_error("delete_weak: occurrence is not weak");
  }
  if (is_axiom(n.rule)) throw std::logic_error("delete_weak: occurrence is not weak");
  std::vector<P> kids;
  for (const auto& k : n.kids) kids.push_back(find(k->concl, id) ? delete_weak(k, id) : k);
  return make_node(n.rule, without(n.concl, id), std::move(kids), n.main, n.aux, n.links);
}

P fresh_inside(const P& p) {
  std::map<int, int> m;
  P q = refresh(p, &m);
  for (auto [old, now] : m) q = rename(q, now, old);
  return q;
}

}  // namespace itp
