#pragma once

#include "itp/sequent.hpp"

namespace fx {

using namespace itp;

inline F pf(const char* s) { return parse_formula(s); }

inline int id_of(const P& p, F f, Comp c) {
  for (const auto& o : p->concl)
    if (o.f == f && o.comp == c) return o.id;
  throw std::logic_error("fixture: no occurrence " + str(f));
}

// a | b => ~(~a & ~b), everything on the left of the partition
inline P de_morgan() {
  F a = atom("a"), b = atom("b");
  P l = ax(a, Comp::G1, Comp::D1);
  l = neg_l(l, id_of(l, a, Comp::D1));
  l = and_l(l, id_of(l, neg(a), Comp::G1), neg(b), true);
  P r = ax(b, Comp::G1, Comp::D1);
  r = neg_l(r, id_of(r, b, Comp::D1));
  r = and_l(r, id_of(r, neg(b), Comp::G1), neg(a), false);
  P o = or_l(l, r, id_of(l, a, Comp::G1), id_of(r, b, Comp::G1));
  return neg_r(o, id_of(o, conj(neg(a), neg(b)), Comp::G1));
}

// p & q ; => ; p (second = false) or p & q ; => ; q
inline P pick_conjunct(bool second) {
  F p = atom("p"), q = atom("q");
  F x = second ? q : p;
  P a = ax(x, Comp::G1, Comp::D2);
  return and_l(a, id_of(a, x, Comp::G1), second ? p : q, !second);
}

// the context-sharing proof of p & q ; => ; p | q with interpolant q & (p & true)
inline P sigma() {
  F p = atom("p"), q = atom("q"), pq = conj(p, q), porq = disj(p, q);
  P rho = ax(p, Comp::G2, Comp::D2);
  rho = weaken(rho, q, Comp::G2);
  rho = or_r(rho, id_of(rho, p, Comp::D2), q, true);
  P l1 = weaken(weaken(pick_conjunct(false), q, Comp::G2), porq, Comp::D2);
  P r1 = weaken(rho, pq, Comp::G1);
  P c1 = cut(l1, r1, id_of(l1, p, Comp::D2), id_of(r1, p, Comp::G2));
  P l2 = pick_conjunct(true);
  l2 = weaken(weaken(l2, pq, Comp::G1), porq, Comp::D2);
  P r2 = weaken(c1, pq, Comp::G1);
  P c2 = cut(l2, r2, id_of(l2, q, Comp::D2), id_of(r2, q, Comp::G2));
  std::vector<int> ids;
  for (const auto& o : c2->concl)
    if (o.f == pq) ids.push_back(o.id);
  return contract(c2, ids[0], ids[1]);
}

}  // namespace fx
