#include "itp/construct.hpp"
#include "itp/maehara.hpp"
#include "itp/transform.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace itp;
using fx::id_of;
using fx::pf;

TEST(NegInvert, AxiomCase) {
  F na = pf("~a");
  P p = ax(na, Comp::G1, Comp::D2);
  int t = p->concl[1].id;
  P q = neg_invert(p, t);
  EXPECT_EQ(q->size, 2);
  EXPECT_EQ(get(q->concl, t).f, atom("a"));
  EXPECT_EQ(get(q->concl, t).comp, Comp::G2);
  EXPECT_EQ(interpolant(q), interpolant(p));
  EXPECT_EQ(interpolant(q), na);
  EXPECT_FALSE(check_proof(q, System::LKminus));
}

TEST(NegInvert, RightNegationIsDropped) {
  P k = ax(atom("a"), Comp::G1, Comp::D1);
  P p = neg_r(k, k->concl[0].id);
  P q = neg_invert(p, p->main);
  EXPECT_EQ(q->rule, Rule::Ax);
  EXPECT_EQ(get(q->concl, p->main).f, atom("a"));
  EXPECT_EQ(get(q->concl, p->main).comp, Comp::G1);
}

TEST(NegInvert, RecursesThroughDisjunction) {
  F a = atom("a"), b = atom("b"), c = atom("c");
  P l = weaken(weaken(ax(a, Comp::G1, Comp::D2), b, Comp::D2), neg(c), Comp::D2);
  P r = weaken(weaken(ax(b, Comp::G1, Comp::D2), a, Comp::D2), neg(c), Comp::D2);
  P o = or_l(l, r, id_of(l, a, Comp::G1), id_of(r, b, Comp::G1));
  int t = id_of(o, neg(c), Comp::D2);
  P q = neg_invert(o, t);
  EXPECT_FALSE(check_proof(q, System::LKminus));
  EXPECT_EQ(interpolant(q), interpolant(o));
  EXPECT_EQ(get(q->concl, t).comp, Comp::G2);
  EXPECT_EQ(q->rule, Rule::LOr);
}

TEST(NegInvert, DoubleNegationAxiomCorner) {
  // ; ~a => ~a ; has interpolant ~~a; the inverted proof is an L/R axiom on a
  F na = pf("~a");
  P p = ax(na, Comp::G2, Comp::D1);
  P q = neg_invert(p, p->concl[0].id);
  EXPECT_EQ(interpolant(p), pf("~~a"));
  EXPECT_EQ(interpolant(q), atom("a"));
  EXPECT_TRUE(oracle::equiv(interpolant(p), interpolant(q)));
}

TEST(NegInvert, Errors) {
  P p = ax(atom("a"), Comp::G1, Comp::D2);
  EXPECT_THROW(neg_invert(p, p->concl[0].id), TargetNotNegation);
}

TEST(LiteralCuts, SingleNegatedCut) {
  P p = realize_clause(pf("~q & r"), {lit("q", true)});
  int before = 0;
  for (const Node* n : preorder(p))
    if (n->rule == Rule::Cut) {
      EXPECT_EQ(get(n->kids[0]->concl, n->aux[0].id).f, pf("~q"));
      ++before;
    }
  ASSERT_EQ(before, 1);
  P q = literal_cuts_to_atomic(p);
  EXPECT_FALSE(check_proof(q, System::LKat));
  EXPECT_EQ(cnf(interpolant(q)), cnf(interpolant(p)));
  for (const Node* n : preorder(q))
    if (n->rule == Rule::Cut) EXPECT_EQ(get(n->kids[0]->concl, n->aux[0].id).f, atom("q"));
  EXPECT_TRUE(same_sequent(q->concl, p->concl));
}

TEST(LiteralCuts, StackedNegatedCuts) {
  P p = realize_clause(pf("~p & ~q"), make_clause({lit("p", true), lit("q", true)}));
  EXPECT_EQ(count_cuts(p), 2);
  P q = literal_cuts_to_atomic(p);
  EXPECT_FALSE(check_proof(q, System::LKat));
  EXPECT_EQ(cnf(interpolant(q)), cnf(interpolant(p)));
  EXPECT_LE(q->size, 2 * p->size);
}

TEST(LiteralCuts, AtomicProofUnchanged) {
  P s = fx::sigma();
  EXPECT_EQ(literal_cuts_to_atomic(s), s);
}

TEST(WReduce, BelowNegation) {
  F p = atom("p");
  P a = ax(p, Comp::G1, Comp::D1);
  P n = neg_l(a, a->concl[1].id);
  P w = weaken(n, atom("q"), Comp::G2);
  ASSERT_FALSE(is_w_reduced(w));
  P r = w_reduce(w);
  EXPECT_TRUE(is_w_reduced(r));
  EXPECT_EQ(r->rule, Rule::LNeg);
  EXPECT_EQ(r->kids[0]->rule, Rule::Lw);
  EXPECT_EQ(interpolant(r), interpolant(w));
  EXPECT_EQ(r->concl, w->concl);
  EXPECT_FALSE(check_proof(r, System::LKminus));
}

TEST(WReduce, BelowConjunctionDuplicates) {
  P l = ax(atom("p"), Comp::G1, Comp::D2);
  P r = weaken(ax(atom("q"), Comp::G1, Comp::D2), atom("p"), Comp::G1);
  l = weaken(l, atom("q"), Comp::G1);
  P a = and_r(l, r, l->concl[1].id, id_of(r, atom("q"), Comp::D2));
  P w = weaken(a, atom("s"), Comp::D1);
  P out = w_reduce(w);
  EXPECT_EQ(out->rule, Rule::RAnd);
  EXPECT_EQ(out->kids[0]->rule, Rule::Rw);
  EXPECT_EQ(out->kids[1]->rule, Rule::Rw);
  EXPECT_TRUE(is_w_reduced(out));
  EXPECT_EQ(interpolant(out), interpolant(w));
  EXPECT_FALSE(check_proof(out, System::LKminus));
}

TEST(WReduce, FixpointAndIdempotent) {
  P s = fx::sigma();
  P r = w_reduce(s);
  EXPECT_TRUE(is_w_reduced(r));
  EXPECT_EQ(print_proof(w_reduce(r)), print_proof(r));
  P d = fx::de_morgan();
  EXPECT_EQ(w_reduce(d), d);
}

TEST(CutElim, PrunedExample) {
  ClauseSet cs = parse_clause_set("p\nq");
  P p = realize_pruned(pf("p & q"), pf("p | q"), cs);
  auto r = eliminate_cuts(p);
  EXPECT_EQ(count_cuts(r.proof), 0);
  EXPECT_FALSE(check_proof(r.proof, System::LKminus));
  ClauseSet fin = cnf(interpolant(r.proof));
  EXPECT_TRUE(fin == parse_clause_set("p") || fin == parse_clause_set("q"));
  EXPECT_TRUE(oracle::subsumes(cs, fin));
  EXPECT_TRUE(trace_subsumption_ok(r));
  EXPECT_TRUE(trace_measure_ok(r));
  EXPECT_EQ(r.initial, cs);
  EXPECT_TRUE(same_sequent(r.proof->concl, p->concl));
}

TEST(CutElim, WeakCutFormula) {
  // the left cut formula only comes from a weakening
  F p = atom("p");
  P base = ax(p, Comp::G1, Comp::D2);
  P l = weaken(base, p, Comp::D2);
  P rr = weaken(ax(p, Comp::G1, Comp::D2), p, Comp::G2);
  P c = cut(l, rr, l->main, rr->main);
  ASSERT_FALSE(check_proof(c, System::LKat));
  auto res = eliminate_cuts(c);
  ASSERT_EQ(res.trace.size(), 1u);
  EXPECT_EQ(res.trace[0].kind.rfind("weak", 0), 0u);
  EXPECT_EQ(count_cuts(res.proof), 0);
  EXPECT_TRUE(oracle::subsumes(cnf(interpolant(c)), cnf(interpolant(res.proof))));
}

TEST(CutElim, CutFreeIsIdentity) {
  P d = fx::de_morgan();
  auto r = eliminate_cuts(d);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(print_proof(r.proof), print_proof(d));
}

TEST(CutElim, RejectsTypeLAndUntame) {
  P tl = realize_clause(pf("p & q"), {lit("p")});
  EXPECT_THROW(eliminate_cuts(tl), NotTypeR);
  F p = atom("p");
  P l = ax(p, Comp::G1, Comp::D2);
  P r = ax(p, Comp::G2, Comp::D1);
  int cl = l->concl[1].id, cr = r->concl[0].id;
  P c = cut(weaken(l, p, Comp::D1), weaken(r, p, Comp::G1), cl, cr);
  EXPECT_THROW(eliminate_cuts(c), NotTame);
}
