#include "itp/random.hpp"
#include "itp/resolution.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace itp;

namespace {

F pf(const char* s) { return parse_formula(s); }

ResolutionProof unit_refutation(const char* atom_name) {
  ResolutionProof rp;
  int a = rp.input({lit(atom_name)}, Side::A);
  int b = rp.input({lit(atom_name, true)}, Side::B);
  rp.resolve(a, b, atom(atom_name));
  return rp;
}

// {p} weakened to {p,q}, resolved with {~p} to {q}, then with {~q}
ResolutionProof weakening_refutation() {
  ResolutionProof rp;
  int a1 = rp.input({lit("p")}, Side::A);
  rp.input({lit("q")}, Side::A);
  int w = rp.weaken(a1, {lit("q")});
  int b1 = rp.input({lit("p", true)}, Side::B);
  int r1 = rp.resolve(w, b1, atom("p"));
  int b2 = rp.input({lit("q", true)}, Side::B);
  rp.resolve(r1, b2, atom("q"));
  return rp;
}

}  // namespace

TEST(CheckRefutation, Accepts) {
  EXPECT_FALSE(check_refutation(unit_refutation("p")));
  EXPECT_FALSE(check_refutation(weakening_refutation()));
}

TEST(CheckRefutation, RejectsMissingPivot) {
  ResolutionProof rp;
  int a = rp.input({lit("p")}, Side::A);
  int b = rp.input({lit("p", true)}, Side::B);
  rp.nodes.push_back({ResNode::Res, {}, Side::A, a, b, atom("q"), {}});
  EXPECT_TRUE(check_refutation(rp).has_value());
}

TEST(Refute, SingleResolution) {
  auto r = refute(parse_clause_set("p\n~p"));
  ASSERT_TRUE(std::holds_alternative<ResolutionProof>(r));
  EXPECT_EQ(std::get<ResolutionProof>(r).nodes.size(), 3u);
}

TEST(Refute, Satisfiable) {
  auto r = refute(parse_clause_set("p"));
  ASSERT_TRUE(std::holds_alternative<Satisfiable>(r));
  EXPECT_TRUE(std::get<Satisfiable>(r).model.at("p"));
}

TEST(Refute, FourUnits) {
  auto r = refute(parse_clause_set("p\nq\n~p\n~q"));
  ASSERT_TRUE(std::holds_alternative<ResolutionProof>(r));
  EXPECT_FALSE(check_refutation(std::get<ResolutionProof>(r)));
}

TEST(Interpolant, UnitRefutations) {
  F ip = interpolant_from_refutation(unit_refutation("p"));
  EXPECT_EQ(ip, sel(atom("p"), bot(), top()));
  EXPECT_TRUE(oracle::equiv(ip, pf("p")));
  EXPECT_TRUE(oracle::equiv(interpolant_from_refutation(unit_refutation("q")), pf("q")));
}

TEST(Interpolant, WeakeningGivesDisjunction) {
  F ip = interpolant_from_refutation(weakening_refutation());
  EXPECT_TRUE(oracle::equiv(ip, pf("p | q")));
}

TEST(Interpolant, LocalPivots) {
  // a-local x: {x} {~x p} | {~p}
  ResolutionProof rp;
  int a = rp.input({lit("x")}, Side::A);
  int b = rp.input(make_clause({lit("x", true), lit("p")}), Side::A);
  int c = rp.input({lit("p", true)}, Side::B);
  int r = rp.resolve(a, b, atom("x"));
  rp.resolve(r, c, atom("p"));
  ASSERT_FALSE(check_refutation(rp));
  EXPECT_TRUE(oracle::equiv(interpolant_from_refutation(rp), pf("p")));
}

TEST(Interpolant, PartitionMismatch) {
  Partition part{{}, {"p"}, {}};
  EXPECT_THROW(interpolant_from_refutation(unit_refutation("p"), part), PartitionMismatch);
}

TEST(RefutationText, RoundTrip) {
  for (const auto& rp : {unit_refutation("p"), weakening_refutation()}) {
    std::string t = print_refutation(rp);
    EXPECT_EQ(print_refutation(parse_refutation(t)), t);
  }
  EXPECT_EQ(print_refutation(unit_refutation("p")), "0: INPUT A {p}\n1: INPUT B {~p}\n2: RES 0 1 p\n");
}

TEST(Interpolant, RandomReverseInterpolants) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto in = random_unsat_cnf(rng);
    auto r = refute(in.a, in.b);
    ASSERT_TRUE(std::holds_alternative<ResolutionProof>(r));
    const auto& rp = std::get<ResolutionProof>(r);
    ASSERT_FALSE(check_refutation(rp));
    F c = interpolant_from_refutation(rp);
    F a = clause_set_formula(in.a), b = clause_set_formula(in.b);
    EXPECT_TRUE(oracle::entails(a, c));
    EXPECT_TRUE(oracle::entails(conj(b, c), bot()));
    std::set<std::string> vc, va, vb;
    oracle::atoms_of(c, vc);
    oracle::atoms_of(a, va);
    oracle::atoms_of(b, vb);
    for (const auto& v : vc) EXPECT_TRUE(va.count(v) && vb.count(v)) << v;
  }
}
