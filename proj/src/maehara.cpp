#include "itp/maehara.hpp"

#include "itp/prover.hpp"

#include <algorithm>
#include <functional>

namespace itp {

namespace {

F axiom_itp(const Node& n) {
  if (n.rule == Rule::Bot) return side_of(n.concl[0].comp) == 1 ? bot() : top();
  const Occ* a = &n.concl[0];
  const Occ* s = &n.concl[1];
  if (!is_ante(a->comp)) std::swap(a, s);
  int sa = side_of(a->comp), ss = side_of(s->comp);
  if (sa == 1 && ss == 1) return bot();
  if (sa == 2 && ss == 2) return top();
  if (sa == 1) return a->f;  // A ; => ; A
  return neg(a->f);          // ; A => A ;
}

F node_itp(const Node& n, const std::vector<F>& kids) {
  switch (n.rule) {
    case Rule::Ax:
    case Rule::Bot: return axiom_itp(n);
    case Rule::Lw:
    case Rule::Rw:
    case Rule::Lc:
    case Rule::Rc:
    case Rule::LAnd1:
    case Rule::LAnd2:
    case Rule::ROr1:
    case Rule::ROr2:
    case Rule::LNeg:
    case Rule::RNeg:
    case Rule::T: return kids[0];
    case Rule::RAnd:
    case Rule::LOr: return side_of(get(n.concl, n.main).comp) == 1 ? disj(kids[0], kids[1]) : conj(kids[0], kids[1]);
    case Rule::Cut: {
      const Occ& c = get(n.kids[0]->concl, n.aux[0].id);
      int s = side_of(c.comp);
      auto va = vars(c.f), vs = side_vars(n.concl, s);
      if (!std::includes(vs.begin(), vs.end(), va.begin(), va.end()))
        throw NonMonochromaticCut("cut on " + str(c.f) + " uses atoms absent from its side");
      return s == 1 ? disj(kids[0], kids[1]) : conj(kids[0], kids[1]);
    }
    case Rule::K:
    case Rule::Four: return side_of(get(n.concl, n.main).comp) == 2 ? box(kids[0]) : neg(box(neg(kids[0])));
    case Rule::D: return box(kids[0]);
  }
  throw UnsupportedRule(rule_name(n.rule));
}

}  // namespace

Annotated maehara(const P& p, System s) {
  for (const Node* n : preorder(p))
    if (!allows_rule(s, n->rule)) throw UnsupportedRule(std::string(rule_name(n->rule)) + " is not a rule of " + system_name(s));
  Annotated out;
  out.proof = p;
  out.node_itp.assign(p->size, nullptr);
  int counter = 0;
  std::function<F(const Node&)> go = [&](const Node& n) {
    int me = counter++;
    std::vector<F> ks;
    for (const auto& k : n.kids) ks.push_back(go(*k));
    F f = node_itp(n, ks);
    out.node_itp[me] = f;
    return f;
  };
  out.root = go(*p);
  return out;
}

F interpolant(const P& p) {
  std::function<F(const Node&)> go = [&](const Node& n) {
    std::vector<F> ks;
    for (const auto& k : n.kids) ks.push_back(go(*k));
    return node_itp(n, ks);
  };
  return go(*p);
}

namespace {

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool derivable(const std::vector<F>& ante, const std::vector<F>& succ, System s) {
  if (!is_modal(s)) return entails(conj_all(ante), disj_all(succ));
  return prove_cutfree(split_sequent(ante, {}, {}, succ), s).proof != nullptr;
}

}  // namespace

Verdict verify_interpolant(F a, F b, F c, System s) {
  auto va = vars(a), vb = vars(b), vc = vars(c);
  if (!subset(vc, va) || !subset(vc, vb)) return {false, "variable condition fails"};
  if (!derivable({a}, {c}, s)) return {false, "a does not imply the interpolant"};
  if (!derivable({c}, {b}, s)) return {false, "the interpolant does not imply b"};
  return {true, ""};
}

Verdict verify_split_interpolant(const Sequent& seq, F c, System sys) {
  auto v1 = side_vars(seq, 1), v2 = side_vars(seq, 2), vc = vars(c);
  if (!subset(vc, v1) || !subset(vc, v2)) return {false, "variable condition fails"};
  std::vector<F> g1 = formulas(seq, Comp::G1), g2 = formulas(seq, Comp::G2);
  std::vector<F> d1 = formulas(seq, Comp::D1), d2 = formulas(seq, Comp::D2);
  d1.push_back(c);
  g2.insert(g2.begin(), c);
  if (!derivable(g1, d1, sys)) return {false, "G1 => D1, C is not derivable"};
  if (!derivable(g2, d2, sys)) return {false, "C, G2 => D2 is not derivable"};
  return {true, ""};
}

std::string print_annotated(const Annotated& a) {
  std::string out;
  int counter = 0;
  std::function<void(const Node&, int)> go = [&](const Node& n, int depth) {
    int me = counter++;
    out += std::string(2 * depth, ' ') + rule_name(n.rule) + " " + print_sequent(n.concl) + " @ " + str(a.node_itp[me]) + "\n";
    for (const auto& k : n.kids) go(*k, depth + 1);
  };
  go(*a.proof, 0);
  out += str(a.root) + "\n";
  return out;
}

}  // namespace itp
