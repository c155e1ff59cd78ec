#pragma once

#include "itp/clauses.hpp"

#include <memory>

namespace itp {

// Maehara split sequent components: G1 ; G2 => D1 ; D2
enum class Comp : std::uint8_t { G1, G2, D1, D2 };
inline bool is_ante(Comp c) { return c == Comp::G1 || c == Comp::G2; }
inline int side_of(Comp c) { return (c == Comp::G1 || c == Comp::D1) ? 1 : 2; }
inline Comp make_comp(bool ante, int side) {
  if (ante) return side == 1 ? Comp::G1 : Comp::G2;
  return side == 1 ? Comp::D1 : Comp::D2;
}
// antecedent <-> succedent, same side
inline Comp flip(Comp c) { return make_comp(!is_ante(c), side_of(c)); }
const char* comp_name(Comp c);

struct Occ {
  int id;
  F f;
  Comp comp;
  bool operator==(const Occ& o) const { return id == o.id && f == o.f && comp == o.comp; }
};
using Sequent = std::vector<Occ>;  // occurrence ids are unique within a sequent

int fresh_id();

const Occ* find(const Sequent& s, int id);
const Occ& get(const Sequent& s, int id);
Sequent without(const Sequent& s, int id);
std::vector<F> formulas(const Sequent& s, Comp c);
// V(G1 u D1) and V(G2 u D2)
std::set<std::string> side_vars(const Sequent& s, int side);
// formula occurrences read off text "G1 ; G2 => D1 ; D2", with fresh ids
Sequent parse_sequent(const std::string& text);
// components in G1, G2, D1, D2 order, each in stored order
std::string print_sequent(const Sequent& s);
// same multiset of (formula, component)
bool same_sequent(const Sequent& a, const Sequent& b);
// order-insensitive canonical text; equal iff same_sequent
std::string sequent_key(const Sequent& s);
int sequent_length(const Sequent& s);
// symbol count with true counted as one symbol
int formula_length(F f);

enum class Rule : std::uint8_t {
  Ax, Bot, Lw, Rw, Lc, Rc, LAnd1, LAnd2, RAnd, LOr, ROr1, ROr2, LNeg, RNeg, Cut, K, D, Four, T
};
const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& s);
inline bool is_axiom(Rule r) { return r == Rule::Ax || r == Rule::Bot; }
inline bool is_weakening(Rule r) { return r == Rule::Lw || r == Rule::Rw; }
inline bool is_contraction(Rule r) { return r == Rule::Lc || r == Rule::Rc; }
inline bool is_modal_rule(Rule r) { return r == Rule::K || r == Rule::D || r == Rule::Four || r == Rule::T; }

struct Node;
using P = std::shared_ptr<const Node>;

struct Aux {
  int kid;
  int id;
};
// a premise occurrence that descends to a conclusion occurrence with a different id
struct Link {
  int kid;
  int from;
  int to;
};

// A premise occurrence descends to the conclusion occurrence with the same id;
// failing that, to its link target; failing that it is auxiliary and descends
// to the main occurrence (or to nothing, for the cut formulas).
struct Node {
  Rule rule;
  Sequent concl;
  std::vector<P> kids;
  int main = -1;
  std::vector<Aux> aux;
  std::vector<Link> links;
  int size = 1;    // number of nodes
  int length = 0;  // number of symbols in all sequents
  int cuts = 0;
};

P make_node(Rule rule, Sequent concl, std::vector<P> kids, int main, std::vector<Aux> aux, std::vector<Link> links = {});

// Rule constructors. Ids default to fresh ones. Binary rules rename the
// right premise so that its context carries the ids of the left context.
P ax(F a, Comp ante, Comp succ, int ida = -1, int ids = -1);
P bot_ax(Comp ante, int id = -1);
P top_ax(Comp succ, int id = -1);  // the bottom axiom followed by R~
P weaken(P p, F a, Comp c, int id = -1);
// weaken p until its conclusion contains every occurrence of ctx (ids kept)
P weaken_with(P p, const Sequent& ctx);
// axiom A => A in the given components, weakened with ctx
P wax(F a, Comp ante, Comp succ, const Sequent& ctx, int ida = -1, int ids = -1);
P contract(P p, int a, int b, int id = -1);
P and_l(P p, int aux, F other, bool first, int id = -1);  // first: A&other, else other&A
P and_r(P l, P r, int al, int ar, int id = -1);
P or_l(P l, P r, int al, int ar, int id = -1);
P or_r(P p, int aux, F other, bool first, int id = -1);  // first: A|other, else other|A
P neg_l(P p, int aux, int id = -1);                      // aux in the succedent
P neg_r(P p, int aux, int id = -1);                      // aux in the antecedent
P cut(P l, P r, int cl, int cr);
P k_rule(P p, int id = -1);  // premise: antecedent only plus one succedent formula
P d_rule(P p);               // premise: antecedent only
// premise gamma, []gamma => A; pairs link each gamma (first) to its boxed copy (second)
P four_rule(P p, const std::vector<std::pair<int, int>>& pairs, int id = -1);
P t_rule(P p, int aux, int id = -1);

// skipped occurrences may be given new ids when they clash with `want`
P align_context(const Sequent& want, P p, std::vector<int>& skip);

// rename occurrence `from` of the end-sequent to `to`, following its ancestors;
// clashing ids inside the tree are moved out of the way
P rename(P p, int from, int to);
// copy with every id fresh; the map takes end-sequent ids to new ids
P refresh(P p, std::map<int, int>* root_map = nullptr);

enum class System : std::uint8_t { LKminus, LKat, LKlit, LKmono, LK, K, KD, KT, K4, KD4, S4 };
bool is_modal(System s);
std::string system_name(System s);
std::optional<System> system_from_name(const std::string& s);
bool allows_rule(System s, Rule r);

struct ProofError {
  int node;  // preorder index
  std::string reason;
};
std::optional<ProofError> check_proof(const P& p, System s);

std::vector<const Node*> preorder(const P& p);
int count_cuts(const P& p);
bool is_monochromatic_cut(const Node& n);

// proof text: (<Rule> "G1 ; G2 => D1 ; D2" <main index> child...)
std::string print_proof(const P& p);
P parse_proof(const std::string& text);

// ---- ancestry ----

struct OccRef {
  int node;
  int id;
  bool operator==(const OccRef& o) const { return node == o.node && id == o.id; }
  bool operator<(const OccRef& o) const { return node != o.node ? node < o.node : id < o.id; }
};

class Ancestry {
 public:
  explicit Ancestry(const P& root);
  const std::vector<const Node*>& nodes() const { return nodes_; }
  int parent(int node) const { return parent_[node]; }
  int kid(int node, int k) const { return kids_[node][k]; }
  const std::vector<int>& kids(int node) const { return kids_[node]; }
  std::vector<OccRef> direct_ancestors(OccRef o) const;
  std::optional<OccRef> descendant(OccRef o) const;  // none at the root and for cut formulas
  std::vector<OccRef> ancestors(OccRef o) const;     // reflexive, transitive
  bool weak(OccRef o) const;
  int weight(OccRef o) const;
  int cut_weight(int node) const;
  // the occurrence at the root of the proof (or a cut formula) o descends to
  OccRef bottom(OccRef o) const;
  bool descends_to_cut(OccRef o) const;

 private:
  std::vector<const Node*> nodes_;
  std::vector<int> parent_, index_in_parent_;
  std::vector<std::vector<int>> kids_;
  mutable std::map<OccRef, bool> weak_;
};

struct OccMetrics {
  bool weak;
  int weight;
  std::vector<OccRef> relevant;
};
OccMetrics occurrence_metrics(const P& p, int root_occ_id);

struct NotACut : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAnAxiom : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CutInfo {
  bool type_r, type_l, atomic, literal, monochromatic, analytic;
  int degree, weight;
};
CutInfo classify_cut(const P& p, int node);

enum class AxType : std::uint8_t { LL, LR, RL, RR };
const char* axtype_name(AxType t);
struct AxiomInfo {
  AxType type;
  bool omega;
};
// for the bottom axiom the single occurrence decides: G1 is L/L, G2 is R/R
AxiomInfo axiom_type(const P& p, int node);

struct Tameness {
  bool tame;
  std::vector<int> omega_axioms;
  std::vector<int> bad_cuts;
};
Tameness is_tame(const P& p);

bool is_w_reduced(const P& p);

struct NoAtomAvailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonMonochromaticCut : std::runtime_error {
  using std::runtime_error::runtime_error;
};
P monochromatize(const P& p);

// replace the subproof at preorder index `node`
P replace_at(const P& root, int node, P sub);
// rebuild a node with new kids, keeping rule, conclusion and bookkeeping
P with_kids(const Node& n, std::vector<P> kids);

}  // namespace itp
