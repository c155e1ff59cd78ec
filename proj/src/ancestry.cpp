#include "itp/sequent.hpp"

#include <algorithm>
#include <functional>

namespace itp {

Ancestry::Ancestry(const P& root) {
  std::function<void(const Node*, int, int)> go = [&](const Node* n, int parent, int idx) {
    int me = static_cast<int>(nodes_.size());
    nodes_.push_back(n);
    parent_.push_back(parent);
    index_in_parent_.push_back(idx);
    kids_.emplace_back();
    for (std::size_t k = 0; k < n->kids.size(); ++k) {
      kids_[me].push_back(static_cast<int>(nodes_.size()));
      go(n->kids[k].get(), me, static_cast<int>(k));
    }
  };
  go(root.get(), -1, -1);
}

std::vector<OccRef> Ancestry::direct_ancestors(OccRef o) const {
  const Node& n = *nodes_[o.node];
  std::vector<OccRef> out;
  for (std::size_t k = 0; k < n.kids.size(); ++k) {
    int kn = kids_[o.node][k];
    const Sequent& ks = n.kids[k]->concl;
    if (find(ks, o.id)) out.push_back({kn, o.id});
    for (const auto& l : n.links)
      if (l.kid == static_cast<int>(k) && l.to == o.id) out.push_back({kn, l.from});
    if (o.id == n.main)
      for (const auto& a : n.aux)
        if (a.kid == static_cast<int>(k)) out.push_back({kn, a.id});
  }
  return out;
}

std::optional<OccRef> Ancestry::descendant(OccRef o) const {
  int p = parent_[o.node];
  if (p < 0) return std::nullopt;
  const Node& n = *nodes_[p];
  int k = index_in_parent_[o.node];
  if (find(n.concl, o.id)) return OccRef{p, o.id};
  for (const auto& l : n.links)
    if (l.kid == k && l.from == o.id) return OccRef{p, l.to};
  if (n.main >= 0)
    for (const auto& a : n.aux)
      if (a.kid == k && a.id == o.id) return OccRef{p, n.main};
  return std::nullopt;
}

std::vector<OccRef> Ancestry::ancestors(OccRef o) const {
  std::vector<OccRef> out{o};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& a : direct_ancestors(out[i])) out.push_back(a);
  return out;
}

bool Ancestry::weak(OccRef o) const {
  auto it = weak_.find(o);
  if (it != weak_.end()) return it->second;
  const Node& n = *nodes_[o.node];
  bool w;
  if (is_axiom(n.rule)) {
    w = false;
  } else if (o.id == n.main) {
    if (is_weakening(n.rule)) {
      w = true;
    } else if (is_contraction(n.rule)) {
      w = true;
      for (const auto& a : direct_ancestors(o)) w = w && weak(a);
    } else {
      w = false;
    }
  } else {
    auto as = direct_ancestors(o);
    w = !as.empty();
    for (const auto& a : as) w = w && weak(a);
  }
  weak_[o] = w;
  return w;
}

int Ancestry::weight(OccRef o) const {
  int n = 0;
  for (const auto& a : ancestors(o))
    if (!weak(a) && !is_weakening(nodes_[a.node]->rule)) ++n;
  return n;
}

int Ancestry::cut_weight(int node) const {
  const Node& n = *nodes_[node];
  if (n.rule != Rule::Cut) throw NotACut("node is not a cut");
  return weight({kids_[node][0], n.aux[0].id}) + weight({kids_[node][1], n.aux[1].id});
}

OccRef Ancestry::bottom(OccRef o) const {
  while (auto d = descendant(o)) o = *d;
  return o;
}

bool Ancestry::descends_to_cut(OccRef o) const { return bottom(o).node != 0; }

OccMetrics occurrence_metrics(const P& p, int root_occ_id) {
  Ancestry an(p);
  OccRef o{0, root_occ_id};
  if (!find(p->concl, root_occ_id)) throw std::logic_error("no such occurrence in the end-sequent");
  OccMetrics m{an.weak(o), 0, {}};
  for (const auto& a : an.ancestors(o))
    if (!an.weak(a) && !is_weakening(an.nodes()[a.node]->rule)) m.relevant.push_back(a);
  m.weight = static_cast<int>(m.relevant.size());
  return m;
}

CutInfo classify_cut(const P& p, int node) {
  Ancestry an(p);
  if (node < 0 || node >= static_cast<int>(an.nodes().size()) || an.nodes()[node]->rule != Rule::Cut)
    throw NotACut("node " + std::to_string(node) + " is not a cut");
  const Node& n = *an.nodes()[node];
  const Occ& l = get(n.kids[0]->concl, n.aux[0].id);
  F a = l.f;
  CutInfo ci{};
  ci.type_r = side_of(l.comp) == 2;
  ci.type_l = side_of(l.comp) == 1;
  ci.atomic = a->op == Op::Atom || a->op == Op::Bot || is_top(a);
  auto lit = as_literal(a);
  ci.literal = ci.atomic || (lit && lit->body->op != Op::Box);
  ci.monochromatic = is_monochromatic_cut(n);
  ci.analytic = false;
  for (const auto& o : n.concl) {
    std::set<F> subs;
    collect_subformulas(o.f, subs);
    if (subs.count(a)) ci.analytic = true;
  }
  ci.degree = connectives(a);
  ci.weight = an.cut_weight(node);
  return ci;
}

const char* axtype_name(AxType t) {
  switch (t) {
    case AxType::LL: return "L/L";
    case AxType::LR: return "L/R";
    case AxType::RL: return "R/L";
    case AxType::RR: return "R/R";
  }
  return "?";
}

namespace {

AxiomInfo axiom_info(const Ancestry& an, int node) {
  const Node& n = *an.nodes()[node];
  if (n.rule == Rule::Bot) return {side_of(n.concl[0].comp) == 1 ? AxType::LL : AxType::RR, false};
  if (n.rule != Rule::Ax) throw NotAnAxiom("node " + std::to_string(node) + " is not an axiom");
  const Occ* a = &n.concl[0];
  const Occ* s = &n.concl[1];
  if (!is_ante(a->comp)) std::swap(a, s);
  int sa = side_of(a->comp), ss = side_of(s->comp);
  AxType t = sa == 1 ? (ss == 1 ? AxType::LL : AxType::LR) : (ss == 1 ? AxType::RL : AxType::RR);
  bool omega = an.descends_to_cut({node, a->id}) && an.descends_to_cut({node, s->id});
  return {t, omega};
}

}  // namespace

AxiomInfo axiom_type(const P& p, int node) {
  Ancestry an(p);
  if (node < 0 || node >= static_cast<int>(an.nodes().size())) throw NotAnAxiom("no such node");
  return axiom_info(an, node);
}

Tameness is_tame(const P& p) {
  Ancestry an(p);
  Tameness t{true, {}, {}};
  const auto& ns = an.nodes();
  for (int i = 0; i < static_cast<int>(ns.size()); ++i)
    if (ns[i]->rule == Rule::Ax && axiom_info(an, i).omega) t.omega_axioms.push_back(i);
  for (int i = 0; i < static_cast<int>(ns.size()); ++i) {
    if (ns[i]->rule != Rule::Cut) continue;
    bool ok = false;
    for (int k = 0; k < 2 && !ok; ++k) {
      bool all_rr = true;
      for (const auto& a : an.ancestors({an.kid(i, k), ns[i]->aux[k].id}))
        if (is_axiom(ns[a.node]->rule) && axiom_info(an, a.node).type != AxType::RR) all_rr = false;
      ok = all_rr;
    }
    if (!ok) t.bad_cuts.push_back(i);
  }
  t.tame = t.omega_axioms.empty() && t.bad_cuts.empty();
  return t;
}

bool is_w_reduced(const P& p) {
  for (const Node* n : preorder(p))
    if (is_weakening(n->rule) && !is_axiom(n->kids[0]->rule) && !is_weakening(n->kids[0]->rule)) return false;
  return true;
}

namespace {

P replace_rec(const P& p, int& counter, int target, const P& sub) {
  int me = counter++;
  if (me == target) {
    counter += p->size - 1;
    return sub;
  }
  if (target < me || target >= me + p->size) {
    counter += p->size - 1;
    return p;
  }
  std::vector<P> kids;
  for (const auto& k : p->kids) kids.push_back(replace_rec(k, counter, target, sub));
  return with_kids(*p, std::move(kids));
}

P map_nodes(const P& p, const std::function<void(Node&)>& fn) {
  Node n = *p;
  for (auto& k : n.kids) k = map_nodes(k, fn);
  fn(n);
  return make_node(n.rule, std::move(n.concl), std::move(n.kids), n.main, std::move(n.aux), std::move(n.links));
}

P substitute_tree(const P& p, const std::map<std::string, F>& sub) {
  return map_nodes(p, [&](Node& n) {
    for (auto& o : n.concl) o.f = substitute(o.f, sub);
  });
}

// move the ancestor trees of both cut formulas at preorder index `node` to the other side
P flip_cut(const P& root, int node) {
  Ancestry an(root);
  std::set<OccRef> flip_set;
  const Node& c = *an.nodes()[node];
  for (int k = 0; k < 2; ++k)
    for (const auto& a : an.ancestors({an.kid(node, k), c.aux[k].id})) flip_set.insert(a);
  int counter = 0;
  std::function<P(const P&)> go = [&](const P& p) {
    int me = counter++;
    Node n = *p;
    for (auto& k : n.kids) k = go(k);
    for (auto& o : n.concl)
      if (flip_set.count({me, o.id})) o.comp = make_comp(is_ante(o.comp), 3 - side_of(o.comp));
    return make_node(n.rule, std::move(n.concl), std::move(n.kids), n.main, std::move(n.aux), std::move(n.links));
  };
  return go(root);
}

bool subset_of(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

P replace_at(const P& root, int node, P sub) {
  int counter = 0;
  return replace_rec(root, counter, node, sub);
}

P monochromatize(const P& input) {
  P p = input;
  for (int iter = 0; iter < 10000; ++iter) {
    Ancestry an(p);
    const auto& ns = an.nodes();
    // topmost offending cut: the last one in preorder with no offending cut above it
    int target = -1;
    std::function<bool(int)> scan = [&](int i) {
      for (int k : an.kids(i))
        if (scan(k)) return true;
      const Node& n = *ns[i];
      if (n.rule != Rule::Cut) return false;
      const Occ& l = get(n.kids[0]->concl, n.aux[0].id);
      if (subset_of(vars(l.f), side_vars(n.concl, side_of(l.comp)))) return false;
      target = i;
      return true;
    };
    if (!scan(0)) return p;
    const Node& n = *ns[target];
    const Occ& l = get(n.kids[0]->concl, n.aux[0].id);
    int s = side_of(l.comp);
    auto vs = side_vars(n.concl, s), vo = side_vars(n.concl, 3 - s);
    auto va = vars(l.f);
    if (subset_of(va, vo)) {
      p = flip_cut(p, target);
      continue;
    }
    std::set<std::string> all = vs;
    all.insert(vo.begin(), vo.end());
    if (all.empty()) throw NoAtomAvailable("cut conclusion has no atoms to replace the cut atom with");
    F q = atom(vs.empty() ? *vo.begin() : *vs.begin());
    std::map<std::string, F> sub;
    for (const auto& z : va)
      if (!all.count(z)) sub[z] = q;
    if (sub.empty()) throw NonMonochromaticCut("cut on " + str(l.f) + " mixes atoms of both sides");
    // aliasing pointer: the subproof stays owned by the whole proof
    P sub_proof(p, ns[target]);
    p = replace_at(p, target, substitute_tree(sub_proof, sub));
  }
  throw NonMonochromaticCut("monochromatize did not converge");
}

}  // namespace itp
