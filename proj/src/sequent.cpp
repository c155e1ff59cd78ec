#include "itp/sequent.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>

namespace itp {

const char* comp_name(Comp c) {
  switch (c) {
    case Comp::G1: return "G1";
    case Comp::G2: return "G2";
    case Comp::D1: return "D1";
    case Comp::D2: return "D2";
  }
  return "?";
}

int fresh_id() {
  static std::atomic<int> next{1000};
  return next++;
}

const Occ* find(const Sequent& s, int id) {
  for (const auto& o : s)
    if (o.id == id) return &o;
  return nullptr;
}

const Occ& get(const Sequent& s, int id) {
  const Occ* o = find(s, id);
  if (!o) throw std::logic_error("no occurrence with id " + std::to_string(id));
  return *o;
}

Sequent without(const Sequent& s, int id) {
  Sequent out;
  for (const auto& o : s)
    if (o.id != id) out.push_back(o);
  return out;
}

std::vector<F> formulas(const Sequent& s, Comp c) {
  std::vector<F> out;
  for (const auto& o : s)
    if (o.comp == c) out.push_back(o.f);
  return out;
}

std::set<std::string> side_vars(const Sequent& s, int side) {
  std::set<std::string> out;
  for (const auto& o : s)
    if (side_of(o.comp) == side) {
      auto v = vars(o.f);
      out.insert(v.begin(), v.end());
    }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r\n") - a + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

void read_comp(const std::string& text, Comp c, Sequent& out) {
  std::string t = trim(text);
  if (t.empty()) return;
  for (const auto& piece : split_top(t, ',')) {
    std::string f = trim(piece);
    if (f.empty()) throw ParseError("empty formula in sequent", 1, 1);
    out.push_back({fresh_id(), parse_formula(f), c});
  }
}

}  // namespace

Sequent parse_sequent(const std::string& text) {
  auto arrow = text.find("=>");
  if (arrow == std::string::npos) throw ParseError("sequent needs '=>'", 1, 1);
  std::string left = text.substr(0, arrow), right = text.substr(arrow + 2);
  auto l = split_top(left, ';'), r = split_top(right, ';');
  if (l.size() > 2 || r.size() > 2) throw ParseError("at most one ';' per side", 1, 1);
  // without ';' everything belongs to side 1 on the left and side 2 on the right
  Sequent out;
  if (l.size() == 2) {
    read_comp(l[0], Comp::G1, out);
    read_comp(l[1], Comp::G2, out);
  } else {
    read_comp(l[0], Comp::G1, out);
  }
  if (r.size() == 2) {
    read_comp(r[0], Comp::D1, out);
    read_comp(r[1], Comp::D2, out);
  } else {
    read_comp(r[0], Comp::D2, out);
  }
  return out;
}

std::string print_sequent(const Sequent& s) {
  auto comp = [&](Comp c) {
    std::string out;
    for (const auto& o : s)
      if (o.comp == c) {
        if (!out.empty()) out += ", ";
        out += str(o.f);
      }
    return out;
  };
  std::vector<std::string> toks{comp(Comp::G1), ";", comp(Comp::G2), "=>", comp(Comp::D1), ";", comp(Comp::D2)};
  std::string out;
  for (const auto& t : toks) {
    if (t.empty()) continue;
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::string sequent_key(const Sequent& s) {
  std::vector<std::string> parts;
  for (const auto& o : s) parts.push_back(std::string(comp_name(o.comp)) + ":" + str(o.f));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p + "\n";
  return out;
}

bool same_sequent(const Sequent& a, const Sequent& b) { return a.size() == b.size() && sequent_key(a) == sequent_key(b); }

int formula_length(F f) {
  if (is_top(f)) return 1;
  int n = 1;
  if (f->l) n += formula_length(f->l);
  if (f->r) n += formula_length(f->r);
  return n;
}

int sequent_length(const Sequent& s) {
  int n = 0;
  for (const auto& o : s) n += formula_length(o.f);
  return n;
}

namespace {
const std::pair<Rule, const char*> kRuleNames[] = {
    {Rule::Ax, "Ax"},     {Rule::Bot, "Bot"},   {Rule::Lw, "Lw"},     {Rule::Rw, "Rw"},     {Rule::Lc, "Lc"},
    {Rule::Rc, "Rc"},     {Rule::LAnd1, "Land1"}, {Rule::LAnd2, "Land2"}, {Rule::RAnd, "Rand"}, {Rule::LOr, "Lor"},
    {Rule::ROr1, "Ror1"}, {Rule::ROr2, "Ror2"}, {Rule::LNeg, "Lneg"}, {Rule::RNeg, "Rneg"}, {Rule::Cut, "Cut"},
    {Rule::K, "K"},       {Rule::D, "D"},       {Rule::Four, "4"},    {Rule::T, "T"},
};
}  // namespace

const char* rule_name(Rule r) {
  for (auto& [k, n] : kRuleNames)
    if (k == r) return n;
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& s) {
  for (auto& [k, n] : kRuleNames)
    if (s == n) return k;
  return std::nullopt;
}

P make_node(Rule rule, Sequent concl, std::vector<P> kids, int main, std::vector<Aux> aux, std::vector<Link> links) {
  auto n = std::make_shared<Node>();
  n->rule = rule;
  n->concl = std::move(concl);
  n->kids = std::move(kids);
  n->main = main;
  n->aux = std::move(aux);
  n->links = std::move(links);
  n->size = 1;
  n->length = sequent_length(n->concl);
  n->cuts = rule == Rule::Cut ? 1 : 0;
  for (const auto& k : n->kids) {
    n->size += k->size;
    n->length += k->length;
    n->cuts += k->cuts;
  }
  return n;
}

P with_kids(const Node& n, std::vector<P> kids) { return make_node(n.rule, n.concl, std::move(kids), n.main, n.aux, n.links); }

namespace {

int pick(int id) { return id < 0 ? fresh_id() : id; }

Sequent replace(const Sequent& s, int id, const Occ& o) {
  Sequent out;
  for (const auto& x : s) out.push_back(x.id == id ? o : x);
  return out;
}

const Occ& need(const P& p, int id, const char* what) {
  const Occ* o = find(p->concl, id);
  if (!o) throw std::logic_error(std::string(what) + ": premise has no occurrence " + std::to_string(id));
  return *o;
}

}  // namespace

P ax(F a, Comp ante, Comp succ, int ida, int ids) {
  if (!is_ante(ante) || is_ante(succ)) throw std::logic_error("ax: bad components");
  return make_node(Rule::Ax, {{pick(ida), a, ante}, {pick(ids), a, succ}}, {}, -1, {});
}

P bot_ax(Comp ante, int id) {
  if (!is_ante(ante)) throw std::logic_error("bot_ax: bad component");
  return make_node(Rule::Bot, {{pick(id), bot(), ante}}, {}, -1, {});
}

P top_ax(Comp succ, int id) {
  P b = bot_ax(flip(succ));
  return neg_r(b, b->concl[0].id, id);
}

P weaken(P p, F a, Comp c, int id) {
  Sequent s = p->concl;
  int m = pick(id);
  s.push_back({m, a, c});
  return make_node(is_ante(c) ? Rule::Lw : Rule::Rw, std::move(s), {p}, m, {});
}

P weaken_with(P p, const Sequent& ctx) {
  // occurrences of p matched by formula and component are reused
  std::vector<char> used(p->concl.size(), 0);
  std::vector<Occ> missing;
  std::map<int, int> ren;
  for (const auto& o : ctx) {
    bool hit = false;
    for (std::size_t i = 0; i < p->concl.size(); ++i) {
      const Occ& q = p->concl[i];
      if (!used[i] && q.f == o.f && q.comp == o.comp) {
        used[i] = 1;
        hit = true;
        if (q.id != o.id) ren[q.id] = o.id;
        break;
      }
    }
    if (!hit) missing.push_back(o);
  }
  if (!ren.empty()) {
    // two passes so that swapped ids do not collide
    std::map<int, int> tmp;
    for (auto [from, to] : ren) {
      int t = fresh_id();
      p = rename(p, from, t);
      tmp[t] = to;
    }
    for (auto [from, to] : tmp) {
      if (find(p->concl, to)) p = rename(p, to, fresh_id());
      p = rename(p, from, to);
    }
  }
  for (const auto& o : missing) {
    if (find(p->concl, o.id)) p = rename(p, o.id, fresh_id());
    p = weaken(p, o.f, o.comp, o.id);
  }
  return p;
}

P wax(F a, Comp ante, Comp succ, const Sequent& ctx, int ida, int ids) {
  P p = ax(a, ante, succ, ida, ids);
  for (const auto& o : ctx) p = weaken(p, o.f, o.comp, o.id);
  return p;
}

P contract(P p, int a, int b, int id) {
  const Occ& x = need(p, a, "contract");
  const Occ& y = need(p, b, "contract");
  if (x.f != y.f || x.comp != y.comp || a == b) throw std::logic_error("contract: occurrences differ");
  int m = pick(id);
  Sequent s = without(replace(p->concl, a, {m, x.f, x.comp}), b);
  return make_node(is_ante(x.comp) ? Rule::Lc : Rule::Rc, std::move(s), {p}, m, {{0, a}, {0, b}});
}

P and_l(P p, int aux, F other, bool first, int id) {
  const Occ& x = need(p, aux, "and_l");
  if (!is_ante(x.comp)) throw std::logic_error("and_l: aux not in antecedent");
  int m = pick(id);
  F f = first ? conj(x.f, other) : conj(other, x.f);
  return make_node(first ? Rule::LAnd1 : Rule::LAnd2, replace(p->concl, aux, {m, f, x.comp}), {p}, m, {{0, aux}});
}

P or_r(P p, int aux, F other, bool first, int id) {
  const Occ& x = need(p, aux, "or_r");
  if (is_ante(x.comp)) throw std::logic_error("or_r: aux not in succedent");
  int m = pick(id);
  F f = first ? disj(x.f, other) : disj(other, x.f);
  return make_node(first ? Rule::ROr1 : Rule::ROr2, replace(p->concl, aux, {m, f, x.comp}), {p}, m, {{0, aux}});
}

P neg_l(P p, int aux, int id) {
  const Occ& x = need(p, aux, "neg_l");
  if (is_ante(x.comp)) throw std::logic_error("neg_l: aux not in succedent");
  int m = pick(id);
  return make_node(Rule::LNeg, replace(p->concl, aux, {m, neg(x.f), flip(x.comp)}), {p}, m, {{0, aux}});
}

P neg_r(P p, int aux, int id) {
  const Occ& x = need(p, aux, "neg_r");
  if (!is_ante(x.comp)) throw std::logic_error("neg_r: aux not in antecedent");
  int m = pick(id);
  return make_node(Rule::RNeg, replace(p->concl, aux, {m, neg(x.f), flip(x.comp)}), {p}, m, {{0, aux}});
}

P align_context(const Sequent& want, P p, std::vector<int>& skip) {
  auto skipped = [&](int id) { return std::find(skip.begin(), skip.end(), id) != skip.end(); };
  // skipped occurrences must not carry ids of the wanted context
  for (auto& s : skip)
    if (find(want, s)) {
      int f = fresh_id();
      p = rename(p, s, f);
      s = f;
    }
  std::vector<char> used(want.size(), 0);
  std::map<int, int> ren;
  std::size_t nctx = 0;
  for (const auto& o : p->concl) {
    if (skipped(o.id)) continue;
    ++nctx;
    int best = -1;
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (used[i] || want[i].f != o.f || want[i].comp != o.comp) continue;
      if (want[i].id == o.id) {
        best = static_cast<int>(i);
        break;
      }
      if (best < 0) best = static_cast<int>(i);
    }
    if (best < 0) throw std::logic_error("align_context: premise has extra " + str(o.f) + " in " + comp_name(o.comp));
    used[best] = 1;
    if (want[best].id != o.id) ren[o.id] = want[best].id;
  }
  if (nctx != want.size()) throw std::logic_error("align_context: premise lacks context occurrences");
  std::map<int, int> tmp;
  for (auto [from, to] : ren) {
    int t = fresh_id();
    p = rename(p, from, t);
    tmp[t] = to;
  }
  for (auto [from, to] : tmp) p = rename(p, from, to);
  return p;
}

namespace {

P binary(Rule rule, P l, P r, int al, int ar, F f, Comp c, int id) {
  Sequent want = without(l->concl, al);
  std::vector<int> skip{ar};
  r = align_context(want, r, skip);
  int m = pick(id);
  return make_node(rule, replace(l->concl, al, {m, f, c}), {l, r}, m, {{0, al}, {1, skip[0]}});
}

}  // namespace

P and_r(P l, P r, int al, int ar, int id) {
  const Occ& x = need(l, al, "and_r");
  const Occ& y = need(r, ar, "and_r");
  if (is_ante(x.comp) || x.comp != y.comp) throw std::logic_error("and_r: bad aux components");
  return binary(Rule::RAnd, l, r, al, ar, conj(x.f, y.f), x.comp, id);
}

P or_l(P l, P r, int al, int ar, int id) {
  const Occ& x = need(l, al, "or_l");
  const Occ& y = need(r, ar, "or_l");
  if (!is_ante(x.comp) || x.comp != y.comp) throw std::logic_error("or_l: bad aux components");
  return binary(Rule::LOr, l, r, al, ar, disj(x.f, y.f), x.comp, id);
}

P cut(P l, P r, int cl, int cr) {
  const Occ& x = need(l, cl, "cut");
  const Occ& y = need(r, cr, "cut");
  if (is_ante(x.comp) || !is_ante(y.comp) || x.f != y.f || side_of(x.comp) != side_of(y.comp))
    throw std::logic_error("cut: cut formulas do not match");
  Sequent want = without(l->concl, cl);
  std::vector<int> skip{cr};
  r = align_context(want, r, skip);
  return make_node(Rule::Cut, want, {l, r}, -1, {{0, cl}, {1, skip[0]}});
}

P k_rule(P p, int id) {
  Sequent s;
  std::vector<Link> links;
  int a = -1;
  Comp ac = Comp::D2;
  for (const auto& o : p->concl) {
    if (is_ante(o.comp)) {
      int n = fresh_id();
      s.push_back({n, box(o.f), o.comp});
      links.push_back({0, o.id, n});
    } else {
      if (a >= 0) throw std::logic_error("k_rule: more than one succedent formula");
      a = o.id;
      ac = o.comp;
    }
  }
  if (a < 0) throw std::logic_error("k_rule: no succedent formula");
  int m = pick(id);
  s.push_back({m, box(get(p->concl, a).f), ac});
  return make_node(Rule::K, std::move(s), {p}, m, {{0, a}}, std::move(links));
}

P d_rule(P p) {
  Sequent s;
  std::vector<Link> links;
  for (const auto& o : p->concl) {
    if (!is_ante(o.comp)) throw std::logic_error("d_rule: premise has a succedent");
    int n = fresh_id();
    s.push_back({n, box(o.f), o.comp});
    links.push_back({0, o.id, n});
  }
  return make_node(Rule::D, std::move(s), {p}, -1, {}, std::move(links));
}

P four_rule(P p, const std::vector<std::pair<int, int>>& pairs, int id) {
  std::set<int> gam, boxed;
  std::vector<Link> links;
  for (auto [g, b] : pairs) {
    gam.insert(g);
    boxed.insert(b);
    links.push_back({0, g, b});
  }
  Sequent s;
  int a = -1;
  Comp ac = Comp::D2;
  for (const auto& o : p->concl) {
    if (!is_ante(o.comp)) {
      if (a >= 0) throw std::logic_error("four_rule: more than one succedent formula");
      a = o.id;
      ac = o.comp;
    } else if (boxed.count(o.id)) {
      s.push_back(o);
    } else if (!gam.count(o.id)) {
      throw std::logic_error("four_rule: unpaired antecedent formula " + str(o.f));
    }
  }
  if (a < 0) throw std::logic_error("four_rule: no succedent formula");
  int m = pick(id);
  s.push_back({m, box(get(p->concl, a).f), ac});
  return make_node(Rule::Four, std::move(s), {p}, m, {{0, a}}, std::move(links));
}

P t_rule(P p, int aux, int id) {
  const Occ& x = need(p, aux, "t_rule");
  if (!is_ante(x.comp)) throw std::logic_error("t_rule: aux not in antecedent");
  int m = pick(id);
  return make_node(Rule::T, replace(p->concl, aux, {m, box(x.f), x.comp}), {p}, m, {{0, aux}});
}

namespace {

// p has `from`, not `to`
P rename_rec(const P& p, int from, int to) {
  Node n = *p;
  for (auto& o : n.concl)
    if (o.id == from) o.id = to;
  if (n.main == from) n.main = to;
  for (auto& l : n.links)
    if (l.to == from) l.to = to;
  for (std::size_t k = 0; k < n.kids.size(); ++k) {
    P kid = n.kids[k];
    auto fix = [&](int a, int b) {
      for (auto& x : n.aux)
        if (x.kid == static_cast<int>(k) && x.id == a) x.id = b;
      for (auto& l : n.links)
        if (l.kid == static_cast<int>(k) && l.from == a) l.from = b;
    };
    if (find(kid->concl, to)) {
      int f = fresh_id();
      kid = rename_rec(kid, to, f);
      fix(to, f);
    }
    if (find(kid->concl, from) && n.main != to) {
      kid = rename_rec(kid, from, to);
      fix(from, to);
    }
    n.kids[k] = kid;
  }
  return make_node(n.rule, std::move(n.concl), std::move(n.kids), n.main, std::move(n.aux), std::move(n.links));
}

P refresh_rec(const P& p, const std::map<int, int>& m) {
  auto mp = [&](int id) { return m.at(id); };
  Sequent s = p->concl;
  for (auto& o : s) o.id = mp(o.id);
  std::vector<P> kids;
  std::vector<std::map<int, int>> km(p->kids.size());
  for (std::size_t k = 0; k < p->kids.size(); ++k) {
    for (const auto& o : p->kids[k]->concl) km[k][o.id] = m.count(o.id) ? m.at(o.id) : fresh_id();
    kids.push_back(refresh_rec(p->kids[k], km[k]));
  }
  std::vector<Aux> aux = p->aux;
  for (auto& a : aux) a.id = km[a.kid].at(a.id);
  std::vector<Link> links = p->links;
  for (auto& l : links) {
    l.from = km[l.kid].at(l.from);
    l.to = mp(l.to);
  }
  return make_node(p->rule, std::move(s), std::move(kids), p->main < 0 ? -1 : mp(p->main), std::move(aux), std::move(links));
}

}  // namespace

P rename(P p, int from, int to) {
  if (from == to) return p;
  if (!find(p->concl, from)) throw std::logic_error("rename: no occurrence " + std::to_string(from));
  if (find(p->concl, to)) throw std::logic_error("rename: id " + std::to_string(to) + " already in use");
  return rename_rec(p, from, to);
}

P refresh(P p, std::map<int, int>* root_map) {
  std::map<int, int> m;
  for (const auto& o : p->concl) m[o.id] = fresh_id();
  if (root_map) *root_map = m;
  return refresh_rec(p, m);
}

// ---- systems ----

bool is_modal(System s) { return s >= System::K; }

namespace {
const std::pair<System, const char*> kSystemNames[] = {
    {System::LKminus, "lk-minus"}, {System::LKat, "lk-at"}, {System::LKlit, "lk-lit"}, {System::LKmono, "lk-mono"},
    {System::LK, "lk"},            {System::K, "k"},        {System::KD, "kd"},         {System::KT, "kt"},
    {System::K4, "k4"},            {System::KD4, "kd4"},    {System::S4, "s4"},
};
}  // namespace

std::string system_name(System s) {
  for (auto& [k, n] : kSystemNames)
    if (k == s) return n;
  return "?";
}

std::optional<System> system_from_name(const std::string& s) {
  for (auto& [k, n] : kSystemNames)
    if (s == n) return k;
  return std::nullopt;
}

bool allows_rule(System s, Rule r) {
  switch (r) {
    case Rule::K: return s == System::K || s == System::KD || s == System::KT;
    case Rule::D: return s == System::KD || s == System::KD4;
    case Rule::Four: return s == System::K4 || s == System::KD4 || s == System::S4;
    case Rule::T: return s == System::KT || s == System::S4;
    case Rule::Cut: return s != System::LKminus;
    default: return true;
  }
}

std::vector<const Node*> preorder(const P& p) {
  std::vector<const Node*> out;
  std::function<void(const Node*)> go = [&](const Node* n) {
    out.push_back(n);
    for (const auto& k : n->kids) go(k.get());
  };
  go(p.get());
  return out;
}

int count_cuts(const P& p) { return p->cuts; }

bool is_monochromatic_cut(const Node& n) {
  F a = get(n.kids[0]->concl, n.aux[0].id).f;
  auto va = vars(a);
  auto v1 = side_vars(n.concl, 1), v2 = side_vars(n.concl, 2);
  return std::includes(v1.begin(), v1.end(), va.begin(), va.end()) || std::includes(v2.begin(), v2.end(), va.begin(), va.end());
}

namespace {

bool cut_allowed(System s, const Node& n, std::string& why) {
  F a = get(n.kids[0]->concl, n.aux[0].id).f;
  bool atomic = a->op == Op::Atom || a->op == Op::Bot || is_top(a);
  switch (s) {
    case System::LKminus: why = "no cuts allowed"; return false;
    case System::LKat:
      why = "cut formula is not atomic";
      return atomic;
    case System::LKlit: {
      auto l = as_literal(a);
      why = "cut formula is not a literal";
      return atomic || (l && l->body->op != Op::Box);
    }
    case System::LKmono: why = "cut is not monochromatic"; return is_monochromatic_cut(n);
    case System::LK: return true;
    default:
      why = "modal cut formula must be an atom or a boxed formula";
      return atomic || a->op == Op::Box;
  }
}

std::string check_node(const Node& n, System sys) {
  auto err = [](const std::string& s) { return s; };
  // ids unique in the conclusion
  {
    std::set<int> ids;
    for (const auto& o : n.concl)
      if (!ids.insert(o.id).second) return err("duplicate occurrence id");
  }
  if (!is_modal(sys))
    for (const auto& o : n.concl)
      if (is_modal(o.f)) return err("modal formula in a propositional system");
  if (!allows_rule(sys, n.rule)) return err(std::string("rule ") + rule_name(n.rule) + " not available in " + system_name(sys));

  std::size_t want_kids = 1;
  switch (n.rule) {
    case Rule::Ax:
    case Rule::Bot: want_kids = 0; break;
    case Rule::RAnd:
    case Rule::LOr:
    case Rule::Cut: want_kids = 2; break;
    default: break;
  }
  if (n.kids.size() != want_kids) return err("wrong number of premises");

  const Occ* main = nullptr;
  if (n.main >= 0) {
    main = find(n.concl, n.main);
    if (!main) return err("main occurrence missing from conclusion");
    for (const auto& k : n.kids)
      if (find(k->concl, n.main)) return err("main occurrence id reused in a premise");
  }

  if (n.rule == Rule::Ax) {
    if (n.concl.size() != 2 || main) return err("axiom must have exactly two occurrences");
    const Occ& a = n.concl[0];
    const Occ& b = n.concl[1];
    if (is_ante(a.comp) == is_ante(b.comp) || a.f != b.f) return err("axiom is not of the form A => A");
    return "";
  }
  if (n.rule == Rule::Bot) {
    if (n.concl.size() != 1 || main || !is_ante(n.concl[0].comp) || n.concl[0].f != bot()) return err("bottom axiom must be false =>");
    return "";
  }

  // classify premise occurrences
  std::vector<std::vector<const Occ*>> auxes(n.kids.size());
  for (std::size_t k = 0; k < n.kids.size(); ++k) {
    std::set<int> ids;
    for (const auto& o : n.kids[k]->concl)
      if (!ids.insert(o.id).second) return err("duplicate occurrence id in premise");
  }
  for (const auto& a : n.aux) {
    if (a.kid < 0 || a.kid >= static_cast<int>(n.kids.size())) return err("auxiliary refers to missing premise");
    const Occ* o = find(n.kids[a.kid]->concl, a.id);
    if (!o) return err("auxiliary occurrence missing from premise");
    if (find(n.concl, a.id)) return err("auxiliary occurrence id also in conclusion");
    auxes[a.kid].push_back(o);
  }
  std::map<int, int> link_hits;  // conclusion id -> count
  for (const auto& l : n.links) {
    if (l.kid < 0 || l.kid >= static_cast<int>(n.kids.size())) return err("link refers to missing premise");
    if (!find(n.kids[l.kid]->concl, l.from) || !find(n.concl, l.to)) return err("dangling link");
    if (find(n.concl, l.from)) return err("linked occurrence id also in conclusion");
    for (const auto& a : n.aux)
      if (a.kid == l.kid && a.id == l.from) return err("occurrence both linked and auxiliary");
    ++link_hits[l.to];
  }
  bool modal_k = n.rule == Rule::K || n.rule == Rule::D;
  for (std::size_t k = 0; k < n.kids.size(); ++k) {
    // every premise occurrence is context, linked or auxiliary
    std::size_t ctx = 0;
    for (const auto& o : n.kids[k]->concl) {
      const Occ* c = find(n.concl, o.id);
      bool linked = false;
      for (const auto& l : n.links)
        if (l.kid == static_cast<int>(k) && l.from == o.id) linked = true;
      bool isaux = false;
      for (const auto* a : auxes[k])
        if (a->id == o.id) isaux = true;
      if (c) {
        if (modal_k) return err("rule has no context");
        if (c->f != o.f || c->comp != o.comp) return err("context occurrence changed");
        ++ctx;
      } else if (!linked && !isaux) {
        return err("premise occurrence " + str(o.f) + " has no descendant");
      }
    }
    // every conclusion occurrence other than the main one is context of every premise
    std::size_t want = n.concl.size() - (main ? 1 : 0);
    if (modal_k) want = 0;
    if (ctx != want) return err("context differs between premise and conclusion");
  }

  auto one_aux = [&](int k) -> const Occ* { return auxes[k].size() == 1 ? auxes[k][0] : nullptr; };
  switch (n.rule) {
    case Rule::Lw:
    case Rule::Rw:
      if (!main || is_ante(main->comp) != (n.rule == Rule::Lw)) return err("weakening main occurrence on wrong side");
      if (!auxes[0].empty() || !n.links.empty()) return err("weakening has no auxiliary occurrences");
      return "";
    case Rule::Lc:
    case Rule::Rc:
      if (!main || is_ante(main->comp) != (n.rule == Rule::Lc)) return err("contraction main occurrence on wrong side");
      if (auxes[0].size() != 2 || !n.links.empty()) return err("contraction needs two auxiliary occurrences");
      for (const auto* a : auxes[0])
        if (a->f != main->f || a->comp != main->comp) return err("contraction auxiliary differs from main");
      return "";
    case Rule::LAnd1:
    case Rule::LAnd2: {
      const Occ* a = one_aux(0);
      if (!main || !a || !is_ante(main->comp) || main->f->op != Op::And || a->comp != main->comp) return err("bad left conjunction");
      if (a->f != (n.rule == Rule::LAnd1 ? main->f->l : main->f->r)) return err("left conjunction auxiliary is not the conjunct");
      return "";
    }
    case Rule::ROr1:
    case Rule::ROr2: {
      const Occ* a = one_aux(0);
      if (!main || !a || is_ante(main->comp) || main->f->op != Op::Or || a->comp != main->comp) return err("bad right disjunction");
      if (a->f != (n.rule == Rule::ROr1 ? main->f->l : main->f->r)) return err("right disjunction auxiliary is not the disjunct");
      return "";
    }
    case Rule::RAnd:
    case Rule::LOr: {
      const Occ* a = one_aux(0);
      const Occ* b = one_aux(1);
      bool left = n.rule == Rule::LOr;
      Op op = left ? Op::Or : Op::And;
      if (!main || !a || !b || is_ante(main->comp) != left || main->f->op != op) return err("bad binary logical rule");
      if (a->comp != main->comp || b->comp != main->comp || a->f != main->f->l || b->f != main->f->r)
        return err("binary rule auxiliaries do not match the main formula");
      return "";
    }
    case Rule::LNeg:
    case Rule::RNeg: {
      const Occ* a = one_aux(0);
      bool left = n.rule == Rule::LNeg;
      if (!main || !a || is_ante(main->comp) != left || main->f->op != Op::Neg) return err("bad negation rule");
      if (a->f != main->f->l || a->comp != flip(main->comp)) return err("negation auxiliary does not match");
      return "";
    }
    case Rule::Cut: {
      const Occ* a = one_aux(0);
      const Occ* b = one_aux(1);
      if (main || !a || !b || !n.links.empty()) return err("bad cut");
      if (is_ante(a->comp) || !is_ante(b->comp) || a->f != b->f || side_of(a->comp) != side_of(b->comp))
        return err("cut formulas do not match");
      std::string why;
      if (!cut_allowed(sys, n, why)) return err(why);
      return "";
    }
    case Rule::K:
    case Rule::D: {
      bool isk = n.rule == Rule::K;
      const Occ* a = isk ? one_aux(0) : nullptr;
      if (isk) {
        if (!main || !a || is_ante(main->comp) || main->f->op != Op::Box || main->f->l != a->f || a->comp != main->comp)
          return err("bad K succedent");
      } else if (main || !auxes[0].empty()) {
        return err("D has no main formula");
      }
      for (const auto& o : n.kids[0]->concl)
        if (!is_ante(o.comp) && (!a || o.id != a->id)) return err("modal premise has extra succedent formulas");
      for (const auto& o : n.concl) {
        if (main && o.id == main->id) continue;
        if (link_hits[o.id] != 1) return err("boxed context occurrence lacks exactly one premise");
      }
      for (const auto& l : n.links) {
        const Occ& from = get(n.kids[0]->concl, l.from);
        const Occ& to = get(n.concl, l.to);
        if (to.f != box(from.f) || to.comp != from.comp) return err("link does not box its formula");
      }
      return "";
    }
    case Rule::Four: {
      const Occ* a = one_aux(0);
      if (!main || !a || is_ante(main->comp) || main->f->op != Op::Box || main->f->l != a->f || a->comp != main->comp)
        return err("bad 4 succedent");
      for (const auto& o : n.kids[0]->concl)
        if (!is_ante(o.comp) && o.id != a->id) return err("4 premise has extra succedent formulas");
      for (const auto& o : n.concl) {
        if (o.id == main->id) continue;
        if (!is_ante(o.comp) || o.f->op != Op::Box) return err("4 conclusion context must be boxed antecedent formulas");
        if (link_hits[o.id] != 1) return err("4 context occurrence lacks its unboxed premise");
      }
      for (const auto& l : n.links) {
        const Occ& from = get(n.kids[0]->concl, l.from);
        const Occ& to = get(n.concl, l.to);
        if (to.f != box(from.f) || to.comp != from.comp) return err("link does not box its formula");
      }
      return "";
    }
    case Rule::T: {
      const Occ* a = one_aux(0);
      if (!main || !a || !is_ante(main->comp) || main->f->op != Op::Box || main->f->l != a->f || a->comp != main->comp)
        return err("bad T");
      return "";
    }
    default: return err("unknown rule");
  }
}

}  // namespace

std::optional<ProofError> check_proof(const P& p, System s) {
  auto nodes = preorder(p);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::string e = check_node(*nodes[i], s);
    if (!e.empty()) return ProofError{static_cast<int>(i), std::string(rule_name(nodes[i]->rule)) + ": " + e};
  }
  return std::nullopt;
}

}  // namespace itp
