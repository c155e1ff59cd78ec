#include "itp/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace itp {

namespace {

struct NodeHash {
  std::size_t operator()(const FNode* n) const { return n->hash; }
};
struct NodeEq {
  bool operator()(const FNode* a, const FNode* b) const {
    return a->op == b->op && a->l == b->l && a->r == b->r && a->name == b->name;
  }
};

std::mutex g_mu;
std::unordered_set<const FNode*, NodeHash, NodeEq>& table() {
  static auto* t = new std::unordered_set<const FNode*, NodeHash, NodeEq>();
  return *t;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// precedence levels: 1 or, 2 and, 3 unary/atomic
int level(const FNode* g) {
  switch (g->op) {
    case Op::Or: return 1;
    case Op::And: return 2;
    default: return 3;
  }
}

std::string wrap(const FNode* g, bool paren) { return paren ? "(" + g->text + ")" : g->text; }

std::string render(Op op, const std::string& name, const FNode* l, const FNode* r) {
  switch (op) {
    case Op::Bot: return "false";
    case Op::Atom: return name;
    case Op::Neg:
      if (l->op == Op::Bot) return "true";
      return "~" + wrap(l, level(l) < 3);
    case Op::Box: return "[]" + wrap(l, level(l) < 3);
    case Op::And: return wrap(l, level(l) < 2) + " & " + wrap(r, level(r) < 3);
    case Op::Or: return wrap(l, level(l) < 1) + " | " + wrap(r, level(r) < 2);
  }
  return "";
}

F intern(Op op, const std::string& name, F l, F r) {
  std::size_t h = mix(static_cast<std::size_t>(op) * 31 + 7, std::hash<std::string>{}(name));
  h = mix(h, l ? l->hash : 0);
  h = mix(h, r ? r->hash : 1);
  FNode probe{op, name, l, r, h, 0, {}};
  std::lock_guard<std::mutex> lk(g_mu);
  auto it = table().find(&probe);
  if (it != table().end()) return *it;
  int len = 1 + (l ? l->len : 0) + (r ? r->len : 0);
  auto* n = new FNode{op, name, l, r, h, len, render(op, name, l, r)};
  table().insert(n);
  return n;
}

}  // namespace

F bot() {
  static F b = intern(Op::Bot, "", nullptr, nullptr);
  return b;
}
F top() {
  static F t = neg(bot());
  return t;
}
F atom(const std::string& name) { return intern(Op::Atom, name, nullptr, nullptr); }
F neg(F a) { return intern(Op::Neg, "", a, nullptr); }
F conj(F a, F b) { return intern(Op::And, "", a, b); }
F disj(F a, F b) { return intern(Op::Or, "", a, b); }
F box(F a) { return intern(Op::Box, "", a, nullptr); }
F imp(F a, F b) { return disj(neg(a), b); }

F conj_all(const std::vector<F>& fs) {
  if (fs.empty()) return top();
  F acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = conj(fs[i], acc);
  return acc;
}
F disj_all(const std::vector<F>& fs) {
  if (fs.empty()) return bot();
  F acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = disj(fs[i], acc);
  return acc;
}

bool is_modal(F f) {
  switch (f->op) {
    case Op::Bot:
    case Op::Atom: return false;
    case Op::Box: return true;
    case Op::Neg: return is_modal(f->l);
    default: return is_modal(f->l) || is_modal(f->r);
  }
}

bool is_nnf(F f) {
  switch (f->op) {
    case Op::Bot:
    case Op::Atom: return true;
    case Op::Box: return is_nnf(f->l);
    case Op::Neg:
      if (f->l->op == Op::Box) return is_nnf(f->l->l);
      return f->l->op == Op::Atom || f->l->op == Op::Bot;
    default: return is_nnf(f->l) && is_nnf(f->r);
  }
}

int modal_depth(F f) {
  switch (f->op) {
    case Op::Bot:
    case Op::Atom: return 0;
    case Op::Box: return 1 + modal_depth(f->l);
    case Op::Neg: return modal_depth(f->l);
    default: return std::max(modal_depth(f->l), modal_depth(f->r));
  }
}

int connectives(F f) {
  switch (f->op) {
    case Op::Bot:
    case Op::Atom: return 0;
    case Op::Neg:
    case Op::Box: return 1 + connectives(f->l);
    default: return 1 + connectives(f->l) + connectives(f->r);
  }
}

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
      line(line_),
      col(col_) {}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t k = 0; k < i && k < s.size(); ++k) {
      if (s[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(const char* tok) {
    ws();
    std::size_t n = std::char_traits<char>::length(tok);
    if (s.compare(i, n, tok) == 0) {
      i += n;
      return true;
    }
    return false;
  }

  F formula() { return impl(); }
  F impl() {
    F a = orf();
    if (eat("->")) return imp(a, impl());
    return a;
  }
  F orf() {
    F a = andf();
    while (true) {
      ws();
      if (i < s.size() && s[i] == '|') {
        ++i;
        a = disj(a, andf());
      } else {
        return a;
      }
    }
  }
  F andf() {
    F a = unary();
    while (eat("&")) a = conj(a, unary());
    return a;
  }
  F unary() {
    ws();
    if (i >= s.size()) fail("unexpected end of input");
    if (eat("~")) return neg(unary());
    if (eat("[]")) return box(unary());
    if (eat("(")) {
      F a = formula();
      if (!eat(")")) fail("expected ')'");
      return a;
    }
    if (std::islower(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string w = s.substr(i, j - i);
      i = j;
      if (w == "false") return bot();
      if (w == "true") return top();
      return atom(w);
    }
    fail(std::string("unexpected character '") + s[i] + "'");
  }
};

}  // namespace

F parse_formula(const std::string& text) {
  Parser p{text};
  F f = p.formula();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return f;
}

std::string str(F f) { return f->text; }

bool fless(F a, F b) {
  if (a == b) return false;
  return a->text < b->text;
}

namespace {
void vars_into(F f, std::set<std::string>& out) {
  switch (f->op) {
    case Op::Bot: return;
    case Op::Atom: out.insert(f->name); return;
    case Op::Neg:
    case Op::Box: vars_into(f->l, out); return;
    default:
      vars_into(f->l, out);
      vars_into(f->r, out);
  }
}
}  // namespace

std::set<std::string> vars(F f) {
  std::set<std::string> out;
  vars_into(f, out);
  return out;
}
std::set<std::string> vars(const std::vector<F>& fs) {
  std::set<std::string> out;
  for (F f : fs) vars_into(f, out);
  return out;
}

void collect_subformulas(F f, std::set<F>& out) {
  if (!out.insert(f).second) return;
  if (f->l) collect_subformulas(f->l, out);
  if (f->r) collect_subformulas(f->r, out);
}

bool eval(F f, const Assignment& a) {
  switch (f->op) {
    case Op::Bot: return false;
    case Op::Atom: {
      auto it = a.find(f->name);
      if (it == a.end()) throw IncompleteAssignment("no value for atom " + f->name);
      return it->second;
    }
    case Op::Neg: return !eval(f->l, a);
    case Op::And: return eval(f->l, a) && eval(f->r, a);
    case Op::Or: return eval(f->l, a) || eval(f->r, a);
    case Op::Box: throw IncompleteAssignment("modal formula needs a Kripke model");
  }
  return false;
}

bool eval(F f, const Kripke& m, int w) {
  switch (f->op) {
    case Op::Bot: return false;
    case Op::Atom: {
      auto it = m.val[w].find(f->name);
      if (it == m.val[w].end()) throw IncompleteAssignment("no value for atom " + f->name);
      return it->second;
    }
    case Op::Neg: return !eval(f->l, m, w);
    case Op::And: return eval(f->l, m, w) && eval(f->r, m, w);
    case Op::Or: return eval(f->l, m, w) || eval(f->r, m, w);
    case Op::Box:
      for (int v : m.succ[w])
        if (!eval(f->l, m, v)) return false;
      return true;
  }
  return false;
}

Table truth_table(F f, const std::vector<std::string>& vs) {
  std::size_t rows = std::size_t{1} << vs.size();
  std::size_t words = (rows + 63) / 64;
  std::uint64_t lastmask = rows % 64 == 0 ? ~0ULL : ((1ULL << rows) - 1);
  std::unordered_map<F, Table> memo;
  std::function<const Table&(F)> go = [&](F g) -> const Table& {
    auto it = memo.find(g);
    if (it != memo.end()) return it->second;
    Table t(words, 0);
    switch (g->op) {
      case Op::Bot: break;
      case Op::Atom: {
        std::size_t j = 0;
        while (j < vs.size() && vs[j] != g->name) ++j;
        if (j == vs.size()) throw IncompleteAssignment("no value for atom " + g->name);
        for (std::size_t r = 0; r < rows; ++r)
          if ((r >> j) & 1) t[r / 64] |= 1ULL << (r % 64);
        break;
      }
      case Op::Neg: {
        const Table& a = go(g->l);
        for (std::size_t k = 0; k < words; ++k) t[k] = ~a[k];
        t[words - 1] &= lastmask;
        break;
      }
      case Op::And:
      case Op::Or: {
        Table a = go(g->l);
        const Table& b = go(g->r);
        for (std::size_t k = 0; k < words; ++k) t[k] = g->op == Op::And ? (a[k] & b[k]) : (a[k] | b[k]);
        break;
      }
      case Op::Box: throw ModalNotSupported("truth tables are propositional only");
    }
    return memo.emplace(g, std::move(t)).first->second;
  };
  return go(f);
}

namespace {
std::vector<std::string> joint_vars(F f, F g) {
  auto vs = vars(f);
  auto ws = vars(g);
  vs.insert(ws.begin(), ws.end());
  return {vs.begin(), vs.end()};
}
}  // namespace

bool equiv(F f, F g) {
  if (is_modal(f) || is_modal(g)) throw ModalNotSupported("equiv is propositional only");
  auto vs = joint_vars(f, g);
  return truth_table(f, vs) == truth_table(g, vs);
}

bool entails(F f, F g) {
  if (is_modal(f) || is_modal(g)) throw ModalNotSupported("entails is propositional only");
  auto vs = joint_vars(f, g);
  Table a = truth_table(f, vs), b = truth_table(g, vs);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

bool valid(F f) { return entails(top(), f); }
bool satisfiable(F f) { return !entails(f, bot()); }

namespace {
F negnnf(F f);
F nnf_rec(F f) {
  switch (f->op) {
    case Op::Bot:
    case Op::Atom:
    case Op::Box: return f;
    case Op::Neg: return negnnf(f->l);
    case Op::And: return conj(nnf_rec(f->l), nnf_rec(f->r));
    case Op::Or: return disj(nnf_rec(f->l), nnf_rec(f->r));
  }
  return f;
}
F negnnf(F f) {
  switch (f->op) {
    case Op::Bot:
    case Op::Atom:
    case Op::Box: return neg(f);
    case Op::Neg: return nnf_rec(f->l);
    case Op::And: return disj(negnnf(f->l), negnnf(f->r));
    case Op::Or: return conj(negnnf(f->l), negnnf(f->r));
  }
  return f;
}
}  // namespace

// boxed subformulas are left untouched: they act as atoms
F nnf(F f) { return nnf_rec(f); }

F substitute(F f, const std::map<std::string, F>& sub) {
  switch (f->op) {
    case Op::Bot: return f;
    case Op::Atom: {
      auto it = sub.find(f->name);
      return it == sub.end() ? f : it->second;
    }
    case Op::Neg: return neg(substitute(f->l, sub));
    case Op::Box: return box(substitute(f->l, sub));
    case Op::And: return conj(substitute(f->l, sub), substitute(f->r, sub));
    case Op::Or: return disj(substitute(f->l, sub), substitute(f->r, sub));
  }
  return f;
}

}  // namespace itp
