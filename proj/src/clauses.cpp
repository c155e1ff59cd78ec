#include "itp/clauses.hpp"

#include <algorithm>
#include <sstream>

namespace itp {

bool operator<(const Literal& a, const Literal& b) {
  if (a.negative != b.negative) return !a.negative;
  return fless(a.body, b.body);
}

Literal lit(const std::string& atom_name, bool negative) { return {negative, atom(atom_name)}; }

std::optional<Literal> as_literal(F f) {
  switch (f->op) {
    case Op::Bot:
    case Op::Atom:
    case Op::Box: return Literal{false, f};
    case Op::Neg:
      if (f->l->op == Op::Atom || f->l->op == Op::Bot || f->l->op == Op::Box) return Literal{true, f->l};
      return std::nullopt;
    default: return std::nullopt;
  }
}

std::string str(const Literal& l) {
  if (l.is_top()) return "true";
  std::string b = str(l.body);
  return l.negative ? "~" + b : b;
}

std::string str(const Clause& c) {
  if (c.empty()) return "{}";
  std::string out;
  for (const auto& l : c) {
    if (!out.empty()) out += ' ';
    out += str(l);
  }
  return out;
}

Clause make_clause(std::vector<Literal> ls) {
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  return ls;
}

bool clause_less(const Clause& a, const Clause& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

ClauseSet make_clause_set(std::vector<Clause> cs) {
  for (auto& c : cs) c = make_clause(std::move(c));
  std::sort(cs.begin(), cs.end(), clause_less);
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

bool subset(const Clause& a, const Clause& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool contains(const Clause& c, const Literal& l) { return std::binary_search(c.begin(), c.end(), l); }

bool tautological(const Clause& c) {
  for (const auto& l : c) {
    if (l.is_top()) return true;
    if (!l.negative && contains(c, l.dual())) return true;
  }
  return false;
}

ClauseSet cs_union(const ClauseSet& a, const ClauseSet& b) {
  ClauseSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), clause_less);
  return out;
}

ClauseSet cs_product(const ClauseSet& a, const ClauseSet& b) {
  std::vector<Clause> out;
  out.reserve(a.size() * b.size());
  for (const auto& c : a)
    for (const auto& d : b) {
      Clause u;
      std::set_union(c.begin(), c.end(), d.begin(), d.end(), std::back_inserter(u));
      out.push_back(std::move(u));
    }
  return make_clause_set(std::move(out));
}

namespace {
ClauseSet cnf_nnf(F f) {
  if (f->op == Op::Bot) return {Clause{}};
  if (is_top(f)) return {};
  if (auto l = as_literal(f)) return {Clause{*l}};
  if (f->op == Op::And) return cs_union(cnf_nnf(f->l), cnf_nnf(f->r));
  if (f->op == Op::Or) return cs_product(cnf_nnf(f->l), cnf_nnf(f->r));
  throw std::logic_error("cnf: formula not in negation normal form: " + str(f));
}
}  // namespace

ClauseSet cnf(F f) { return cnf_nnf(nnf(f)); }

ClauseSet mcnf(F f) { return cnf_nnf(nnf(f)); }

F clause_formula(const Clause& c) {
  std::vector<F> ls;
  for (const auto& l : c) ls.push_back(l.formula());
  return disj_all(ls);
}

F clause_set_formula(const ClauseSet& cs) {
  std::vector<F> cl;
  for (const auto& c : cs) cl.push_back(clause_formula(c));
  return conj_all(cl);
}

std::set<std::string> vars(const ClauseSet& cs) {
  std::set<std::string> out;
  for (const auto& c : cs)
    for (const auto& l : c) {
      auto v = vars(l.body);
      out.insert(v.begin(), v.end());
    }
  return out;
}

bool subsumes(const ClauseSet& a, const ClauseSet& b) {
  for (const auto& cb : b) {
    bool found = false;
    for (const auto& ca : a)
      if (subset(ca, cb)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool is_pruned(const ClauseSet& cs) {
  std::set<Literal> seen;
  for (const auto& c : cs)
    for (const auto& l : c) {
      if (l.is_top()) return false;
      seen.insert(l);
    }
  for (const auto& l : seen)
    if (l.body->op != Op::Bot && seen.count(l.dual())) return false;
  return true;
}

ClauseSet prune(const ClauseSet& input) {
  std::vector<Clause> cur;
  for (const auto& c : input) {
    bool has_top = std::any_of(c.begin(), c.end(), [](const Literal& l) { return l.is_top(); });
    if (!has_top) cur.push_back(c);
  }
  while (true) {
    // atoms occurring in both polarities, in canonical order
    std::set<Literal> pos;
    std::set<Literal> both;
    for (const auto& c : cur)
      for (const auto& l : c)
        if (!l.negative && l.body->op != Op::Bot) pos.insert(l);
    for (const auto& c : cur)
      for (const auto& l : c)
        if (l.negative && pos.count(l.dual())) both.insert(l.dual());
    if (both.empty()) break;
    Literal p = *both.begin();
    Literal np = p.dual();
    std::vector<Clause> keep, withp, withn;
    for (const auto& c : cur) {
      bool hp = contains(c, p), hn = contains(c, np);
      if (hp && hn) continue;
      if (hp) {
        withp.push_back(c);
      } else if (hn) {
        withn.push_back(c);
      } else {
        keep.push_back(c);
      }
    }
    for (const auto& d1 : withp)
      for (const auto& d2 : withn) {
        Clause r;
        for (const auto& l : d1)
          if (!(l == p)) r.push_back(l);
        for (const auto& l : d2)
          if (!(l == np)) r.push_back(l);
        keep.push_back(make_clause(std::move(r)));
      }
    cur = make_clause_set(std::move(keep));
  }
  return make_clause_set(std::move(cur));
}

F sel(F c, F x, F y) { return conj(disj(c, x), disj(neg(c), y)); }

bool models(const Assignment& a, const ClauseSet& cs) {
  for (const auto& c : cs) {
    bool sat = false;
    for (const auto& l : c)
      if (eval(l.formula(), a)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

namespace {
bool var_condition(const std::set<std::string>& vc, F a, F b) {
  auto va = vars(a), vb = vars(b);
  for (const auto& v : vc)
    if (!va.count(v) || !vb.count(v)) return false;
  return true;
}
}  // namespace

bool is_interpolant(F c, F a, F b) {
  return var_condition(vars(c), a, b) && entails(a, c) && entails(c, b);
}

bool is_pruned_interpolant(const ClauseSet& cs, F a, F b) {
  if (!is_pruned(cs)) return false;
  F c = clause_set_formula(cs);
  if (!var_condition(vars(cs), a, b)) return false;
  if (!entails(a, c) || !entails(c, b)) return false;
  for (const auto& cl : cs)
    for (std::size_t k = 0; k < cl.size(); ++k) {
      Clause sub;
      for (std::size_t j = 0; j < cl.size(); ++j)
        if (j != k) sub.push_back(cl[j]);
      if (entails(a, clause_formula(sub))) return false;
    }
  return true;
}

ClauseSet prime_implicates(const Table& t, const std::vector<std::string>& vs) {
  const std::size_t n = vs.size();
  const std::size_t rows = std::size_t{1} << n;
  auto truth = [&](std::size_t r) { return (t[r / 64] >> (r % 64)) & 1; };
  // a clause over vs: for each var 0 absent, 1 positive, 2 negative
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<std::vector<int>> implied;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> cl(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      cl[i] = static_cast<int>(c % 3);
      c /= 3;
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows && ok; ++r) {
      if (!truth(r)) continue;
      bool sat = false;
      for (std::size_t i = 0; i < n; ++i) {
        bool v = (r >> i) & 1;
        if ((cl[i] == 1 && v) || (cl[i] == 2 && !v)) sat = true;
      }
      ok = sat;
    }
    if (ok) implied.push_back(cl);
  }
  auto sub = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != 0 && a[i] != b[i]) return false;
    return true;
  };
  std::vector<Clause> out;
  for (const auto& c : implied) {
    bool minimal = true;
    for (const auto& d : implied)
      if (d != c && sub(d, c)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    Clause cl;
    for (std::size_t i = 0; i < n; ++i)
      if (c[i]) cl.push_back(lit(vs[i], c[i] == 2));
    out.push_back(std::move(cl));
  }
  return make_clause_set(std::move(out));
}

std::vector<F> enumerate_interpolants(F a, F b, int max_shared) {
  auto va = vars(a), vb = vars(b);
  std::vector<std::string> shared;
  for (const auto& v : va)
    if (vb.count(v)) shared.push_back(v);
  if (static_cast<int>(shared.size()) > max_shared)
    throw TooManySharedVars("shared variables exceed the enumeration cap");
  std::set<std::string> all = va;
  all.insert(vb.begin(), vb.end());
  std::vector<std::string> order = shared;
  for (const auto& v : all)
    if (!std::count(shared.begin(), shared.end(), v)) order.push_back(v);
  Table ta = truth_table(a, order), tb = truth_table(b, order);
  const std::size_t k = shared.size();
  const std::size_t srows = std::size_t{1} << k;
  const std::size_t rows = std::size_t{1} << order.size();
  // lo: shared rows reachable by a model of a; hi: shared rows with no model of ~b
  std::vector<bool> lo(srows, false), bad(srows, false);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t s = r & (srows - 1);
    bool av = (ta[r / 64] >> (r % 64)) & 1, bv = (tb[r / 64] >> (r % 64)) & 1;
    if (av) lo[s] = true;
    if (!bv) bad[s] = true;
  }
  std::vector<std::size_t> free;
  for (std::size_t s = 0; s < srows; ++s) {
    if (lo[s] && bad[s]) throw NotValid("implication is not valid");
    if (!lo[s] && !bad[s]) free.push_back(s);
  }
  std::vector<std::pair<std::string, F>> res;
  for (std::size_t m = 0; m < (std::size_t{1} << free.size()); ++m) {
    Table t((srows + 63) / 64, 0);
    for (std::size_t s = 0; s < srows; ++s)
      if (lo[s]) t[s / 64] |= 1ULL << (s % 64);
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((m >> i) & 1) t[free[i] / 64] |= 1ULL << (free[i] % 64);
    F f = clause_set_formula(prime_implicates(t, shared));
    res.emplace_back(str(f), f);
  }
  std::sort(res.begin(), res.end());
  std::vector<F> out;
  for (auto& [s, f] : res) out.push_back(f);
  return out;
}

ClauseSet parse_clause_set(const std::string& text) {
  std::vector<Clause> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    line = line.substr(a, line.find_last_not_of(" \t\r") - a + 1);
    if (line == "{}") {
      out.push_back({});
      continue;
    }
    // literals are separated by whitespace outside parentheses
    Clause c;
    int depth = 0;
    std::string tok;
    auto flush = [&]() {
      if (tok.empty()) return;
      F f;
      try {
        f = parse_formula(tok);
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad literal '") + tok + "'", lineno, e.col);
      }
      auto l = as_literal(f);
      if (!l) throw ParseError("not a literal: " + tok, lineno, 1);
      c.push_back(*l);
      tok.clear();
    };
    for (char ch : line) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if ((ch == ' ' || ch == '\t') && depth == 0) {
        flush();
      } else {
        tok += ch;
      }
    }
    flush();
    out.push_back(std::move(c));
  }
  return make_clause_set(std::move(out));
}

std::string print_clause_set(const ClauseSet& cs) {
  std::string out;
  for (const auto& c : cs) out += str(c) + "\n";
  return out;
}

}  // namespace itp
