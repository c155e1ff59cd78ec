#pragma once

// Brute-force semantics written against the raw AST only, so that tests do not
// grade the library with its own evaluator.

#include "itp/clauses.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using itp::F;
using itp::Op;
using Env = std::map<std::string, bool>;

inline void atoms_of(F f, std::set<std::string>& out) {
  if (f->op == Op::Atom) out.insert(f->name);
  if (f->l) atoms_of(f->l, out);
  if (f->r) atoms_of(f->r, out);
}

inline std::vector<std::string> atoms(const std::vector<F>& fs) {
  std::set<std::string> s;
  for (F f : fs) atoms_of(f, s);
  return {s.begin(), s.end()};
}

inline bool truth(F f, const Env& e) {
  switch (f->op) {
    case Op::Bot: return false;
    case Op::Atom: return e.at(f->name);
    case Op::Neg: return !truth(f->l, e);
    case Op::And: return truth(f->l, e) && truth(f->r, e);
    case Op::Or: return truth(f->l, e) || truth(f->r, e);
    case Op::Box: break;
  }
  throw std::logic_error("oracle: modal formula");
}

inline void each_env(const std::vector<std::string>& vs, const std::function<void(const Env&)>& fn) {
  for (unsigned long m = 0; m < (1ul << vs.size()); ++m) {
    Env e;
    for (std::size_t i = 0; i < vs.size(); ++i) e[vs[i]] = (m >> i) & 1;
    fn(e);
  }
}

inline bool entails(F a, F b) {
  bool ok = true;
  each_env(atoms({a, b}), [&](const Env& e) { ok = ok && (!truth(a, e) || truth(b, e)); });
  return ok;
}

inline bool equiv(F a, F b) { return oracle::entails(a, b) && oracle::entails(b, a); }

inline bool lit_truth(const itp::Literal& l, const Env& e) {
  bool v = l.body->op == Op::Bot ? false : e.at(l.body->name);
  return l.negative ? !v : v;
}

inline bool models(const Env& e, const itp::ClauseSet& cs) {
  for (const auto& c : cs) {
    bool any = false;
    for (const auto& l : c) any = any || lit_truth(l, e);
    if (!any) return false;
  }
  return true;
}

inline std::set<std::string> cs_atoms(const itp::ClauseSet& cs) {
  std::set<std::string> s;
  for (const auto& c : cs)
    for (const auto& l : c)
      if (l.body->op == Op::Atom) s.insert(l.body->name);
  return s;
}

// every clause of b contains some clause of a
inline bool subsumes(const itp::ClauseSet& a, const itp::ClauseSet& b) {
  for (const auto& cb : b) {
    bool found = false;
    for (const auto& ca : a) {
      bool inside = true;
      for (const auto& l : ca) inside = inside && std::find(cb.begin(), cb.end(), l) != cb.end();
      found = found || inside;
    }
    if (!found) return false;
  }
  return true;
}

// boolean functions over the shared atoms (as row bitmasks) lying between a and b
inline std::vector<unsigned long> interpolant_tables(F a, F b, std::vector<std::string>* shared_out = nullptr) {
  std::set<std::string> va, vb;
  atoms_of(a, va);
  atoms_of(b, vb);
  std::vector<std::string> shared;
  for (const auto& v : va)
    if (vb.count(v)) shared.push_back(v);
  if (shared_out) *shared_out = shared;
  auto all = atoms({a, b});
  std::size_t rows = 1ul << shared.size();
  // row r must be 1 if some a-model projects to it, and 0 if some non-b-model does
  unsigned long must1 = 0, must0 = 0;
  each_env(all, [&](const Env& e) {
    unsigned long r = 0;
    for (std::size_t i = 0; i < shared.size(); ++i) r |= static_cast<unsigned long>(e.at(shared[i])) << i;
    if (truth(a, e)) must1 |= 1ul << r;
    if (!truth(b, e)) must0 |= 1ul << r;
  });
  std::vector<unsigned long> out;
  if (must1 & must0) return out;
  for (unsigned long t = 0; t < (1ul << rows); ++t)
    if ((t & must1) == must1 && (t & must0) == 0) out.push_back(t);
  return out;
}

inline unsigned long table(F f, const std::vector<std::string>& vs) {
  unsigned long t = 0, r = 0;
  each_env(vs, [&](const Env& e) {
    if (truth(f, e)) t |= 1ul << r;
    ++r;
  });
  return t;
}

}  // namespace oracle
