#pragma once

#include "itp/formula.hpp"

namespace itp {

// body is an Atom, Bot or Box; the negative Bot literal is the literal true
struct Literal {
  bool negative = false;
  F body = nullptr;

  Literal dual() const { return {!negative, body}; }
  bool is_top() const { return negative && body->op == Op::Bot; }
  bool is_bot() const { return !negative && body->op == Op::Bot; }
  F formula() const { return negative ? neg(body) : body; }
  bool operator==(const Literal& o) const { return negative == o.negative && body == o.body; }
};
bool operator<(const Literal& a, const Literal& b);

using Clause = std::vector<Literal>;      // sorted, duplicate free
using ClauseSet = std::vector<Clause>;    // sorted, duplicate free

Literal lit(const std::string& atom_name, bool negative = false);
std::optional<Literal> as_literal(F f);  // p, ~p, false, true, []A, ~[]A
std::string str(const Literal& l);
std::string str(const Clause& c);         // "p ~q"; empty clause prints as "{}"

Clause make_clause(std::vector<Literal> ls);
ClauseSet make_clause_set(std::vector<Clause> cs);
bool clause_less(const Clause& a, const Clause& b);
bool subset(const Clause& a, const Clause& b);
bool contains(const Clause& c, const Literal& l);
bool tautological(const Clause& c);

ClauseSet cs_union(const ClauseSet& a, const ClauseSet& b);
ClauseSet cs_product(const ClauseSet& a, const ClauseSet& b);

ClauseSet cnf(F f);   // nnf first, then the distributive recursion
ClauseSet mcnf(F f);  // boxed subformulas are treated as atoms
F clause_formula(const Clause& c);
F clause_set_formula(const ClauseSet& cs);
std::set<std::string> vars(const ClauseSet& cs);

bool subsumes(const ClauseSet& a, const ClauseSet& b);
bool is_pruned(const ClauseSet& cs);
ClauseSet prune(const ClauseSet& cs);

F sel(F c, F x, F y);

bool models(const Assignment& a, const ClauseSet& cs);

bool is_pruned_interpolant(const ClauseSet& cs, F a, F b);
bool is_interpolant(F c, F a, F b);

struct NotValid : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooManySharedVars : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<F> enumerate_interpolants(F a, F b, int max_shared = 4);
// prime implicates of the boolean function given by a truth table over vs
ClauseSet prime_implicates(const Table& t, const std::vector<std::string>& vs);

ClauseSet parse_clause_set(const std::string& text);
std::string print_clause_set(const ClauseSet& cs);

}  // namespace itp
