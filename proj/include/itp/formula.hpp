#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace itp {

enum class Op : std::uint8_t { Bot, Atom, Neg, And, Or, Box };

// Formulas are hash-consed: structurally equal formulas share one node,
// so pointer comparison is AST equality.
struct FNode {
  Op op;
  std::string name;
  const FNode* l;
  const FNode* r;
  std::size_t hash;
  int len;
  std::string text;
};
using F = const FNode*;

F bot();
F top();  // Neg(Bot)
F atom(const std::string& name);
F neg(F a);
F conj(F a, F b);
F disj(F a, F b);
F box(F a);
F imp(F a, F b);  // Or(Neg(a), b)

F conj_all(const std::vector<F>& fs);  // right-associated; empty -> top
F disj_all(const std::vector<F>& fs);  // right-associated; empty -> bot

inline bool is_top(F f) { return f->op == Op::Neg && f->l->op == Op::Bot; }
bool is_modal(F f);
bool is_nnf(F f);
int modal_depth(F f);
int connectives(F f);

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line, int col);
};

F parse_formula(const std::string& text);
std::string str(F f);

// canonical order on formulas: by printed text
bool fless(F a, F b);
struct FLess {
  bool operator()(F a, F b) const { return fless(a, b); }
};

std::set<std::string> vars(F f);
std::set<std::string> vars(const std::vector<F>& fs);
void collect_subformulas(F f, std::set<F>& out);

using Assignment = std::map<std::string, bool>;

struct Kripke {
  std::vector<std::vector<int>> succ;
  std::vector<Assignment> val;
};

struct IncompleteAssignment : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ModalNotSupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool eval(F f, const Assignment& a);
bool eval(F f, const Kripke& m, int world);

// bit-parallel truth table over an ordered variable list; row i assigns
// var j the bit j of i
using Table = std::vector<std::uint64_t>;
Table truth_table(F f, const std::vector<std::string>& vs);

bool equiv(F f, F g);
bool entails(F f, F g);
bool valid(F f);
bool satisfiable(F f);

F nnf(F f);
F substitute(F f, const std::map<std::string, F>& sub);

}  // namespace itp
