#pragma once

#include "itp/clauses.hpp"

#include <variant>

namespace itp {

enum class Side { A, B };

struct ResNode {
  enum Kind { Input, Res, Weak } kind = Input;
  Clause clause;          // conclusion
  Side side = Side::A;    // Input only
  int left = -1, right = -1;
  F pivot = nullptr;      // Res only; an atom (or a boxed formula in modal clause sets)
  Clause added;           // Weak only; premise is `left`
};

struct ResolutionProof {
  std::vector<ResNode> nodes;  // the root is the last node
  int root() const { return static_cast<int>(nodes.size()) - 1; }

  int input(Clause c, Side s);
  int resolve(int l, int r, F pivot);  // conclusion is computed
  int weaken(int p, Clause added);
};

// keyed by the printed literal body, so boxed formulas can act as variables
struct Partition {
  std::set<std::string> shared, a_local, b_local;
};
// shared = vars of A-inputs and B-inputs; everything else local to its side
Partition partition_of(const ResolutionProof& rp);

struct Violation {
  int node;
  std::string reason;
};
std::optional<Violation> check_refutation(const ResolutionProof& rp);
// same rules, without requiring the root to be empty
std::optional<Violation> check_derivation(const ResolutionProof& rp);

struct Satisfiable {
  Assignment model;
};
// every clause carries its side; DPLL without learning, read back as a tree refutation
std::variant<ResolutionProof, Satisfiable> refute(const ClauseSet& a, const ClauseSet& b);
std::variant<ResolutionProof, Satisfiable> refute(const ClauseSet& cs);

struct PartitionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
F interpolant_from_refutation(const ResolutionProof& rp, const Partition& part);
F interpolant_from_refutation(const ResolutionProof& rp);

std::string print_refutation(const ResolutionProof& rp);
ResolutionProof parse_refutation(const std::string& text);

}  // namespace itp
