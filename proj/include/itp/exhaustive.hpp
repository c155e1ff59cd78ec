#pragma once

#include "itp/resolution.hpp"
#include "itp/sequent.hpp"

namespace itp {

struct CutfreeEnum {
  // distinct interpolants; propositional ones are kept one per truth table
  std::vector<F> interpolants;
  std::uint64_t proofs = 0;  // saturates at UINT64_MAX
  std::size_t states = 0;
};

// Maehara interpolants of every cut-free proof of s (rules of sys, no cut) whose
// branches have at most `depth` nodes. Axioms are A => A for any A, and false =>.
CutfreeEnum enumerate_cutfree(const Sequent& s, System sys, int depth);

struct RefutationEnum {
  std::vector<ResolutionProof> refutations;
  std::vector<F> interpolants;  // one per refutation
};

// every weakening-free tree refutation of a ∪ b with at most max_nodes nodes
RefutationEnum enumerate_refutations(const ClauseSet& a, const ClauseSet& b, int max_nodes);

}  // namespace itp
