#pragma once

#include "itp/sequent.hpp"

namespace itp {

struct ProveResult {
  P proof;                          // null when not provable
  std::optional<Kripke> countermodel;  // world 0 refutes the sequent; propositional and K only
};

// Backward search. The proof's end-sequent carries the ids of s. Propositional
// systems give LK- proofs; modal systems use their modal rules at saturation.
ProveResult prove_cutfree(const Sequent& s, System sys);

struct NotProvable : std::runtime_error {
  std::optional<Kripke> countermodel;
  NotProvable(const std::string& m, std::optional<Kripke> cm) : std::runtime_error(m), countermodel(std::move(cm)) {}
};
P prove_or_throw(const Sequent& s, System sys);

// A ; => ; B style helpers
Sequent split_sequent(const std::vector<F>& g1, const std::vector<F>& g2, const std::vector<F>& d1, const std::vector<F>& d2);
bool provable(F a, F b, System sys);  // a => b
std::string print_countermodel(const Kripke& m);

}  // namespace itp
