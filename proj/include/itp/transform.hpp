#pragma once

#include "itp/sequent.hpp"

namespace itp {

struct TargetNotNegation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The end-sequent occurrence `target` holds ~A in component c. The result proves
// the same sequent with A in flip(c) under the same id; the interpolant is kept.
P neg_invert(const P& p, int target);

// cuts on ~X (X an atom or a box) become cuts on X, bottom-up
P literal_cuts_to_atomic(const P& p);

// push weakenings up until they sit on axioms or other weakenings
P w_reduce(const P& p);

// drop a weak end-sequent occurrence together with the weakenings that made it
P delete_weak(const P& p, int id);

// every internal id fresh, end-sequent ids kept
P fresh_inside(const P& p);

struct NotTame : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotTypeR : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TraceStep {
  std::string kind;
  int cut;                               // preorder index of the reduced cut
  int degree, weight;                    // of the reduced cut
  std::vector<std::pair<int, int>> replaced_by;  // (degree, weight) of the cuts that took its place
  ClauseSet cnf;                         // cnf of the root interpolant after the step
};

struct CutElimResult {
  P proof;
  ClauseSet initial;  // cnf of the input's interpolant
  std::vector<TraceStep> trace;
};

// Tame proofs whose cuts are all of type R. Always reduces the leftmost uppermost cut.
CutElimResult eliminate_cuts(const P& p, std::size_t max_steps = 200000);

// each adjacent pair X, Y of cnfs satisfies X subsumes-into Y
bool trace_subsumption_ok(const CutElimResult& r);
// every reduction replaced its cut by cuts of smaller (degree, weight); axiom expansions keep the degree
bool trace_measure_ok(const CutElimResult& r);
std::string print_trace(const CutElimResult& r);

}  // namespace itp
