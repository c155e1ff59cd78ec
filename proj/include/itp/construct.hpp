#pragma once

#include "itp/prover.hpp"
#include "itp/transform.hpp"

namespace itp {

struct NotEntailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAnInterpolant : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SubproofMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPrunedInterpolant : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultCminusCap = 4096;

// A ; => ; l1..lk with interpolant (false | l1) | ... | lk, via literal cuts of type L
P realize_clause(F a, const Clause& c, System sys = System::LKat);

// pis[i] proves A ; => ; C_i. The result proves A ; => ; B with only atomic
// (or boxed) cuts, all of type R, and cnf of its interpolant equal to the
// union of the cnfs of the pis' interpolants.
P conjoin(F a, F b, const ClauseSet& cs, const std::vector<P>& pis, System sys = System::LKat,
          std::size_t cminus_cap = kDefaultCminusCap);

// a proof of A ; => ; B in sys whose interpolant is equivalent to c
P realize_interpolant(F a, F b, F c, System sys = System::LKat, std::size_t cminus_cap = kDefaultCminusCap);

// tame, type-R cuts only, cnf of the interpolant is exactly cs
P realize_pruned(F a, F b, const ClauseSet& cs, std::size_t cminus_cap = kDefaultCminusCap);

// eliminate_cuts after realize_pruned; the proof is cut-free and cs subsumes into its cnf
CutElimResult pruned_subsumption_pipeline(F a, F b, const ClauseSet& cs, std::size_t cminus_cap = kDefaultCminusCap);

}  // namespace itp
