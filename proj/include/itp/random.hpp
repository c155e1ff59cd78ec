#pragma once

#include "itp/resolution.hpp"
#include "itp/sequent.hpp"

#include <random>

namespace itp {

using Rng = std::mt19937_64;

F random_formula(Rng& rng, const std::vector<std::string>& atoms, int depth, bool modal = false);
Clause random_clause(Rng& rng, const std::vector<std::string>& atoms, int max_len);

// A-clauses and B-clauses whose union is unsatisfiable
struct PartitionedCnf {
  ClauseSet a, b;
};
PartitionedCnf random_unsat_cnf(Rng& rng, int max_atoms = 5, int max_clauses = 8);

// a -> b valid, a and b share at most max_shared atoms and both have local atoms too
std::pair<F, F> random_valid_implication(Rng& rng, int max_shared = 3);

struct PrunedInstance {
  F a, b;
  ClauseSet cs;
};
PrunedInstance random_pruned_instance(Rng& rng);

// a checked proof of a random valid split sequent; cuts follow the system's policy
P random_proof(Rng& rng, System sys);

}  // namespace itp
