#include "itp/random.hpp"

#include "itp/prover.hpp"

#include <algorithm>

namespace itp {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, static_cast<int>(v.size()) - 1)];
}

std::vector<std::string> names(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::string> join(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

F random_formula(Rng& rng, const std::vector<std::string>& atoms, int depth, bool modal) {
  if (depth <= 0 || coin(rng, 0.25)) {
    int r = uniform(rng, 0, 19);
    if (r == 0) return bot();
    if (r == 1) return top();
    return atom(pick(rng, atoms));
  }
  int r = uniform(rng, 0, modal ? 4 : 3);
  switch (r) {
    case 0: return neg(random_formula(rng, atoms, depth - 1, modal));
    case 1: return conj(random_formula(rng, atoms, depth - 1, modal), random_formula(rng, atoms, depth - 1, modal));
    case 2: return disj(random_formula(rng, atoms, depth - 1, modal), random_formula(rng, atoms, depth - 1, modal));
    case 3: return imp(random_formula(rng, atoms, depth - 1, modal), random_formula(rng, atoms, depth - 1, modal));
    default: return box(random_formula(rng, atoms, depth - 1, modal));
  }
}

Clause random_clause(Rng& rng, const std::vector<std::string>& atoms, int max_len) {
  int n = uniform(rng, 1, max_len);
  Clause c;
  for (int i = 0; i < n; ++i) c.push_back(lit(pick(rng, atoms), coin(rng)));
  return make_clause(c);
}

PartitionedCnf random_unsat_cnf(Rng& rng, int max_atoms, int max_clauses) {
  while (true) {
    auto atoms = names("p", uniform(rng, 2, max_atoms));
    int n = uniform(rng, 2, max_clauses);
    std::vector<Clause> a, b;
    std::vector<Clause> all;
    for (int i = 0; i < n; ++i) {
      Clause c = random_clause(rng, atoms, coin(rng, 0.7) ? 2 : 3);
      all.push_back(c);
      (coin(rng) ? a : b).push_back(c);
    }
    if (satisfiable(clause_set_formula(make_clause_set(all)))) continue;
    return {make_clause_set(a), make_clause_set(b)};
  }
}

std::pair<F, F> random_valid_implication(Rng& rng, int max_shared) {
  auto shared = names("s", uniform(rng, 1, max_shared));
  auto la = join(shared, names("x", uniform(rng, 1, 2)));
  auto lb = join(shared, names("y", uniform(rng, 1, 2)));
  while (true) {
    F c = random_formula(rng, shared, 2);
    F a = conj(c, random_formula(rng, la, 2));
    F c2 = coin(rng) ? c : disj(c, random_formula(rng, shared, 1));
    F b = disj(c2, random_formula(rng, lb, 2));
    if (coin(rng)) a = nnf(a);
    if (!satisfiable(a) || valid(b)) continue;
    auto va = vars(a), vb = vars(b);
    std::size_t common = 0;
    for (const auto& v : va) common += vb.count(v);
    if (common < shared.size()) continue;
    return {a, b};
  }
}

PrunedInstance random_pruned_instance(Rng& rng) {
  auto shared = names("s", uniform(rng, 2, 3));
  auto la = join(shared, names("x", uniform(rng, 1, 2)));
  auto lb = join(shared, names("y", 1));
  while (true) {
    F a = random_formula(rng, la, 3);
    if (!satisfiable(a)) continue;
    // project a onto the shared atoms: row r holds iff some local extension satisfies a
    std::vector<std::string> all = la;
    Table full = truth_table(a, all);
    std::size_t ns = shared.size(), rows = std::size_t{1} << ns;
    Table proj((rows + 63) / 64, 0);
    for (std::size_t r = 0; r < (std::size_t{1} << all.size()); ++r)
      if ((full[r / 64] >> (r % 64)) & 1) {
        std::size_t s = r & (rows - 1);  // shared atoms come first in la
        proj[s / 64] |= std::uint64_t{1} << (s % 64);
      }
    ClauseSet pis = prime_implicates(proj, shared);
    if (pis.empty()) continue;
    std::shuffle(pis.begin(), pis.end(), rng);
    std::vector<Clause> chosen;
    std::set<Literal> seen;
    for (const auto& c : pis) {
      if (c.empty()) break;
      bool clash = std::any_of(c.begin(), c.end(), [&](const Literal& l) { return seen.count(l.dual()) > 0; });
      if (clash || (!chosen.empty() && coin(rng, 0.3))) continue;
      chosen.push_back(c);
      seen.insert(c.begin(), c.end());
    }
    if (chosen.empty()) continue;
    ClauseSet cs = make_clause_set(chosen);
    F b = disj(clause_set_formula(cs), random_formula(rng, lb, 2));
    if (coin(rng)) b = nnf(b);
    if (valid(b) || !is_pruned_interpolant(cs, a, b)) continue;
    return {a, b, cs};
  }
}

namespace {

Sequent add_occ(const Sequent& s, F f, Comp c, int id) {
  Sequent out = s;
  out.push_back({id, f, c});
  return out;
}

P prove_with_cuts(Rng& rng, const Sequent& s, System sys, int budget) {
  if (budget <= 0 || sys == System::LKminus || coin(rng, 0.3)) return prove_or_throw(s, System::LKminus);
  int side = coin(rng) ? 1 : 2;
  F x;
  if (sys == System::LKat) {
    x = atom(pick(rng, std::vector<std::string>{"s0", "s1", "x0", "y0"}));
  } else {
    auto vs = side_vars(s, side);
    if (vs.empty()) {
      x = coin(rng) ? bot() : top();
    } else {
      std::vector<std::string> v(vs.begin(), vs.end());
      x = random_formula(rng, v, 2);
    }
  }
  int il = fresh_id(), ir = fresh_id();
  P l = prove_with_cuts(rng, add_occ(s, x, make_comp(false, side), il), sys, budget - 1);
  P r = prove_with_cuts(rng, add_occ(s, x, make_comp(true, side), ir), sys, budget - 1);
  P c = cut(l, r, il, ir);
  Sequent order;
  for (const auto& o : s) order.push_back(get(c->concl, o.id));
  return make_node(c->rule, order, c->kids, c->main, c->aux, c->links);
}

}  // namespace

P random_proof(Rng& rng, System sys) {
  auto [a, b] = random_valid_implication(rng, 2);
  // sometimes move a formula to the other side of the partition
  std::vector<F> g1{a}, g2, d1, d2{b};
  if (coin(rng, 0.2)) std::swap(g1, g2);
  if (coin(rng, 0.2)) std::swap(d1, d2);
  return prove_with_cuts(rng, split_sequent(g1, g2, d1, d2), sys, 2);
}

}  // namespace itp
