#pragma once

#include "itp/sequent.hpp"

namespace itp {

struct Annotated {
  P proof;
  std::vector<F> node_itp;  // by preorder index
  F root;
};

struct UnsupportedRule : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interpolant of the split end-sequent. Cut formulas must only use atoms of the
// side their occurrences sit on (monochromatize orients them).
Annotated maehara(const P& p, System s);
F interpolant(const P& p);

struct Verdict {
  bool ok;
  std::string reason;
};
// a => c and c => b, with V(c) within V(a) and V(b)
Verdict verify_interpolant(F a, F b, F c, System s);
// G1 => D1, C and C, G2 => D2 for the end-sequent of p
Verdict verify_split_interpolant(const Sequent& s, F c, System sys);

// one node per line, indented by depth, suffixed with "@ interpolant"; root interpolant last
std::string print_annotated(const Annotated& a);

}  // namespace itp
