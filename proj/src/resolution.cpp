#include "itp/resolution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace itp {

namespace {

std::string key(F body) { return str(body); }

Clause remove_lit(const Clause& c, const Literal& l) {
  Clause out;
  for (const auto& m : c)
    if (!(m == l)) out.push_back(m);
  return out;
}

Clause merge(const Clause& a, const Clause& b) {
  Clause out = a;
  out.insert(out.end(), b.begin(), b.end());
  return make_clause(std::move(out));
}

std::set<std::string> keys(const Clause& c) {
  std::set<std::string> out;
  for (const auto& l : c)
    if (l.body->op != Op::Bot) out.insert(key(l.body));
  return out;
}

}  // namespace

int ResolutionProof::input(Clause c, Side s) {
  ResNode n;
  n.kind = ResNode::Input;
  n.clause = make_clause(std::move(c));
  n.side = s;
  nodes.push_back(std::move(n));
  return root();
}

int ResolutionProof::resolve(int l, int r, F pivot) {
  ResNode n;
  n.kind = ResNode::Res;
  n.left = l;
  n.right = r;
  n.pivot = pivot;
  n.clause = merge(remove_lit(nodes.at(l).clause, {false, pivot}), remove_lit(nodes.at(r).clause, {true, pivot}));
  nodes.push_back(std::move(n));
  return root();
}

int ResolutionProof::weaken(int p, Clause added) {
  ResNode n;
  n.kind = ResNode::Weak;
  n.left = p;
  n.added = make_clause(std::move(added));
  n.clause = merge(nodes.at(p).clause, n.added);
  nodes.push_back(std::move(n));
  return root();
}

Partition partition_of(const ResolutionProof& rp) {
  std::set<std::string> va, vb;
  for (const auto& n : rp.nodes) {
    if (n.kind != ResNode::Input) continue;
    auto ks = keys(n.clause);
    (n.side == Side::A ? va : vb).insert(ks.begin(), ks.end());
  }
  Partition p;
  for (const auto& v : va) (vb.count(v) ? p.shared : p.a_local).insert(v);
  for (const auto& v : vb)
    if (!va.count(v)) p.b_local.insert(v);
  return p;
}

std::optional<Violation> check_derivation(const ResolutionProof& rp) {
  if (rp.nodes.empty()) return Violation{-1, "empty proof"};
  for (int i = 0; i < static_cast<int>(rp.nodes.size()); ++i) {
    const ResNode& n = rp.nodes[i];
    if (n.clause != make_clause(n.clause)) return Violation{i, "clause not in canonical form"};
    switch (n.kind) {
      case ResNode::Input: break;
      case ResNode::Res: {
        if (n.left < 0 || n.left >= i || n.right < 0 || n.right >= i) return Violation{i, "premise does not precede node"};
        if (!n.pivot || n.pivot->op == Op::Bot || n.pivot->op == Op::Neg) return Violation{i, "pivot must be an atom"};
        const Clause& l = rp.nodes[n.left].clause;
        const Clause& r = rp.nodes[n.right].clause;
        if (!contains(l, {false, n.pivot})) return Violation{i, "left premise lacks " + str(n.pivot)};
        if (!contains(r, {true, n.pivot})) return Violation{i, "right premise lacks ~" + str(n.pivot)};
        Clause want = merge(remove_lit(l, {false, n.pivot}), remove_lit(r, {true, n.pivot}));
        if (want != n.clause) return Violation{i, "conclusion is not the resolvent"};
        break;
      }
      case ResNode::Weak: {
        if (n.left < 0 || n.left >= i) return Violation{i, "premise does not precede node"};
        if (merge(rp.nodes[n.left].clause, n.added) != n.clause) return Violation{i, "conclusion is not premise plus added literals"};
        break;
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_refutation(const ResolutionProof& rp) {
  if (auto v = check_derivation(rp)) return v;
  if (!rp.nodes.back().clause.empty()) return Violation{rp.root(), "root clause is not empty"};
  return std::nullopt;
}

namespace {

struct Dpll {
  std::vector<std::pair<Clause, Side>> input;
  std::vector<F> vars;                       // literal bodies other than Bot
  std::map<F, int> val;                      // 0 false, 1 true; absent: unassigned
  std::map<std::size_t, int> made;           // input index -> node id
  ResolutionProof rp;

  // -1 false, 1 true, 0 open
  int value(const Literal& l) const {
    if (l.body->op == Op::Bot) return l.negative ? 1 : -1;
    auto it = val.find(l.body);
    if (it == val.end()) return 0;
    bool t = it->second == 1;
    return (t != l.negative) ? 1 : -1;
  }

  // returns node id of a clause falsified by val, or -1 with val extended to a model
  int search() {
    std::optional<F> unit, open;
    for (std::size_t i = 0; i < input.size(); ++i) {
      const Clause& c = input[i].first;
      bool sat = false;
      int nopen = 0;
      F last = nullptr;
      for (const auto& l : c) {
        int v = value(l);
        if (v == 1) {
          sat = true;
          break;
        }
        if (v == 0) {
          ++nopen;
          last = l.body;
        }
      }
      if (sat) continue;
      if (nopen == 0) {
        auto it = made.find(i);
        if (it != made.end()) return it->second;
        int id = rp.input(c, input[i].second);
        made[i] = id;
        return id;
      }
      if (nopen == 1 && !unit) unit = last;
      if (!open) open = last;
    }
    if (!unit && !open) return -1;
    F x = unit ? *unit : *open;
    val[x] = 1;
    int p1 = search();
    if (p1 < 0) return -1;
    if (!contains(rp.nodes[p1].clause, {true, x})) {
      val.erase(x);
      return p1;
    }
    val[x] = 0;
    int p0 = search();
    if (p0 < 0) return -1;
    val.erase(x);
    if (!contains(rp.nodes[p0].clause, {false, x})) return p0;
    return rp.resolve(p0, p1, x);
  }
};

// keep only the nodes reachable from the root, renumbered
ResolutionProof compact(const ResolutionProof& rp) {
  std::vector<char> live(rp.nodes.size(), 0);
  live[rp.root()] = 1;
  for (int i = rp.root(); i >= 0; --i) {
    if (!live[i]) continue;
    const auto& n = rp.nodes[i];
    if (n.left >= 0) live[n.left] = 1;
    if (n.right >= 0) live[n.right] = 1;
  }
  std::vector<int> map(rp.nodes.size(), -1);
  ResolutionProof out;
  for (std::size_t i = 0; i < rp.nodes.size(); ++i) {
    if (!live[i]) continue;
    ResNode n = rp.nodes[i];
    if (n.left >= 0) n.left = map[n.left];
    if (n.right >= 0) n.right = map[n.right];
    map[i] = static_cast<int>(out.nodes.size());
    out.nodes.push_back(std::move(n));
  }
  return out;
}

}  // namespace

std::variant<ResolutionProof, Satisfiable> refute(const ClauseSet& a, const ClauseSet& b) {
  Dpll d;
  for (const auto& c : a) d.input.push_back({c, Side::A});
  for (const auto& c : b) d.input.push_back({c, Side::B});
  int root = d.search();
  if (root < 0) {
    Satisfiable s;
    for (const auto& [c, side] : d.input)
      for (const auto& l : c)
        if (l.body->op == Op::Atom) s.model[l.body->name] = false;
    for (auto [x, v] : d.val)
      if (x->op == Op::Atom) s.model[x->name] = v == 1;
    return s;
  }
  // the root is the last node created, since every resolvent is built after its premises
  d.rp.nodes.resize(root + 1);
  return compact(d.rp);
}

std::variant<ResolutionProof, Satisfiable> refute(const ClauseSet& cs) { return refute(cs, {}); }

F interpolant_from_refutation(const ResolutionProof& rp, const Partition& part) {
  auto in = [](const std::set<std::string>& s, const std::string& k) { return s.count(k) > 0; };
  std::vector<F> itp(rp.nodes.size());
  for (std::size_t i = 0; i < rp.nodes.size(); ++i) {
    const ResNode& n = rp.nodes[i];
    switch (n.kind) {
      case ResNode::Input: {
        for (const auto& k : keys(n.clause)) {
          bool ok = in(part.shared, k) || in(n.side == Side::A ? part.a_local : part.b_local, k);
          if (!ok) throw PartitionMismatch("node " + std::to_string(i) + ": " + k + " not allowed on its side");
        }
        itp[i] = n.side == Side::A ? bot() : top();
        break;
      }
      case ResNode::Res: {
        std::string k = key(n.pivot);
        F x = itp[n.left], y = itp[n.right];
        if (in(part.shared, k))
          itp[i] = sel(n.pivot, x, y);
        else if (in(part.a_local, k))
          itp[i] = disj(x, y);
        else if (in(part.b_local, k))
          itp[i] = conj(x, y);
        else
          throw PartitionMismatch("node " + std::to_string(i) + ": pivot " + k + " not in partition");
        break;
      }
      case ResNode::Weak: itp[i] = itp[n.left]; break;
    }
  }
  return itp.back();
}

F interpolant_from_refutation(const ResolutionProof& rp) { return interpolant_from_refutation(rp, partition_of(rp)); }

std::string print_refutation(const ResolutionProof& rp) {
  std::ostringstream out;
  for (std::size_t i = 0; i < rp.nodes.size(); ++i) {
    const ResNode& n = rp.nodes[i];
    out << i << ": ";
    switch (n.kind) {
      case ResNode::Input: out << "INPUT " << (n.side == Side::A ? "A" : "B") << " {" << (n.clause.empty() ? "" : str(n.clause)) << "}"; break;
      case ResNode::Res: out << "RES " << n.left << " " << n.right << " " << str(n.pivot); break;
      case ResNode::Weak: out << "WEAK " << n.left << " {" << (n.added.empty() ? "" : str(n.added)) << "}"; break;
    }
    out << "\n";
  }
  return out.str();
}

namespace {
Clause parse_braced(const std::string& s, int lineno) {
  auto a = s.find('{'), b = s.rfind('}');
  if (a == std::string::npos || b == std::string::npos || b < a) throw ParseError("expected {literals}", lineno, 1);
  std::string inner = s.substr(a + 1, b - a - 1);
  if (inner.find_first_not_of(" \t") == std::string::npos) return {};
  ClauseSet cs = parse_clause_set(inner);
  if (cs.size() != 1) throw ParseError("expected one clause", lineno, 1);
  return cs[0];
}
}  // namespace

ResolutionProof parse_refutation(const std::string& text) {
  ResolutionProof rp;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::istringstream ls(line);
    std::string idtok, kind;
    ls >> idtok >> kind;
    if (idtok.empty() || idtok.back() != ':') throw ParseError("expected 'id:'", lineno, 1);
    int id = std::stoi(idtok.substr(0, idtok.size() - 1));
    if (id != static_cast<int>(rp.nodes.size())) throw ParseError("node ids must be consecutive from 0", lineno, 1);
    auto premise = [&](int p) {
      if (p < 0 || p >= id) throw ParseError("premise does not precede node", lineno, 1);
      return p;
    };
    if (kind == "INPUT") {
      std::string side;
      ls >> side;
      if (side != "A" && side != "B") throw ParseError("side must be A or B", lineno, 1);
      rp.input(parse_braced(line, lineno), side == "A" ? Side::A : Side::B);
    } else if (kind == "RES") {
      int l, r;
      std::string pv;
      if (!(ls >> l >> r >> pv)) throw ParseError("expected RES l r pivot", lineno, 1);
      std::string rest;
      std::getline(ls, rest);
      F p = parse_formula(pv + rest);
      if (p->op != Op::Atom && p->op != Op::Box) throw ParseError("pivot must be an atom", lineno, 1);
      rp.resolve(premise(l), premise(r), p);
    } else if (kind == "WEAK") {
      int p;
      if (!(ls >> p)) throw ParseError("expected WEAK p {lits}", lineno, 1);
      rp.weaken(premise(p), parse_braced(line, lineno));
    } else {
      throw ParseError("unknown node kind " + kind, lineno, 1);
    }
  }
  return rp;
}

}  // namespace itp
