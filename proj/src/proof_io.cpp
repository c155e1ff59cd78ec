#include "itp/sequent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace itp {

namespace {

const Comp kComps[] = {Comp::G1, Comp::G2, Comp::D1, Comp::D2};

Sequent grouped(const Sequent& s) {
  Sequent out;
  for (Comp c : kComps)
    for (const auto& o : s)
      if (o.comp == c) out.push_back(o);
  return out;
}

// premise occurrences in print order: context by the parent's order, then
// linked ones by the position of their target, then auxiliaries
Sequent kid_order(const Node& n, int k, const Sequent& parent) {
  const Sequent& ks = n.kids[k]->concl;
  Sequent out;
  std::set<int> done;
  for (const auto& o : parent) {
    const Occ* c = find(ks, o.id);
    if (c && o.id != n.main) {
      out.push_back(*c);
      done.insert(o.id);
    }
  }
  for (const auto& o : parent)
    for (const auto& l : n.links)
      if (l.kid == k && l.to == o.id && !done.count(l.from)) {
        out.push_back(get(ks, l.from));
        done.insert(l.from);
      }
  for (const auto& a : n.aux)
    if (a.kid == k && !done.count(a.id)) {
      out.push_back(get(ks, a.id));
      done.insert(a.id);
    }
  for (const auto& o : ks)
    if (!done.count(o.id)) out.push_back(o);
  return grouped(out);
}

void print_rec(const Node& n, const Sequent& order, std::string& out) {
  out += '(';
  out += rule_name(n.rule);
  out += " \"" + print_sequent(order) + "\" ";
  int idx = -1;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i].id == n.main) idx = static_cast<int>(i);
  out += std::to_string(idx);
  for (std::size_t k = 0; k < n.kids.size(); ++k) {
    out += ' ';
    print_rec(*n.kids[k], kid_order(n, static_cast<int>(k), order), out);
  }
  out += ')';
}

struct Raw {
  Rule rule;
  Sequent seq;
  int main;
  std::vector<Raw> kids;
};

struct Reader {
  const std::string& s;
  std::size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& m) {
    int line = 1, col = 1;
    for (std::size_t j = 0; j < i && j < s.size(); ++j) {
      if (s[j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(m, line, col);
  }
  Raw node() {
    ws();
    if (i >= s.size() || s[i] != '(') fail("expected '('");
    ++i;
    ws();
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '"') ++j;
    auto r = rule_from_name(s.substr(i, j - i));
    if (!r) fail("unknown rule '" + s.substr(i, j - i) + "'");
    i = j;
    ws();
    if (i >= s.size() || s[i] != '"') fail("expected quoted sequent");
    std::size_t q = s.find('"', i + 1);
    if (q == std::string::npos) fail("unterminated sequent");
    Raw out{*r, grouped(parse_sequent(s.substr(i + 1, q - i - 1))), -1, {}};
    i = q + 1;
    ws();
    j = i;
    if (j < s.size() && s[j] == '-') ++j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected main occurrence index");
    out.main = std::stoi(s.substr(i, j - i));
    if (out.main < -1 || out.main >= static_cast<int>(out.seq.size())) fail("main index out of range");
    i = j;
    for (;;) {
      ws();
      if (i < s.size() && s[i] == ')') {
        ++i;
        return out;
      }
      out.kids.push_back(node());
    }
  }
};

P build(Raw& r) {
  int main = r.main >= 0 ? r.seq[r.main].id : -1;
  bool modal_k = r.rule == Rule::K || r.rule == Rule::D;
  bool linking = modal_k || r.rule == Rule::Four;
  std::vector<Aux> aux;
  std::vector<Link> links;
  std::vector<P> kids;
  for (std::size_t k = 0; k < r.kids.size(); ++k) {
    Sequent& ks = r.kids[k].seq;
    std::vector<char> used(ks.size(), 0);
    if (!modal_k) {
      for (const auto& o : r.seq) {
        if (o.id == main) continue;
        for (std::size_t j = 0; j < ks.size(); ++j)
          if (!used[j] && ks[j].f == o.f && ks[j].comp == o.comp) {
            used[j] = 1;
            ks[j].id = o.id;
            break;
          }
      }
    }
    std::set<int> linked;
    for (std::size_t j = 0; j < ks.size(); ++j) {
      if (used[j]) continue;
      if (linking && is_ante(ks[j].comp)) {
        bool hit = false;
        for (const auto& o : r.seq)
          if (o.id != main && !linked.count(o.id) && o.comp == ks[j].comp && o.f == box(ks[j].f)) {
            links.push_back({static_cast<int>(k), ks[j].id, o.id});
            linked.insert(o.id);
            hit = true;
            break;
          }
        if (!hit) throw ParseError("premise formula " + str(ks[j].f) + " has no boxed partner", 1, 1);
      } else {
        aux.push_back({static_cast<int>(k), ks[j].id});
      }
    }
    kids.push_back(build(r.kids[k]));
  }
  return make_node(r.rule, r.seq, std::move(kids), main, std::move(aux), std::move(links));
}

}  // namespace

std::string print_proof(const P& p) {
  std::string out;
  print_rec(*p, grouped(p->concl), out);
  return out;
}

P parse_proof(const std::string& text) {
  Reader rd{text};
  Raw r = rd.node();
  rd.ws();
  if (rd.i != text.size()) rd.fail("trailing input after proof");
  return build(r);
}

}  // namespace itp
