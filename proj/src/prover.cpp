#include "itp/prover.hpp"

#include <algorithm>
#include <sstream>

namespace itp {

namespace {

struct Out {
  P proof;
  std::optional<Kripke> cm;
};

Kripke single_world(const Sequent& g) {
  Kripke m;
  m.succ.push_back({});
  m.val.emplace_back();
  for (const auto& o : g)
    if (is_ante(o.comp) && o.f->op == Op::Atom) m.val[0][o.f->name] = true;
  return m;
}

Sequent replace_with(const Sequent& g, int id, const std::vector<Occ>& put) {
  Sequent out;
  for (const auto& o : g) {
    if (o.id == id)
      out.insert(out.end(), put.begin(), put.end());
    else
      out.push_back(o);
  }
  return out;
}

std::string branch_key(const Sequent& g) {
  std::set<std::string> a, s;
  for (const auto& o : g) (is_ante(o.comp) ? a : s).insert(str(o.f));
  std::string k;
  for (const auto& x : a) k += x + ",";
  k += "=>";
  for (const auto& x : s) k += x + ",";
  return k;
}

struct Search {
  System sys;
  bool use_k, use_d, use_4, use_t;
  std::vector<std::string> history;

  explicit Search(System s)
      : sys(s),
        use_k(allows_rule(s, Rule::K) && is_modal(s)),
        use_d(allows_rule(s, Rule::D) && is_modal(s)),
        use_4(allows_rule(s, Rule::Four) && is_modal(s)),
        use_t(allows_rule(s, Rule::T) && is_modal(s)) {}

  Out run(const Sequent& g, const std::set<F>& unfolded) {
    // axioms
    for (const auto& o : g)
      if (is_ante(o.comp) && o.f == bot()) return {weaken_with(bot_ax(o.comp, o.id), g), {}};
    for (const auto& a : g) {
      if (!is_ante(a.comp) || (a.f->op != Op::Atom && a.f->op != Op::Box)) continue;
      for (const auto& s : g)
        if (!is_ante(s.comp) && s.f == a.f) return {weaken_with(ax(a.f, a.comp, s.comp, a.id, s.id), g), {}};
    }
    // non-branching rules, then branching ones
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& o : g) {
        F f = o.f;
        bool ante = is_ante(o.comp);
        if (f->op == Op::Neg && pass == 0) {
          int a = fresh_id();
          Out r = run(replace_with(g, o.id, {{a, f->l, flip(o.comp)}}), unfolded);
          if (!r.proof) return r;
          return {ante ? neg_l(r.proof, a, o.id) : neg_r(r.proof, a, o.id), {}};
        }
        bool split = (f->op == Op::And && ante) || (f->op == Op::Or && !ante);
        if (split && pass == 0) {
          int a = fresh_id(), b = fresh_id();
          Out r = run(replace_with(g, o.id, {{a, f->l, o.comp}, {b, f->r, o.comp}}), unfolded);
          if (!r.proof) return r;
          int x1 = fresh_id(), x2 = fresh_id();
          P p = r.proof;
          if (ante) {
            p = and_l(p, a, f->r, true, x1);
            p = and_l(p, b, f->l, false, x2);
          } else {
            p = or_r(p, a, f->r, true, x1);
            p = or_r(p, b, f->l, false, x2);
          }
          return {contract(p, x1, x2, o.id), {}};
        }
        bool branch = (f->op == Op::And && !ante) || (f->op == Op::Or && ante);
        if (branch && pass == 1) {
          int a = fresh_id(), b = fresh_id();
          Out l = run(replace_with(g, o.id, {{a, f->l, o.comp}}), unfolded);
          if (!l.proof) return l;
          Out r = run(replace_with(g, o.id, {{b, f->r, o.comp}}), unfolded);
          if (!r.proof) return r;
          return {ante ? or_l(l.proof, r.proof, a, b, o.id) : and_r(l.proof, r.proof, a, b, o.id), {}};
        }
      }
    }
    if (!is_modal(sys)) return {nullptr, single_world(g)};
    return modal(g, unfolded);
  }

  Out modal(const Sequent& g, const std::set<F>& unfolded) {
    if (use_t) {
      for (const auto& o : g) {
        if (!is_ante(o.comp) || o.f->op != Op::Box || unfolded.count(o.f->l)) continue;
        std::set<F> u = unfolded;
        u.insert(o.f->l);
        int x = fresh_id(), b = fresh_id();
        Out r = run(replace_with(g, o.id, {{x, o.f, o.comp}, {b, o.f->l, o.comp}}), u);
        if (!r.proof) return {nullptr, std::nullopt};
        int y = fresh_id();
        return {contract(t_rule(r.proof, b, y), x, y, o.id), {}};
      }
    }
    std::string key = branch_key(g);
    if (use_4) {
      if (std::find(history.begin(), history.end(), key) != history.end()) return {nullptr, std::nullopt};
    }
    history.push_back(key);
    struct Pop {
      std::vector<std::string>& h;
      ~Pop() { h.pop_back(); }
    } pop{history};

    std::vector<Occ> boxed;
    for (const auto& o : g)
      if (is_ante(o.comp) && o.f->op == Op::Box) boxed.push_back(o);
    bool complete_model = sys == System::K;
    Kripke model = single_world(g);
    for (const auto& s : g) {
      if (is_ante(s.comp) || s.f->op != Op::Box) continue;
      Sequent prem;
      std::vector<std::pair<int, int>> pairs;
      for (const auto& b : boxed) {
        int gi = fresh_id();
        prem.push_back({gi, b.f->l, b.comp});
        if (use_4) {
          int bi = fresh_id();
          prem.push_back({bi, b.f, b.comp});
          pairs.push_back({gi, bi});
        }
      }
      int a = fresh_id();
      prem.push_back({a, s.f->l, s.comp});
      Out r = run(prem, {});
      if (r.proof) {
        P p = use_4 ? four_rule(r.proof, pairs) : k_rule(r.proof);
        return {weaken_with(p, g), {}};
      }
      if (r.cm) {
        int off = static_cast<int>(model.succ.size());
        for (std::size_t w = 0; w < r.cm->succ.size(); ++w) {
          std::vector<int> ss;
          for (int v : r.cm->succ[w]) ss.push_back(v + off);
          model.succ.push_back(ss);
          model.val.push_back(r.cm->val[w]);
        }
        model.succ[0].push_back(off);
      } else {
        complete_model = false;
      }
    }
    if (use_d) {
      Sequent prem;
      for (const auto& b : boxed) prem.push_back({fresh_id(), b.f->l, b.comp});
      Out r = run(prem, {});
      if (r.proof) return {weaken_with(d_rule(r.proof), g), {}};
    }
    if (complete_model) return {nullptr, model};
    return {nullptr, std::nullopt};
  }
};

void fill_atoms(Kripke& m, const std::set<std::string>& atoms) {
  for (auto& v : m.val)
    for (const auto& a : atoms)
      if (!v.count(a)) v[a] = false;
}

// put the end-sequent back in the caller's order
P reorder(const P& p, const Sequent& order) {
  Sequent s;
  for (const auto& o : order) s.push_back(get(p->concl, o.id));
  return make_node(p->rule, s, p->kids, p->main, p->aux, p->links);
}

}  // namespace

ProveResult prove_cutfree(const Sequent& s, System sys) {
  Search search(sys);
  Out r = search.run(s, {});
  ProveResult out;
  if (r.proof) {
    out.proof = reorder(r.proof, s);
    return out;
  }
  if (r.cm) {
    std::vector<F> fs;
    for (const auto& o : s) fs.push_back(o.f);
    fill_atoms(*r.cm, vars(fs));
    out.countermodel = r.cm;
  }
  return out;
}

P prove_or_throw(const Sequent& s, System sys) {
  ProveResult r = prove_cutfree(s, sys);
  if (!r.proof) throw NotProvable("not provable in " + system_name(sys) + ": " + print_sequent(s), r.countermodel);
  return r.proof;
}

Sequent split_sequent(const std::vector<F>& g1, const std::vector<F>& g2, const std::vector<F>& d1, const std::vector<F>& d2) {
  Sequent s;
  for (F f : g1) s.push_back({fresh_id(), f, Comp::G1});
  for (F f : g2) s.push_back({fresh_id(), f, Comp::G2});
  for (F f : d1) s.push_back({fresh_id(), f, Comp::D1});
  for (F f : d2) s.push_back({fresh_id(), f, Comp::D2});
  return s;
}

bool provable(F a, F b, System sys) {
  if (!is_modal(sys)) return entails(a, b);
  return prove_cutfree(split_sequent({a}, {}, {}, {b}), sys).proof != nullptr;
}

std::string print_countermodel(const Kripke& m) {
  std::ostringstream out;
  for (std::size_t w = 0; w < m.val.size(); ++w) {
    out << "world " << w << ":";
    for (const auto& [a, v] : m.val[w]) out << " " << a << "=" << (v ? 1 : 0);
    if (!m.succ[w].empty()) {
      out << " ->";
      for (int s : m.succ[w]) out << " " << s;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace itp
