#include "itp/exhaustive.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace itp {

namespace {

using Item = std::pair<F, Comp>;
using Key = std::vector<Item>;  // sorted

bool item_less(const Item& a, const Item& b) {
  if (a.first != b.first) return fless(a.first, b.first);
  return a.second < b.second;
}

Key normal(Key k) {
  std::sort(k.begin(), k.end(), item_less);
  return k;
}

Key without_at(const Key& k, std::size_t i) {
  Key out = k;
  out.erase(out.begin() + static_cast<long>(i));
  return out;
}

Key plus(Key k, F f, Comp c) {
  k.push_back({f, c});
  return normal(std::move(k));
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > std::numeric_limits<std::uint64_t>::max() / b ? std::numeric_limits<std::uint64_t>::max() : a * b;
}

struct Result {
  std::map<std::string, F> itps;  // class key -> representative
  std::uint64_t count = 0;
};

class Enumerator {
 public:
  Enumerator(System sys, std::vector<std::string> vs) : sys_(sys), vs_(std::move(vs)) {}

  const Result& run(const Key& k, int depth) {
    auto mk = std::make_pair(k, depth);
    auto it = memo_.find(mk);
    if (it != memo_.end()) return it->second;
    Result r;
    if (depth > 0) expand(k, depth, r);
    return memo_.emplace(mk, std::move(r)).first->second;
  }

  std::size_t states() const { return memo_.size(); }

 private:
  System sys_;
  std::vector<std::string> vs_;
  std::map<std::pair<Key, int>, Result> memo_;

  std::string class_key(F f) const {
    if (is_modal(f)) return "m" + str(f);
    Table t = truth_table(f, vs_);
    std::string s = "t";
    for (auto w : t) s += std::to_string(w) + ",";
    return s;
  }

  void add(Result& r, F f, std::uint64_t n) {
    auto key = class_key(f);
    auto it = r.itps.find(key);
    if (it == r.itps.end() || fless(f, it->second)) r.itps[key] = f;
    r.count = sat_add(r.count, n);
  }

  void unary(Result& r, const Key& prem, int depth, const std::function<F(F)>& g = nullptr) {
    const Result& p = run(prem, depth - 1);
    if (p.count == 0) return;
    bool first = true;
    for (const auto& [key, f] : p.itps) {
      add(r, g ? g(f) : f, first ? p.count : 0);
      first = false;
    }
  }

  void binary(Result& r, const Key& a, const Key& b, int depth, bool side1) {
    const Result& pa = run(a, depth - 1);
    if (pa.count == 0) return;
    const Result& pb = run(b, depth - 1);
    if (pb.count == 0) return;
    bool first = true;
    for (const auto& [ka, fa] : pa.itps)
      for (const auto& [kb, fb] : pb.itps) {
        add(r, side1 ? disj(fa, fb) : conj(fa, fb), first ? sat_mul(pa.count, pb.count) : 0);
        first = false;
      }
  }

  void expand(const Key& k, int depth, Result& r) {
    // axioms
    if (k.size() == 2) {
      const Item *a = &k[0], *s = &k[1];
      if (!is_ante(a->second)) std::swap(a, s);
      if (a->first == s->first && is_ante(a->second) && !is_ante(s->second)) {
        int sa = side_of(a->second), ss = side_of(s->second);
        F f = sa == 1 && ss == 1 ? bot() : sa == 2 && ss == 2 ? top() : sa == 1 ? a->first : neg(a->first);
        add(r, f, 1);
      }
    }
    if (k.size() == 1 && k[0].first == bot() && is_ante(k[0].second)) add(r, side_of(k[0].second) == 1 ? bot() : top(), 1);

    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i > 0 && k[i] == k[i - 1]) continue;  // same rule instances
      auto [f, c] = k[i];
      bool ante = is_ante(c);
      Key rest = without_at(k, i);
      if (!rest.empty()) unary(r, rest, depth);
      unary(r, plus(k, f, c), depth);
      switch (f->op) {
        case Op::Neg: unary(r, plus(rest, f->l, flip(c)), depth); break;
        case Op::And:
          if (ante) {
            unary(r, plus(rest, f->l, c), depth);
            unary(r, plus(rest, f->r, c), depth);
          } else {
            binary(r, plus(rest, f->l, c), plus(rest, f->r, c), depth, side_of(c) == 1);
          }
          break;
        case Op::Or:
          if (!ante) {
            unary(r, plus(rest, f->l, c), depth);
            unary(r, plus(rest, f->r, c), depth);
          } else {
            binary(r, plus(rest, f->l, c), plus(rest, f->r, c), depth, side_of(c) == 1);
          }
          break;
        default: break;
      }
    }
    if (sys_ == System::K) k_step(k, depth, r);
  }

  // []G => []A read backwards
  void k_step(const Key& k, int depth, Result& r) {
    int succ = -1;
    Key prem;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i].first->op != Op::Box) return;
      if (!is_ante(k[i].second)) {
        if (succ >= 0) return;
        succ = static_cast<int>(i);
      }
      prem.push_back({k[i].first->l, k[i].second});
    }
    if (succ < 0) return;
    bool side2 = side_of(k[succ].second) == 2;
    unary(r, normal(prem), depth, [&](F f) { return side2 ? box(f) : neg(box(neg(f))); });
  }
};

}  // namespace

CutfreeEnum enumerate_cutfree(const Sequent& s, System sys, int depth) {
  if (sys != System::LKminus && sys != System::LK && sys != System::K)
    throw std::invalid_argument("enumerate_cutfree: lk-minus, lk or k only");
  Key k;
  for (const auto& o : s) k.push_back({o.f, o.comp});
  std::set<std::string> vs;
  for (const auto& o : s) {
    auto v = vars(o.f);
    vs.insert(v.begin(), v.end());
  }
  Enumerator e(sys, std::vector<std::string>(vs.begin(), vs.end()));
  const Result& r = e.run(normal(k), depth);
  CutfreeEnum out;
  for (const auto& [key, f] : r.itps) out.interpolants.push_back(f);
  std::sort(out.interpolants.begin(), out.interpolants.end(), fless);
  out.proofs = r.count;
  out.states = e.states();
  return out;
}

namespace {

struct Tree {
  Clause clause;
  int input = -1;  // index into the inputs, or -1
  Side side = Side::A;
  std::shared_ptr<Tree> l, r;
  F pivot = nullptr;
  int size = 1;
};
using T = std::shared_ptr<Tree>;

int emit(const Tree& t, ResolutionProof& rp) {
  if (!t.l) return rp.input(t.clause, t.side);
  int a = emit(*t.l, rp), b = emit(*t.r, rp);
  return rp.resolve(a, b, t.pivot);
}

}  // namespace

RefutationEnum enumerate_refutations(const ClauseSet& a, const ClauseSet& b, int max_nodes) {
  std::vector<std::vector<T>> by_size(max_nodes + 1);
  for (const auto& c : a) by_size[1].push_back(std::make_shared<Tree>(Tree{c, 0, Side::A, nullptr, nullptr, nullptr, 1}));
  for (const auto& c : b) by_size[1].push_back(std::make_shared<Tree>(Tree{c, 0, Side::B, nullptr, nullptr, nullptr, 1}));
  for (int n = 3; n <= max_nodes; ++n)
    for (int i = 1; i < n - 1; ++i)
      for (const T& x : by_size[i])
        for (const T& y : by_size[n - 1 - i])
          for (const auto& l : x->clause) {
            if (l.negative) continue;
            if (!contains(y->clause, l.dual())) continue;
            Clause c;
            for (const auto& m : x->clause)
              if (!(m == l)) c.push_back(m);
            for (const auto& m : y->clause)
              if (!(m == l.dual())) c.push_back(m);
            by_size[n].push_back(std::make_shared<Tree>(Tree{make_clause(c), -1, Side::A, x, y, l.body, n}));
          }
  RefutationEnum out;
  for (const auto& level : by_size)
    for (const T& t : level) {
      if (!t->clause.empty()) continue;
      ResolutionProof rp;
      emit(*t, rp);
      out.interpolants.push_back(interpolant_from_refutation(rp));
      out.refutations.push_back(std::move(rp));
    }
  return out;
}

}  // namespace itp
