#include "rescat/groebner.hpp"

#include <algorithm>

#include "rescat/errors.hpp"

namespace rescat {

namespace {

int vec_sugar(const Vec& v, const TermOrder& ord) {
  int s = std::numeric_limits<int>::min();
  for (const Term& t : v) s = std::max(s, ord.shifted_degree(t));
  return s;
}

bool single_component(const Vec& v) {
  for (const Term& t : v)
    if (t.comp != v.front().comp) return false;
  return true;
}

// tail[off..] - c*m*g, written after the already final prefix `out`.
void reduce_step(Vec& cur, size_t off, uint32_t c, const Monomial& m, const Vec& g,
                 const TermOrder& ord) {
  const PolyRing& R = *ord.ring;
  const uint32_t nc = R.neg(c);
  Vec next;
  next.reserve(cur.size() - off + g.size());
  size_t i = off, j = 0;
  auto scaled = [&](size_t k) {
    Term t = g[k];
    t.m = R.mul(t.m, m);
    t.c = R.mul(t.c, nc);
    return t;
  };
  Term tb;
  if (j < g.size()) tb = scaled(j);
  while (i < cur.size() && j < g.size()) {
    int cv = ord.cmp(cur[i], tb);
    if (cv > 0) {
      next.push_back(cur[i++]);
    } else if (cv < 0) {
      next.push_back(tb);
      if (++j < g.size()) tb = scaled(j);
    } else {
      Term t = cur[i++];
      t.c = R.add(t.c, tb.c);
      if (t.c) next.push_back(t);
      if (++j < g.size()) tb = scaled(j);
    }
  }
  for (; i < cur.size(); ++i) next.push_back(cur[i]);
  while (j < g.size()) {
    next.push_back(tb);
    if (++j < g.size()) tb = scaled(j);
  }
  cur = std::move(next);
}

}  // namespace

GroebnerEngine::GroebnerEngine(TermOrder order) : ord_(std::move(order)) {}

void GroebnerEngine::add(Vec v) {
  normalize(v, ord_);
  if (!v.empty()) inputs_.push_back(std::move(v));
}

int GroebnerEngine::find_reducer(const Term& t, uint32_t mask) const {
  const PolyRing& R = *ord_.ring;
  for (size_t k = 0; k < elems_.size(); ++k) {
    const Elem& e = elems_[k];
    if (!e.active) continue;
    const Term& lt = e.v.front();
    if (lt.comp != t.comp || (e.mask & ~mask) != 0) continue;
    if (R.divides(lt.m, t.m)) return static_cast<int>(k);
  }
  return -1;
}

Vec GroebnerEngine::reduce_with_sugar(Vec v, int& sugar) const {
  const PolyRing& R = *ord_.ring;
  Vec out;
  while (!v.empty()) {
    const Term t = v.front();
    int r = find_reducer(t, R.divmask(t.m));
    if (r < 0) {
      out.push_back(t);
      // drop the front term without shifting on every step
      v.erase(v.begin());
      continue;
    }
    const Elem& e = elems_[r];
    Monomial u = R.div(t.m, e.v.front().m);
    sugar = std::max(sugar, e.sugar + u.deg);
    reduce_step(v, 0, t.c, u, e.v, ord_);
  }
  return out;
}

Vec GroebnerEngine::reduce(const Vec& v) const {
  Vec w = v;
  normalize(w, ord_);
  int s = 0;
  return reduce_with_sugar(std::move(w), s);
}

bool GroebnerEngine::pair_less(const Pair& a, const Pair& b) const {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  int c = ord_.cmp(a.lcm, a.comp, b.lcm, b.comp);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

Vec GroebnerEngine::spoly(const Pair& pr, int& sugar) const {
  const PolyRing& R = *ord_.ring;
  const Elem& f = elems_[pr.i];
  const Elem& g = elems_[pr.j];
  Monomial uf = R.div(pr.lcm, f.v.front().m);
  Monomial ug = R.div(pr.lcm, g.v.front().m);
  sugar = std::max(f.sugar + uf.deg, g.sugar + ug.deg);
  // both monic: drop the shared leading term
  Vec a(f.v.begin() + 1, f.v.end());
  a = mul_term(a, 1, uf, R);
  Vec b(g.v.begin() + 1, g.v.end());
  return sub_mul(a, 1, ug, b, ord_);
}

void GroebnerEngine::insert(Vec v, int sugar) {
  const PolyRing& R = *ord_.ring;
  const size_t h = elems_.size();
  const Term lh = v.front();
  Elem e;
  e.v = std::move(v);
  e.sugar = sugar;
  e.mask = R.divmask(lh.m);
  e.single = single_component(e.v);

  struct Cand {
    Pair p;
    bool coprime;
  };
  std::vector<Cand> cands;
  for (size_t g = 0; g < elems_.size(); ++g) {
    const Elem& eg = elems_[g];
    if (!eg.active || eg.v.front().comp != lh.comp) continue;
    const Monomial& lg = eg.v.front().m;
    Monomial l = R.lcm(lg, lh.m);
    int s = std::max(eg.sugar + (l.deg - lg.deg), sugar + (l.deg - lh.m.deg));
    bool cop = eg.single && e.single && R.coprime(lg, lh.m);
    cands.push_back({Pair{g, h, l, lh.comp, s}, cop});
  }

  // Gebauer-Moeller: among new pairs keep those whose lcm is not a proper
  // multiple (or a later duplicate) of another new pair's lcm.
  std::vector<char> in_d(cands.size(), 0), dropped(cands.size(), 0);
  for (size_t k = 0; k < cands.size(); ++k) {
    bool keep = cands[k].coprime;
    if (!keep) {
      keep = true;
      for (size_t l = 0; l < cands.size() && keep; ++l) {
        if (l == k || dropped[l]) continue;
        if (l < k && !in_d[l]) continue;
        if (R.divides(cands[l].p.lcm, cands[k].p.lcm)) keep = false;
      }
    }
    if (keep) {
      in_d[k] = 1;
    } else {
      dropped[k] = 1;
    }
  }

  // Old pairs whose lcm is a multiple of lt(h) become redundant.
  std::erase_if(pairs_, [&](const Pair& p) {
    if (p.comp != lh.comp || !R.divides(lh.m, p.lcm)) return false;
    Monomial l1 = R.lcm(elems_[p.i].v.front().m, lh.m);
    Monomial l2 = R.lcm(elems_[p.j].v.front().m, lh.m);
    return !(l1 == p.lcm) && !(l2 == p.lcm);
  });

  for (size_t k = 0; k < cands.size(); ++k)
    if (in_d[k] && !cands[k].coprime) pairs_.push_back(cands[k].p);

  for (Elem& g : elems_) {
    if (g.active && g.v.front().comp == lh.comp && R.divides(lh.m, g.v.front().m)) g.active = false;
  }
  elems_.push_back(std::move(e));
}

void GroebnerEngine::complete(int max_sugar) {
  const PolyRing& R = *ord_.ring;
  std::vector<Vec> inputs = std::move(inputs_);
  inputs_.clear();
  std::stable_sort(inputs.begin(), inputs.end(), [&](const Vec& a, const Vec& b) {
    return vec_sugar(a, ord_) < vec_sugar(b, ord_);
  });
  for (Vec& v : inputs) {
    int s = vec_sugar(v, ord_);
    Vec r = reduce_with_sugar(std::move(v), s);
    if (!r.empty()) insert(make_monic(r, R), s);
  }

  while (!pairs_.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pairs_.size(); ++k)
      if (pair_less(pairs_[k], pairs_[best])) best = k;
    if (pairs_[best].sugar > max_sugar) break;
    Pair pr = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();

    if (++reductions_ > limits().max_pair_reductions)
      throw ResourceError("Groebner basis computation exceeded the pair-reduction budget");

    int s = 0;
    Vec sp = spoly(pr, s);
    Vec r = reduce_with_sugar(std::move(sp), s);
    if (!r.empty()) insert(make_monic(r, R), s);
  }
}

std::vector<Term> GroebnerEngine::leading_terms() const {
  std::vector<Term> out;
  for (const Elem& e : elems_)
    if (e.active) out.push_back(e.v.front());
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ord_.cmp(a, b) < 0; });
  return out;
}

std::vector<Vec> GroebnerEngine::reduced_basis() const {
  std::vector<Vec> out;
  for (const Elem& e : elems_) {
    if (!e.active) continue;
    Vec tail(e.v.begin() + 1, e.v.end());
    int s = 0;
    Vec r = reduce_with_sugar(std::move(tail), s);
    r.insert(r.begin(), e.v.front());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [&](const Vec& a, const Vec& b) { return ord_.cmp(a.front(), b.front()) < 0; });
  return out;
}

}  // namespace rescat
