#include "cancelab/modgb.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace cancelab {

Limits& default_limits() {
  static Limits lim;
  return lim;
}

namespace {

struct Work {
  const RingPtr& ring;
  const ModuleOrder& order;
  const Limits& lim;
  unsigned long steps = 0;

  void tick() {
    if (++steps > lim.max_steps)
      throw ResourceLimitError("reduction step cap exceeded");
  }
  void check_degree(const VecPoly& v) {
    if (vp_degree(v) > lim.max_degree)
      throw ResourceLimitError("intermediate degree cap exceeded");
  }

  // Reduce f (and its cofactor in parallel) by basis; full normal form.
  void reduce(VecPoly& f, VecPoly& cof, const std::vector<GBElement>& basis,
              std::vector<Polynomial>* quotients = nullptr) {
    VecPoly rem = vp_zero(ring, f.size());
    while (!vp_is_zero(f)) {
      ModTerm lt = vp_leading_term(f, order);
      bool hit = false;
      for (size_t i = 0; i < basis.size(); ++i) {
        const GBElement& g = basis[i];
        if (g.lead.comp != lt.comp || !g.lead.mono.divides(lt.mono)) continue;
        tick();
        Monomial m = lt.mono / g.lead.mono;
        FieldElement c = lt.coeff / g.lead.coeff;
        f = vp_sub(f, vp_mult_term(g.v, m, c));
        if (!cof.empty()) cof = vp_sub(cof, vp_mult_term(g.cofactor, m, c));
        if (quotients)
          (*quotients)[i] = (*quotients)[i] + Polynomial::from_term(ring, m, c);
        hit = true;
        break;
      }
      if (!hit) {
        tick();
        Polynomial t = Polynomial::from_term(ring, lt.mono, lt.coeff);
        rem[lt.comp] = rem[lt.comp] + t;
        f[lt.comp] = f[lt.comp] - t;
      }
    }
    f = std::move(rem);
  }
};

bool single_component(const VecPoly& v, size_t comp) {
  for (size_t i = 0; i < v.size(); ++i)
    if (i != comp && !v[i].is_zero()) return false;
  return true;
}

}  // namespace

ModuleGB module_groebner(const RingPtr& ring, size_t rank,
                         const std::vector<VecPoly>& gens,
                         const ModuleOrder& order, const Limits& lim) {
  ModuleGB out;
  out.ring_ = ring;
  out.rank_ = rank;
  out.ngens_ = gens.size();
  out.order_ = order;

  Work w{ring, order, lim};
  std::vector<GBElement> basis;

  auto push_elem = [&](VecPoly v, VecPoly cof) -> bool {
    if (vp_is_zero(v)) return false;
    w.check_degree(v);
    ModTerm lt = vp_leading_term(v, order);
    // monic
    FieldElement ci = lt.coeff.inv();
    v = vp_scale(v, Polynomial::constant(ring, ci));
    cof = vp_scale(cof, Polynomial::constant(ring, ci));
    lt.coeff = fe_one(ring->field);
    basis.push_back(GBElement{std::move(v), std::move(cof), std::move(lt)});
    return true;
  };

  // seed with reduced generators
  std::set<std::tuple<int, size_t, size_t>> pairs;  // (lcm degree, i, j)
  auto add_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      if (basis[i].lead.comp != basis[j].lead.comp) continue;
      Monomial l = Monomial::lcm(basis[i].lead.mono, basis[j].lead.mono);
      pairs.insert({l.degree(), i, j});
    }
  };

  for (size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].size() != rank) throw ArithError("generator rank mismatch");
    VecPoly v = gens[k];
    VecPoly cof = vp_zero(ring, gens.size());
    cof[k] = Polynomial::from_int(ring, 1);
    w.reduce(v, cof, basis);
    if (push_elem(std::move(v), std::move(cof))) add_pairs_for(basis.size() - 1);
  }

  std::set<std::pair<size_t, size_t>> done;
  while (!pairs.empty()) {
    auto it = pairs.begin();
    auto [deg, i, j] = *it;
    (void)deg;
    pairs.erase(it);
    done.insert({i, j});

    const GBElement& f = basis[i];
    const GBElement& g = basis[j];
    Monomial l = Monomial::lcm(f.lead.mono, g.lead.mono);

    // product criterion: sound for polynomial data (single-component support)
    if (Monomial::coprime(f.lead.mono, g.lead.mono) &&
        single_component(f.v, f.lead.comp) && single_component(g.v, g.lead.comp))
      continue;
    // chain criterion
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (basis[k].lead.comp != f.lead.comp) continue;
      if (!basis[k].lead.mono.divides(l)) continue;
      auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
      if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second}))
        skip = true;
    }
    if (skip) continue;

    Monomial mf = l / f.lead.mono, mg = l / g.lead.mono;
    FieldElement one = fe_one(ring->field);
    VecPoly s = vp_sub(vp_mult_term(f.v, mf, one),
                       vp_mult_term(g.v, mg, f.lead.coeff / g.lead.coeff));
    VecPoly sc = vp_sub(vp_mult_term(f.cofactor, mf, one),
                        vp_mult_term(g.cofactor, mg, f.lead.coeff / g.lead.coeff));
    w.check_degree(s);
    w.reduce(s, sc, basis);
    if (push_elem(std::move(s), std::move(sc))) add_pairs_for(basis.size() - 1);
  }

  // minimalize: drop elements whose lead is divisible by another's
  std::vector<bool> keep(basis.size(), true);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (basis[j].lead.comp != basis[i].lead.comp) continue;
      if (!basis[j].lead.mono.divides(basis[i].lead.mono)) continue;
      if (basis[j].lead.mono == basis[i].lead.mono && j > i) continue;
      keep[i] = false;
      break;
    }
  }
  std::vector<GBElement> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // tail-reduce each element against the others
  std::vector<GBElement> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GBElement> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    VecPoly v = minimal[i].v;
    VecPoly cof = minimal[i].cofactor;
    w.reduce(v, cof, others);
    if (vp_is_zero(v)) continue;  // redundant generator
    ModTerm lt = vp_leading_term(v, order);
    FieldElement ci = lt.coeff.inv();
    v = vp_scale(v, Polynomial::constant(ring, ci));
    cof = vp_scale(cof, Polynomial::constant(ring, ci));
    lt.coeff = fe_one(ring->field);
    reduced.push_back(GBElement{std::move(v), std::move(cof), std::move(lt)});
  }

  std::sort(reduced.begin(), reduced.end(), [&](const GBElement& a, const GBElement& b) {
    return order.compare(a.lead.comp, a.lead.mono, b.lead.comp, b.lead.mono) > 0;
  });
  out.elems_ = std::move(reduced);
  return out;
}

ModuleGB module_groebner(const RingPtr& ring, size_t rank,
                         const std::vector<VecPoly>& gens) {
  return module_groebner(ring, rank, gens, ModuleOrder::pot(ring->order),
                         default_limits());
}

VecPoly ModuleGB::normal_form(const VecPoly& f) const {
  Work w{ring_, order_, default_limits()};
  VecPoly v = f;
  VecPoly cof;
  w.reduce(v, cof, elems_);
  return v;
}

std::pair<std::vector<Polynomial>, VecPoly> ModuleGB::divide(const VecPoly& f) const {
  Work w{ring_, order_, default_limits()};
  VecPoly v = f;
  VecPoly cof;
  std::vector<Polynomial> q(elems_.size(), Polynomial::zero(ring_));
  w.reduce(v, cof, elems_, &q);
  return {std::move(q), std::move(v)};
}

bool ModuleGB::contains(const VecPoly& f) const { return vp_is_zero(normal_form(f)); }

std::optional<std::vector<Polynomial>> ModuleGB::member(const VecPoly& f) const {
  auto [q, r] = divide(f);
  if (!vp_is_zero(r)) return std::nullopt;
  std::vector<Polynomial> h(ngens_, Polynomial::zero(ring_));
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (q[i].is_zero()) continue;
    for (size_t j = 0; j < ngens_; ++j)
      if (!elems_[i].cofactor[j].is_zero())
        h[j] = h[j] + q[i] * elems_[i].cofactor[j];
  }
  return h;
}

bool ModuleGB::is_full_module() const {
  for (size_t i = 0; i < rank_; ++i)
    if (!contains(vp_unit(ring_, rank_, i))) return false;
  return true;
}

std::vector<VecPoly> syzygy_columns(const RingPtr& ring, size_t rank,
                                    const std::vector<VecPoly>& gens,
                                    const Limits& lim) {
  size_t k = gens.size();
  std::vector<VecPoly> embedded;
  embedded.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    VecPoly v = vp_zero(ring, rank + k);
    for (size_t c = 0; c < rank; ++c) v[c] = gens[i][c];
    v[rank + i] = Polynomial::from_int(ring, 1);
    embedded.push_back(std::move(v));
  }
  ModuleGB gb = module_groebner(ring, rank + k, embedded,
                                ModuleOrder::pot(ring->order), lim);
  std::vector<VecPoly> syz;
  for (const auto& e : gb.elems()) {
    bool first_block_zero = true;
    for (size_t c = 0; c < rank && first_block_zero; ++c)
      if (!e.v[c].is_zero()) first_block_zero = false;
    if (!first_block_zero) continue;
    VecPoly col(e.v.begin() + static_cast<long>(rank), e.v.end());
    syz.push_back(std::move(col));
  }
  return syz;
}

std::vector<VecPoly> syzygy_columns(const RingPtr& ring, size_t rank,
                                    const std::vector<VecPoly>& gens) {
  return syzygy_columns(ring, rank, gens, default_limits());
}

}  // namespace cancelab
