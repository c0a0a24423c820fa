#include "cancelab/groebner.hpp"

#include <sstream>

namespace cancelab {

Ideal Ideal::make(const RingPtr& ring, std::vector<Polynomial> gens) {
  for (const auto& g : gens) {
    if (!same_ring(ring, g.ring())) throw ArithError("ideal generator ring mismatch");
    if (g.is_zero()) throw ArithError("ideal generators must be nonzero");
  }
  return Ideal{ring, std::move(gens)};
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].str();
  }
  os << ")";
  return os.str();
}

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order,
                         const Limits& lim) {
  if (I.is_zero()) throw ArithError("buchberger: zero ideal");
  RingPtr ring = I.ring;
  if (!(order == ring->order))
    ring = RingDescriptor::make(ring->field, ring->vars, order);
  std::vector<VecPoly> gens;
  gens.reserve(I.gens.size());
  for (const auto& g : I.gens) gens.push_back({g.transport(ring)});

  GroebnerBasis G;
  G.ring_ = ring;
  G.order_ = order;
  G.source_ = I;
  G.gb_ = module_groebner(ring, 1, gens, ModuleOrder::pot(order), lim);
  for (const auto& e : G.gb_.elems()) G.basis_.push_back(e.v[0]);
  return G;
}

GroebnerBasis buchberger(const Ideal& I) {
  return buchberger(I, I.ring->order, default_limits());
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  VecPoly r = gb_.normal_form({f.transport(ring_)});
  return r[0].transport(f.ring());
}

bool GroebnerBasis::is_unit_ideal() const {
  return basis_.size() == 1 && basis_[0].is_one();
}

std::string GroebnerBasis::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << ", ";
    os << basis_[i].str();
  }
  os << "}";
  return os.str();
}

MembershipCertificate ideal_member(const Polynomial& f, const GroebnerBasis& G) {
  MembershipCertificate cert;
  auto h = G.gb_.member({f.transport(G.ring())});
  if (!h) return cert;
  cert.member = true;
  cert.cofactors.reserve(h->size());
  for (auto& p : *h) cert.cofactors.push_back(p.transport(f.ring()));
  return cert;
}

MembershipCertificate ideal_member(const Polynomial& f, const Ideal& I) {
  return ideal_member(f, buchberger(I));
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!(a.order() == b.order())) throw ArithError("ideal_equal: order mismatch");
  if (a.basis().size() != b.basis().size()) return false;
  for (size_t i = 0; i < a.basis().size(); ++i)
    if (a.basis()[i] != b.basis()[i].transport(a.ring())) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring)) throw ArithError("ideal_equal: ring mismatch");
  return ideal_equal(buchberger(a), buchberger(b));
}

int krull_dim(const GroebnerBasis& G) {
  if (G.is_unit_ideal()) return -1;
  size_t n = G.ring()->nvars();
  std::vector<Monomial> leads;
  for (const auto& g : G.basis()) leads.push_back(g.leading_term().mono);
  int best = 0;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool independent = true;
    for (const auto& m : leads) {
      bool supported_inside = true;
      for (size_t i = 0; i < n && supported_inside; ++i)
        if (m.e[i] > 0 && !((mask >> i) & 1)) supported_inside = false;
      if (supported_inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcountl(mask));
  }
  return best;
}

int krull_dim(const Ideal& I) {
  if (I.is_zero()) return static_cast<int>(I.ring->nvars());
  return krull_dim(buchberger(I));
}

std::optional<int> power_in_ideal(const Polynomial& f, const GroebnerBasis& G,
                                  int bound) {
  if (bound < 1) throw ArithError("power_in_ideal: bound must be >= 1");
  Polynomial p = Polynomial::from_int(f.ring(), 1);
  for (int m = 1; m <= bound; ++m) {
    p = G.normal_form(p * f);
    if (p.is_zero()) return m;
  }
  return std::nullopt;
}

std::optional<int> power_in_ideal(const Polynomial& f, const Ideal& I, int bound) {
  return power_in_ideal(f, buchberger(I), bound);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring)) throw ArithError("ideal_sum: ring mismatch");
  auto gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return Ideal{a.ring, std::move(gens)};
}

}  // namespace cancelab
