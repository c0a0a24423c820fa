#ifndef CANCELAB_GROEBNER_HPP
#define CANCELAB_GROEBNER_HPP

#include <optional>

#include "cancelab/modgb.hpp"

namespace cancelab {

struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;  // nonzero

  static Ideal make(const RingPtr& ring, std::vector<Polynomial> gens);
  bool is_zero() const { return gens.empty(); }
  std::string str() const;
};

struct MembershipCertificate {
  bool member = false;
  std::vector<Polynomial> cofactors;  // f = sum cofactors[i] * I.gens[i]
};

class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const Ideal& source() const { return source_; }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool is_unit_ideal() const;
  std::string str() const;

  friend GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order,
                                  const Limits& lim);
  friend MembershipCertificate ideal_member(const Polynomial& f,
                                            const GroebnerBasis& G);

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  Ideal source_;
  ModuleGB gb_;  // rank-1 engine state, keeps cofactor bookkeeping
};

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order,
                         const Limits& lim);
GroebnerBasis buchberger(const Ideal& I);

MembershipCertificate ideal_member(const Polynomial& f, const GroebnerBasis& G);
MembershipCertificate ideal_member(const Polynomial& f, const Ideal& I);

bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

// Krull dimension of R/I via independent variable sets modulo the
// leading-term ideal; I = (1) gives -1, I = 0 gives #vars.
int krull_dim(const GroebnerBasis& G);
int krull_dim(const Ideal& I);

// smallest m <= bound with f^m in I, if any
std::optional<int> power_in_ideal(const Polynomial& f, const GroebnerBasis& G,
                                  int bound);
std::optional<int> power_in_ideal(const Polynomial& f, const Ideal& I, int bound);

// I + J as an ideal
Ideal ideal_sum(const Ideal& a, const Ideal& b);

}  // namespace cancelab

#endif
