#ifndef CANCELAB_POLYNOMIAL_HPP
#define CANCELAB_POLYNOMIAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cancelab/field.hpp"

namespace cancelab {

struct Monomial {
  std::vector<int> e;  // one exponent per ring variable

  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (int x : e) if (x != 0) return false;
    return true;
  }
  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }
  Monomial operator/(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
  }
  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }
  static Monomial one(size_t nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i)
      if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }
};

struct MonomialOrder {
  enum class Kind { Lex, Grevlex, Block };
  Kind kind = Kind::Grevlex;
  int split = 0;  // Block: variables [0, split) form the dominant block

  // <0, 0, >0 like strcmp; compares a vs b
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::Block || split == o.split);
  }
  std::string text() const;
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder block(int split) { return {Kind::Block, split}; }
  static MonomialOrder parse(const std::string& s);
};

struct RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

struct RingDescriptor {
  FieldPtr field;
  std::vector<std::string> vars;
  MonomialOrder order;  // storage/default order

  static RingPtr make(FieldPtr field, std::vector<std::string> vars,
                      MonomialOrder order = MonomialOrder::grevlex());
  // "QQ[x,y,z,t]" etc.; implemented in parser.cpp
  static RingPtr parse(const std::string& text,
                       MonomialOrder order = MonomialOrder::grevlex());

  size_t nvars() const { return vars.size(); }
  int var_index(const std::string& name) const;  // -1 when absent
  std::string text() const;
  // same ring with one extra variable appended
  static RingPtr append_variable(const RingPtr& r, const std::string& name);
  // same ring with the last variable removed
  static RingPtr drop_last_variable(const RingPtr& r);
};

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  FieldElement coeff;
};

// Terms sorted strictly descending under the ring's order; no zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const RingPtr& r) { return Polynomial(r); }
  static Polynomial constant(const RingPtr& r, const FieldElement& c);
  static Polynomial from_int(const RingPtr& r, long n);
  static Polynomial variable(const RingPtr& r, size_t index, int power = 1);
  static Polynomial from_term(const RingPtr& r, Monomial m, FieldElement c);
  // terms in arbitrary order, merged and canonicalized
  static Polynomial from_terms(const RingPtr& r, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
  }
  // nonzero constant
  bool is_unit() const { return !is_zero() && is_constant(); }
  int degree() const;  // -1 for zero

  const Term& leading_term() const;  // under the ring order
  Term leading_term(const MonomialOrder& order) const;
  FieldElement constant_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scale(const FieldElement& c) const;
  Polynomial mult_term(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(unsigned n) const;
  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  // substitute a polynomial for variable `var`; result in the same ring
  Polynomial substitute(size_t var, const Polynomial& value) const;
  // reinterpret in `target` ring by variable-name lookup; fails if a
  // variable with nonzero exponent is absent from the target
  Polynomial transport(const RingPtr& target) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  void normalize();  // sort desc, merge, drop zeros
  friend Polynomial add_impl(const Polynomial& f, const Polynomial& g, bool negate);
};

// f = sum q_i g_i + r, no term of r divisible by any lead monomial of g_i;
// first matching divisor wins (input order).
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
DivisionResult multivariate_division(const Polynomial& f,
                                     const std::vector<Polynomial>& divisors,
                                     const MonomialOrder& order);
DivisionResult multivariate_division(const Polynomial& f,
                                     const std::vector<Polynomial>& divisors);

// exact division; nullopt if g does not divide f
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace cancelab

#endif
