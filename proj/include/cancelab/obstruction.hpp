#ifndef CANCELAB_OBSTRUCTION_HPP
#define CANCELAB_OBSTRUCTION_HPP

#include <map>
#include <variant>

#include "cancelab/groebner.hpp"

namespace cancelab {

// k[z, z^-1]
struct LaurentPoly {
  FieldPtr k;
  std::map<long, FieldElement> c;  // exponent -> nonzero coefficient

  static LaurentPoly zero(const FieldPtr& k) { return {k, {}}; }
  static LaurentPoly term(const FieldPtr& k, long e, const FieldElement& a);
  bool is_zero() const { return c.empty(); }
  bool is_unit() const { return c.size() == 1; }
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return c == o.c; }
  std::string str(const std::string& var = "z") const;
};

// k[x]/(x^m)
struct TruncPoly {
  FieldPtr k;
  size_t m = 0;
  std::vector<FieldElement> c;  // size m, ascending

  static TruncPoly zero(const FieldPtr& k, size_t m);
  static TruncPoly constant(const FieldPtr& k, size_t m, const FieldElement& a);
  bool is_zero() const;
  bool is_constant() const;
  bool is_unit() const { return !c.empty() && !c[0].is_zero(); }
  TruncPoly operator+(const TruncPoly& o) const;
  TruncPoly operator*(const TruncPoly& o) const;
  TruncPoly pow(unsigned e) const;
  bool operator==(const TruncPoly& o) const { return c == o.c; }
  std::string str(const std::string& var = "x") const;
};

// element of one of the three recognized quotient rings
using QuotientValue = std::variant<LaurentPoly, TruncPoly, FieldElement>;

bool qv_is_unit(const QuotientValue& v);
bool qv_eq(const QuotientValue& a, const QuotientValue& b);
QuotientValue qv_mul(const QuotientValue& a, const QuotientValue& b);
QuotientValue qv_pow(const QuotientValue& a, unsigned e);
QuotientValue qv_scale(const QuotientValue& a, const FieldElement& s);
std::string qv_str(const QuotientValue& v);

// Recognized shape of R/J for the J-shapes the counterexamples produce.
struct QuotientRecognition {
  enum class Kind { Laurent, Truncated, Extension };
  Kind kind;
  RingPtr ring;
  Ideal j;

  // Laurent: variables z (image z) and t (image z^-1)
  size_t z_var = 0, t_var = 0;
  // Truncated: variable x and modulus degree m
  size_t x_var = 0;
  size_t trunc_m = 0;
  // Extension: the field L = k[x]/(p)
  FieldPtr ext_field;

  std::string describe() const;
  // image of a polynomial under the recognized map (kills other variables)
  QuotientValue eval(const Polynomial& f) const;
};

// Rejects (never guesses) shapes other than:
//   (x_i..., z t - 1)  ->  Laurent
//   (x^m, other vars)  ->  Truncated
//   (p(x), other vars) ->  Extension, p irreducible of degree >= 2
QuotientRecognition recognize_quotient(const Ideal& j);

struct UnitEquation {
  QuotientRecognition recognition;
  QuotientValue target;     // must be a unit (verified)
  unsigned exponent = 0;    // n in target = scalar * unit^n
  bool scalar_freedom = true;
  std::string derivation;   // transcript of where the equation came from

  std::string str() const;
};

// target in k* (units)^(r-1), from det(D) and the generator count r
UnitEquation derive_unit_equation(const QuotientRecognition& rec,
                                  const Polynomial& det_d, size_t generator_count,
                                  const std::string& instance_pattern);

struct SolveResult {
  enum class Status { Solvable, Unsolvable, Inconclusive };
  Status status = Status::Inconclusive;
  // Solvable: target = scalar * witness^n, re-checked exactly
  QuotientValue witness;
  FieldElement scalar;
  // Unsolvable / Inconclusive: machine-checked reason
  std::string reason;
};

SolveResult solve_unit_equation(const UnitEquation& eq);

}  // namespace cancelab

#endif
