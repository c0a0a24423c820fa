#ifndef CANCELAB_FIELD_HPP
#define CANCELAB_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cancelab {

class FieldElement;
struct FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

struct ArithError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input outside the shapes the engine certifies (rejected, never guessed)
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact coefficient field: QQ, GF(p), or a one-level simple extension
// base(gen)/(minpoly).  Descriptors are immutable and shared.
struct FieldDescriptor {
  enum class Kind { Rationals, Prime, Extension };

  Kind kind = Kind::Rationals;
  unsigned long p = 0;                 // Prime
  FieldPtr base;                       // Extension
  std::string generator;               // Extension
  std::vector<FieldElement> minpoly;   // monic, ascending, over base
  bool minpoly_verified = true;        // false above degree 4

  static FieldPtr rationals();
  static FieldPtr prime(unsigned long p);
  // minpoly given by ascending coefficients over `base`; must be monic of
  // degree >= 2.  Irreducibility is decided up to degree 4; above that the
  // descriptor is accepted with minpoly_verified = false.
  static FieldPtr extension(FieldPtr base, std::string gen,
                            std::vector<FieldElement> minpoly);
  // Text forms: "QQ", "GF(p)", "QQ(w)/(w^3-2)".  Implemented in parser.cpp.
  static FieldPtr parse(const std::string& text);

  unsigned long characteristic() const;
  int extension_degree() const;  // 1 for QQ and GF(p)
  std::string text() const;
};

bool same_field(const FieldDescriptor& a, const FieldDescriptor& b);
bool same_field(const FieldPtr& a, const FieldPtr& b);

class FieldElement {
 public:
  FieldElement() = default;  // detached null; assign before use

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inv() const;
  FieldElement pow(long e) const;  // negative e inverts first
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string str() const;

  const mpq_class& rat() const;                      // Rationals only
  unsigned long residue() const;                     // Prime only
  const std::vector<FieldElement>& ext_rep() const;  // Extension only

  friend FieldElement fe_zero(const FieldPtr& f);
  friend FieldElement fe_one(const FieldPtr& f);
  friend FieldElement fe_int(const FieldPtr& f, long n);
  friend FieldElement fe_ratio(const FieldPtr& f, const mpz_class& num,
                               const mpz_class& den);
  friend FieldElement fe_rational(const FieldPtr& f, const mpq_class& q);
  friend FieldElement fe_generator(const FieldPtr& f);
  friend FieldElement fe_from_rep(const FieldPtr& f,
                                  std::vector<FieldElement> rep);

 private:
  FieldPtr field_;
  std::variant<mpq_class, unsigned long, std::vector<FieldElement>> v_;

  void require_same(const FieldElement& o) const;
};

FieldElement fe_zero(const FieldPtr& f);
FieldElement fe_one(const FieldPtr& f);
FieldElement fe_int(const FieldPtr& f, long n);
FieldElement fe_ratio(const FieldPtr& f, const mpz_class& num,
                      const mpz_class& den);
FieldElement fe_rational(const FieldPtr& f, const mpq_class& q);
FieldElement fe_generator(const FieldPtr& f);  // Extension only
// rep: ascending coefficients over the base, reduced mod minpoly by callee.
FieldElement fe_from_rep(const FieldPtr& f, std::vector<FieldElement> rep);

// Embeds a base-field element into the extension.
FieldElement fe_lift(const FieldPtr& ext, const FieldElement& base_elem);

// True iff q = r^n for some rational r; returns the witness root.
std::optional<mpq_class> rational_nth_root(const mpq_class& q, unsigned n);

// Norm of an extension element down to the base field, computed as the
// resultant of the minimal polynomial and the representative.
FieldElement extension_norm(const FieldElement& e);

}  // namespace cancelab

#endif
