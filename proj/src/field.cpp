#include "cancelab/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cancelab {

namespace {

bool is_prime_ul(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
  return (a * b) % p;  // p < 2^31 keeps the product in range
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
  unsigned long r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

unsigned long invmod(unsigned long a, unsigned long p) {
  if (a == 0) throw ArithError("division by zero in GF(p)");
  return powmod(a, p - 2, p);
}

// ---- univariate polynomial helpers over a field (dense, ascending) ----

using UPoly = std::vector<FieldElement>;

void utrim(UPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int udeg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly uadd(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), fe_zero(b.front().field()));
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  utrim(r);
  return r;
}

UPoly uscale(const UPoly& a, const FieldElement& c) {
  if (c.is_zero()) return {};
  UPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b, const FieldPtr& f) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, fe_zero(f));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  utrim(r);
  return r;
}

// f = q*g + r with deg r < deg g
std::pair<UPoly, UPoly> udivmod(UPoly f, const UPoly& g, const FieldPtr& fld) {
  if (g.empty()) throw ArithError("univariate division by zero");
  UPoly q;
  utrim(f);
  if (udeg(f) >= udeg(g)) q.assign(udeg(f) - udeg(g) + 1, fe_zero(fld));
  FieldElement glc_inv = g.back().inv();
  while (udeg(f) >= udeg(g)) {
    int shift = udeg(f) - udeg(g);
    FieldElement c = f.back() * glc_inv;
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i)
      f[i + shift] = f[i + shift] - c * g[i];
    utrim(f);
  }
  return {q, f};
}

// extended gcd: returns (g, u, v) with u*a + v*b = g
std::tuple<UPoly, UPoly, UPoly> uegcd(UPoly a, UPoly b, const FieldPtr& f) {
  UPoly u0{fe_one(f)}, v0, u1, v1{fe_one(f)};
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    auto [q, r] = udivmod(a, b, f);
    UPoly qu = umul(q, u1, f), qv = umul(q, v1, f);
    UPoly u2 = uadd(u0, uscale(qu, -fe_one(f)));
    UPoly v2 = uadd(v0, uscale(qv, -fe_one(f)));
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    v0 = std::move(v1);
    u1 = std::move(u2);
    v1 = std::move(v2);
  }
  return {a, u0, v0};
}

FieldElement uresultant(UPoly a, UPoly b, const FieldPtr& f) {
  utrim(a);
  utrim(b);
  if (a.empty() || b.empty()) return fe_zero(f);
  FieldElement s = fe_one(f);
  while (udeg(b) > 0) {
    auto [q, r] = udivmod(a, b, f);
    (void)q;
    if (r.empty()) return fe_zero(f);
    if ((static_cast<long>(udeg(a)) * udeg(b)) % 2 != 0) s = -s;
    s = s * b.back().pow(udeg(a) - udeg(r));
    a = std::move(b);
    b = std::move(r);
  }
  return s * b[0].pow(udeg(a));
}

UPoly ueval_free_mod(const UPoly& f, const UPoly& minpoly, const FieldPtr& fld) {
  auto [q, r] = udivmod(f, minpoly, fld);
  (void)q;
  return r;
}

// ---- irreducibility over QQ / GF(p), degree <= 4 ----

bool has_root_prime(const UPoly& f, unsigned long p, const FieldPtr& fld) {
  for (unsigned long a = 0; a < p; ++a) {
    FieldElement x = fe_int(fld, static_cast<long>(a));
    FieldElement acc = fe_zero(fld);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    if (acc.is_zero()) return true;
  }
  return false;
}

std::vector<mpz_class> divisors_of(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  if (a == 0) return out;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  return out;
}

bool has_rational_root(const std::vector<mpz_class>& f) {
  // f primitive integral, ascending.  Candidates p/q with p | f0, q | lc.
  mpz_class f0 = f.front(), lc = f.back();
  if (f0 == 0) return true;
  for (const auto& pn : divisors_of(f0)) {
    for (const auto& qd : divisors_of(lc)) {
      for (int sign = -1; sign <= 1; sign += 2) {
        mpq_class x(pn * sign, qd);
        x.canonicalize();
        mpq_class acc = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it)
          acc = acc * x + mpq_class(*it);
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

std::vector<mpz_class> to_primitive_integral(const UPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f) den = lcm(den, c.rat().get_den());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : f) {
    mpz_class v = c.rat().get_num() * (den / c.rat().get_den());
    out.push_back(v);
    g = gcd(g, v);
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

// quartic quadratic-factor search over ZZ (Gauss's lemma)
bool quartic_has_quadratic_factor(const std::vector<mpz_class>& c) {
  // (A x^2 + B x + C)(D x^2 + E x + F), AD = c4, CF = c0
  for (const auto& A0 : divisors_of(c[4])) {
    for (int sa = -1; sa <= 1; sa += 2) {
      mpz_class A = A0 * sa;
      if (c[4] % A != 0) continue;
      mpz_class D = c[4] / A;
      for (const auto& C0 : divisors_of(c[0])) {
        for (int sc = -1; sc <= 1; sc += 2) {
          mpz_class C = C0 * sc;
          if (c[0] % C != 0) continue;
          mpz_class F = c[0] / C;
          // unknowns B, E:  A*E + B*D = c3 ;  B*F + C*E = c1
          // Solve [[D, A],[F, C]] [B,E]^T = [c3, c1]^T
          mpz_class dd = D * C - A * F;
          if (dd != 0) {
            mpz_class Bnum = c[3] * C - A * c[1];
            mpz_class Enum = D * c[1] - c[3] * F;
            if (Bnum % dd != 0 || Enum % dd != 0) continue;
            mpz_class B = Bnum / dd, E = Enum / dd;
            if (A * F + B * E + C * D == c[2]) return true;
          } else {
            // degenerate 2x2 system: scan small B
            for (long b = -64; b <= 64; ++b) {
              mpz_class B = b;
              mpz_class rem = c[3] - B * D;
              if (rem % A != 0) continue;
              mpz_class E = rem / A;
              if (B * F + C * E == c[1] && A * F + B * E + C * D == c[2])
                return true;
            }
          }
        }
      }
    }
  }
  return false;
}

// returns verified-irreducible? (second = whether a verdict was reached)
std::pair<bool, bool> check_irreducible(const UPoly& f, const FieldPtr& base) {
  int d = udeg(f);
  if (d <= 1) return {false, true};  // degree >= 2 required elsewhere
  if (d > 4) return {true, false};   // trusted with warning
  if (base->kind == FieldDescriptor::Kind::Prime) {
    unsigned long p = base->p;
    if (p > 100000) return {true, false};
    if (has_root_prime(f, p, base)) return {false, true};
    if (d == 4) {
      // enumerate monic quadratics q, test divisibility
      if (static_cast<double>(p) * static_cast<double>(p) > 4e6)
        return {true, false};
      for (unsigned long b = 0; b < p; ++b) {
        for (unsigned long c = 0; c < p; ++c) {
          UPoly q{fe_int(base, static_cast<long>(c)),
                  fe_int(base, static_cast<long>(b)), fe_one(base)};
          auto [qq, r] = udivmod(f, q, base);
          (void)qq;
          if (r.empty()) return {false, true};
        }
      }
    }
    return {true, true};
  }
  // rationals
  auto zf = to_primitive_integral(f);
  if (has_rational_root(zf)) return {false, true};
  if (d == 4 && quartic_has_quadratic_factor(zf)) return {false, true};
  return {true, true};
}

}  // namespace

// ---- FieldDescriptor ----

FieldPtr FieldDescriptor::rationals() {
  static FieldPtr inst = std::make_shared<FieldDescriptor>();
  return inst;
}

FieldPtr FieldDescriptor::prime(unsigned long p) {
  if (!is_prime_ul(p)) throw ArithError("GF(p): p must be prime");
  if (p >= (1ul << 31)) throw ArithError("GF(p): p too large");
  auto d = std::make_shared<FieldDescriptor>();
  d->kind = Kind::Prime;
  d->p = p;
  return d;
}

FieldPtr FieldDescriptor::extension(FieldPtr base, std::string gen,
                                    std::vector<FieldElement> minpoly) {
  if (!base) throw ArithError("extension: null base");
  if (base->kind == Kind::Extension)
    throw ArithError("extension of an extension is not supported");
  while (!minpoly.empty() && minpoly.back().is_zero()) minpoly.pop_back();
  if (udeg(minpoly) < 2) throw ArithError("minimal polynomial degree must be >= 2");
  if (!minpoly.back().is_one()) throw ArithError("minimal polynomial must be monic");
  for (const auto& c : minpoly)
    if (!same_field(c.field(), base)) throw ArithError("minpoly coefficients not in base field");
  auto [irr, decided] = check_irreducible(minpoly, base);
  if (decided && !irr) throw ArithError("minimal polynomial is reducible");
  auto d = std::make_shared<FieldDescriptor>();
  d->kind = Kind::Extension;
  d->base = std::move(base);
  d->generator = std::move(gen);
  d->minpoly = std::move(minpoly);
  d->minpoly_verified = decided;
  return d;
}

unsigned long FieldDescriptor::characteristic() const {
  switch (kind) {
    case Kind::Rationals: return 0;
    case Kind::Prime: return p;
    case Kind::Extension: return base->characteristic();
  }
  return 0;
}

int FieldDescriptor::extension_degree() const {
  return kind == Kind::Extension ? udeg(minpoly) : 1;
}

std::string FieldDescriptor::text() const {
  switch (kind) {
    case Kind::Rationals: return "QQ";
    case Kind::Prime: return "GF(" + std::to_string(p) + ")";
    case Kind::Extension: {
      std::ostringstream os;
      os << base->text() << "(" << generator << ")/(";
      bool first = true;
      for (int i = udeg(minpoly); i >= 0; --i) {
        const auto& c = minpoly[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (!first) os << (neg ? "-" : "+");
        else if (neg) os << "-";
        if (neg) cs = cs.substr(1);
        first = false;
        if (i == 0) { os << cs; continue; }
        if (cs != "1") os << cs << "*";
        os << generator;
        if (i > 1) os << "^" << i;
      }
      os << ")";
      return os.str();
    }
  }
  return {};
}

bool same_field(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case FieldDescriptor::Kind::Rationals: return true;
    case FieldDescriptor::Kind::Prime: return a.p == b.p;
    case FieldDescriptor::Kind::Extension:
      if (!same_field(a.base, b.base) || a.generator != b.generator) return false;
      if (a.minpoly.size() != b.minpoly.size()) return false;
      for (size_t i = 0; i < a.minpoly.size(); ++i)
        if (a.minpoly[i] != b.minpoly[i]) return false;
      return true;
  }
  return false;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_field(*a, *b);
}

// ---- FieldElement ----

void FieldElement::require_same(const FieldElement& o) const {
  if (!valid() || !o.valid()) throw ArithError("operation on detached field element");
  if (!same_field(field_, o.field_)) throw ArithError("field descriptor mismatch");
}

bool FieldElement::is_zero() const {
  switch (field_->kind) {
    case FieldDescriptor::Kind::Rationals: return std::get<mpq_class>(v_) == 0;
    case FieldDescriptor::Kind::Prime: return std::get<unsigned long>(v_) == 0;
    case FieldDescriptor::Kind::Extension: {
      for (const auto& c : std::get<std::vector<FieldElement>>(v_))
        if (!c.is_zero()) return false;
      return true;
    }
  }
  return false;
}

bool FieldElement::is_one() const {
  switch (field_->kind) {
    case FieldDescriptor::Kind::Rationals: return std::get<mpq_class>(v_) == 1;
    case FieldDescriptor::Kind::Prime: return std::get<unsigned long>(v_) == 1 % field_->p;
    case FieldDescriptor::Kind::Extension: {
      const auto& r = std::get<std::vector<FieldElement>>(v_);
      if (r.empty() || !r[0].is_one()) return false;
      for (size_t i = 1; i < r.size(); ++i)
        if (!r[i].is_zero()) return false;
      return true;
    }
  }
  return false;
}

FieldElement FieldElement::operator-() const {
  if (!valid()) throw ArithError("negate on detached element");
  FieldElement r = *this;
  switch (field_->kind) {
    case FieldDescriptor::Kind::Rationals:
      std::get<mpq_class>(r.v_) = -std::get<mpq_class>(v_);
      break;
    case FieldDescriptor::Kind::Prime: {
      unsigned long a = std::get<unsigned long>(v_);
      std::get<unsigned long>(r.v_) = a == 0 ? 0 : field_->p - a;
      break;
    }
    case FieldDescriptor::Kind::Extension:
      for (auto& c : std::get<std::vector<FieldElement>>(r.v_)) c = -c;
      break;
  }
  return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  FieldElement r = *this;
  switch (field_->kind) {
    case FieldDescriptor::Kind::Rationals:
      std::get<mpq_class>(r.v_) += std::get<mpq_class>(o.v_);
      break;
    case FieldDescriptor::Kind::Prime:
      std::get<unsigned long>(r.v_) =
          (std::get<unsigned long>(v_) + std::get<unsigned long>(o.v_)) % field_->p;
      break;
    case FieldDescriptor::Kind::Extension: {
      auto& a = std::get<std::vector<FieldElement>>(r.v_);
      const auto& b = std::get<std::vector<FieldElement>>(o.v_);
      for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
      break;
    }
  }
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  switch (field_->kind) {
    case FieldDescriptor::Kind::Rationals: {
      FieldElement r = *this;
      std::get<mpq_class>(r.v_) *= std::get<mpq_class>(o.v_);
      return r;
    }
    case FieldDescriptor::Kind::Prime: {
      FieldElement r = *this;
      std::get<unsigned long>(r.v_) =
          mulmod(std::get<unsigned long>(v_), std::get<unsigned long>(o.v_), field_->p);
      return r;
    }
    case FieldDescriptor::Kind::Extension: {
      const auto& a = std::get<std::vector<FieldElement>>(v_);
      const auto& b = std::get<std::vector<FieldElement>>(o.v_);
      UPoly prod = umul(a, b, field_->base);
      UPoly red = ueval_free_mod(prod, field_->minpoly, field_->base);
      return fe_from_rep(field_, std::move(red));
    }
  }
  throw ArithError("unreachable");
}

FieldElement FieldElement::inv() const {
  if (!valid()) throw ArithError("inv on detached element");
  if (is_zero()) throw ArithError("division by zero");
  switch (field_->kind) {
    case FieldDescriptor::Kind::Rationals: {
      FieldElement r = *this;
      std::get<mpq_class>(r.v_) = 1 / std::get<mpq_class>(v_);
      return r;
    }
    case FieldDescriptor::Kind::Prime: {
      FieldElement r = *this;
      std::get<unsigned long>(r.v_) = invmod(std::get<unsigned long>(v_), field_->p);
      return r;
    }
    case FieldDescriptor::Kind::Extension: {
      UPoly rep = std::get<std::vector<FieldElement>>(v_);
      utrim(rep);
      auto [g, u, v] = uegcd(rep, field_->minpoly, field_->base);
      (void)v;
      if (udeg(g) != 0)
        throw ArithError("element not invertible (reducible minimal polynomial?)");
      UPoly inv_rep = uscale(u, g[0].inv());
      return fe_from_rep(field_, std::move(inv_rep));
    }
  }
  throw ArithError("unreachable");
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inv();
}

FieldElement FieldElement::pow(long e) const {
  if (!valid()) throw ArithError("pow on detached element");
  FieldElement base = *this;
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  FieldElement r = fe_one(field_);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!valid() || !o.valid()) return valid() == o.valid();
  if (!same_field(field_, o.field_)) return false;
  return v_ == o.v_;
}

std::string FieldElement::str() const {
  if (!valid()) return "<null>";
  switch (field_->kind) {
    case FieldDescriptor::Kind::Rationals:
      return std::get<mpq_class>(v_).get_str();
    case FieldDescriptor::Kind::Prime:
      return std::to_string(std::get<unsigned long>(v_));
    case FieldDescriptor::Kind::Extension: {
      const auto& rep = std::get<std::vector<FieldElement>>(v_);
      std::ostringstream os;
      bool first = true;
      int nterms = 0;
      for (int i = static_cast<int>(rep.size()) - 1; i >= 0; --i) {
        const auto& c = rep[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        ++nterms;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (!first) os << (neg ? "-" : "+");
        else if (neg) os << "-";
        first = false;
        if (i == 0) { os << cs; continue; }
        if (cs != "1") os << cs << "*";
        os << field_->generator;
        if (i > 1) os << "^" << i;
      }
      if (nterms == 0) return "0";
      return os.str();
    }
  }
  return {};
}

const mpq_class& FieldElement::rat() const { return std::get<mpq_class>(v_); }
unsigned long FieldElement::residue() const { return std::get<unsigned long>(v_); }
const std::vector<FieldElement>& FieldElement::ext_rep() const {
  return std::get<std::vector<FieldElement>>(v_);
}

FieldElement fe_zero(const FieldPtr& f) {
  FieldElement e;
  e.field_ = f;
  switch (f->kind) {
    case FieldDescriptor::Kind::Rationals: e.v_ = mpq_class(0); break;
    case FieldDescriptor::Kind::Prime: e.v_ = 0ul; break;
    case FieldDescriptor::Kind::Extension:
      e.v_ = std::vector<FieldElement>(
          static_cast<size_t>(f->extension_degree()), fe_zero(f->base));
      break;
  }
  return e;
}

FieldElement fe_one(const FieldPtr& f) { return fe_int(f, 1); }

FieldElement fe_int(const FieldPtr& f, long n) {
  FieldElement e;
  e.field_ = f;
  switch (f->kind) {
    case FieldDescriptor::Kind::Rationals: e.v_ = mpq_class(n); break;
    case FieldDescriptor::Kind::Prime: {
      long m = n % static_cast<long>(f->p);
      if (m < 0) m += static_cast<long>(f->p);
      e.v_ = static_cast<unsigned long>(m);
      break;
    }
    case FieldDescriptor::Kind::Extension: {
      auto rep = std::vector<FieldElement>(
          static_cast<size_t>(f->extension_degree()), fe_zero(f->base));
      rep[0] = fe_int(f->base, n);
      e.v_ = std::move(rep);
      break;
    }
  }
  return e;
}

FieldElement fe_ratio(const FieldPtr& f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ArithError("zero denominator");
  switch (f->kind) {
    case FieldDescriptor::Kind::Rationals: {
      FieldElement e;
      e.field_ = f;
      mpq_class q(num, den);
      q.canonicalize();
      e.v_ = std::move(q);
      return e;
    }
    case FieldDescriptor::Kind::Prime: {
      mpz_class nn = num % f->p, dd = den % f->p;
      if (nn < 0) nn += f->p;
      if (dd < 0) dd += f->p;
      return fe_int(f, nn.get_si()) / fe_int(f, dd.get_si());
    }
    case FieldDescriptor::Kind::Extension:
      return fe_lift(f, fe_ratio(f->base, num, den));
  }
  throw ArithError("unreachable");
}

FieldElement fe_rational(const FieldPtr& f, const mpq_class& q) {
  return fe_ratio(f, q.get_num(), q.get_den());
}

FieldElement fe_generator(const FieldPtr& f) {
  if (f->kind != FieldDescriptor::Kind::Extension)
    throw ArithError("fe_generator: not an extension field");
  auto rep = std::vector<FieldElement>(
      static_cast<size_t>(f->extension_degree()), fe_zero(f->base));
  rep[1] = fe_one(f->base);
  return fe_from_rep(f, std::move(rep));
}

FieldElement fe_from_rep(const FieldPtr& f, std::vector<FieldElement> rep) {
  if (f->kind != FieldDescriptor::Kind::Extension)
    throw ArithError("fe_from_rep: not an extension field");
  UPoly r = std::move(rep);
  utrim(r);
  if (udeg(r) >= udeg(f->minpoly)) r = ueval_free_mod(r, f->minpoly, f->base);
  r.resize(static_cast<size_t>(f->extension_degree()), fe_zero(f->base));
  FieldElement e;
  e.field_ = f;
  e.v_ = std::move(r);
  return e;
}

FieldElement fe_lift(const FieldPtr& ext, const FieldElement& base_elem) {
  if (ext->kind != FieldDescriptor::Kind::Extension)
    throw ArithError("fe_lift: not an extension field");
  if (!same_field(base_elem.field(), ext->base))
    throw ArithError("fe_lift: element not in base field");
  std::vector<FieldElement> rep(static_cast<size_t>(ext->extension_degree()),
                                fe_zero(ext->base));
  rep[0] = base_elem;
  return fe_from_rep(ext, std::move(rep));
}

std::optional<mpq_class> rational_nth_root(const mpq_class& q, unsigned n) {
  if (n == 0) throw ArithError("rational_nth_root: n must be >= 1");
  if (q == 0) return mpq_class(0);
  if (n == 1) return q;
  if (q < 0 && n % 2 == 0) return std::nullopt;
  mpz_class num = abs(q.get_num()), den = q.get_den();
  mpz_class rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n);
  int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n);
  if (!exact_n || !exact_d) return std::nullopt;
  mpq_class r(rn, rd);
  r.canonicalize();
  if (q < 0) r = -r;
  return r;
}

FieldElement extension_norm(const FieldElement& e) {
  const auto& f = e.field();
  if (!f || f->kind != FieldDescriptor::Kind::Extension)
    throw ArithError("extension_norm: element not in a simple extension");
  UPoly rep = e.ext_rep();
  utrim(rep);
  if (rep.empty()) return fe_zero(f->base);
  return uresultant(f->minpoly, rep, f->base);
}

}  // namespace cancelab
