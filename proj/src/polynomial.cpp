#include "cancelab/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cancelab {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::Lex: {
      for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    }
    case Kind::Grevlex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      // last variable with differing exponent: smaller exponent wins
      for (size_t i = a.e.size(); i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      return 0;
    }
    case Kind::Block: {
      auto blockcmp = [&](size_t lo, size_t hi) -> int {
        int da = 0, db = 0;
        for (size_t i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
        if (da != db) return da < db ? -1 : 1;
        for (size_t i = hi; i-- > lo;)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
      };
      size_t s = static_cast<size_t>(split);
      if (int c = blockcmp(0, std::min(s, a.e.size())); c != 0) return c;
      if (s >= a.e.size()) return 0;
      return blockcmp(s, a.e.size());
    }
  }
  return 0;
}

std::string MonomialOrder::text() const {
  switch (kind) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Block: return "block(" + std::to_string(split) + ")";
  }
  return {};
}

MonomialOrder MonomialOrder::parse(const std::string& s) {
  if (s == "lex") return lex();
  if (s == "grevlex") return grevlex();
  if (s.rfind("block(", 0) == 0 && s.back() == ')') {
    int k = std::stoi(s.substr(6, s.size() - 7));
    return block(k);
  }
  throw ArithError("unknown monomial order: " + s);
}

RingPtr RingDescriptor::make(FieldPtr field, std::vector<std::string> vars,
                             MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw ArithError("empty variable name");
    if (!seen.insert(v).second) throw ArithError("duplicate variable name: " + v);
  }
  if (field->kind == FieldDescriptor::Kind::Extension &&
      seen.count(field->generator))
    throw ArithError("variable name collides with field generator: " + field->generator);
  auto r = std::make_shared<RingDescriptor>();
  r->field = std::move(field);
  r->vars = std::move(vars);
  r->order = order;
  return r;
}

int RingDescriptor::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

std::string RingDescriptor::text() const {
  std::ostringstream os;
  os << field->text() << "[";
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) os << ",";
    os << vars[i];
  }
  os << "]";
  return os.str();
}

RingPtr RingDescriptor::append_variable(const RingPtr& r, const std::string& name) {
  auto vars = r->vars;
  vars.push_back(name);
  return make(r->field, std::move(vars), r->order);
}

RingPtr RingDescriptor::drop_last_variable(const RingPtr& r) {
  auto vars = r->vars;
  if (vars.empty()) throw ArithError("drop_last_variable: no variables");
  vars.pop_back();
  return make(r->field, std::move(vars), r->order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_field(a->field, b->field) && a->vars == b->vars && a->order == b->order;
}

// ---- Polynomial ----

void Polynomial::normalize() {
  const auto& ord = ring_->order;
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = out.back().coeff + t.coeff;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return t.coeff.is_zero(); }),
            out.end());
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(const RingPtr& r, const FieldElement& c) {
  Polynomial f(r);
  if (!c.is_zero()) f.terms_.push_back({Monomial::one(r->nvars()), c});
  return f;
}

Polynomial Polynomial::from_int(const RingPtr& r, long n) {
  return constant(r, fe_int(r->field, n));
}

Polynomial Polynomial::variable(const RingPtr& r, size_t index, int power) {
  if (index >= r->nvars()) throw ArithError("variable index out of range");
  if (power < 0) throw ArithError("negative exponent");
  Monomial m = Monomial::one(r->nvars());
  m.e[index] = power;
  return from_term(r, std::move(m), fe_one(r->field));
}

Polynomial Polynomial::from_term(const RingPtr& r, Monomial m, FieldElement c) {
  Polynomial f(r);
  if (!c.is_zero()) f.terms_.push_back({std::move(m), std::move(c)});
  return f;
}

Polynomial Polynomial::from_terms(const RingPtr& r, std::vector<Term> terms) {
  Polynomial f(r);
  f.terms_ = std::move(terms);
  f.normalize();
  return f;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ArithError("leading term of zero polynomial");
  return terms_[0];
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw ArithError("leading term of zero polynomial");
  if (order == ring_->order) return terms_[0];
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.greater(t.mono, best->mono)) best = &t;
  return *best;
}

FieldElement Polynomial::constant_term() const {
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return fe_zero(ring_->field);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial add_impl(const Polynomial& f, const Polynomial& g, bool negate) {
  if (!same_ring(f.ring_, g.ring_)) throw ArithError("ring mismatch");
  const auto& ord = f.ring_->order;
  Polynomial r(f.ring_);
  r.terms_.reserve(f.terms_.size() + g.terms_.size());
  size_t i = 0, j = 0;
  while (i < f.terms_.size() && j < g.terms_.size()) {
    int c = ord.compare(f.terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(f.terms_[i++]);
    } else if (c < 0) {
      Term t = g.terms_[j++];
      if (negate) t.coeff = -t.coeff;
      r.terms_.push_back(std::move(t));
    } else {
      FieldElement s = negate ? f.terms_[i].coeff - g.terms_[j].coeff
                              : f.terms_[i].coeff + g.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({f.terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < f.terms_.size(); ++i) r.terms_.push_back(f.terms_[i]);
  for (; j < g.terms_.size(); ++j) {
    Term t = g.terms_[j];
    if (negate) t.coeff = -t.coeff;
    r.terms_.push_back(std::move(t));
  }
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  return add_impl(*this, g, false);
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  return add_impl(*this, g, true);
}

Polynomial Polynomial::mult_term(const Monomial& m, const FieldElement& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    FieldElement p = t.coeff * c;
    if (!p.is_zero()) r.terms_.push_back({t.mono * m, std::move(p)});
  }
  return r;  // multiplying by a monomial preserves term order
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  if (!same_ring(ring_, g.ring_)) throw ArithError("ring mismatch");
  Polynomial acc(ring_);
  for (const auto& t : g.terms_) acc = acc + mult_term(t.mono, t.coeff);
  return acc;
}

Polynomial Polynomial::scale(const FieldElement& c) const {
  return mult_term(Monomial::one(ring_->nvars()), c);
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = from_int(ring_, 1);
  Polynomial b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (!same_ring(ring_, g.ring_)) return false;
  if (terms_.size() != g.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != g.terms_[i].mono || terms_[i].coeff != g.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::substitute(size_t var, const Polynomial& value) const {
  if (!same_ring(ring_, value.ring_)) throw ArithError("ring mismatch in substitute");
  Polynomial acc(ring_);
  for (const auto& t : terms_) {
    Monomial rest = t.mono;
    int e = rest.e[var];
    rest.e[var] = 0;
    Polynomial piece = from_term(ring_, rest, t.coeff);
    if (e > 0) piece = piece * value.pow(static_cast<unsigned>(e));
    acc = acc + piece;
  }
  return acc;
}

Polynomial Polynomial::transport(const RingPtr& target) const {
  std::vector<int> map(ring_->nvars(), -1);
  for (size_t i = 0; i < ring_->nvars(); ++i)
    map[i] = target->var_index(ring_->vars[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = Monomial::one(target->nvars());
    for (size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (map[i] < 0)
        throw ArithError("transport: variable " + ring_->vars[i] + " absent from target ring");
      m.e[static_cast<size_t>(map[i])] = t.mono.e[i];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = t.coeff.str();
    bool composite = cs.find('+') != std::string::npos ||
                     cs.find('-', 1) != std::string::npos;
    bool neg = !composite && !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (composite) cs = "(" + cs + ")";
    if (!first) os << (neg ? "-" : "+");
    else if (neg) os << "-";
    first = false;
    if (t.mono.is_one()) {
      os << cs;
      continue;
    }
    bool printed = false;
    if (cs != "1") {
      os << cs;
      printed = true;
    }
    for (size_t i = 0; i < t.mono.e.size(); ++i) {
      int e = t.mono.e[i];
      if (e == 0) continue;
      if (printed) os << "*";
      os << ring_->vars[i];
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

DivisionResult multivariate_division(const Polynomial& f,
                                     const std::vector<Polynomial>& divisors,
                                     const MonomialOrder& order) {
  const RingPtr& ring = f.ring();
  for (const auto& g : divisors) {
    if (!same_ring(ring, g.ring())) throw ArithError("ring mismatch in division");
    if (g.is_zero()) throw ArithError("zero divisor in division");
  }
  DivisionResult res;
  res.quotients.assign(divisors.size(), Polynomial::zero(ring));
  res.remainder = Polynomial::zero(ring);
  Polynomial work = f;

  std::vector<Term> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) leads.push_back(g.leading_term(order));

  while (!work.is_zero()) {
    Term lt = work.leading_term(order);
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (leads[i].mono.divides(lt.mono)) {
        Monomial m = lt.mono / leads[i].mono;
        FieldElement c = lt.coeff / leads[i].coeff;
        res.quotients[i] = res.quotients[i] + Polynomial::from_term(ring, m, c);
        work = work - divisors[i].mult_term(m, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial t = Polynomial::from_term(ring, lt.mono, lt.coeff);
      res.remainder = res.remainder + t;
      work = work - t;
    }
  }
  return res;
}

DivisionResult multivariate_division(const Polynomial& f,
                                     const std::vector<Polynomial>& divisors) {
  return multivariate_division(f, divisors, f.ring()->order);
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw ArithError("exact division by zero");
  auto res = multivariate_division(f, {g});
  if (!res.remainder.is_zero()) return std::nullopt;
  return res.quotients[0];
}

}  // namespace cancelab
