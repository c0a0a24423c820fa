#include "cancelab/obstruction.hpp"

#include <sstream>

namespace cancelab {

// ---- LaurentPoly ----

LaurentPoly LaurentPoly::term(const FieldPtr& k, long e, const FieldElement& a) {
  LaurentPoly p{k, {}};
  if (!a.is_zero()) p.c[e] = a;
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, a] : o.c) {
    auto it = r.c.find(e);
    if (it == r.c.end()) {
      r.c[e] = a;
    } else {
      it->second = it->second + a;
      if (it->second.is_zero()) r.c.erase(it);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r{k, {}};
  for (const auto& [e1, a1] : c)
    for (const auto& [e2, a2] : o.c) {
      FieldElement p = a1 * a2;
      if (p.is_zero()) continue;
      long e = e1 + e2;
      auto it = r.c.find(e);
      if (it == r.c.end()) {
        r.c[e] = p;
      } else {
        it->second = it->second + p;
        if (it->second.is_zero()) r.c.erase(it);
      }
    }
  return r;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    std::string cs = it->second.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (!first) os << (neg ? "-" : "+");
    else if (neg) os << "-";
    first = false;
    if (it->first == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") os << cs << "*";
    os << var;
    if (it->first != 1) os << "^" << it->first;
  }
  return os.str();
}

// ---- TruncPoly ----

TruncPoly TruncPoly::zero(const FieldPtr& k, size_t m) {
  return {k, m, std::vector<FieldElement>(m, fe_zero(k))};
}

TruncPoly TruncPoly::constant(const FieldPtr& k, size_t m, const FieldElement& a) {
  TruncPoly p = zero(k, m);
  p.c[0] = a;
  return p;
}

bool TruncPoly::is_zero() const {
  for (const auto& a : c)
    if (!a.is_zero()) return false;
  return true;
}

bool TruncPoly::is_constant() const {
  for (size_t i = 1; i < c.size(); ++i)
    if (!c[i].is_zero()) return false;
  return true;
}

TruncPoly TruncPoly::operator+(const TruncPoly& o) const {
  TruncPoly r = *this;
  for (size_t i = 0; i < m; ++i) r.c[i] = r.c[i] + o.c[i];
  return r;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
  TruncPoly r = zero(k, m);
  for (size_t i = 0; i < m; ++i) {
    if (c[i].is_zero()) continue;
    for (size_t j = 0; i + j < m; ++j)
      r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
  }
  return r;
}

TruncPoly TruncPoly::pow(unsigned e) const {
  TruncPoly r = constant(k, m, fe_one(k));
  TruncPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string TruncPoly::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m; ++i) {
    if (c[i].is_zero()) continue;
    std::string cs = c[i].str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (!first) os << (neg ? "-" : "+");
    else if (neg) os << "-";
    first = false;
    if (i == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") os << cs << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

// ---- QuotientValue helpers ----

bool qv_is_unit(const QuotientValue& v) {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FieldElement>) return !x.is_zero();
        else return x.is_unit();
      },
      v);
}

bool qv_eq(const QuotientValue& a, const QuotientValue& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b);
      },
      a);
}

QuotientValue qv_mul(const QuotientValue& a, const QuotientValue& b) {
  return std::visit(
      [&](const auto& x) -> QuotientValue {
        using T = std::decay_t<decltype(x)>;
        return x * std::get<T>(b);
      },
      a);
}

QuotientValue qv_pow(const QuotientValue& a, unsigned e) {
  return std::visit(
      [&](const auto& x) -> QuotientValue {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FieldElement>) return x.pow(static_cast<long>(e));
        else if constexpr (std::is_same_v<T, TruncPoly>) return x.pow(e);
        else {
          LaurentPoly r = LaurentPoly::term(x.k, 0, fe_one(x.k));
          for (unsigned i = 0; i < e; ++i) r = r * x;
          return r;
        }
      },
      a);
}

QuotientValue qv_scale(const QuotientValue& a, const FieldElement& s) {
  return std::visit(
      [&](const auto& x) -> QuotientValue {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FieldElement>) return x * s;
        else if constexpr (std::is_same_v<T, TruncPoly>)
          return x * TruncPoly::constant(x.k, x.m, s);
        else return x * LaurentPoly::term(x.k, 0, s);
      },
      a);
}

std::string qv_str(const QuotientValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FieldElement>) return x.str();
        else return x.str();
      },
      v);
}

// ---- recognition ----

std::string QuotientRecognition::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Laurent:
      os << "k[" << ring->vars[z_var] << "," << ring->vars[z_var] << "^-1] with "
         << ring->vars[z_var] << " -> " << ring->vars[z_var] << ", "
         << ring->vars[t_var] << " -> " << ring->vars[z_var] << "^-1";
      break;
    case Kind::Truncated:
      os << "k[" << ring->vars[x_var] << "]/" << ring->vars[x_var] << "^" << trunc_m;
      break;
    case Kind::Extension:
      os << ext_field->text();
      break;
  }
  return os.str();
}

QuotientValue QuotientRecognition::eval(const Polynomial& f) const {
  const FieldPtr& k = ring->field;
  switch (kind) {
    case Kind::Laurent: {
      LaurentPoly acc = LaurentPoly::zero(k);
      for (const auto& t : f.terms()) {
        bool killed = false;
        long e = 0;
        for (size_t i = 0; i < ring->nvars(); ++i) {
          if (t.mono.e[i] == 0) continue;
          if (i == z_var) e += t.mono.e[i];
          else if (i == t_var) e -= t.mono.e[i];
          else killed = true;
        }
        if (!killed) acc = acc + LaurentPoly::term(k, e, t.coeff);
      }
      return acc;
    }
    case Kind::Truncated: {
      TruncPoly acc = TruncPoly::zero(k, trunc_m);
      for (const auto& t : f.terms()) {
        bool killed = false;
        size_t e = 0;
        for (size_t i = 0; i < ring->nvars(); ++i) {
          if (t.mono.e[i] == 0) continue;
          if (i == x_var) e += static_cast<size_t>(t.mono.e[i]);
          else killed = true;
        }
        if (killed || e >= trunc_m) continue;
        TruncPoly term = TruncPoly::zero(k, trunc_m);
        term.c[e] = t.coeff;
        acc = acc + term;
      }
      return acc;
    }
    case Kind::Extension: {
      FieldElement acc = fe_zero(ext_field);
      FieldElement theta = fe_generator(ext_field);
      for (const auto& t : f.terms()) {
        bool killed = false;
        long e = 0;
        for (size_t i = 0; i < ring->nvars(); ++i) {
          if (t.mono.e[i] == 0) continue;
          if (i == x_var) e += t.mono.e[i];
          else killed = true;
        }
        if (killed) continue;
        acc = acc + fe_lift(ext_field, t.coeff) * theta.pow(e);
      }
      return acc;
    }
  }
  throw ArithError("unreachable");
}

namespace {

// single term c * v^e?
std::optional<std::pair<size_t, int>> single_var_power(const Polynomial& f) {
  if (f.terms().size() != 1) return std::nullopt;
  const auto& m = f.terms()[0].mono;
  int found = -1;
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (found >= 0) return std::nullopt;
    found = static_cast<int>(i);
  }
  if (found < 0) return std::nullopt;
  return std::make_pair(static_cast<size_t>(found), m.e[static_cast<size_t>(found)]);
}

// z*t - 1 up to the monic normalization of a reduced basis
std::optional<std::pair<size_t, size_t>> hyperbola_shape(const Polynomial& f) {
  if (f.terms().size() != 2) return std::nullopt;
  const Term& lead = f.terms()[0];
  const Term& tail = f.terms()[1];
  if (!lead.coeff.is_one()) return std::nullopt;
  if (!tail.mono.is_one() || !(-tail.coeff).is_one()) return std::nullopt;
  std::vector<size_t> vars;
  for (size_t i = 0; i < lead.mono.e.size(); ++i) {
    if (lead.mono.e[i] == 0) continue;
    if (lead.mono.e[i] != 1) return std::nullopt;
    vars.push_back(i);
  }
  if (vars.size() != 2) return std::nullopt;
  return std::make_pair(vars[0], vars[1]);
}

}  // namespace

QuotientRecognition recognize_quotient(const Ideal& j) {
  const RingPtr& ring = j.ring;
  GroebnerBasis g = buchberger(j);
  std::vector<size_t> linear_vars;
  std::optional<std::pair<size_t, size_t>> hyperbola;
  std::optional<std::pair<size_t, int>> power;     // x^m, m >= 2
  std::optional<Polynomial> univariate;            // p(x), not a pure power
  std::optional<size_t> univariate_var;

  for (const auto& b : g.basis()) {
    if (auto sv = single_var_power(b)) {
      if (sv->second == 1 && b.terms().size() == 1) {
        linear_vars.push_back(sv->first);
        continue;
      }
      if (sv->second >= 2 && b.terms().size() == 1) {
        if (power || hyperbola || univariate)
          throw UnsupportedError("unrecognized quotient shape: " + g.str());
        power = sv;
        continue;
      }
    }
    if (auto h = hyperbola_shape(b)) {
      if (power || hyperbola || univariate)
        throw UnsupportedError("unrecognized quotient shape: " + g.str());
      hyperbola = h;
      continue;
    }
    // univariate in a single variable?
    int var = -1;
    bool uni = true;
    for (const auto& t : b.terms())
      for (size_t i = 0; i < ring->nvars() && uni; ++i) {
        if (t.mono.e[i] == 0) continue;
        if (var < 0) var = static_cast<int>(i);
        else if (var != static_cast<int>(i)) uni = false;
      }
    if (uni && var >= 0 && b.degree() >= 2) {
      if (power || hyperbola || univariate)
        throw UnsupportedError("unrecognized quotient shape: " + g.str());
      univariate = b;
      univariate_var = static_cast<size_t>(var);
      continue;
    }
    throw UnsupportedError("unrecognized quotient shape: " + g.str());
  }

  QuotientRecognition rec;
  rec.ring = ring;
  rec.j = j;
  size_t special_count = linear_vars.size();

  if (hyperbola) {
    if (special_count + 2 != ring->nvars())
      throw UnsupportedError("Laurent shape must name all remaining variables");
    rec.kind = QuotientRecognition::Kind::Laurent;
    rec.z_var = std::min(hyperbola->first, hyperbola->second);
    rec.t_var = std::max(hyperbola->first, hyperbola->second);
  } else if (power) {
    if (special_count + 1 != ring->nvars())
      throw UnsupportedError("truncated shape must name all remaining variables");
    rec.kind = QuotientRecognition::Kind::Truncated;
    rec.x_var = power->first;
    rec.trunc_m = static_cast<size_t>(power->second);
  } else if (univariate) {
    if (special_count + 1 != ring->nvars())
      throw UnsupportedError("extension shape must name all remaining variables");
    rec.kind = QuotientRecognition::Kind::Extension;
    rec.x_var = *univariate_var;
    int deg = univariate->degree();
    std::vector<FieldElement> mp(static_cast<size_t>(deg) + 1, fe_zero(ring->field));
    for (const auto& t : univariate->terms())
      mp[static_cast<size_t>(t.mono.e[rec.x_var])] = t.coeff;
    rec.ext_field = FieldDescriptor::extension(ring->field, ring->vars[rec.x_var], mp);
  } else {
    throw UnsupportedError("unrecognized quotient shape: " + g.str());
  }

  // verify: every original generator maps to zero
  for (const auto& gen : j.gens) {
    QuotientValue img = rec.eval(gen);
    bool zero = std::visit(
        [](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, FieldElement>) return x.is_zero();
          else return x.is_zero();
        },
        img);
    if (!zero)
      throw UnsupportedError("recognition check failed: generator " + gen.str() +
                             " has nonzero image");
  }
  return rec;
}

// ---- unit equations ----

std::string UnitEquation::str() const {
  std::ostringstream os;
  os << qv_str(target) << " in " << (scalar_freedom ? "k* . " : "")
     << "(units)^" << exponent << " of " << recognition.describe();
  return os.str();
}

UnitEquation derive_unit_equation(const QuotientRecognition& rec,
                                  const Polynomial& det_d, size_t generator_count,
                                  const std::string& instance_pattern) {
  if (generator_count < 2)
    throw ArithError("derive_unit_equation: need at least two generators");
  UnitEquation eq;
  eq.recognition = rec;
  eq.target = rec.eval(det_d);
  eq.exponent = static_cast<unsigned>(generator_count - 1);
  eq.scalar_freedom = true;
  if (!qv_is_unit(eq.target))
    throw ArithError("derive_unit_equation: det(D) is not a unit in R/J");
  std::ostringstream os;
  os << "pattern " << instance_pattern << ": an isomorphism M1 = M2 forces det(D) = "
     << qv_str(eq.target) << " to lie in k*(units)^" << eq.exponent << " of "
     << rec.describe() << " (conormal module free of rank " << generator_count
     << ", dual comparison matrix a*D with det = a^" << generator_count
     << " det D = c a)";
  eq.derivation = os.str();
  return eq;
}

namespace {

// is s an n-th power in the scalar field k (times nothing)?
std::optional<FieldElement> scalar_nth_root(const FieldElement& s, unsigned n) {
  const FieldPtr& k = s.field();
  if (k->kind == FieldDescriptor::Kind::Rationals) {
    auto r = rational_nth_root(s.rat(), n);
    if (!r) return std::nullopt;
    return fe_rational(k, *r);
  }
  if (k->kind == FieldDescriptor::Kind::Prime) {
    for (unsigned long a = 0; a < k->p; ++a) {
      FieldElement cand = fe_int(k, static_cast<long>(a));
      if (cand.pow(n) == s) return cand;
    }
    return std::nullopt;
  }
  return std::nullopt;  // not needed for extension scalar fields
}

SolveResult check_witness(SolveResult r, const UnitEquation& eq) {
  if (r.status != SolveResult::Status::Solvable) return r;
  QuotientValue recon = qv_scale(qv_pow(r.witness, eq.exponent), r.scalar);
  if (!qv_eq(recon, eq.target))
    throw ArithError("solve_unit_equation: witness failed re-verification");
  return r;
}

}  // namespace

SolveResult solve_unit_equation(const UnitEquation& eq) {
  SolveResult res;
  const FieldPtr& k = eq.recognition.ring->field;
  unsigned n = eq.exponent;
  if (n == 0) throw ArithError("solve_unit_equation: exponent must be positive");

  switch (eq.recognition.kind) {
    case QuotientRecognition::Kind::Laurent: {
      const auto& lp = std::get<LaurentPoly>(eq.target);
      long e = lp.c.begin()->first;
      FieldElement coeff = lp.c.begin()->second;
      if (e % static_cast<long>(n) != 0) {
        res.status = SolveResult::Status::Unsolvable;
        std::ostringstream os;
        os << "units of k[z,z^-1] are c z^j, so an n-th power times a scalar has "
           << "z-exponent divisible by " << n << "; target exponent " << e
           << " satisfies " << e << " mod " << n << " = "
           << ((e % static_cast<long>(n)) + n) % n << " != 0";
        res.reason = os.str();
        return res;
      }
      if (eq.scalar_freedom) {
        res.status = SolveResult::Status::Solvable;
        res.witness = LaurentPoly::term(k, e / static_cast<long>(n), fe_one(k));
        res.scalar = coeff;
        return check_witness(res, eq);
      }
      auto root = scalar_nth_root(coeff, n);
      if (!root) {
        res.status = SolveResult::Status::Unsolvable;
        res.reason = "z-exponent divides, but the scalar " + coeff.str() +
                     " is not an n-th power in k";
        return res;
      }
      res.status = SolveResult::Status::Solvable;
      res.witness = LaurentPoly::term(k, e / static_cast<long>(n), *root);
      res.scalar = fe_one(k);
      return check_witness(res, eq);
    }

    case QuotientRecognition::Kind::Truncated: {
      const auto& tp = std::get<TruncPoly>(eq.target);
      size_t m = eq.recognition.trunc_m;
      unsigned long p = k->characteristic();

      if (p != 0 && n % p == 0) {
        // Frobenius: in characteristic p with x^m = 0 and m <= n, every n-th
        // power of a unit is a constant.  Verify constancy on a spanning set.
        if (m > n) {
          res.status = SolveResult::Status::Inconclusive;
          res.reason = "truncation order exceeds the Frobenius exponent";
          return res;
        }
        std::ostringstream os;
        os << "p-th powers of units are constants in k[x]/x^" << m << ": checked ";
        for (size_t jj = 1; jj < m; ++jj) {
          TruncPoly u = TruncPoly::constant(k, m, fe_one(k));
          u.c[jj] = fe_one(k);
          TruncPoly up = u.pow(n);
          if (!up.is_constant())
            throw ArithError("Frobenius constancy check failed");
          os << "(1+x^" << jj << ")^" << n << "=" << up.str() << " ";
        }
        if (!tp.is_constant()) {
          res.status = SolveResult::Status::Unsolvable;
          res.reason = os.str() + "; target " + tp.str() + " is not constant";
          return res;
        }
        // constant target
        if (eq.scalar_freedom) {
          res.status = SolveResult::Status::Solvable;
          res.witness = TruncPoly::constant(k, m, fe_one(k));
          res.scalar = tp.c[0];
          return check_witness(res, eq);
        }
        auto root = scalar_nth_root(tp.c[0], n);
        if (!root) {
          res.status = SolveResult::Status::Unsolvable;
          res.reason = "constant target is not an n-th power in k";
          return res;
        }
        res.status = SolveResult::Status::Solvable;
        res.witness = TruncPoly::constant(k, m, *root);
        res.scalar = fe_one(k);
        return check_witness(res, eq);
      }

      // n invertible in k (char 0, or p not dividing n with m <= p):
      // binomial-series root of the principal part, always decidable
      if (p != 0 && m > p) {
        res.status = SolveResult::Status::Inconclusive;
        res.reason = "factorials are not invertible up to the truncation order";
        return res;
      }
      FieldElement c0 = tp.c[0];
      TruncPoly v = tp * TruncPoly::constant(k, m, c0.inv());  // 1 + nilpotent
      TruncPoly root = TruncPoly::constant(k, m, fe_one(k));
      TruncPoly vpow = TruncPoly::constant(k, m, fe_one(k));
      FieldElement binom = fe_one(k);
      FieldElement ninv = fe_int(k, static_cast<long>(n)).inv();
      TruncPoly vminus1 = v + TruncPoly::constant(k, m, -fe_one(k));
      for (size_t kk = 1; kk < m; ++kk) {
        // binom(1/n, kk) = binom(1/n, kk-1) * (1/n - kk + 1) / kk
        binom = binom * (ninv - fe_int(k, static_cast<long>(kk) - 1)) /
                fe_int(k, static_cast<long>(kk));
        vpow = vpow * vminus1;
        TruncPoly term = vpow * TruncPoly::constant(k, m, binom);
        root = root + term;
      }
      if (!(root.pow(n) == v))
        throw ArithError("binomial-series root failed re-verification");
      if (eq.scalar_freedom) {
        res.status = SolveResult::Status::Solvable;
        res.witness = root;
        res.scalar = c0;
        return check_witness(res, eq);
      }
      auto srt = scalar_nth_root(c0, n);
      if (!srt) {
        res.status = SolveResult::Status::Unsolvable;
        res.reason = "principal part has an n-th root but the constant term " +
                     c0.str() + " is not an n-th power in k";
        return res;
      }
      res.status = SolveResult::Status::Solvable;
      res.witness = root * TruncPoly::constant(k, m, *srt);
      res.scalar = fe_one(k);
      return check_witness(res, eq);
    }

    case QuotientRecognition::Kind::Extension: {
      const auto& el = std::get<FieldElement>(eq.target);
      const FieldPtr& L = eq.recognition.ext_field;
      unsigned d = static_cast<unsigned>(L->extension_degree());
      if (d != n) {
        res.status = SolveResult::Status::Inconclusive;
        res.reason = "norm criterion needs exponent = extension degree";
        return res;
      }
      FieldElement nm = extension_norm(el);
      // target = s w^n implies N(target) = (s N(w))^n, an n-th power in k
      auto root = scalar_nth_root(nm, n);
      if (!root) {
        res.status = SolveResult::Status::Unsolvable;
        res.reason = "norm(target) = " + nm.str() +
                     " is not an n-th power in k, but any solution s*w^n has "
                     "norm (s*norm(w))^n";
        return res;
      }
      res.status = SolveResult::Status::Inconclusive;
      res.reason = "norm criterion is only a sufficient refutation; norm(target) = " +
                   nm.str() + " is the n-th power of " + root->str();
      return res;
    }
  }
  throw ArithError("unreachable");
}

}  // namespace cancelab
