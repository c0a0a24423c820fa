#include <random>

#include "cancelab/groebner.hpp"
#include "cancelab/parser.hpp"
#include "doctest.h"

using namespace cancelab;

namespace {

RingPtr ring4(MonomialOrder ord = MonomialOrder::grevlex()) {
  return RingDescriptor::make(FieldDescriptor::rationals(), {"x", "y", "z", "t"}, ord);
}

Ideal mk(const RingPtr& r, const std::string& gens) {
  return Ideal::make(r, parse_polynomial_list(gens, r));
}

Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> ed(0, maxdeg);
  std::uniform_int_distribution<long> cd(0, static_cast<long>(r->field->p) - 1);
  std::vector<Term> terms;
  for (int i = 0; i < nterms; ++i) {
    Monomial m = Monomial::one(r->nvars());
    int budget = maxdeg;
    for (size_t v = 0; v < r->nvars(); ++v) {
      int e = std::min(budget, ed(rng));
      m.e[v] = e;
      budget -= e;
    }
    terms.push_back({std::move(m), fe_int(r->field, cd(rng))});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

}  // namespace

TEST_CASE("regular sequence is its own basis") {
  auto r = ring4(MonomialOrder::lex());
  auto G = buchberger(mk(r, "x; y; z*t-1"));
  CHECK(G.basis().size() == 3);
  CHECK(G.str() == "{x, y, z*t-1}");
}

TEST_CASE("y enters the basis of (x, yz, zt-1)") {
  auto r = ring4();
  auto G = buchberger(mk(r, "x; y*z; z*t-1"));
  auto H = buchberger(mk(r, "x; y; z*t-1"));
  CHECK(ideal_equal(G, H));
  CHECK(G.basis().size() == 3);
  CHECK(G.contains(parse_polynomial("y", r)));
}

TEST_CASE("principal ideal normalizes to monic") {
  auto r = ring4();
  auto G = buchberger(mk(r, "3*x^2-3"));
  CHECK(G.basis().size() == 1);
  CHECK(G.basis()[0] == parse_polynomial("x^2-1", r));
}

TEST_CASE("normal forms") {
  auto r = ring4();
  auto G = buchberger(mk(r, "x; y*z; z*t-1"));
  CHECK(G.normal_form(parse_polynomial("y", r)).is_zero());
  auto H = buchberger(mk(r, "x; y; z*t-1"));
  CHECK(H.normal_form(parse_polynomial("z", r)) == parse_polynomial("z", r));
  auto P = buchberger(mk(r, "x^2*y - z"));
  CHECK(P.normal_form(parse_polynomial("x^2*y - z", r)).is_zero());
}

TEST_CASE("normal form is idempotent and additive") {
  auto r = RingDescriptor::make(FieldDescriptor::prime(5), {"x", "y"});
  std::mt19937 rng(41);
  for (int i = 0; i < 40; ++i) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 2; ++j) {
      auto g = random_poly(r, rng, 2, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    auto G = buchberger(Ideal::make(r, gens));
    Polynomial f = random_poly(r, rng, 3, 4);
    Polynomial g = random_poly(r, rng, 3, 4);
    CHECK(G.normal_form(G.normal_form(f)) == G.normal_form(f));
    CHECK(G.normal_form(f + g) == G.normal_form(G.normal_form(f) + G.normal_form(g)));
  }
}

TEST_CASE("membership certificates re-expand") {
  auto r = ring4();
  auto I = mk(r, "x; y*z; z*t-1");
  auto cert = ideal_member(parse_polynomial("y", r), I);
  REQUIRE(cert.member);
  Polynomial back = Polynomial::zero(r);
  for (size_t i = 0; i < I.gens.size(); ++i)
    back = back + cert.cofactors[i] * I.gens[i];
  CHECK(back == parse_polynomial("y", r));

  CHECK(!ideal_member(Polynomial::from_int(r, 1), mk(r, "x; y; z*t-1")).member);

  auto I2 = mk(r, "x^2-y; y*t");
  auto c2 = ideal_member(I2.gens[0], I2);
  REQUIRE(c2.member);
  Polynomial back2 = Polynomial::zero(r);
  for (size_t i = 0; i < I2.gens.size(); ++i)
    back2 = back2 + c2.cofactors[i] * I2.gens[i];
  CHECK(back2 == I2.gens[0]);
}

TEST_CASE("ideal equality across generator sets") {
  auto r = ring4();
  CHECK(ideal_equal(mk(r, "x; y; z*t-1"), mk(r, "x; y*z; z*t-1")));
  CHECK(!ideal_equal(mk(r, "x"), mk(r, "x^2")));
  // rank-family ideals, n = 2
  CHECK(ideal_equal(mk(r, "x^2; x*y; y^2; z*t-1"),
                    mk(r, "z*x^2; x*y; y^2; z*t-1")));
}

TEST_CASE("reduced basis is unique for an ideal") {
  auto r = ring4();
  auto G1 = buchberger(mk(r, "x; y*z; z*t-1"));
  auto G2 = buchberger(mk(r, "x + y*z; y*z; z*t-1 + x"));
  REQUIRE(G1.basis().size() == G2.basis().size());
  for (size_t i = 0; i < G1.basis().size(); ++i)
    CHECK(G1.basis()[i] == G2.basis()[i]);
}

TEST_CASE("reduced basis is invariant under generator scrambling") {
  auto r = RingDescriptor::make(FieldDescriptor::prime(5), {"x", "y"});
  std::mt19937 rng(977);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) {
      auto g = random_poly(r, rng, 2, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.size() < 2) continue;
    // scramble: replace g0 by g0 + h g1 and append a random combination
    std::vector<Polynomial> scrambled = gens;
    scrambled[0] = scrambled[0] + random_poly(r, rng, 2, 2) * scrambled[1];
    Polynomial combo = Polynomial::zero(r);
    for (const auto& g : gens) combo = combo + random_poly(r, rng, 1, 2) * g;
    if (scrambled[0].is_zero()) scrambled[0] = gens[0];
    if (!combo.is_zero()) scrambled.push_back(combo);
    auto G1 = buchberger(Ideal::make(r, gens));
    auto G2 = buchberger(Ideal::make(r, scrambled));
    REQUIRE(G1.basis().size() == G2.basis().size());
    for (size_t i = 0; i < G1.basis().size(); ++i)
      CHECK(G1.basis()[i] == G2.basis()[i]);
  }
}

TEST_CASE("krull dimension") {
  auto r = ring4();
  CHECK(krull_dim(mk(r, "x; y; z*t-1")) == 1);
  auto r3 = RingDescriptor::make(FieldDescriptor::prime(5), {"x", "y", "z"});
  CHECK(krull_dim(mk(r3, "x^5; y; z")) == 0);
  CHECK(krull_dim(Ideal{r, {}}) == 4);
  CHECK(krull_dim(mk(r, "x; 1-x")) == -1);
}

TEST_CASE("power in ideal") {
  auto r = ring4();
  auto I = mk(r, "x^2; x*y; y^2; z*t-1");
  CHECK(power_in_ideal(parse_polynomial("x", r), I, 10) == 2);
  auto f = parse_polynomial("x^2-t", r);
  CHECK(power_in_ideal(f, Ideal::make(r, {f}), 3) == 1);
  CHECK(!power_in_ideal(parse_polynomial("z", r), mk(r, "x; y; z*t-1"), 20).has_value());
}

TEST_CASE("resource caps raise explicit failures") {
  auto r = ring4();
  Limits tight;
  tight.max_steps = 3;
  CHECK_THROWS_AS(buchberger(mk(r, "x^3*y - z*t; x*z^2 - y^2*t; y^3 - x^2"),
                             MonomialOrder::grevlex(), tight),
                  ResourceLimitError);
}

// brute-force membership decision: look for cofactors of degree <= capdeg by
// linear algebra over GF(p)
namespace {

std::vector<Monomial> monos_up_to(size_t nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  // iterate over the exponent box and filter by total degree
  while (true) {
    int tot = 0;
    for (int x : e) tot += x;
    if (tot <= d) out.push_back(Monomial{e});
    size_t i = 0;
    while (i < nvars) {
      if (++e[i] > d) {
        e[i] = 0;
        ++i;
      } else {
        break;
      }
    }
    if (i == nvars) break;
  }
  return out;
}

// dense linear solve over GF(p): A x = b, returns any solution
std::optional<std::vector<unsigned long>> solve_mod_p(
    std::vector<std::vector<unsigned long>> a, std::vector<unsigned long> b,
    unsigned long p) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  auto inv = [&](unsigned long x) {
    unsigned long r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<int> pivot_col(rows, -1);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::swap(b[piv], b[rank]);
    unsigned long iv = inv(a[rank][c]);
    for (size_t k = c; k < cols; ++k) a[rank][k] = a[rank][k] * iv % p;
    b[rank] = b[rank] * iv % p;
    for (size_t r2 = 0; r2 < rows; ++r2) {
      if (r2 == rank || a[r2][c] == 0) continue;
      unsigned long f = a[r2][c];
      for (size_t k = c; k < cols; ++k)
        a[r2][k] = (a[r2][k] + (p - f) * a[rank][k]) % p;
      b[r2] = (b[r2] + (p - f) * b[rank]) % p;
    }
    pivot_col[rank] = static_cast<int>(c);
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<unsigned long> x(cols, 0);
  for (size_t r = 0; r < rank; ++r) x[static_cast<size_t>(pivot_col[r])] = b[r];
  return x;
}

bool oracle_member(const Polynomial& f, const Ideal& I, int capdeg) {
  const auto& r = I.ring;
  unsigned long p = r->field->p;
  auto cof_monos = monos_up_to(r->nvars(), capdeg);
  int eqdeg = capdeg + 2;  // generators have degree <= 2
  auto eq_monos = monos_up_to(r->nvars(), eqdeg);
  auto mono_index = [&](const Monomial& m) -> int {
    for (size_t i = 0; i < eq_monos.size(); ++i)
      if (eq_monos[i] == m) return static_cast<int>(i);
    return -1;
  };
  size_t cols = cof_monos.size() * I.gens.size();
  std::vector<std::vector<unsigned long>> A(
      eq_monos.size(), std::vector<unsigned long>(cols, 0));
  for (size_t gi = 0; gi < I.gens.size(); ++gi) {
    for (size_t mi = 0; mi < cof_monos.size(); ++mi) {
      size_t col = gi * cof_monos.size() + mi;
      Polynomial prod = I.gens[gi].mult_term(cof_monos[mi], fe_one(r->field));
      for (const auto& t : prod.terms()) {
        int row = mono_index(t.mono);
        REQUIRE(row >= 0);
        A[static_cast<size_t>(row)][col] = t.coeff.residue();
      }
    }
  }
  std::vector<unsigned long> b(eq_monos.size(), 0);
  for (const auto& t : f.terms()) {
    int row = mono_index(t.mono);
    if (row < 0) return false;
    b[static_cast<size_t>(row)] = t.coeff.residue();
  }
  return solve_mod_p(std::move(A), std::move(b), p).has_value();
}

}  // namespace

TEST_CASE("membership agrees with the linear-algebra oracle") {
  auto r = RingDescriptor::make(FieldDescriptor::prime(5), {"x", "y"});
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> ngens(1, 3);
  int done = 0;
  while (done < 50) {
    std::vector<Polynomial> gens;
    int n = ngens(rng);
    for (int i = 0; i < n; ++i) {
      auto g = random_poly(r, rng, 2, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Ideal I = Ideal::make(r, gens);
    auto G = buchberger(I);
    // one engineered member and one random probe per ideal
    Polynomial mem = Polynomial::zero(r);
    for (const auto& g : gens) mem = mem + random_poly(r, rng, 2, 2) * g;
    Polynomial probe = random_poly(r, rng, 2, 3);
    for (const Polynomial& f : {mem, probe}) {
      auto cert = ideal_member(f, G);
      CHECK(cert.member == oracle_member(f, I, 4));
      if (cert.member) {
        Polynomial back = Polynomial::zero(r);
        for (size_t i = 0; i < gens.size(); ++i)
          back = back + cert.cofactors[i] * gens[i];
        CHECK(back == f);
      }
    }
    ++done;
  }
}
