#include <random>

#include "cancelab/parser.hpp"
#include "doctest.h"

using namespace cancelab;

namespace {

RingPtr ring4(MonomialOrder ord = MonomialOrder::grevlex()) {
  return RingDescriptor::make(FieldDescriptor::rationals(), {"x", "y", "z", "t"}, ord);
}

Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> ed(0, maxdeg);
  std::uniform_int_distribution<long> cd(-9, 9);
  std::vector<Term> terms;
  for (int i = 0; i < nterms; ++i) {
    Monomial m = Monomial::one(r->nvars());
    int budget = maxdeg;
    for (size_t v = 0; v < r->nvars(); ++v) {
      int e = std::min(budget, ed(rng));
      m.e[v] = e;
      budget -= e;
    }
    long c = cd(rng);
    if (r->field->kind == FieldDescriptor::Kind::Prime) c = std::abs(c);
    terms.push_back({std::move(m), fe_int(r->field, c)});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

Monomial random_mono(size_t nvars, std::mt19937& rng, int maxe) {
  std::uniform_int_distribution<int> ed(0, maxe);
  Monomial m = Monomial::one(nvars);
  for (size_t i = 0; i < nvars; ++i) m.e[i] = ed(rng);
  return m;
}

}  // namespace

TEST_CASE("parse basic forms") {
  auto r = ring4();
  Polynomial f = parse_polynomial("z*t-1", r);
  CHECK(f.terms().size() == 2);
  CHECK(f.str() == "z*t-1");
  CHECK(parse_polynomial("x^0", r).is_one());
  CHECK(parse_polynomial("  x ^ 2 * y - 3/2 ", r).str() == "x^2*y-3/2");
  CHECK_THROWS_AS(parse_polynomial("", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("q+1", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^", r), ParseError);
}

TEST_CASE("parse over GF(2) with parenthesized factor") {
  auto r = RingDescriptor::make(FieldDescriptor::prime(2), {"x", "y", "z"});
  Polynomial f = parse_polynomial("(1+x)*y", r);
  Polynomial expected = parse_polynomial("y + x*y", r);
  CHECK(f == expected);
  // Frobenius: (1+x)^2 = 1+x^2 in characteristic 2
  CHECK(parse_polynomial("(1+x)^2", r) == parse_polynomial("1+x^2", r));
}

TEST_CASE("parse extension generator coefficients") {
  auto L = FieldDescriptor::parse("QQ(w)/(w^2-2)");
  auto r = RingDescriptor::make(L, {"x"});
  Polynomial f = parse_polynomial("w*x + 1/2", r);
  CHECK(f.terms().size() == 2);
  CHECK(f.leading_term().coeff == fe_generator(L));
  Polynomial g = parse_polynomial("(w^2+w)*x", r);  // w^2 reduces to 2
  CHECK(g.leading_term().coeff == fe_generator(L) + fe_int(L, 2));
  CHECK(g.str() == "(w+2)*x");
}

TEST_CASE("cofactor identity from the membership witness") {
  auto r = ring4();
  Polynomial y = parse_polynomial("y", r);
  Polynomial lhs = parse_polynomial("t*(y*z) - y*(z*t-1)", r);
  CHECK(lhs == y);
  std::mt19937 rng(3);
  Polynomial f = random_poly(r, rng, 3, 4);
  CHECK((f * Polynomial::zero(r)).is_zero());
}

TEST_CASE("leading terms under orders") {
  auto r = ring4(MonomialOrder::lex());
  CHECK(parse_polynomial("z*t-1", r).leading_term().mono ==
        parse_polynomial("z*t", r).leading_term().mono);
  CHECK(parse_polynomial("x+y", r).leading_term().mono ==
        parse_polynomial("x", r).leading_term().mono);
  auto rg = ring4(MonomialOrder::grevlex());
  CHECK(parse_polynomial("x+y^2", rg).leading_term().mono ==
        parse_polynomial("y^2", rg).leading_term().mono);
}

TEST_CASE("division examples") {
  auto r = RingDescriptor::make(FieldDescriptor::rationals(), {"x", "y"});
  auto f = parse_polynomial("x^2+x*y", r);
  auto res = multivariate_division(f, {parse_polynomial("x", r)});
  CHECK(res.remainder.is_zero());
  CHECK(res.quotients[0] == parse_polynomial("x+y", r));

  auto r4 = ring4(MonomialOrder::lex());
  auto y = parse_polynomial("y", r4);
  auto res2 = multivariate_division(
      y, parse_polynomial_list("x; y*z; z*t-1", r4), MonomialOrder::lex());
  CHECK(res2.remainder == y);

  auto res3 = multivariate_division(Polynomial::zero(r4),
                                    parse_polynomial_list("x; y", r4));
  CHECK(res3.remainder.is_zero());
  CHECK(res3.quotients[0].is_zero());
}

TEST_CASE("division identity on random instances over GF(5)") {
  auto r = RingDescriptor::make(FieldDescriptor::prime(5), {"x", "y", "z"});
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> nd(1, 3);
  int done = 0;
  while (done < 500) {
    Polynomial f = random_poly(r, rng, 4, 5);
    std::vector<Polynomial> divs;
    int n = nd(rng);
    for (int i = 0; i < n; ++i) {
      Polynomial g = random_poly(r, rng, 3, 3);
      if (!g.is_zero()) divs.push_back(g);
    }
    if (divs.empty()) continue;
    auto res = multivariate_division(f, divs);
    Polynomial back = res.remainder;
    for (size_t i = 0; i < divs.size(); ++i) back = back + res.quotients[i] * divs[i];
    CHECK(back == f);
    // no remainder term divisible by a lead monomial
    for (const auto& t : res.remainder.terms())
      for (const auto& g : divs)
        CHECK(!g.leading_term().mono.divides(t.mono));
    ++done;
  }
}

TEST_CASE("order axioms on random monomial triples") {
  std::mt19937 rng(29);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grevlex(),
                                    MonomialOrder::block(2)};
  for (const auto& ord : orders) {
    for (int i = 0; i < 1000; ++i) {
      Monomial a = random_mono(4, rng, 3), b = random_mono(4, rng, 3),
               c = random_mono(4, rng, 3);
      // antisymmetry
      CHECK(ord.compare(a, b) == -ord.compare(b, a));
      // transitivity
      if (ord.compare(a, b) <= 0 && ord.compare(b, c) <= 0)
        CHECK(ord.compare(a, c) <= 0);
      // multiplicativity
      CHECK(ord.compare(a * c, b * c) == ord.compare(a, b));
      // 1 is minimal
      CHECK(ord.compare(Monomial::one(4), a) <= 0);
    }
  }
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(31);
  std::vector<RingPtr> rings{
      ring4(), RingDescriptor::make(FieldDescriptor::prime(7), {"x", "y"}),
      RingDescriptor::make(FieldDescriptor::parse("QQ(w)/(w^3-2)"), {"x", "y"})};
  int done = 0;
  while (done < 200) {
    for (const auto& r : rings) {
      Polynomial f = random_poly(r, rng, 4, 4);
      if (r->field->kind == FieldDescriptor::Kind::Extension) {
        // mix in generator coefficients
        f = f.scale(fe_generator(r->field) + fe_int(r->field, 1));
      }
      Polynomial g = parse_polynomial(f.str(), r);
      CHECK(g == f);
      ++done;
    }
  }
}

TEST_CASE("substitute and transport") {
  auto r = ring4();
  auto f = parse_polynomial("x*t^2 + z", r);
  auto sub = f.substitute(3, Polynomial::from_int(r, 1));
  CHECK(sub == parse_polynomial("x+z", r));
  auto r3 = RingDescriptor::make(FieldDescriptor::rationals(), {"x", "y", "z"});
  CHECK(sub.transport(r3) == parse_polynomial("x+z", r3));
  CHECK_THROWS_AS(f.transport(r3), ArithError);
}
