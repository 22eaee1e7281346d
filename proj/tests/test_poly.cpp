#include "doctest.h"

#include <algorithm>

#include "kahler/error.hpp"
#include "kahler/poly.hpp"
#include "kahler/random.hpp"

using namespace kahler;

namespace {

const FieldDescriptor& QQ = FieldDescriptor::rationals();

RingPtr xy(const FieldDescriptor& f = QQ, std::vector<int> w = {}) { return PolyRing::make(f, {"X", "Y"}, w); }

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

}  // namespace

TEST_CASE("products") {
  auto r = xy();
  CHECK(P(r, "X+Y") * P(r, "X-Y") == P(r, "X^2-Y^2"));
  auto r2 = xy(FieldDescriptor::prime_field(2));
  CHECK(P(r2, "X+Y").pow(2) == P(r2, "X^2+Y^2"));
  Polynomial F = P(r, "X^2*Y^2 + X^5 + Y^5");
  CHECK(F.coefficient(Monomial{2, 2}) == QQ.one());
  CHECK(F.coefficient(Monomial{1, 1}) == QQ.zero());
  CHECK(F.size() == 3);
}

TEST_CASE("partial derivatives of F") {
  auto r = xy();
  Polynomial F = P(r, "X^2*Y^2 + X^5 + Y^5");
  CHECK(F.partial_derivative("X") == P(r, "X*(2*Y^2 + 5*X^3)"));
  CHECK(F.partial_derivative("X") == P(r, "2*X*Y^2 + 5*X^4"));
  CHECK(F.partial_derivative("Y") == P(r, "Y*(2*X^2 + 5*Y^3)"));
  CHECK(P(r, "Y^3").partial_derivative("X").is_zero());
}

TEST_CASE("weighted degrees") {
  CHECK(P(xy(), "X^2*Y^2").weighted_degree() == 4);
  auto r21 = xy(QQ, {2, 1});
  CHECK(P(r21, "X + Y^2").weighted_degree() == 2);
  auto r12 = xy(QQ, {1, 2});
  Polynomial f = P(r12, "X + Y");
  CHECK_FALSE(f.is_homogeneous());
  auto parts = f.homogeneous_components();
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(1) == P(r12, "X"));
  CHECK(parts.at(2) == P(r12, "Y"));
  CHECK_THROWS(PolyRing::make(QQ, {"X"}, {0}));
  CHECK_THROWS(PolyRing::make(QQ, {"X", "X"}));
}

TEST_CASE("Euler operator examples") {
  auto r = xy();
  CHECK(euler_apply(P(r, "X^2*Y^3")) == P(r, "5*X^2*Y^3"));
  Polynomial F = P(r, "X^2*Y^2 + X^5 + Y^5");
  CHECK(euler_apply(F) == P(r, "X") * F.partial_derivative(0) + P(r, "Y") * F.partial_derivative(1));
  CHECK(F - euler_apply(F).scale(QQ.from_int(5).inverse()) == P(r, "1/5*X^2*Y^2"));
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto rp = PolyRing::make(FieldDescriptor::prime_field(p), {"X"});
    CHECK(euler_apply(rp->variable(0).pow(p)).is_zero());
  }
}

TEST_CASE("renaming") {
  auto r = xy();
  auto r1 = PolyRing::make(QQ, {"X1", "Y1"});
  Polynomial XF1 = P(r, "X*(2*Y^2 + 5*X^3)");
  CHECK(rename_variables(XF1, r1, {{"X", "X1"}, {"Y", "Y1"}}) == P(r1, "X1*(2*Y1^2 + 5*X1^3)"));
  CHECK(rename_variables(XF1, r, {{"X", "X"}, {"Y", "Y"}}) == XF1);
  auto rz = PolyRing::make(QQ, {"Z"});
  CHECK_THROWS_AS(rename_variables(P(r, "X+Y"), rz, {{"X", "Z"}, {"Y", "Z"}}), Error);
}

TEST_CASE("parse errors carry columns") {
  auto r = xy();
  try {
    parse_polynomial("X^2 + * Y", r);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_polynomial("X + W", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(X + Y", r), ParseError);
}

TEST_CASE("printing round-trips") {
  Rng rng(3);
  for (const auto* f : {&QQ, &FieldDescriptor::prime_field(7), &FieldDescriptor::rational_functions(3)}) {
    auto r = PolyRing::make(*f, {"X", "Y", "Z"}, {1, 2, 3});
    for (int i = 0; i < 40; ++i) {
      Polynomial g = random_polynomial(r, 0, 5, 5, rng);
      CHECK(parse_polynomial(g.to_string(), r) == g);
    }
  }
}

TEST_CASE("Euler identity on random homogeneous polynomials") {
  Rng rng(5);
  for (const auto* f : {&QQ, &FieldDescriptor::prime_field(2), &FieldDescriptor::prime_field(3),
                        &FieldDescriptor::prime_field(5), &FieldDescriptor::rational_functions(2)}) {
    for (int i = 0; i < 40; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
      std::vector<std::string> names;
      std::vector<int> w;
      for (std::size_t k = 0; k < n; ++k) {
        names.push_back("V" + std::to_string(k));
        w.push_back(static_cast<int>(rng.range(1, 4)));
      }
      auto r = PolyRing::make(*f, names, w);
      long d = rng.range(1, 12);
      Polynomial g = random_homogeneous(r, d, 6, rng);
      CHECK(euler_apply(g) == g.scale(f->from_int(d)));
      Polynomial h = random_homogeneous(r, rng.range(1, 8), 4, rng);
      // A derivation: additive and Leibniz.
      CHECK(euler_apply(g + h) == euler_apply(g) + euler_apply(h));
      CHECK(euler_apply(g * h) == euler_apply(g) * h + g * euler_apply(h));
    }
  }
}

TEST_CASE("mixed partials commute") {
  Rng rng(9);
  auto r = PolyRing::make(FieldDescriptor::prime_field(3), {"X", "Y", "Z"});
  auto q = PolyRing::make(QQ, {"X", "Y", "Z"});
  for (const auto& ring : {r, q})
    for (int i = 0; i < 50; ++i) {
      Polynomial g = random_polynomial(ring, 0, 6, 6, rng);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
          CHECK(g.partial_derivative(a).partial_derivative(b) == g.partial_derivative(b).partial_derivative(a));
    }
}

TEST_CASE("canonical form ignores term order") {
  Rng rng(13);
  auto r = PolyRing::make(QQ, {"X", "Y"});
  for (int i = 0; i < 30; ++i) {
    Polynomial g = random_polynomial(r, 0, 5, 8, rng);
    std::vector<Term> terms = g.terms();
    std::reverse(terms.begin(), terms.end());
    // Duplicate a term split in two halves.
    if (!terms.empty()) {
      Term t = terms.front();
      FieldElement half = QQ.from_int(2).inverse();
      terms.front().coeff = t.coeff * half;
      terms.push_back({t.mono, t.coeff * half});
    }
    CHECK(Polynomial::from_terms(r, terms) == g);
  }
}

TEST_CASE("lex and grevlex leading terms") {
  auto g = PolyRing::make(QQ, {"X", "Y"});
  auto l = PolyRing::make(QQ, {"X", "Y"}, {}, MonomialOrder::Lex);
  CHECK(P(g, "X + Y^2").leading_monomial() == Monomial{0, 2});
  CHECK(P(l, "X + Y^2").leading_monomial() == Monomial{1, 0});
  CHECK(P(g, "X*Y^2 + X^2*Y").leading_monomial() == Monomial{2, 1});
}

TEST_CASE("module vectors") {
  auto r = xy();
  auto v = ModuleVector::from_components(r, {P(r, "X"), P(r, "Y^2")});
  CHECK(v.leading_term().component == 0);
  CHECK((v - v).is_zero());
  CHECK((v * P(r, "X")).component(1) == P(r, "X*Y^2"));
  CHECK(v.to_string() == "(X, Y^2)");
}
