#include "doctest.h"

#include "kahler/algebra.hpp"
#include "kahler/error.hpp"
#include "kahler/presentation_io.hpp"
#include "oracles.hpp"

using namespace kahler;

namespace {

const FieldDescriptor& QQ = FieldDescriptor::rationals();

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

AlgebraPtr quotient(const FieldDescriptor& f, std::vector<std::string> vars, std::initializer_list<const char*> rels,
                    PresentationMode mode = PresentationMode::Plain) {
  Presentation p;
  p.ring = PolyRing::make(f, std::move(vars));
  for (auto s : rels) p.relations.push_back(P(p.ring, s));
  p.mode = mode;
  return make_quotient(p);
}

AlgebraPtr b5() { return quotient(QQ, {"X", "Y"}, {"X*(2*Y^2 + 5*X^3)", "Y*(2*X^2 + 5*Y^3)"}, PresentationMode::Local); }

// All products of `k` staircase generators vanish: m^k = 0.
bool max_ideal_power_vanishes(const QuotientAlgebra& a, std::size_t k) {
  std::vector<Polynomial> layer{a.ring()->one()};
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<Polynomial> next;
    for (const auto& p : layer)
      for (std::size_t i = 0; i < a.ring()->nvars(); ++i) {
        Polynomial q = a.multiply(p, a.variable(i));
        if (!q.is_zero()) next.push_back(q);
      }
    layer = std::move(next);
  }
  return layer.empty();
}

}  // namespace

TEST_CASE("quotient dimensions") {
  auto dual = quotient(QQ, {"Z"}, {"Z^2"});
  CHECK(dual->dim() == 2);
  CHECK(dual->staircase() == std::vector<Monomial>{Monomial{0}, Monomial{1}});
  for (unsigned t = 1; t <= 9; ++t) {
    Presentation p;
    p.ring = PolyRing::make(QQ, {"z"});
    p.relations.push_back(p.ring->variable(0).pow(t));
    CHECK(make_quotient(p)->dim() == t);
  }
  auto line = quotient(QQ, {"X"}, {});
  CHECK(line->dimension().kind == Dimension::Kind::Infinite);
  CHECK_THROWS(line->dim());
}

TEST_CASE("local model") {
  CHECK(quotient(QQ, {"X", "Y"}, {"X^2", "Y^3"}, PresentationMode::Local)->dim() == 6);
  CHECK_THROWS_AS(quotient(QQ, {"X", "Y"}, {"X"}, PresentationMode::Local), NotPrimaryError);
  AlgebraOptions small;
  small.truncation_cap = 4;
  auto r = PolyRing::make(QQ, {"X", "Y"});
  CHECK_THROWS_AS(artinian_local_model(r, {P(r, "X^2 - Y^5")}, small), NotPrimaryError);
}

TEST_CASE("B(5) against the truncation oracle") {
  auto r = PolyRing::make(QQ, {"X", "Y"});
  std::vector<Polynomial> gens{P(r, "2*X*Y^2 + 5*X^4"), P(r, "2*X^2*Y + 5*Y^4")};
  auto o = oracle::stabilized_dimension(r, gens);
  REQUIRE(o.has_value());
  // Frozen from the oracle.
  CHECK(o->order == 6);
  CHECK(o->dimension == 11);
  auto a = artinian_local_model(r, gens);
  CHECK(a->dim() == o->dimension);
  CHECK(a->truncation_order() == o->order);
  // Stable past N: the truncations at N+1, N+2 have the same dimension.
  CHECK(oracle::truncated_dimension(r, gens, o->order + 1) == a->dim());
  CHECK(oracle::truncated_dimension(r, gens, o->order + 2) == a->dim());
}

TEST_CASE("B(6) and B(7) against the truncation oracle") {
  auto r = PolyRing::make(QQ, {"X", "Y"});
  struct Row {
    const char* g1;
    const char* g2;
    long order;
    std::size_t dim;
  };
  for (const Row& row : {Row{"2*X*Y^2 + 6*X^5", "2*X^2*Y + 6*Y^5", 7, 13},
                         Row{"2*X*Y^2 + 7*X^6", "2*X^2*Y + 7*Y^6", 8, 15}}) {
    std::vector<Polynomial> gens{P(r, row.g1), P(r, row.g2)};
    auto o = oracle::stabilized_dimension(r, gens);
    REQUIRE(o.has_value());
    CHECK(o->order == row.order);
    CHECK(o->dimension == row.dim);
    CHECK(artinian_local_model(r, gens)->dim() == row.dim);
  }
}

TEST_CASE("element arithmetic in B(5)") {
  auto b = b5();
  auto r = b->ring();
  Polynomial f = P(r, "X^2*Y^2 + X^5 + Y^5");
  CHECK_FALSE(b->is_zero(f));
  CHECK(b->is_zero(b->multiply(f, f)));
  CHECK(b->is_zero(P(r, "X*Y^3")));
  CHECK(b->equal(f, P(r, "1/5*X^2*Y^2")));
  CHECK(nilpotency_index(*b, f) == 2u);
  CHECK(max_ideal_power_vanishes(*b, b->dim()));
  auto coords = b->coordinates(f);
  CHECK(b->from_coordinates(coords) == b->reduce(f));
}

TEST_CASE("tensor products") {
  auto a = quotient(QQ, {"Z"}, {"Z^2"});
  auto c = quotient(QQ, {"W"}, {"W^2"});
  auto t = make_quotient(tensor_product(*a, *c));
  CHECK(t->dim() == 4);
  CHECK(t->ring()->names() == std::vector<std::string>{"Z#1", "W#2"});

  auto k = quotient(QQ, {}, {});
  CHECK(k->dim() == 1);
  CHECK(make_quotient(tensor_product(*a, *k))->dim() == a->dim());

  auto b = b5();
  auto bb = make_quotient(tensor_product(*b, *b));
  CHECK(bb->dim() == b->dim() * b->dim());
  // Direct staircase of the union presentation.
  Presentation u = tensor_product(*b, *b);
  u.mode = PresentationMode::Plain;
  CHECK(make_quotient(u)->dim() == 121);

  auto f2 = quotient(FieldDescriptor::prime_field(2), {"Z"}, {"Z^2"});
  CHECK_THROWS_AS(tensor_product(*a, *f2), MismatchError);
}

TEST_CASE("quotients") {
  auto a = quotient(QQ, {"Z"}, {"Z^2"});
  CHECK(quotient_by(*a, {P(a->ring(), "Z")})->dim() == 1);
  CHECK(quotient_by(*a, {Polynomial(a->ring())})->dim() == 2);
}

TEST_CASE("algebra maps") {
  auto a = quotient(QQ, {"Z"}, {"Z^2"});
  auto k = quotient(QQ, {}, {});
  auto kr = k->ring();
  try {
    make_map(a, k, {kr->one()});
    FAIL("accepted");
  } catch (const NotARingMap& e) {
    CHECK(std::string(e.what()).find("Z^2") != std::string::npos);
  }
  auto to_k = make_map(a, k, {Polynomial(kr)});
  CHECK(linear_matrix(to_k).rank() == 1);
  CHECK_FALSE(is_injective(to_k));
  auto id = identity_map(a);
  CHECK(linear_matrix(id).rank() == 2);
  CHECK(is_injective(id));
  auto b = b5();
  CHECK(is_injective(identity_map(b)));
  AlgebraMap idb = identity_map(b);
  for (const auto& c : idb.certificate()) CHECK(c.is_zero());
}

TEST_CASE("Frobenius-type transitions") {
  const auto& F3 = FieldDescriptor::prime_field(3);
  auto a1 = quotient(F3, {"Y"}, {"Y^3"});
  auto a2 = quotient(F3, {"Y"}, {"Y^9"});
  auto a3 = quotient(F3, {"Y"}, {"Y^27"});
  auto f = make_map(a1, a2, {P(a2->ring(), "Y^3")});
  auto g = make_map(a2, a3, {P(a3->ring(), "Y^3")});
  CHECK(is_injective(f));
  CHECK(linear_matrix(compose(g, f)) == linear_matrix(g) * linear_matrix(f));
  // (Y+1)^3 = Y^3 + 1 is not zero in F_3[Y]/(Y^4).
  auto a4 = quotient(F3, {"Y"}, {"Y^4"});
  CHECK_THROWS_AS(make_map(a1, a4, {P(a4->ring(), "Y+1")}), NotARingMap);
}

TEST_CASE("composition matrices") {
  auto b = b5();
  auto r = b->ring();
  // Swapping X and Y exchanges the two relations.
  auto swap = make_map(b, b, {P(r, "Y"), P(r, "X")});
  CHECK(linear_matrix(compose(swap, swap)) == linear_matrix(swap) * linear_matrix(swap));
  CHECK(linear_matrix(compose(swap, swap)) == linear_matrix(identity_map(b)));
  CHECK_THROWS_AS(make_map(b, b, {P(r, "-X"), P(r, "Y")}), NotARingMap);
}

TEST_CASE("nilpotency and locality") {
  auto a = quotient(QQ, {"Z"}, {"Z^2"});
  CHECK(nilpotency_index(*a, P(a->ring(), "Z")) == 2u);
  CHECK_FALSE(nilpotency_index(*a, a->ring()->one()).has_value());
  CHECK_FALSE(nilpotency_index(*a, P(a->ring(), "1 + Z")).has_value());
  CHECK(is_local_with_nilpotent_generators(*a));
  CHECK(has_nonzero_nilpotent(*a));

  auto b = b5();
  CHECK(is_local_with_nilpotent_generators(*b));
  CHECK(has_nonzero_nilpotent(*b));

  auto k = quotient(QQ, {}, {});
  CHECK(is_local_with_nilpotent_generators(*k));
  CHECK_FALSE(has_nonzero_nilpotent(*k));

  auto split = quotient(QQ, {"Z"}, {"Z^2 - 1"});
  CHECK_FALSE(is_local_with_nilpotent_generators(*split));
  CHECK_THROWS(has_nonzero_nilpotent(*split));
}

TEST_CASE("m^dim vanishes on small local algebras") {
  for (auto a : {quotient(QQ, {"X", "Y"}, {"X^2", "Y^3"}, PresentationMode::Local),
                 quotient(QQ, {"X", "Y", "Z"}, {"X^2 - Y*Z", "Y^2", "Z^2", "X*Y", "X*Z"}, PresentationMode::Local),
                 quotient(FieldDescriptor::prime_field(2), {"Y"}, {"Y^8"}), b5()}) {
    CHECK(max_ideal_power_vanishes(*a, a->dim()));
  }
}

TEST_CASE("graded mode wants homogeneous relations") {
  CHECK_THROWS(quotient(QQ, {"X", "Y"}, {"X^2 - Y"}, PresentationMode::Graded));
  CHECK(quotient(QQ, {"X", "Y"}, {"X^2 - Y^2"}, PresentationMode::Graded)->dimension().kind ==
        Dimension::Kind::Infinite);
}

TEST_CASE("presentation files") {
  const char* text =
      "# B(5)\n"
      "field QQ\n"
      "ring X:1 Y:1   # weights\n"
      "rel X*(2*Y^2 + 5*X^3)\n"
      "rel Y*(2*X^2 + 5*Y^3)\n"
      "mode local\n";
  Presentation p = parse_presentation(text);
  CHECK(p.mode == PresentationMode::Local);
  CHECK(p.relations.size() == 2);
  CHECK(parse_presentation(format_presentation(p)) == p);
  CHECK(make_quotient(p)->dim() == 11);

  Presentation q = parse_presentation("field FpX 3 t\nring U:2 Z:1\nrel U^3 - t - Z\nrel Z^2\norder lex\n");
  CHECK(q.ring->field().variable() == "t");
  CHECK(q.ring->order() == MonomialOrder::Lex);
  CHECK(parse_presentation(format_presentation(q)) == q);

  try {
    parse_presentation("field QQ\nring X Y\nrel X^2 + * Y\n");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 11);
  }
  CHECK_THROWS_AS(parse_presentation("field QQ\nring X\nmode fancy\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("field Fp 6\nring X\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("ring X\n"), ParseError);
}
