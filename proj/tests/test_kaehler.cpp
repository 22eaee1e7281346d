#include "doctest.h"

#include "kahler/constructions.hpp"
#include "kahler/error.hpp"
#include "kahler/kaehler.hpp"
#include "kahler/random.hpp"
#include "oracles.hpp"

using namespace kahler;

namespace {

const FieldDescriptor& QQ = FieldDescriptor::rationals();

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

AlgebraPtr quotient(RingPtr ring, std::initializer_list<const char*> rels,
                    PresentationMode mode = PresentationMode::Plain) {
  Presentation p;
  p.ring = std::move(ring);
  for (auto s : rels) p.relations.push_back(P(p.ring, s));
  p.mode = mode;
  return make_quotient(p);
}

AlgebraPtr quotient(const FieldDescriptor& f, std::vector<std::string> vars, std::initializer_list<const char*> rels,
                    PresentationMode mode = PresentationMode::Plain) {
  return quotient(PolyRing::make(f, std::move(vars)), rels, mode);
}

AlgebraPtr b5() {
  return quotient(QQ, {"X", "Y"}, {"X*(2*Y^2 + 5*X^3)", "Y*(2*X^2 + 5*Y^3)"}, PresentationMode::Local);
}

}  // namespace

TEST_CASE("free algebra") {
  auto a = quotient(QQ, {"X"}, {});
  KaehlerModule om(a);
  CHECK(om.rank() == 1);
  CHECK_FALSE(om.is_omega_zero());
  CHECK_FALSE(om.dimension().has_value());
  CHECK(om.d_image(P(a->ring(), "X^3")) == ModuleVector::from_components(a->ring(), {P(a->ring(), "3*X^2")}));
  CHECK(om.is_d_zero(P(a->ring(), "7")));
}

TEST_CASE("dual numbers") {
  auto a = quotient(QQ, {"Z"}, {"Z^2"});
  KaehlerModule om(a);
  auto z = P(a->ring(), "Z");
  CHECK_FALSE(om.is_d_zero(z));
  CHECK(om.is_zero(om.d_raw(z) * z));
  // Basis {dz, z dz} modulo 2 z dz.
  CHECK(om.dimension() == 1u);
  CHECK(oracle::dense_omega_dimension(*a) == 1);
  // Characteristic 2: 2 z dz vanishes, so z dz survives.
  auto a2 = quotient(FieldDescriptor::prime_field(2), {"Z"}, {"Z^2"});
  CHECK(KaehlerModule(a2).dimension() == 2u);
  CHECK(oracle::dense_omega_dimension(*a2) == 2);
}

TEST_CASE("B(5)") {
  auto b = b5();
  KaehlerModule om(b);
  auto r = b->ring();
  CHECK(om.is_d_zero(P(r, "X^2*Y^2 + X^5 + Y^5")));
  // f = X^2 Y^2 / 5 in B, so d(X^2 Y^2) vanishes too; dX does not.
  CHECK(om.is_d_zero(P(r, "X^2*Y^2")));
  CHECK_FALSE(om.is_d_zero(P(r, "X")));
  CHECK_FALSE(om.is_omega_zero());
  CHECK(om.dimension() == 12u);
  CHECK(oracle::dense_omega_dimension(*b) == 12);

  // Jacobian rows of the original relations lie in the relation module.
  Polynomial F1 = P(r, "2*Y^2 + 5*X^3");
  Polynomial XF1 = P(r, "X") * F1;
  auto row = ModuleVector::from_components(r, {F1 + P(r, "X") * F1.partial_derivative(0),
                                                P(r, "X") * F1.partial_derivative(1)});
  CHECK(row == om.d_raw(XF1));
  CHECK(om.is_zero(row));
}

TEST_CASE("d is well defined and Leibniz") {
  Rng rng(41);
  for (auto a : {b5(), quotient(FieldDescriptor::prime_field(3), {"X", "Y"}, {"X^3 - Y^2", "X*Y^2"}),
                 quotient(QQ, {"X", "Y", "Z"}, {"X*Y - Z^2", "X^2 - Y^3"})}) {
    KaehlerModule om(a);
    auto r = a->ring();
    for (int i = 0; i < 40; ++i) {
      Polynomial f = random_polynomial(r, 0, 6, 4, rng);
      Polynomial g = random_polynomial(r, 0, 6, 4, rng);
      CHECK(om.is_zero(om.d_raw(f * g) - om.d_raw(g) * f - om.d_raw(f) * g));
      Polynomial h(r);
      for (const auto& rel : a->defining_relations()) h += rel * random_polynomial(r, 0, 3, 3, rng);
      CHECK(om.d_image(f + h) == om.d_image(f));
    }
  }
}

TEST_CASE("char p towers") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto& F = FieldDescriptor::prime_field(p);
    auto r = PolyRing::make(F, {"Y"});
    for (unsigned q = p; q <= p * p; q *= p) {
      Presentation pa{r, {r->variable(0).pow(q)}, PresentationMode::Plain, BaseKind::CoefficientField};
      Presentation pb{r, {r->variable(0).pow(q * p)}, PresentationMode::Plain, BaseKind::CoefficientField};
      auto a = make_quotient(pa), b = make_quotient(pb);
      KaehlerModule oa(a), ob(b);
      // The relation row p^n Y^(p^n - 1) vanishes, so dY is free.
      CHECK_FALSE(oa.is_omega_zero());
      CHECK(oa.dimension() == a->dim());
      auto phi = make_map(a, b, {r->variable(0).pow(p)});
      CHECK(is_zero_induced_map(phi, oa, ob));
      CHECK(omega_linear_matrix(phi, oa, ob).is_zero());
    }
  }
  auto k = quotient(QQ, {"X"}, {});
  CHECK_FALSE(is_zero_induced_map(identity_map(k), KaehlerModule(k), KaehlerModule(k)));
}

TEST_CASE("twisted algebra over F_p(x)") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto& L = FieldDescriptor::rational_functions(p);
    auto r = PolyRing::make(L, {"U", "Z"});
    Presentation pa{r, {r->variable(0).pow(p) - r->constant(L.generator()) - r->variable(1), r->variable(1).pow(2)},
                    PresentationMode::Plain, BaseKind::CoefficientField};
    Presentation pb = pa;
    pb.relations[0] = r->variable(0).pow(p * p) - r->constant(L.generator()) - r->variable(1);
    auto a = make_quotient(pa), b = make_quotient(pb);
    KaehlerModule oa(a), ob(b);
    CHECK(oa.is_d_zero(r->variable(1)));
    CHECK_FALSE(oa.is_omega_zero());
    CHECK_FALSE(oa.is_zero(ModuleVector::unit(r, 2, 0)));
    auto phi = make_map(a, b, {r->variable(0).pow(p), r->variable(1)});
    CHECK(is_zero_induced_map(phi, oa, ob));
  }
}

TEST_CASE("base mismatch") {
  auto a = quotient(QQ, {"Z"}, {"Z^2"});
  KaehlerModule over_k(a), over_r0(a, BaseKind::DegreeZero);
  CHECK_THROWS_AS(is_zero_induced_map(identity_map(a), over_k, over_r0), MismatchError);
  CHECK(over_k.dimension() == over_r0.dimension());
}

TEST_CASE("kernel of d by degree") {
  auto a = quotient(QQ, {"X", "Y"}, {"X^2 - Y^2"}, PresentationMode::Graded);
  KaehlerModule om(a, BaseKind::DegreeZero);
  for (long d = 1; d <= 4; ++d) CHECK(derivation_kernel_in_degree(om, d).empty());

  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = PolyRing::make(FieldDescriptor::prime_field(p), {"X"});
    auto fx = make_quotient(Presentation{r, {}, PresentationMode::Graded, BaseKind::DegreeZero});
    KaehlerModule o(fx, BaseKind::DegreeZero);
    auto k = derivation_kernel_in_degree(o, p);
    REQUIRE(k.size() == 1);
    CHECK(k[0].monic() == r->variable(0).pow(p));
    CHECK(derivation_kernel_in_degree(o, p + 1).empty());
  }

  auto bad = quotient(QQ, {"X", "Y"}, {"X^2 - Y"});
  CHECK_THROWS(derivation_kernel_in_degree(KaehlerModule(bad), 2));
}

TEST_CASE("Veronese containment") {
  auto r2 = PolyRing::make(FieldDescriptor::prime_field(2), {"X", "Y"});
  auto a = quotient(r2, {"X*Y"}, PresentationMode::Graded);
  VeroneseCheck v = veronese_containment_check(KaehlerModule(a, BaseKind::DegreeZero), 6);
  CHECK(v.pass);
  // X^d and Y^d for even d.
  std::vector<std::pair<long, std::size_t>> expect{{1, 0}, {2, 2}, {3, 0}, {4, 2}, {5, 0}, {6, 2}};
  CHECK(v.kernel_dimensions == expect);

  auto f3 = quotient(FieldDescriptor::prime_field(3), {"X"}, {}, PresentationMode::Graded);
  VeroneseCheck w = veronese_containment_check(KaehlerModule(f3, BaseKind::DegreeZero), 9);
  CHECK(w.pass);
  for (auto [d, k] : w.kernel_dimensions) CHECK(k == (d % 3 == 0 ? 1u : 0u));

  auto q = quotient(QQ, {"X"}, {}, PresentationMode::Graded);
  CHECK_THROWS(veronese_containment_check(KaehlerModule(q), 3));
}

TEST_CASE("Omega dimension matches the dense oracle on the local corpus") {
  auto corpus = random_local_corpus(12, 5);
  for (const auto& e : named_local_examples()) corpus.push_back(e);
  for (const auto& e : corpus) {
    CAPTURE(e.name);
    auto a = make_quotient(e.presentation);
    KaehlerModule om(a);
    std::size_t dense = oracle::dense_omega_dimension(*a);
    CHECK(om.dimension() == dense);
    CHECK(om.is_omega_zero() == (dense == 0));
  }
}

TEST_CASE("contraction sends d(G) to the Euler operator") {
  Rng rng(8);
  auto r = PolyRing::make(QQ, {"X", "Y", "Z"}, {1, 2, 3});
  auto a = quotient(r, {});
  KaehlerModule om(a);
  for (int i = 0; i < 30; ++i) {
    Polynomial g = random_polynomial(r, 0, 8, 5, rng);
    CHECK(euler_contraction(om.d_raw(g)) == euler_apply(g));
  }
}
