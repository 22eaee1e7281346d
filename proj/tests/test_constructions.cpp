#include "doctest.h"

#include <set>

#include "kahler/constructions.hpp"
#include "kahler/error.hpp"
#include "oracles.hpp"

using namespace kahler;

namespace {

const FieldDescriptor& QQ = FieldDescriptor::rationals();

ConstructionOptions quiet() {
  ConstructionOptions o;
  o.timing = false;
  return o;
}

std::set<std::string> anchors(const VerificationReport& r) {
  std::set<std::string> out;
  for (const auto& c : r.claims()) out.insert(c.anchor);
  return out;
}

bool all_pass(const VerificationReport& r) {
  for (const auto& c : r.claims())
    if (!c.pass) return false;
  return !r.claims().empty();
}

AlgebraPtr dual_numbers() {
  auto r = PolyRing::make(QQ, {"Z"});
  return make_quotient(Presentation{r, {parse_polynomial("Z^2", r)}, PresentationMode::Plain, BaseKind::CoefficientField});
}

}  // namespace

TEST_CASE("B(n) for n = 5, 6, 7") {
  const std::size_t dims[] = {11, 13, 15};
  for (int n = 5; n <= 7; ++n) {
    CAPTURE(n);
    GabberB b = gabber_B(n, QQ);
    CHECK(b.algebra->dim() == dims[n - 5]);
    // f = (1 - 4/n) x^2 y^2.
    auto r = b.algebra->ring();
    Polynomial xy2 = parse_polynomial("X^2*Y^2", r).scale(QQ.one() - QQ.from_int(4) / QQ.from_int(n));
    CHECK(b.algebra->equal(b.F, xy2));
    VerificationReport rep = verify_preparatory(n, QQ, quiet());
    CHECK(rep.pass());
    CHECK(rep.status() == ReportStatus::Ok);
    CHECK(rep.exit_code() == 0);
    CHECK(anchors(rep) == std::set<std::string>{"gabber.B.i", "gabber.B.ii", "gabber.B.iii", "gabber.B.xy3",
                                                "gabber.B.y2", "gabber.B.cofactor", "gabber.B.feq"});
  }
  CHECK_THROWS(gabber_B(4, QQ));
  CHECK_THROWS(gabber_B(5, FieldDescriptor::prime_field(7)));
}

TEST_CASE("B(5) dimension equals the oracle computed before the build") {
  auto r = PolyRing::make(QQ, {"X", "Y"});
  auto o = oracle::stabilized_dimension(r, {parse_polynomial("X*(2*Y^2 + 5*X^3)", r),
                                            parse_polynomial("Y*(2*X^2 + 5*Y^3)", r)});
  REQUIRE(o.has_value());
  GabberB b = gabber_B(5, QQ);
  CHECK(b.algebra->dim() == o->dimension);
  CHECK(b.algebra->truncation_order() == o->order);
}

TEST_CASE("B(n) in positive characteristic") {
  ConstructionOptions opt = quiet();
  opt.allow_positive_characteristic = true;
  GabberB b = gabber_B(5, FieldDescriptor::prime_field(7), opt);
  CHECK(b.warning.has_value());
  // 2n(n-4) = 10 for n = 5.
  CHECK_THROWS(gabber_B(5, FieldDescriptor::prime_field(5), opt));
  CHECK_THROWS(gabber_B(5, FieldDescriptor::prime_field(2), opt));
  CHECK(verify_preparatory(5, FieldDescriptor::prime_field(7), opt).pass());
}

TEST_CASE("tensor powers of B") {
  auto t2 = B_tensor_power(5, 2, QQ, quiet());
  CHECK(t2.report.pass());
  CHECK(t2.algebra->dim() == 11);

  auto t3 = B_tensor_power(5, 3, QQ, quiet());
  CHECK(t3.report.pass());
  CHECK(t3.algebra->dim() == 121);
  // g^2 = 2 f(x)f and f = x^2 y^2 / 5, so g^2 = 2/25 X#1^2 Y#1^2 X#2^2 Y#2^2.
  Polynomial g2 = t3.algebra->power(t3.g, 2);
  CHECK(g2 == t3.algebra->reduce(parse_polynomial("2/25*X#1^2*Y#1^2*X#2^2*Y#2^2", t3.algebra->ring())));
  CHECK(t3.algebra->is_zero(t3.algebra->power(t3.g, 3)));
  CHECK_THROWS(B_tensor_power(5, 1, QQ, quiet()));
}

TEST_CASE("killing f in B(5)") {
  GabberB b = gabber_B(5, QQ);
  KillingStep k = killing_step(b.algebra, b.F, quiet());
  CHECK(k.report.pass());
  CHECK(is_injective(k.iota));
  // dim(B (x) B) - rank of multiplication by f(x)1 - 1(x)f = 121 - 20.
  CHECK(k.result->dim() == 101);
  CHECK(k.result->dim() >= b.algebra->dim());
  KaehlerModule om(k.result);
  CHECK(om.is_d_zero(k.iota.apply(b.F)));
  CHECK_THROWS(killing_step(b.algebra, Polynomial(b.algebra->ring()), quiet()));
  CHECK_THROWS(killing_step(b.algebra, b.algebra->ring()->one(), quiet()));
}

TEST_CASE("killing z in the dual numbers") {
  auto a = dual_numbers();
  KillingStep k = killing_step(a, a->ring()->variable(0), quiet());
  CHECK(k.report.pass());
  CHECK(k.result->dim() == 11);
  CHECK(is_zero_induced_map(k.iota, KaehlerModule(a), KaehlerModule(k.result)));
}

TEST_CASE("kill all differentials") {
  auto a = dual_numbers();
  KillAll all = kill_all_differentials(a, quiet());
  CHECK(all.report.pass());
  CHECK(all.report.status() == ReportStatus::Ok);
  CHECK(is_zero_induced_map(all.map, KaehlerModule(a), KaehlerModule(all.result)));

  auto k = make_quotient(Presentation{PolyRing::make(QQ, {}), {}, PresentationMode::Plain, BaseKind::CoefficientField});
  KillAll none = kill_all_differentials(k, quiet());
  CHECK(none.report.pass());
  CHECK(none.result->dim() == 1);

  GabberB b = gabber_B(5, QQ);
  KillAll capped = kill_all_differentials(b.algebra, quiet());
  CHECK(capped.report.status() == ReportStatus::CapExceeded);
  CHECK(capped.report.exit_code() == 3);
  CHECK(capped.report.pass());
  CHECK(capped.report.to_json(false).contains("status_note"));
}

TEST_CASE("gabber sequence") {
  VerificationReport dual = gabber_sequence(1, SequenceSeed::DualNumbers, QQ, quiet());
  CHECK(dual.pass());
  CHECK(dual.status() == ReportStatus::Ok);
  VerificationReport b5 = gabber_sequence(1, SequenceSeed::Preparatory, QQ, quiet());
  CHECK(b5.status() == ReportStatus::CapExceeded);
  CHECK(b5.exit_code() == 3);
  CHECK_THROWS(gabber_sequence(0, SequenceSeed::DualNumbers, QQ, quiet()));
}

TEST_CASE("char p tower") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    CAPTURE(p);
    VerificationReport r = charp_tower(p, 3, quiet());
    CHECK(all_pass(r));
    CHECK(anchors(r) ==
          std::set<std::string>{"charp.nonreduced", "charp.omega_nonzero", "charp.zero_map", "charp.composite"});
  }
  CHECK_THROWS(charp_tower(4, 2, quiet()));
  CHECK_THROWS(charp_tower(2, 0, quiet()));
}

TEST_CASE("twisted example") {
  for (std::uint32_t p : {2u, 3u})
    for (int n : {1, 2}) {
      CAPTURE(p);
      CAPTURE(n);
      VerificationReport r = twisted_example(p, n, 1, 50, quiet());
      CHECK(all_pass(r));
      CHECK(r.params().value("pairs", 0) == 50);
    }
}

TEST_CASE("Omega = 0 forces a field on local algebras") {
  auto corpus = random_local_corpus(20, 1);
  CHECK(corpus.size() == 20);
  for (const auto& e : named_local_examples()) corpus.push_back(e);
  VerificationReport r = check_theorem_local_case(corpus, quiet());
  CHECK(all_pass(r));
  std::size_t omega_zero = 0;
  for (const auto& e : corpus) {
    auto a = make_quotient(e.presentation);
    REQUIRE(is_local_with_nilpotent_generators(*a));
    bool zero = KaehlerModule(a).is_omega_zero();
    if (zero) {
      ++omega_zero;
      CHECK(a->dim() == 1);
    }
    if (a->dim() > 1) CHECK_FALSE(zero);
  }
  CHECK(omega_zero >= 1);
}

TEST_CASE("Euler identity and its replay") {
  for (const auto* f : {&QQ, &FieldDescriptor::prime_field(2), &FieldDescriptor::prime_field(5),
                        &FieldDescriptor::prime_field(3)}) {
    CAPTURE(f->name());
    VerificationReport r = verify_euler(100, *f, 1, quiet());
    CHECK(all_pass(r));
    CHECK(anchors(r).count("euler.identity") == 1);
    CHECK(anchors(r).count("euler.kernel") == 1);
  }
}

TEST_CASE("reports are reproducible") {
  auto a = verify_preparatory(5, QQ, quiet()).to_json(false).dump(2);
  auto b = verify_preparatory(5, QQ, quiet()).to_json(false).dump(2);
  CHECK(a == b);
  auto c = verify_euler(50, FieldDescriptor::prime_field(5), 9, quiet()).to_json(false).dump();
  auto d = verify_euler(50, FieldDescriptor::prime_field(5), 9, quiet()).to_json(false).dump();
  CHECK(c == d);
}

TEST_CASE("report shape") {
  VerificationReport r("demo");
  r.params()["n"] = 5;
  r.add("holds", "demo.a", true, Json{{"x", 1}});
  Json j = r.to_json(false);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"construction", "params", "claims", "pass", "status", "elapsed_ms"});
  CHECK(j["claims"][0]["anchor"] == "demo.a");
  r.add("fails", "demo.b", false);
  CHECK_FALSE(r.pass());
  CHECK(r.exit_code() == 1);
  r.set_status(ReportStatus::CapExceeded, "cap");
  // A failed claim outranks the cap.
  CHECK(r.exit_code() == 1);
}
