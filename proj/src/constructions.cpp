#include "kahler/constructions.hpp"

#include <chrono>
#include <utility>

#include "kahler/error.hpp"
#include "kahler/random.hpp"

namespace kahler {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  void stamp(VerificationReport& report, const ConstructionOptions& options) const {
    if (!options.timing) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    report.set_elapsed_ms(static_cast<long>(ms.count()));
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Integer when finite, "infinite"/"unknown" otherwise.
Json dimension_json(const Dimension& d) { return d.finite() ? Json(d.value) : Json(d.to_string()); }

Polynomial pure_power(const RingPtr& ring, std::size_t var, long e) {
  Monomial m = ring->unit_monomial();
  m.set(var, static_cast<std::int32_t>(e));
  return Polynomial::monomial(ring, m, ring->field().one());
}

std::uint64_t checked_power(std::uint64_t base, long e, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (long i = 0; i < e; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

std::string vector_text(const ModuleVector& v) { return v.is_zero() ? "0" : v.to_string(); }

AlgebraOptions capped(const ConstructionOptions& o) {
  AlgebraOptions a = o.algebra;
  a.dimension_cap = o.dimension_cap;
  return a;
}

}  // namespace

GabberB gabber_B(int n, const FieldDescriptor& field, const ConstructionOptions& options) {
  if (n < 5) throw Error("B(n) needs n >= 5, got " + std::to_string(n));
  std::optional<std::string> warning;
  if (field.characteristic() != 0) {
    const long p = field.characteristic();
    if (!options.allow_positive_characteristic)
      throw Error("B(n) is a characteristic zero construction; allow positive characteristic explicitly to explore");
    if ((2L * n * (n - 4)) % p == 0)
      throw Error("characteristic " + std::to_string(p) + " divides 2n(n-4) for n = " + std::to_string(n));
    warning = "built in characteristic " + std::to_string(p) + ", outside the characteristic zero setting";
  }
  RingPtr ring = PolyRing::make(field, {"X", "Y"});
  Polynomial X = ring->variable(0), Y = ring->variable(1);
  FieldElement nk = field.from_int(n), two = field.from_int(2);
  Polynomial F = X.pow(2) * Y.pow(2) + X.pow(n) + Y.pow(n);
  Polynomial F1 = Y.pow(2).scale(two) + X.pow(n - 2).scale(nk);
  Polynomial F2 = X.pow(2).scale(two) + Y.pow(n - 2).scale(nk);
  AlgebraPtr b = artinian_local_model(ring, {X * F1, Y * F2}, capped(options));
  return GabberB{n, std::move(b), std::move(F), std::move(F1), std::move(F2), std::move(warning)};
}

VerificationReport verify_preparatory(int n, const FieldDescriptor& field, const ConstructionOptions& options) {
  Stopwatch clock;
  VerificationReport report("preparatory");
  report.params() = Json{{"n", n}, {"field", field.name()}};
  GabberB b = gabber_B(n, field, options);
  if (b.warning) report.params()["warning"] = *b.warning;
  const QuotientAlgebra& B = *b.algebra;
  const RingPtr& ring = B.ring();
  Polynomial X = ring->variable(0), Y = ring->variable(1);

  bool finite = B.is_finite();
  bool local = finite && is_local_with_nilpotent_generators(B);
  report.add("B is a finite dimensional local algebra", "gabber.B.i", finite && local,
             Json{{"dimension", dimension_json(B.dimension())}, {"truncation_order", *B.truncation_order()},
                  {"nilpotent_generators", local}});

  Polynomial f = B.reduce(b.F);
  report.add("f is nonzero", "gabber.B.ii", !f.is_zero(), Json{{"f", f.to_string()}});
  Polynomial f2 = B.multiply(f, f);
  report.add("f^2 = 0", "gabber.B.ii", f2.is_zero(), Json{{"f^2", f2.to_string()}});

  KaehlerModule omega(b.algebra, BaseKind::CoefficientField, options.algebra.groebner);
  ModuleVector df = omega.d_image(b.F);
  report.add("df = 0 in Omega_{B/k}", "gabber.B.iii", df.is_zero(), Json{{"df", vector_text(df)}});

  Polynomial xy3 = B.reduce(X * Y.pow(3));
  report.add("x*y^3 = 0", "gabber.B.xy3", xy3.is_zero(), Json{{"x*y^3", xy3.to_string()}});

  AlgebraPtr f12 = artinian_local_model(ring, {b.F1, b.F2}, capped(options));
  Polynomial y2 = f12->reduce(Y.pow(2));
  report.add("Y^2 in (F1, F2) in k[[X,Y]]", "gabber.B.y2", y2.is_zero(),
             Json{{"normal_form", y2.to_string()},
                  {"quotient_dimension", f12->dim()},
                  {"truncation_order", *f12->truncation_order()}});

  FieldElement half_n = field.from_int(n) / field.from_int(2);
  FieldElement half_n2 = field.from_int(static_cast<long>(n) * n) / field.from_int(2);
  Polynomial lhs = b.F1 - (X.pow(n - 4) * b.F2).scale(half_n);
  auto rhs_with = [&](int y_exp) {
    return Y.pow(2) * (ring->constant(field.from_int(2)) - (X.pow(n - 4) * Y.pow(y_exp)).scale(half_n2));
  };
  Polynomial rhs = rhs_with(n - 4);
  report.add("F1 - (n/2) X^(n-4) F2 = Y^2 (2 - (n^2/2) X^(n-4) Y^(n-4))", "gabber.B.cofactor", lhs == rhs,
             Json{{"lhs", lhs.to_string()},
                  {"rhs", rhs.to_string()},
                  {"alternative_exponent_n_minus_2_holds", lhs == rhs_with(n - 2)}});

  FieldElement c = field.one() - field.from_int(4) / field.from_int(n);
  Polynomial expected = B.reduce((X.pow(2) * Y.pow(2)).scale(c));
  report.add("f = (1 - 4/n) x^2 y^2", "gabber.B.feq", f == expected,
             Json{{"f", f.to_string()}, {"(1-4/n)x^2y^2", expected.to_string()}});
  clock.stamp(report, options);
  return report;
}

TensorPower B_tensor_power(int n, int t, const FieldDescriptor& field, const ConstructionOptions& options) {
  if (t < 2) throw Error("B_t needs t >= 2 (t - 1 tensor factors), got " + std::to_string(t));
  Stopwatch clock;
  VerificationReport report("tensor_power");
  report.params() = Json{{"n", n}, {"t", t}, {"field", field.name()}};
  GabberB b = gabber_B(n, field, options);
  const std::size_t d = b.algebra->dim();
  if (checked_power(d, t - 1, options.dimension_cap) > options.dimension_cap)
    throw CapExceeded("B_t would have dimension " + std::to_string(d) + "^" + std::to_string(t - 1) +
                      ", above the cap " + std::to_string(options.dimension_cap));
  std::vector<AlgebraPtr> factors(static_cast<std::size_t>(t - 1), b.algebra);
  AlgebraPtr bt = make_quotient(tensor_product(factors), capped(options));
  const RingPtr& ring = bt->ring();

  std::vector<Polynomial> parts;
  Polynomial g(ring);
  Polynomial product = ring->one();
  for (int i = 1; i < t; ++i) {
    parts.push_back(bt->reduce(embed_in_tensor(b.F, static_cast<std::size_t>(i), ring)));
    g += parts.back();
    product *= parts.back();
  }
  g = bt->reduce(g);
  FieldElement factorial = field.one();
  for (int i = 2; i < t; ++i) factorial *= field.from_int(i);

  report.add("dim B_t = dim(B)^(t-1)", "tensor.dimension",
             bt->dim() == checked_power(d, t - 1, options.dimension_cap),
             Json{{"dim_B", d}, {"dim_B_t", bt->dim()}});
  Polynomial gt = bt->power(g, static_cast<unsigned>(t));
  report.add("g^t = 0", "tensor.g.nilpotent", gt.is_zero(), Json{{"g^t", gt.to_string()}});
  Polynomial gt1 = bt->power(g, static_cast<unsigned>(t - 1));
  Polynomial expected = bt->reduce(product.scale(factorial));
  report.add("g^(t-1) = (t-1)! f (x) ... (x) f", "tensor.g.power", gt1 == expected,
             Json{{"g^(t-1)", gt1.to_string()}, {"(t-1)! f(x)...(x)f", expected.to_string()}});
  report.add("g^(t-1) != 0", "tensor.g.power", !gt1.is_zero());
  clock.stamp(report, options);
  return TensorPower{std::move(bt), std::move(parts), std::move(g), std::move(report)};
}

KillingStep killing_step(const AlgebraPtr& r_algebra, const Polynomial& r, const ConstructionOptions& options) {
  Stopwatch clock;
  const QuotientAlgebra& R = *r_algebra;
  Polynomial rr = R.reduce(r);
  if (rr.is_zero()) throw Error("killing step needs a nonzero element");
  std::optional<unsigned> t = nilpotency_index(R, rr);
  if (!t) throw Error("killing step needs a nilpotent element; " + rr.to_string() + " is not nilpotent");

  VerificationReport report("killing_step");
  report.params() = Json{{"r", rr.to_string()}, {"t", *t}, {"dim_R", R.dim()}, {"internal_n", options.internal_n}};
  GabberB b = gabber_B(options.internal_n, R.field(), options);
  const std::size_t d = b.algebra->dim();
  std::uint64_t bound = checked_power(d, static_cast<long>(*t) - 1, options.dimension_cap);
  if (bound > options.dimension_cap / R.dim())
    throw CapExceeded("killing step with t = " + std::to_string(*t) + " would build R (x) B_t of dimension " +
                      std::to_string(R.dim()) + " * " + std::to_string(d) + "^" + std::to_string(*t - 1) +
                      ", above the cap " + std::to_string(options.dimension_cap));

  std::vector<AlgebraPtr> factors{r_algebra};
  for (unsigned i = 1; i < *t; ++i) factors.push_back(b.algebra);
  Presentation pres = tensor_product(factors);
  const RingPtr& ring = pres.ring;
  Polynomial relation = embed_in_tensor(rr, 1, ring);
  for (std::size_t i = 2; i <= factors.size(); ++i) relation -= embed_in_tensor(b.F, i, ring);
  Presentation tensor_only = pres;
  pres.relations.push_back(relation);
  pres.mode = PresentationMode::Plain;
  AlgebraPtr result = make_quotient(pres, capped(options));

  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < R.ring()->nvars(); ++i) images.push_back(ring->variable(i));
  AlgebraMap iota = make_map(r_algebra, result, std::move(images));

  bool finite = result->is_finite();
  report.add("R' is finite dimensional", "killing.finite", finite,
             Json{{"dim_R", R.dim()}, {"dim_R_prime", dimension_json(result->dimension())}});
  report.add("R' is local with nilpotent generators", "killing.local",
             finite && is_local_with_nilpotent_generators(*result));

  // dim R' = dim A - rank(multiplication by the relation on A), A = R (x) B_t.
  AlgebraPtr tensor = make_quotient(tensor_only, capped(options));
  Matrix mult(tensor->field(), tensor->dim(), tensor->dim());
  const auto& stair = tensor->staircase();
  for (std::size_t j = 0; j < stair.size(); ++j) {
    auto col = tensor->coordinates(
        tensor->multiply(relation, Polynomial::monomial(ring, stair[j], ring->field().one())));
    for (std::size_t i = 0; i < col.size(); ++i) mult.at(i, j) = col[i];
  }
  std::size_t rank = mult.rank();
  report.add("dim R' = dim(R (x) B_t) - rank of multiplication by r - g", "killing.dimension",
             finite && result->dim() == tensor->dim() - rank,
             Json{{"dim_tensor", tensor->dim()}, {"rank", rank}, {"dim_R_prime", dimension_json(result->dimension())}});

  std::size_t iota_rank = linear_matrix(iota).rank();
  report.add("iota is injective", "killing.injective", iota_rank == R.dim(),
             Json{{"rank", iota_rank}, {"dim_R", R.dim()}});

  KaehlerModule omega(result, BaseKind::CoefficientField, options.algebra.groebner);
  ModuleVector dr = omega.d_image(iota.apply(rr));
  report.add("d(iota(r)) = 0 in Omega_{R'/k}", "killing.kills_dr", dr.is_zero(), Json{{"d(iota(r))", vector_text(dr)}});
  clock.stamp(report, options);
  return KillingStep{std::move(result), std::move(iota), std::move(report)};
}

KillAll kill_all_differentials(const AlgebraPtr& r_algebra, const ConstructionOptions& options) {
  Stopwatch clock;
  const QuotientAlgebra& R = *r_algebra;
  if (!is_local_with_nilpotent_generators(R))
    throw Error("killing all differentials needs a finite local algebra with nilpotent generators");
  VerificationReport report("kill_all_differentials");
  std::vector<Polynomial> basis;
  for (const auto& m : R.staircase())
    if (!m.is_one()) basis.push_back(Polynomial::monomial(R.ring(), m, R.field().one()));
  report.params() = Json{{"dim_R", R.dim()}, {"maximal_ideal_basis", basis.size()}};

  AlgebraPtr current = r_algebra;
  AlgebraMap composite = identity_map(r_algebra);
  Json progress = Json::array();
  bool stopped = false;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Polynomial image = composite.apply(basis[j]);
    Json entry{{"element", basis[j].to_string()}};
    if (image.is_zero()) {
      entry["skipped"] = "image is zero";
      progress.push_back(std::move(entry));
      continue;
    }
    try {
      KillingStep step = killing_step(current, image, options);
      report.absorb(step.report, "step " + std::to_string(j + 1));
      composite = compose(step.iota, composite);
      current = step.result;
      entry["dim"] = current->dim();
      progress.push_back(std::move(entry));
    } catch (const CapExceeded& e) {
      entry["stopped"] = e.what();
      progress.push_back(std::move(entry));
      report.set_status(ReportStatus::CapExceeded, e.what());
      stopped = true;
      break;
    } catch (const BudgetExceeded& e) {
      entry["stopped"] = e.what();
      progress.push_back(std::move(entry));
      report.set_status(ReportStatus::BudgetExceeded, e.what());
      stopped = true;
      break;
    }
  }
  report.params()["progress"] = std::move(progress);
  if (!stopped) {
    KaehlerModule omega(current, BaseKind::CoefficientField, options.algebra.groebner);
    report.add("Omega_{R/k} -> Omega_{R~/k} is the zero map", "killing.all.zero_map",
               is_zero_induced_map(composite, omega), Json{{"dim_R_tilde", current->dim()}});
  }
  clock.stamp(report, options);
  return KillAll{std::move(current), std::move(composite), std::move(report)};
}

VerificationReport gabber_sequence(int steps, SequenceSeed seed, const FieldDescriptor& field,
                                   const ConstructionOptions& options) {
  if (steps < 1) throw Error("the sequence needs at least one step");
  Stopwatch clock;
  VerificationReport report("gabber_sequence");
  report.params() = Json{{"steps", steps},
                         {"seed", seed == SequenceSeed::Preparatory ? "B(5)" : "k[Z]/(Z^2)"},
                         {"field", field.name()},
                         {"dimension_cap", options.dimension_cap}};
  AlgebraPtr r;
  if (seed == SequenceSeed::Preparatory) {
    r = gabber_B(5, field, options).algebra;
  } else {
    RingPtr ring = PolyRing::make(field, {"Z"});
    r = make_quotient(Presentation{ring, {ring->variable(0).pow(2)}}, capped(options));
  }
  report.add("k is properly contained in R_0", "sequence.proper",
             is_local_with_nilpotent_generators(*r) && r->dim() > 1, Json{{"dim_R_0", r->dim()}});
  Json dims = Json::array({r->dim()});
  for (int i = 0; i < steps; ++i) {
    std::string step = "R_" + std::to_string(i) + " -> R_" + std::to_string(i + 1);
    KillAll next;
    try {
      next = kill_all_differentials(r, options);
    } catch (const BudgetExceeded& e) {
      report.set_status(ReportStatus::BudgetExceeded, step + ": " + e.what());
      break;
    }
    report.absorb(next.report, step);
    if (next.report.status() != ReportStatus::Ok) {
      report.params()["stopped_at"] = step;
      report.params()["progress"] = next.report.params()["progress"];
      report.set_status(next.report.status(), step + " did not finish under the cap");
      break;
    }
    AlgebraPtr r_next = next.result;
    report.add(step + ": R_" + std::to_string(i + 1) + " is finite dimensional local with nilpotent maximal ideal",
               "sequence.i", r_next->is_finite() && is_local_with_nilpotent_generators(*r_next),
               Json{{"dim", dimension_json(r_next->dimension())}});
    std::size_t rank = linear_matrix(next.map).rank();
    report.add(step + ": inclusion is injective", "sequence.inclusion", rank == r->dim(),
               Json{{"rank", rank}, {"dim_source", r->dim()}});
    KaehlerModule omega(r_next, BaseKind::CoefficientField, options.algebra.groebner);
    report.add(step + ": induced map on Omega is zero", "sequence.iii", is_zero_induced_map(next.map, omega));
    dims.push_back(r_next->dim());
    r = r_next;
  }
  report.params()["dimensions"] = std::move(dims);
  clock.stamp(report, options);
  return report;
}

VerificationReport charp_tower(std::uint32_t p, int n_max, const ConstructionOptions& options) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  if (n_max < 1) throw Error("the tower needs n_max >= 1");
  Stopwatch clock;
  VerificationReport report("charp_tower");
  const FieldDescriptor& field = FieldDescriptor::prime_field(p);
  const int top = std::max(n_max + 1, 3);
  report.params() = Json{{"p", p},
                         {"n_max", n_max},
                         {"model", "k[X^(1/p^n)]/(X) as F_p[Y]/(Y^(p^n)) with Y = X^(1/p^n)"},
                         {"built_up_to", top}};
  if (checked_power(p, top, options.dimension_cap) > options.dimension_cap)
    throw CapExceeded("tower algebras exceed the dimension cap");

  std::vector<AlgebraPtr> a(static_cast<std::size_t>(top) + 1);
  std::vector<std::optional<KaehlerModule>> omega(a.size());
  for (int n = 1; n <= top; ++n) {
    RingPtr ring = PolyRing::make(field, {"Y"});
    long e = static_cast<long>(checked_power(p, n, options.dimension_cap));
    a[n] = make_quotient(Presentation{ring, {pure_power(ring, 0, e)}, PresentationMode::Graded}, capped(options));
    omega[n].emplace(a[n], BaseKind::CoefficientField, options.algebra.groebner);
  }
  std::vector<std::optional<AlgebraMap>> step(a.size());
  std::vector<std::optional<Matrix>> matrix(a.size());
  for (int n = 1; n < top; ++n) {
    step[n] = make_map(a[n], a[n + 1], {pure_power(a[n + 1]->ring(), 0, p)});
    matrix[n] = omega_linear_matrix(*step[n], *omega[n], *omega[n + 1], options.dimension_cap);
  }
  for (int n = 1; n <= n_max; ++n) {
    Json at{{"n", n}};
    report.add("A_" + std::to_string(n) + " is local and non-reduced", "charp.nonreduced",
               is_local_with_nilpotent_generators(*a[n]) && has_nonzero_nilpotent(*a[n]),
               Json{{"n", n}, {"dim", a[n]->dim()}});
    report.add("Omega_{A_" + std::to_string(n) + "/F_p} != 0", "charp.omega_nonzero", !omega[n]->is_omega_zero(),
               Json{{"n", n}, {"dim_omega", *omega[n]->dimension(options.dimension_cap)}});
    auto images = induced_map_on_omega(*step[n], *omega[n + 1]);
    report.add("A_" + std::to_string(n) + " -> A_" + std::to_string(n + 1) + " induces the zero map on Omega",
               "charp.zero_map", is_zero_induced_map(*step[n], *omega[n], *omega[n + 1]) && matrix[n]->is_zero(),
               Json{{"n", n}, {"d(Y'^p)", vector_text(images[0])}, {"matrix_rank", matrix[n]->rank()}});
  }
  for (int n = 1; n + 2 <= top; ++n) {
    Matrix product = *matrix[n + 1] * *matrix[n];
    AlgebraMap two_steps = compose(*step[n + 1], *step[n]);
    Matrix direct = omega_linear_matrix(two_steps, *omega[n], *omega[n + 2], options.dimension_cap);
    report.add("A_" + std::to_string(n) + " -> A_" + std::to_string(n + 2) + " composite is zero on Omega",
               "charp.composite", product.is_zero() && direct == product,
               Json{{"n", n}, {"rows", product.rows()}, {"cols", product.cols()}});
  }
  clock.stamp(report, options);
  return report;
}

VerificationReport twisted_example(std::uint32_t p, int n, std::uint64_t seed, std::size_t pairs,
                                   const ConstructionOptions& options) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  if (n < 1) throw Error("the twisted example needs n >= 1");
  Stopwatch clock;
  VerificationReport report("twisted");
  const FieldDescriptor& L = FieldDescriptor::rational_functions(p);
  report.params() = Json{{"p", p}, {"n", n}, {"field", L.name()}, {"seed", seed}, {"pairs", pairs}};
  if (checked_power(p, n + 1, options.dimension_cap) > options.dimension_cap)
    throw CapExceeded("twisted algebras exceed the dimension cap");

  auto build = [&](int m) {
    RingPtr ring = PolyRing::make(L, {"U", "Z"});
    long e = static_cast<long>(checked_power(p, m, options.dimension_cap));
    Polynomial rel = pure_power(ring, 0, e) - ring->constant(L.generator()) - ring->variable(1);
    return make_quotient(Presentation{ring, {rel, ring->variable(1).pow(2)}}, capped(options));
  };
  AlgebraPtr a = build(n);
  AlgebraPtr next = build(n + 1);
  const RingPtr& ring = a->ring();
  Polynomial U = ring->variable(0), Z = ring->variable(1);

  Polynomial z = a->reduce(Z);
  report.add("z != 0", "twisted.nonreduced", !z.is_zero(),
             Json{{"z", z.to_string()}, {"dim_over_L", dimension_json(a->dimension())}});
  Polynomial z2 = a->multiply(Z, Z);
  report.add("z^2 = 0", "twisted.nonreduced", z2.is_zero(), Json{{"z^2", z2.to_string()}});

  KaehlerModule omega(a, BaseKind::CoefficientField, options.algebra.groebner);
  ModuleVector dz = omega.d_image(Z);
  report.add("dz = 0 in Omega_{A_n/L}", "twisted.dz", dz.is_zero(), Json{{"dz", vector_text(dz)}});
  ModuleVector du = omega.d_image(U);
  report.add("Omega_{A_n/L} != 0 (dU survives)", "twisted.omega_nonzero", !omega.is_omega_zero() && !du.is_zero(),
             Json{{"dU", vector_text(du)}});

  auto phi = [&](const FieldElement& f) { return ring->constant(f) + Z * ring->constant(f.formal_derivative()); };
  Rng rng(seed);
  std::size_t add_failures = 0, mul_failures = 0;
  Json first_failure;
  for (std::size_t i = 0; i < pairs; ++i) {
    FieldElement f = random_rational_function(L, rng);
    FieldElement g = random_rational_function(L, rng);
    if (!a->equal(phi(f + g), phi(f) + phi(g))) ++add_failures;
    if (!a->equal(phi(f * g), phi(f) * phi(g))) {
      if (mul_failures++ == 0) first_failure = Json{{"f", format_scalar(f)}, {"g", format_scalar(g)}};
    }
  }
  report.add("phi is additive", "twisted.phi", add_failures == 0, Json{{"pairs", pairs}, {"failures", add_failures}});
  Json mul_witness{{"pairs", pairs}, {"failures", mul_failures}};
  if (mul_failures) mul_witness["first_failure"] = first_failure;
  report.add("phi(fg) = phi(f) phi(g)", "twisted.phi", mul_failures == 0, std::move(mul_witness));

  const RingPtr& next_ring = next->ring();
  std::optional<AlgebraMap> transition;
  try {
    transition = make_map(a, next, {next_ring->variable(0).pow(p), next_ring->variable(1)});
  } catch (const NotARingMap& e) {
    report.add("U -> U'^p, Z -> Z is an algebra map A_n -> A_{n+1}", "twisted.transition", false,
               Json{{"error", e.what()}});
  }
  if (transition) {
    report.add("U -> U'^p, Z -> Z is an algebra map A_n -> A_{n+1}", "twisted.transition", true);
    KaehlerModule next_omega(next, BaseKind::CoefficientField, options.algebra.groebner);
    auto images = induced_map_on_omega(*transition, next_omega);
    report.add("transition kills dU", "twisted.transition", images[0].is_zero(),
               Json{{"d(U'^p)", vector_text(images[0])}});
    report.add("transition induces the zero map on Omega_{./L}", "twisted.transition",
               is_zero_induced_map(*transition, omega, next_omega), Json{{"d(Z)", vector_text(images[1])}});
  }
  clock.stamp(report, options);
  return report;
}

std::vector<CorpusEntry> named_local_examples() {
  const FieldDescriptor& q = FieldDescriptor::rationals();
  std::vector<CorpusEntry> out;
  out.push_back({"k", Presentation{PolyRing::make(q, {}), {}, PresentationMode::Local}, true});
  {
    RingPtr ring = PolyRing::make(q, {"Z"});
    out.push_back({"Q[Z]/(Z^2)", Presentation{ring, {ring->variable(0).pow(2)}, PresentationMode::Local}, true});
  }
  {
    RingPtr ring = PolyRing::make(q, {"X", "Y"});
    out.push_back({"Q[X,Y]/(X^2,Y^3)",
                   Presentation{ring, {ring->variable(0).pow(2), ring->variable(1).pow(3)}, PresentationMode::Local},
                   true});
  }
  for (int n : {5, 6}) {
    GabberB b = gabber_B(n, q);
    out.push_back({"B(" + std::to_string(n) + ")", b.algebra->presentation(), true});
  }
  for (std::uint32_t p : {2u, 3u}) {
    RingPtr ring = PolyRing::make(FieldDescriptor::prime_field(p), {"Y"});
    out.push_back({"F_" + std::to_string(p) + "[Y]/(Y^" + std::to_string(p * p) + ")",
                   Presentation{ring, {pure_power(ring, 0, p * p)}, PresentationMode::Local}, true});
  }
  return out;
}

std::vector<CorpusEntry> random_local_corpus(std::size_t count, std::uint64_t seed) {
  const FieldDescriptor& q = FieldDescriptor::rationals();
  const std::vector<std::string> names{"X", "Y", "Z"};
  Rng rng(seed);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t s = static_cast<std::size_t>(rng.range(1, 3));
    long degree = rng.range(2, 4);
    RingPtr ring = PolyRing::make(q, std::vector<std::string>(names.begin(), names.begin() + s));
    Presentation p{ring, {}, PresentationMode::Local};
    long gens = rng.range(0, 3);
    for (long g = 0; g < gens; ++g) {
      Polynomial f = random_polynomial(ring, 1, degree, static_cast<std::size_t>(rng.range(1, 3)), rng);
      if (!f.is_zero()) p.relations.push_back(std::move(f));
    }
    for (const auto& m : ring->monomials_of_total_degree(degree))
      p.relations.push_back(Polynomial::monomial(ring, m, q.one()));
    out.push_back({"random-" + std::to_string(i + 1), std::move(p), false});
  }
  return out;
}

VerificationReport check_theorem_local_case(const std::vector<CorpusEntry>& corpus,
                                            const ConstructionOptions& options) {
  Stopwatch clock;
  VerificationReport report("local_case");
  std::size_t omega_zero = 0, nonreduced = 0;
  for (const auto& entry : corpus) {
    const FieldDescriptor& field = entry.presentation.ring->field();
    if (!field.is_perfect()) throw Error("corpus entry " + entry.name + " is not over a perfect field");
    AlgebraPtr a = make_quotient(entry.presentation, capped(options));
    if (!is_local_with_nilpotent_generators(*a))
      throw Error("corpus entry " + entry.name + " is not an Artinian local algebra with nilpotent generators");
    KaehlerModule omega(a, BaseKind::CoefficientField, options.algebra.groebner);
    bool zero = omega.is_omega_zero();
    std::size_t omega_dim = *omega.dimension(options.dimension_cap);
    bool reduced = a->dim() == 1;
    omega_zero += zero;
    nonreduced += !reduced;
    Json w{{"field", field.name()}, {"dim", a->dim()}, {"dim_omega", omega_dim}};
    report.add(entry.name + ": Omega = 0 implies dim 1", "local.theorem", (!zero || reduced) && zero == (omega_dim == 0),
               w);
    if (entry.named_example)
      report.add(entry.name + ": non-reduced implies Omega != 0", "local.contrapositive", reduced || !zero, w);
  }
  report.params() = Json{{"entries", corpus.size()}, {"omega_zero", omega_zero}, {"non_reduced", nonreduced}};
  clock.stamp(report, options);
  return report;
}

VerificationReport verify_euler(std::size_t trials, const FieldDescriptor& field, std::uint64_t seed,
                                const ConstructionOptions& options) {
  Stopwatch clock;
  VerificationReport report("euler");
  report.params() = Json{{"trials", trials}, {"field", field.name()}, {"seed", seed}};
  const std::vector<std::string> names{"X", "Y", "Z", "W"};
  Rng rng(seed);

  std::size_t failures = 0;
  Json first_failure;
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t s = static_cast<std::size_t>(rng.range(1, 4));
    std::vector<int> weights;
    for (std::size_t i = 0; i < s; ++i) weights.push_back(static_cast<int>(rng.range(1, 4)));
    RingPtr ring = PolyRing::make(field, std::vector<std::string>(names.begin(), names.begin() + s), weights);
    long degree = rng.range(0, 12);
    Polynomial g = random_homogeneous(ring, degree, static_cast<std::size_t>(rng.range(1, 5)), rng);
    if (euler_apply(g) != g.scale(field.from_int(degree)) && failures++ == 0)
      first_failure = Json{{"G", g.to_string()}, {"degree", degree}};
  }
  Json w{{"trials", trials}, {"failures", failures}};
  if (failures) w["first_failure"] = first_failure;
  report.add("euler_apply(G) = deg(G) G", "euler.identity", failures == 0, std::move(w));

  // Replay on random graded algebras: the contraction dX_i -> w_i X_i maps
  // the relation module into I and d(F) to euler_apply(F), so a kernel
  // element F of degree m has m F in I.
  const std::size_t algebras = std::max<std::size_t>(5, trials / 20);
  const long max_degree = 6;
  std::size_t contraction_failures = 0, kernel_failures = 0, kernel_elements = 0, nonzero_kernel_degrees = 0;
  bool char_zero = field.characteristic() == 0;
  for (std::size_t t = 0; t < algebras; ++t) {
    std::size_t s = static_cast<std::size_t>(rng.range(1, 3));
    std::vector<int> weights;
    for (std::size_t i = 0; i < s; ++i) weights.push_back(static_cast<int>(rng.range(1, 3)));
    RingPtr ring = PolyRing::make(field, std::vector<std::string>(names.begin(), names.begin() + s), weights);
    Presentation p{ring, {}, PresentationMode::Graded};
    long rels = rng.range(1, 2);
    for (long r = 0; r < rels; ++r) {
      Polynomial f = random_homogeneous(ring, rng.range(2, 4), static_cast<std::size_t>(rng.range(1, 3)), rng);
      if (!f.is_zero()) p.relations.push_back(std::move(f));
    }
    AlgebraPtr a = make_quotient(p, capped(options));
    KaehlerModule omega(a, BaseKind::DegreeZero, options.algebra.groebner);
    for (const auto& v : omega.basis().vectors())
      if (!a->is_zero(euler_contraction(v))) ++contraction_failures;
    for (long m = 1; m <= max_degree; ++m) {
      auto kernel = derivation_kernel_in_degree(omega, m);
      if (!kernel.empty()) ++nonzero_kernel_degrees;
      for (const auto& f : kernel) {
        ++kernel_elements;
        Polynomial mf = f.scale(field.from_int(m));
        bool ok = euler_apply(f) == mf && omega.is_zero(omega.d_raw(f)) &&
                  a->is_zero(euler_contraction(omega.d_raw(f))) && a->is_zero(mf);
        if (!ok) ++kernel_failures;
      }
    }
  }
  report.add("contraction maps the relation module into I", "euler.contraction", contraction_failures == 0,
             Json{{"algebras", algebras}, {"failures", contraction_failures}});
  report.add("deg(f) f = 0 for f in the kernel of d", "euler.kernel", kernel_failures == 0,
             Json{{"kernel_elements", kernel_elements}, {"failures", kernel_failures}});
  if (char_zero)
    report.add("kernel of d is zero in degrees 1.." + std::to_string(max_degree), "euler.kernel_zero",
               nonzero_kernel_degrees == 0, Json{{"nonzero_degrees", nonzero_kernel_degrees}});
  clock.stamp(report, options);
  return report;
}

}  // namespace kahler
