#include "kahler/kaehler.hpp"

#include <utility>

#include "kahler/error.hpp"

namespace kahler {

OmegaBasis::OmegaBasis(std::vector<ModuleMonomial> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(std::make_pair(elements_[i].component, elements_[i].mono), i);
}

std::vector<FieldElement> OmegaBasis::coordinates(const ModuleVector& reduced, const FieldDescriptor& field) const {
  std::vector<FieldElement> out(elements_.size(), field.zero());
  for (const auto& t : reduced.terms()) {
    auto it = index_.find({t.component, t.mono});
    if (it == index_.end()) throw Error("vector is not reduced against the relation module");
    out[it->second] = t.coeff;
  }
  return out;
}

namespace {

std::vector<ModuleVector> relation_rows(const QuotientAlgebra& a) {
  const RingPtr& ring = a.ring();
  const std::size_t s = ring->nvars();
  std::vector<Polynomial> gens = a.basis().polynomials();
  std::vector<ModuleVector> rows;
  for (const auto& g : gens) {
    std::vector<Polynomial> jac;
    for (std::size_t i = 0; i < s; ++i) jac.push_back(g.partial_derivative(i));
    rows.push_back(ModuleVector::from_components(ring, jac));
  }
  for (std::size_t i = 0; i < s; ++i)
    for (const auto& g : gens) rows.push_back(ModuleVector::unit(ring, s, i) * g);
  return rows;
}

}  // namespace

KaehlerModule::KaehlerModule(AlgebraPtr algebra, BaseKind base, const GroebnerOptions& options)
    : algebra_(std::move(algebra)),
      base_(base),
      rank_(algebra_->ring()->nvars()),
      relations_(relation_rows(*algebra_)),
      basis_(GroebnerBasis::submodule(algebra_->ring(), rank_, relations_, options)) {}

ModuleVector KaehlerModule::d_raw(const Polynomial& f) const {
  if (!f.ring()->same_as(*ring())) throw MismatchError("element is not in the algebra's ring");
  std::vector<Polynomial> parts;
  for (std::size_t i = 0; i < rank_; ++i) parts.push_back(f.partial_derivative(i));
  if (rank_ == 0) return ModuleVector(ring(), 0);
  return ModuleVector::from_components(ring(), parts);
}

std::optional<std::size_t> KaehlerModule::dimension(std::size_t limit) const { return kahler::dimension(basis_, limit); }

OmegaBasis KaehlerModule::vector_space_basis(std::size_t limit) const {
  Staircase st = staircase(basis_, limit);
  if (!st.finite()) throw Error("module of differentials is not finite dimensional");
  return OmegaBasis(st.elements());
}

KaehlerModule kaehler(const AlgebraPtr& algebra, BaseKind base, const GroebnerOptions& options) {
  return KaehlerModule(algebra, base, options);
}

std::vector<ModuleVector> induced_map_on_omega(const AlgebraMap& phi, const KaehlerModule& target) {
  if (!target.ring()->same_as(*phi.target()->ring())) throw MismatchError("module is not over the map's target");
  std::vector<ModuleVector> out;
  for (const auto& img : phi.images()) out.push_back(target.d_image(img));
  return out;
}

bool is_zero_induced_map(const AlgebraMap& phi, const KaehlerModule& target) {
  for (const auto& v : induced_map_on_omega(phi, target))
    if (!v.is_zero()) return false;
  return true;
}

bool is_zero_induced_map(const AlgebraMap& phi, const KaehlerModule& source, const KaehlerModule& target) {
  if (source.base() != target.base()) throw MismatchError("modules of differentials over different bases");
  if (!source.ring()->same_as(*phi.source()->ring())) throw MismatchError("module is not over the map's source");
  return is_zero_induced_map(phi, target);
}

Matrix omega_linear_matrix(const AlgebraMap& phi, const KaehlerModule& source, const KaehlerModule& target,
                           std::size_t limit) {
  if (source.base() != target.base()) throw MismatchError("modules of differentials over different bases");
  OmegaBasis src = source.vector_space_basis(limit);
  OmegaBasis dst = target.vector_space_basis(limit);
  std::vector<ModuleVector> d_images = induced_map_on_omega(phi, target);
  const FieldDescriptor& field = source.algebra()->field();
  Matrix m(field, dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto& e = src.elements()[j];
    Polynomial coeff = phi.apply(Polynomial::monomial(source.ring(), e.mono, field.one()));
    auto col = dst.coordinates(target.reduce(d_images[e.component] * coeff), field);
    for (std::size_t i = 0; i < dst.size(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

Polynomial euler_contraction(const ModuleVector& v) {
  const RingPtr& ring = v.ring();
  Polynomial out(ring);
  for (std::size_t i = 0; i < v.rank(); ++i) {
    FieldElement w = ring->field().from_int(ring->weights()[i]);
    out += (ring->variable(i) * v.component(i)).scale(w);
  }
  return out;
}

std::vector<Polynomial> derivation_kernel_in_degree(const KaehlerModule& omega, long degree) {
  const QuotientAlgebra& a = *omega.algebra();
  for (const auto& r : a.defining_relations())
    if (!r.is_homogeneous()) throw Error("kernel of d by degree needs homogeneous relations: " + r.to_string());
  const RingPtr& ring = a.ring();
  const FieldDescriptor& field = a.field();
  std::vector<Monomial> monos;
  for (const auto& mm : staircase_in_degree(a.basis(), degree)) monos.push_back(mm.mono);

  std::vector<ModuleVector> images;
  std::map<std::pair<std::uint32_t, Monomial>, std::size_t> rows;
  for (const auto& m : monos) {
    images.push_back(omega.d_image(Polynomial::monomial(ring, m, field.one())));
    for (const auto& t : images.back().terms()) rows.emplace(std::make_pair(t.component, t.mono), 0);
  }
  std::size_t r = 0;
  for (auto& [key, idx] : rows) idx = r++;
  Matrix mat(field, rows.size(), monos.size());
  for (std::size_t j = 0; j < monos.size(); ++j)
    for (const auto& t : images[j].terms()) mat.at(rows.at({t.component, t.mono}), j) = t.coeff;

  std::vector<Polynomial> kernel;
  for (const auto& v : mat.nullspace()) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (!v[j].is_zero()) terms.push_back({monos[j], v[j]});
    kernel.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return kernel;
}

VeroneseCheck veronese_containment_check(const KaehlerModule& omega, long max_degree) {
  const std::uint32_t p = omega.algebra()->field().characteristic();
  if (p == 0) throw Error("Veronese containment check needs positive characteristic");
  VeroneseCheck out;
  for (long d = 1; d <= max_degree; ++d) {
    std::size_t k = derivation_kernel_in_degree(omega, d).size();
    out.kernel_dimensions.emplace_back(d, k);
    if (d % p != 0 && k != 0) {
      out.violations.push_back(d);
      out.pass = false;
    }
  }
  return out;
}

}  // namespace kahler
