#include "kahler/algebra.hpp"

#include <utility>

#include "kahler/error.hpp"

namespace kahler {

std::string to_string(PresentationMode mode) {
  switch (mode) {
    case PresentationMode::Plain: return "plain";
    case PresentationMode::Local: return "local";
    case PresentationMode::Graded: return "graded";
  }
  return "plain";
}

std::string to_string(BaseKind base) {
  return base == BaseKind::CoefficientField ? "field" : "degree0";
}

bool Presentation::operator==(const Presentation& o) const {
  return ring->same_as(*o.ring) && mode == o.mode && base == o.base && relations.size() == o.relations.size() &&
         [&] {
           for (std::size_t i = 0; i < relations.size(); ++i)
             if (relations[i].to_string() != o.relations[i].to_string()) return false;
           return true;
         }();
}

std::string Dimension::to_string() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::Infinite: return "infinite";
    case Kind::Unknown: return "unknown";
  }
  return "unknown";
}

QuotientAlgebra::QuotientAlgebra(Presentation presentation, std::vector<Polynomial> defining_relations,
                                 GroebnerBasis basis, std::optional<int> truncation_order, std::size_t dimension_cap)
    : presentation_(std::move(presentation)),
      defining_(std::move(defining_relations)),
      basis_(std::move(basis)),
      truncation_(truncation_order) {
  Staircase st = kahler::staircase(basis_, dimension_cap);
  if (!st.finite()) {
    dimension_ = {Dimension::Kind::Infinite, 0};
    return;
  }
  staircase_ = st.monomials();
  dimension_ = {Dimension::Kind::Finite, staircase_.size()};
  for (std::size_t i = 0; i < staircase_.size(); ++i) staircase_index_.emplace(staircase_[i], i);
}

std::size_t QuotientAlgebra::dim() const {
  if (!dimension_.finite()) throw Error("algebra is not finite dimensional");
  return dimension_.value;
}

const std::vector<Monomial>& QuotientAlgebra::staircase() const {
  if (!dimension_.finite()) throw Error("algebra is not finite dimensional");
  return staircase_;
}

Polynomial QuotientAlgebra::power(const Polynomial& a, unsigned e) const {
  Polynomial result = reduce(ring()->one());
  Polynomial base = reduce(a);
  while (e) {
    if (e & 1u) result = reduce(result * base);
    e >>= 1;
    if (e) base = reduce(base * base);
  }
  return result;
}

Polynomial QuotientAlgebra::element(std::string_view text) const { return reduce(parse_polynomial(text, ring())); }

std::vector<FieldElement> QuotientAlgebra::coordinates(const Polynomial& f) const {
  const auto& stair = staircase();
  std::vector<FieldElement> out(stair.size(), field().zero());
  Polynomial r = reduce(f);
  for (const auto& t : r.terms()) out[staircase_index_.at(t.mono)] = t.coeff;
  return out;
}

Polynomial QuotientAlgebra::from_coordinates(const std::vector<FieldElement>& coords) const {
  const auto& stair = staircase();
  if (coords.size() != stair.size()) throw MismatchError("coordinate vector has the wrong length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) terms.push_back({stair[i], coords[i]});
  return Polynomial::from_terms(ring(), std::move(terms));
}

namespace {

void require_ring(const Presentation& p) {
  if (!p.ring) throw Error("presentation has no ring");
  for (const auto& r : p.relations)
    if (!r.ring()->same_as(*p.ring)) throw MismatchError("relation lives in a different ring");
}

AlgebraPtr build(Presentation presentation, std::vector<Polynomial> defining, std::optional<int> truncation,
                 const AlgebraOptions& options) {
  GroebnerBasis gb = GroebnerBasis::ideal(presentation.ring, defining, options.groebner);
  return std::make_shared<const QuotientAlgebra>(std::move(presentation), std::move(defining), std::move(gb),
                                                 truncation, options.dimension_cap);
}

std::vector<Polynomial> with_power_of_maximal_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens, int n) {
  std::vector<Polynomial> out = gens;
  for (const auto& m : ring->monomials_of_total_degree(n))
    out.push_back(Polynomial::monomial(ring, m, ring->field().one()));
  return out;
}

}  // namespace

AlgebraPtr make_quotient(const Presentation& presentation, const AlgebraOptions& options) {
  require_ring(presentation);
  if (presentation.mode == PresentationMode::Local) return artinian_local_model(presentation, options);
  if (presentation.mode == PresentationMode::Graded)
    for (const auto& r : presentation.relations)
      if (!r.is_homogeneous()) throw Error("graded presentation has an inhomogeneous relation: " + r.to_string());
  return build(presentation, presentation.relations, std::nullopt, options);
}

AlgebraPtr artinian_local_model(const Presentation& presentation, const AlgebraOptions& options) {
  require_ring(presentation);
  const RingPtr& ring = presentation.ring;
  Presentation stored = presentation;
  stored.mode = PresentationMode::Local;
  if (ring->nvars() == 0) return build(stored, presentation.relations, 0, options);

  auto truncated = [&](int n) {
    std::vector<Polynomial> gens = with_power_of_maximal_ideal(ring, presentation.relations, n);
    GroebnerBasis gb = GroebnerBasis::ideal(ring, gens, options.groebner);
    return std::make_pair(std::move(gens), std::move(gb));
  };

  auto [gens, gb] = truncated(1);
  std::size_t dim = *kahler::dimension(gb, options.dimension_cap);
  for (int n = 1; n <= options.truncation_cap; ++n) {
    auto [next_gens, next_gb] = truncated(n + 1);
    std::size_t next_dim = *kahler::dimension(next_gb, options.dimension_cap);
    if (next_dim == dim)
      return std::make_shared<const QuotientAlgebra>(std::move(stored), std::move(gens), std::move(gb), n,
                                                     options.dimension_cap);
    gens = std::move(next_gens);
    gb = std::move(next_gb);
    dim = next_dim;
  }
  throw NotPrimaryError("m-adic truncation did not stabilize by order " + std::to_string(options.truncation_cap) +
                        "; the ideal is not primary to the maximal ideal");
}

AlgebraPtr artinian_local_model(const RingPtr& ring, const std::vector<Polynomial>& generators,
                                const AlgebraOptions& options) {
  return artinian_local_model(Presentation{ring, generators, PresentationMode::Local}, options);
}

std::string tensor_variable_name(const std::string& name, std::size_t factor) {
  return name + "#" + std::to_string(factor);
}

Presentation tensor_product(const std::vector<AlgebraPtr>& factors) {
  if (factors.empty()) throw Error("tensor product of no factors");
  const FieldDescriptor& field = factors.front()->field();
  MonomialOrder order = factors.front()->ring()->order();
  std::vector<std::string> names;
  std::vector<int> weights;
  bool graded = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& ring = *factors[i]->ring();
    if (&ring.field() != &field) throw MismatchError("tensor factors over different fields");
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      names.push_back(tensor_variable_name(ring.names()[v], i + 1));
      weights.push_back(ring.weights()[v]);
    }
    if (factors[i]->presentation().mode != PresentationMode::Graded) graded = false;
  }
  Presentation out;
  out.ring = PolyRing::make(field, names, weights, order);
  out.mode = graded ? PresentationMode::Graded : PresentationMode::Plain;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (const auto& r : factors[i]->defining_relations()) out.relations.push_back(embed_in_tensor(r, i + 1, out.ring));
  return out;
}

Presentation tensor_product(const QuotientAlgebra& a, const QuotientAlgebra& b) {
  // Non-owning handles; the factors outlive the call.
  AlgebraPtr pa(&a, [](const QuotientAlgebra*) {});
  AlgebraPtr pb(&b, [](const QuotientAlgebra*) {});
  return tensor_product(std::vector<AlgebraPtr>{pa, pb});
}

Polynomial embed_in_tensor(const Polynomial& p, std::size_t factor, const RingPtr& tensor_ring) {
  std::map<std::string, std::string> renaming;
  for (const auto& name : p.ring()->names()) renaming.emplace(name, tensor_variable_name(name, factor));
  return rename_variables(p, tensor_ring, renaming);
}

AlgebraPtr quotient_by(const QuotientAlgebra& a, const std::vector<Polynomial>& elements,
                       const AlgebraOptions& options) {
  Presentation p;
  p.ring = a.ring();
  p.base = a.presentation().base;
  p.relations = a.defining_relations();
  bool graded = a.presentation().mode == PresentationMode::Graded;
  for (const auto& e : elements) {
    if (!e.ring()->same_as(*a.ring())) throw MismatchError("element lives in a different ring");
    p.relations.push_back(e);
    if (!e.is_homogeneous()) graded = false;
  }
  p.mode = graded ? PresentationMode::Graded : PresentationMode::Plain;
  std::vector<Polynomial> defining = p.relations;
  return build(std::move(p), std::move(defining), std::nullopt, options);
}

Polynomial AlgebraMap::apply(const Polynomial& f) const {
  if (!f.ring()->same_as(*source_->ring())) throw MismatchError("element is not in the source algebra");
  return target_->reduce(f.substitute(images_, target_->ring()));
}

AlgebraMap make_map(AlgebraPtr source, AlgebraPtr target, std::vector<Polynomial> images) {
  if (&source->field() != &target->field()) throw MismatchError("algebra map between different fields");
  if (images.size() != source->ring()->nvars())
    throw MismatchError("need one image per source variable (" + std::to_string(source->ring()->nvars()) + ")");
  for (auto& img : images) {
    if (!img.ring()->same_as(*target->ring())) throw MismatchError("image is not in the target ring");
    img = target->reduce(img);
  }
  AlgebraMap map;
  map.source_ = std::move(source);
  map.target_ = std::move(target);
  map.images_ = std::move(images);
  for (const auto& rel : map.source_->defining_relations()) {
    Polynomial nf = map.apply(rel);
    if (!nf.is_zero())
      throw NotARingMap("not a ring map: relation " + rel.to_string() + " maps to " + nf.to_string());
    map.certificate_.push_back(std::move(nf));
  }
  return map;
}

AlgebraMap identity_map(const AlgebraPtr& a) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < a->ring()->nvars(); ++i) images.push_back(a->ring()->variable(i));
  return make_map(a, a, std::move(images));
}

AlgebraMap compose(const AlgebraMap& second, const AlgebraMap& first) {
  if (first.target() != second.source() &&
      !(first.target()->ring()->same_as(*second.source()->ring()) &&
        first.target()->basis().vectors() == second.source()->basis().vectors()))
    throw MismatchError("maps do not compose");
  std::vector<Polynomial> images;
  for (const auto& img : first.images()) images.push_back(second.apply(img));
  return make_map(first.source(), second.target(), std::move(images));
}

Matrix linear_matrix(const AlgebraMap& map) {
  const auto& src = map.source()->staircase();
  std::size_t rows = map.target()->dim();
  Matrix m(map.source()->field(), rows, src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    auto col = map.target()->coordinates(
        map.apply(Polynomial::monomial(map.source()->ring(), src[j], map.source()->field().one())));
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = col[i];
  }
  return m;
}

bool is_injective(const AlgebraMap& map) { return linear_matrix(map).rank() == map.source()->dim(); }

std::optional<unsigned> nilpotency_index(const QuotientAlgebra& a, const Polynomial& element) {
  std::size_t dim = a.dim();
  Polynomial x = a.reduce(element);
  Polynomial power = x;
  for (unsigned t = 1; t <= dim + 1; ++t) {
    if (power.is_zero()) return t;
    power = a.reduce(power * x);
  }
  return std::nullopt;
}

bool is_local_with_nilpotent_generators(const QuotientAlgebra& a) {
  if (!a.is_finite() || a.dim() == 0) return false;
  for (std::size_t i = 0; i < a.ring()->nvars(); ++i)
    if (!nilpotency_index(a, a.ring()->variable(i))) return false;
  return true;
}

bool has_nonzero_nilpotent(const QuotientAlgebra& a) {
  if (!is_local_with_nilpotent_generators(a))
    throw Error("nilpotent test needs a local algebra with nilpotent generators");
  return a.dim() > 1;
}

}  // namespace kahler
