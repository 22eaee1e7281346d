#pragma once

// Finitely presented algebras P/I over a field: element arithmetic through
// normal forms, the m-adically truncated model of a power-series quotient,
// tensor products, further quotients and algebra maps.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kahler/groebner.hpp"
#include "kahler/linalg.hpp"
#include "kahler/poly.hpp"

namespace kahler {

enum class PresentationMode { Plain, Local, Graded };
enum class BaseKind { CoefficientField, DegreeZero };

std::string to_string(PresentationMode mode);
std::string to_string(BaseKind base);

struct Presentation {
  RingPtr ring;
  std::vector<Polynomial> relations;
  PresentationMode mode = PresentationMode::Plain;
  BaseKind base = BaseKind::CoefficientField;

  bool operator==(const Presentation& o) const;
};

struct AlgebraOptions {
  GroebnerOptions groebner;
  // Largest staircase that will be enumerated.
  std::size_t dimension_cap = kDefaultStaircaseLimit;
  // Largest m-adic truncation order tried by the local model.
  int truncation_cap = 64;
};

struct Dimension {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t value = 0;

  bool finite() const { return kind == Kind::Finite; }
  std::string to_string() const;
};

class QuotientAlgebra {
 public:
  // Use make_quotient / artinian_local_model / quotient_by.
  QuotientAlgebra(Presentation presentation, std::vector<Polynomial> defining_relations, GroebnerBasis basis,
                  std::optional<int> truncation_order, std::size_t dimension_cap);

  const RingPtr& ring() const { return presentation_.ring; }
  const FieldDescriptor& field() const { return presentation_.ring->field(); }
  // The presentation as given (for the local model: without the m^N part).
  const Presentation& presentation() const { return presentation_; }
  // Generators of the ideal actually quotiented out.
  const std::vector<Polynomial>& defining_relations() const { return defining_; }
  const GroebnerBasis& basis() const { return basis_; }
  // Set for the local model: the N with I + m^N = I + m^(N+1).
  std::optional<int> truncation_order() const { return truncation_; }

  const Dimension& dimension() const { return dimension_; }
  bool is_finite() const { return dimension_.finite(); }
  // Throws Error unless the dimension is finite.
  std::size_t dim() const;
  // Staircase monomials in increasing monomial order; finite case only.
  const std::vector<Monomial>& staircase() const;

  Polynomial reduce(const Polynomial& f) const { return basis_.normal_form(f); }
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool equal(const Polynomial& a, const Polynomial& b) const { return is_zero(a - b); }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return reduce(a + b); }
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const { return reduce(reduce(a) * reduce(b)); }
  Polynomial power(const Polynomial& a, unsigned e) const;
  Polynomial variable(std::size_t i) const { return reduce(ring()->variable(i)); }
  // Parses in the ambient ring and reduces.
  Polynomial element(std::string_view text) const;

  // Coordinates of the normal form in the staircase basis; finite case only.
  std::vector<FieldElement> coordinates(const Polynomial& f) const;
  Polynomial from_coordinates(const std::vector<FieldElement>& coords) const;

 private:
  Presentation presentation_;
  std::vector<Polynomial> defining_;
  GroebnerBasis basis_;
  std::optional<int> truncation_;
  Dimension dimension_;
  std::vector<Monomial> staircase_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> staircase_index_;
};

using AlgebraPtr = std::shared_ptr<const QuotientAlgebra>;

// Graded presentations must have homogeneous relations; Local mode is
// routed to artinian_local_model.
AlgebraPtr make_quotient(const Presentation& presentation, const AlgebraOptions& options = {});

// Realizes k[[X]]/I as P/(I + m^N) for the first N at which the dimension
// stops changing; dimension equality gives m^N in I + m*m^N, hence m^N in
// I k[[X]] by Nakayama. Throws NotPrimaryError past options.truncation_cap.
AlgebraPtr artinian_local_model(const Presentation& presentation, const AlgebraOptions& options = {});
AlgebraPtr artinian_local_model(const RingPtr& ring, const std::vector<Polynomial>& generators,
                                const AlgebraOptions& options = {});

// Factor i (1-based) contributes its variables renamed to name#i.
std::string tensor_variable_name(const std::string& name, std::size_t factor);
Presentation tensor_product(const std::vector<AlgebraPtr>& factors);
Presentation tensor_product(const QuotientAlgebra& a, const QuotientAlgebra& b);
// Image of an element of factor i in the tensor ring.
Polynomial embed_in_tensor(const Polynomial& p, std::size_t factor, const RingPtr& tensor_ring);

AlgebraPtr quotient_by(const QuotientAlgebra& a, const std::vector<Polynomial>& elements,
                       const AlgebraOptions& options = {});

class AlgebraMap {
 public:
  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  // Reduced image of each source variable.
  const std::vector<Polynomial>& images() const { return images_; }
  // Normal forms of the mapped source relations; all zero.
  const std::vector<Polynomial>& certificate() const { return certificate_; }

  Polynomial apply(const Polynomial& f) const;

 private:
  friend AlgebraMap make_map(AlgebraPtr, AlgebraPtr, std::vector<Polynomial>);
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<Polynomial> images_;
  std::vector<Polynomial> certificate_;
};

// Throws NotARingMap naming the first relation that does not map to zero.
AlgebraMap make_map(AlgebraPtr source, AlgebraPtr target, std::vector<Polynomial> images);
AlgebraMap identity_map(const AlgebraPtr& a);
// second after first.
AlgebraMap compose(const AlgebraMap& second, const AlgebraMap& first);

// Matrix of the map in the staircase bases (columns: source basis).
Matrix linear_matrix(const AlgebraMap& map);
bool is_injective(const AlgebraMap& map);

// Least t with a^t = 0, or nullopt if a is not nilpotent. Finite algebras only.
std::optional<unsigned> nilpotency_index(const QuotientAlgebra& a, const Polynomial& element);

// Every generator nilpotent (so the generators span the unique maximal ideal
// and the residue field is k). False for the zero ring and infinite algebras.
bool is_local_with_nilpotent_generators(const QuotientAlgebra& a);
// Only meaningful for local algebras with nilpotent generators; throws
// Error otherwise.
bool has_nonzero_nilpotent(const QuotientAlgebra& a);

}  // namespace kahler
