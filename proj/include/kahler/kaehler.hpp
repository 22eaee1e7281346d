#pragma once

// Kähler differentials of a presented algebra R = P/I: the cokernel of the
// Jacobian rows of I (plus I times the free module) in the free P-module on
// dX_1..dX_s. Equality in Ω is membership in that relation submodule.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "kahler/algebra.hpp"
#include "kahler/groebner.hpp"
#include "kahler/linalg.hpp"

namespace kahler {

// k-basis of a finite-dimensional Ω: the staircase of the relation module.
class OmegaBasis {
 public:
  OmegaBasis() = default;
  explicit OmegaBasis(std::vector<ModuleMonomial> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<ModuleMonomial>& elements() const { return elements_; }
  // Coordinates of a reduced vector.
  std::vector<FieldElement> coordinates(const ModuleVector& reduced, const FieldDescriptor& field) const;

 private:
  std::vector<ModuleMonomial> elements_;
  std::map<std::pair<std::uint32_t, Monomial>, std::size_t> index_;
};

class KaehlerModule {
 public:
  // With positive weights the degree-zero subring is k itself, so both
  // bases give the same module; the base is kept as a tag for map checks.
  KaehlerModule(AlgebraPtr algebra, BaseKind base = BaseKind::CoefficientField, const GroebnerOptions& options = {});

  const AlgebraPtr& algebra() const { return algebra_; }
  BaseKind base() const { return base_; }
  const RingPtr& ring() const { return algebra_->ring(); }
  // Number of generators dX_i.
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleVector>& relations() const { return relations_; }
  const GroebnerBasis& basis() const { return basis_; }

  // Sum of dF/dX_i e_i, unreduced.
  ModuleVector d_raw(const Polynomial& f) const;
  // Reduced d(f).
  ModuleVector d_image(const Polynomial& f) const { return reduce(d_raw(f)); }
  ModuleVector reduce(const ModuleVector& v) const { return basis_.normal_form(v); }
  bool is_zero(const ModuleVector& v) const { return reduce(v).is_zero(); }
  bool is_d_zero(const Polynomial& f) const { return d_image(f).is_zero(); }
  bool is_omega_zero() const { return rank_ == 0 || basis_.is_unit(); }

  // nullopt when Ω is infinite dimensional; CapExceeded past `limit`.
  std::optional<std::size_t> dimension(std::size_t limit = kDefaultStaircaseLimit) const;
  // Throws Error when Ω is infinite dimensional.
  OmegaBasis vector_space_basis(std::size_t limit = kDefaultStaircaseLimit) const;

 private:
  AlgebraPtr algebra_;
  BaseKind base_;
  std::size_t rank_;
  std::vector<ModuleVector> relations_;
  GroebnerBasis basis_;
};

KaehlerModule kaehler(const AlgebraPtr& algebra, BaseKind base = BaseKind::CoefficientField,
                      const GroebnerOptions& options = {});

// Reduced images d(phi(X_i)) in the target's Ω, one per source variable.
std::vector<ModuleVector> induced_map_on_omega(const AlgebraMap& phi, const KaehlerModule& target);
bool is_zero_induced_map(const AlgebraMap& phi, const KaehlerModule& target);
// Throws MismatchError if the two modules are over different bases.
bool is_zero_induced_map(const AlgebraMap& phi, const KaehlerModule& source, const KaehlerModule& target);

// Matrix of Ω(phi) in the staircase bases of the two modules (columns:
// source basis).
Matrix omega_linear_matrix(const AlgebraMap& phi, const KaehlerModule& source, const KaehlerModule& target,
                           std::size_t limit = kDefaultStaircaseLimit);

// The contraction dX_i -> w_i X_i; sends d(G) to euler_apply(G).
Polynomial euler_contraction(const ModuleVector& v);

// Basis of {f in R_deg : df = 0}, as reduced polynomials. Needs homogeneous
// defining relations.
std::vector<Polynomial> derivation_kernel_in_degree(const KaehlerModule& omega, long degree);

struct VeroneseCheck {
  bool pass = true;
  // (degree, kernel dimension) for 1 <= degree <= D.
  std::vector<std::pair<long, std::size_t>> kernel_dimensions;
  // Degrees not divisible by p with a nonzero kernel.
  std::vector<long> violations;
};

// Over characteristic p: the kernel of d vanishes in every degree not
// divisible by p, up to `max_degree`. Throws Error in characteristic 0.
VeroneseCheck veronese_containment_check(const KaehlerModule& omega, long max_degree);

}  // namespace kahler
