#pragma once

// Sparse multivariate polynomials over an exact field, with positive integer
// variable weights, and vectors in finite free modules over them.

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kahler/field.hpp"

namespace kahler {

enum class MonomialOrder { WeightedGrevlex, Lex };

// Exponent vector, one slot per ring variable.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::int32_t, 8>;

  // Exponents are capped well below int32 overflow; products past the cap throw.
  static constexpr std::int32_t kMaxExponent = 1 << 20;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(Exponents exps);
  Monomial(std::initializer_list<std::int32_t> exps);

  std::size_t size() const { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::int32_t e);
  const Exponents& exponents() const { return exps_; }

  bool is_one() const;
  long total_degree() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // this / other; other must divide this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
  // Plain lexicographic comparison on the exponent vector, for containers.
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

 private:
  Exponents exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

class Polynomial;
class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  // Weights default to 1. Throws Error on duplicate names, non-positive
  // weights, or a name clashing with the function field variable.
  static RingPtr make(const FieldDescriptor& field, std::vector<std::string> names, std::vector<int> weights = {},
                      MonomialOrder order = MonomialOrder::WeightedGrevlex);

  const FieldDescriptor& field() const { return *field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  MonomialOrder order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  long weighted_degree(const Monomial& m) const;
  // -1, 0, 1 under the ring's monomial order.
  int compare(const Monomial& a, const Monomial& b) const;

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(const FieldElement& c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial variable(std::string_view name) const;
  Monomial unit_monomial() const { return Monomial(nvars()); }

  // All monomials of weighted degree exactly d.
  std::vector<Monomial> monomials_of_degree(long d) const;
  // All monomials of (unweighted) total degree exactly d.
  std::vector<Monomial> monomials_of_total_degree(long d) const;

  std::string monomial_to_string(const Monomial& m) const;

  // Same field, names, weights and order.
  bool same_as(const PolyRing& o) const;

 private:
  PolyRing(const FieldDescriptor& field, std::vector<std::string> names, std::vector<int> weights, MonomialOrder order)
      : field_(&field), names_(std::move(names)), weights_(std::move(weights)), order_(order) {}

  const FieldDescriptor* field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  FieldElement coeff;
};

// Terms are kept strictly decreasing in the ring order with no zero
// coefficients, so equality is term-list equality.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  // Sorts and combines like terms; drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  // Terms must already be canonical (strictly decreasing, nonzero).
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial monomial(RingPtr ring, Monomial m, FieldElement c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const FieldElement& leading_coeff() const { return terms_.front().coeff; }
  FieldElement coefficient(const Monomial& m) const;
  // Constant term (zero when absent).
  FieldElement constant_term() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scale(const FieldElement& c) const;
  Polynomial mul_term(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  Polynomial partial_derivative(std::size_t var) const;
  Polynomial partial_derivative(std::string_view var) const;

  // Weighted degree if homogeneous (zero counts as degree 0), else nullopt.
  std::optional<long> weighted_degree() const;
  bool is_homogeneous() const { return weighted_degree().has_value(); }
  std::map<long, Polynomial> homogeneous_components() const;
  // Highest weighted degree of a term; -1 for zero.
  long max_weighted_degree() const;

  // Substitute images[i] for variable i; images live in a common ring.
  Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr& target) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void require_same(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Sum over variables of weight(X) * X * dG/dX. Equals deg(G) * G for
// homogeneous G.
Polynomial euler_apply(const Polynomial& g);

// Moves p into `target` by renaming each of its variables. The renaming must
// cover every variable occurring in p and be injective on them.
Polynomial rename_variables(const Polynomial& p, const RingPtr& target,
                            const std::map<std::string, std::string>& renaming);

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// (component, monomial) pair: the basis element X^m * e_component.
struct ModuleMonomial {
  std::uint32_t component;
  Monomial mono;
  bool operator==(const ModuleMonomial&) const = default;
};

struct ModuleTerm {
  std::uint32_t component;
  Monomial mono;
  FieldElement coeff;
};

// Position-over-term: a lower component index is larger; within a
// component the ring order decides.
int compare_module(const PolyRing& ring, std::uint32_t ca, const Monomial& a, std::uint32_t cb, const Monomial& b);

// Element of the free module P^rank. Terms strictly decreasing in the
// position-over-term order.
class ModuleVector {
 public:
  ModuleVector(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}
  static ModuleVector unit(RingPtr ring, std::size_t rank, std::size_t i);
  static ModuleVector from_components(RingPtr ring, const std::vector<Polynomial>& components);
  static ModuleVector from_terms(RingPtr ring, std::size_t rank, std::vector<ModuleTerm> terms);
  static ModuleVector from_sorted_terms(RingPtr ring, std::size_t rank, std::vector<ModuleTerm> terms);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModuleTerm& leading_term() const { return terms_.front(); }

  Polynomial component(std::size_t i) const;
  std::vector<Polynomial> components() const;

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector operator-() const;
  ModuleVector scale(const FieldElement& c) const;
  ModuleVector mul_term(const Monomial& m, const FieldElement& c) const;
  ModuleVector operator*(const Polynomial& p) const;

  bool operator==(const ModuleVector& o) const;
  bool operator!=(const ModuleVector& o) const { return !(*this == o); }

  // "(X^2, 0, 2*Y)".
  std::string to_string() const;

 private:
  void require_same(const ModuleVector& o) const;

  RingPtr ring_;
  std::size_t rank_;
  std::vector<ModuleTerm> terms_;
};

// Sum of a*x + b*y as term merges, shared with the Gröbner engine.
namespace detail {
std::vector<Term> merge_add(const PolyRing& ring, const std::vector<Term>& a, const std::vector<Term>& b);
std::vector<ModuleTerm> merge_add(const PolyRing& ring, const std::vector<ModuleTerm>& a,
                                  const std::vector<ModuleTerm>& b);
}  // namespace detail

}  // namespace kahler
