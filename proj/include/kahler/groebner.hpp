#pragma once

// Buchberger's algorithm for polynomial ideals and for submodules of free
// modules (position-over-term), normal forms, membership and staircases.
//
// Ideals are handled as rank-1 submodules, so there is one engine. Pairs are
// processed with the normal strategy (smallest lcm first, ties broken by the
// pair's index), and the result is always the reduced basis, sorted by
// leading term. For a fixed order the output is therefore unique.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "kahler/poly.hpp"

namespace kahler {

struct GroebnerOptions {
  // Reduction steps (one leading-term cancellation each) before giving up.
  std::size_t step_budget = 1'000'000;
};

inline constexpr std::size_t kDefaultStaircaseLimit = 20000;

class GroebnerBasis {
 public:
  // Throws BudgetExceeded if the step budget runs out.
  static GroebnerBasis ideal(const RingPtr& ring, const std::vector<Polynomial>& generators,
                             const GroebnerOptions& options = {});
  static GroebnerBasis submodule(const RingPtr& ring, std::size_t rank, const std::vector<ModuleVector>& generators,
                                 const GroebnerOptions& options = {});

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  bool is_ideal() const { return ideal_; }
  bool is_reduced() const { return true; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<ModuleVector>& vectors() const { return basis_; }
  // Ideal case only.
  std::vector<Polynomial> polynomials() const;
  std::vector<ModuleMonomial> leading_monomials() const;
  std::size_t steps_used() const { return steps_; }

  Polynomial normal_form(const Polynomial& f) const;
  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const ModuleVector& v) const { return normal_form(v).is_zero(); }
  // The basis is the whole ring / module.
  bool is_unit() const;

  // Every S-pair reduces to zero against the basis.
  bool satisfies_buchberger_criterion() const;

 private:
  GroebnerBasis(RingPtr ring, std::size_t rank, bool ideal) : ring_(std::move(ring)), rank_(rank), ideal_(ideal) {}
  void run(std::vector<ModuleVector> generators, const GroebnerOptions& options);

  RingPtr ring_;
  std::size_t rank_;
  bool ideal_;
  std::vector<ModuleVector> basis_;
  std::size_t steps_ = 0;
};

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators,
                         const GroebnerOptions& options = {});
GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank, const std::vector<ModuleVector>& generators,
                         const GroebnerOptions& options = {});

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }
inline ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb) { return gb.normal_form(v); }

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& generators, const GroebnerOptions& options = {});
bool module_member(const ModuleVector& v, const std::vector<ModuleVector>& generators,
                   const GroebnerOptions& options = {});

// Monomials (component-tagged for modules) outside the leading-term module,
// sorted ascending in the module order. An infinite staircase carries no
// elements.
class Staircase {
 public:
  Staircase() = default;
  Staircase(bool finite, std::vector<ModuleMonomial> elements) : finite_(finite), elements_(std::move(elements)) {}

  bool finite() const { return finite_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ModuleMonomial>& elements() const { return elements_; }
  // Monomials of component 0 (the whole staircase for an ideal).
  std::vector<Monomial> monomials() const;
  // Count of staircase elements per weighted degree; component i is shifted
  // by shifts[i] when given.
  std::map<long, std::size_t> degree_counts(const PolyRing& ring, const std::vector<long>& shifts = {}) const;

 private:
  bool finite_ = false;
  std::vector<ModuleMonomial> elements_;
};

// Throws CapExceeded when a finite staircase has more than `limit` elements.
Staircase staircase(const GroebnerBasis& gb, std::size_t limit = kDefaultStaircaseLimit);
// nullopt means infinite.
std::optional<std::size_t> dimension(const GroebnerBasis& gb, std::size_t limit = kDefaultStaircaseLimit);
// Staircase elements of weighted degree `degree`, where component i carries
// the extra degree shifts[i] (zero when shifts is empty). Works whether or
// not the whole staircase is finite.
std::vector<ModuleMonomial> staircase_in_degree(const GroebnerBasis& gb, long degree,
                                                const std::vector<long>& shifts = {});

}  // namespace kahler
