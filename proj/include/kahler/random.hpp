#pragma once

// Seeded generators for randomized checks. Draws are derived from
// std::mt19937_64 output directly (no std distributions), so a seed gives the
// same stream on every platform.

#include <cstdint>
#include <random>

#include "kahler/poly.hpp"

namespace kahler {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Integers in [-bound, bound] for QQ, residues for F_p, and for F_p(x) a
// quotient of polynomials of degree <= 3.
FieldElement random_scalar(const FieldDescriptor& field, Rng& rng, long bound = 5);
FieldElement random_nonzero_scalar(const FieldDescriptor& field, Rng& rng, long bound = 5);
// Random element of F_p(x): numerator and denominator of degree <= max_degree.
FieldElement random_rational_function(const FieldDescriptor& field, Rng& rng, int max_degree = 4);
// Up to `terms` random monomials of weighted degree exactly `degree`.
Polynomial random_homogeneous(const RingPtr& ring, long degree, std::size_t terms, Rng& rng);
// Up to `terms` random monomials of total degree in [min_degree, max_degree].
Polynomial random_polynomial(const RingPtr& ring, long min_degree, long max_degree, std::size_t terms, Rng& rng);

}  // namespace kahler
