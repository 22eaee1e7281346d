#include "kahler/random.hpp"

#include <limits>
#include <vector>

#include "kahler/error.hpp"

namespace kahler {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

FieldElement random_scalar(const FieldDescriptor& field, Rng& rng, long bound) {
  switch (field.kind()) {
    case FieldKind::Rationals: return field.from_int(rng.range(-bound, bound));
    case FieldKind::PrimeField: return field.from_int(static_cast<long>(rng.below(field.characteristic())));
    case FieldKind::RationalFunctions: return random_rational_function(field, rng, 3);
  }
  return field.zero();
}

FieldElement random_nonzero_scalar(const FieldDescriptor& field, Rng& rng, long bound) {
  for (;;) {
    FieldElement c = random_scalar(field, rng, bound);
    if (!c.is_zero()) return c;
  }
}

FieldElement random_rational_function(const FieldDescriptor& field, Rng& rng, int max_degree) {
  if (field.kind() != FieldKind::RationalFunctions) throw Error("random rational function needs an F_p(x) field");
  const FieldElement x = field.generator();
  auto poly = [&] {
    FieldElement out = field.zero();
    int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree) + 1));
    for (int i = deg; i >= 0; --i) out = out * x + field.from_int(static_cast<long>(rng.below(field.characteristic())));
    return out;
  };
  FieldElement num = poly();
  FieldElement den = poly();
  while (den.is_zero()) den = poly();
  return num / den;
}

Polynomial random_homogeneous(const RingPtr& ring, long degree, std::size_t terms, Rng& rng) {
  std::vector<Monomial> monos = ring->monomials_of_degree(degree);
  std::vector<Term> out;
  if (monos.empty()) return ring->zero();
  for (std::size_t i = 0; i < terms; ++i)
    out.push_back({monos[rng.below(monos.size())], random_nonzero_scalar(ring->field(), rng)});
  return Polynomial::from_terms(ring, std::move(out));
}

Polynomial random_polynomial(const RingPtr& ring, long min_degree, long max_degree, std::size_t terms, Rng& rng) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms; ++i) {
    std::vector<Monomial> monos = ring->monomials_of_total_degree(rng.range(min_degree, max_degree));
    if (monos.empty()) continue;
    out.push_back({monos[rng.below(monos.size())], random_nonzero_scalar(ring->field(), rng)});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

}  // namespace kahler
