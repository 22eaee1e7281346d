#pragma once

// Executable versions of the constructions: the preparatory algebra B(n)
// with its square-zero element f, tensor powers of B, the step that kills a
// differential, its iteration, the characteristic-p tower, the twisted
// example, the Artinian local harness and the Euler identity checks. Each
// returns a VerificationReport.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kahler/algebra.hpp"
#include "kahler/kaehler.hpp"
#include "kahler/report.hpp"

namespace kahler {

struct ConstructionOptions {
  AlgebraOptions algebra;
  // Largest algebra dimension a construction may build.
  std::size_t dimension_cap = kDefaultStaircaseLimit;
  // n of the B(n) factors used when killing a differential.
  int internal_n = 5;
  // Permit B(n) in characteristic p not dividing 2n(n-4).
  bool allow_positive_characteristic = false;
  // Leave elapsed_ms at 0.
  bool timing = true;
};

struct GabberB {
  int n = 0;
  AlgebraPtr algebra;
  Polynomial F;   // X^2 Y^2 + X^n + Y^n
  Polynomial F1;  // 2Y^2 + n X^(n-2)
  Polynomial F2;  // 2X^2 + n Y^(n-2)
  // Set when built outside characteristic zero.
  std::optional<std::string> warning;
};

// k[[X,Y]]/(X F1, Y F2), realized through the m-adic model, with f = image of F.
GabberB gabber_B(int n, const FieldDescriptor& field, const ConstructionOptions& options = {});
VerificationReport verify_preparatory(int n, const FieldDescriptor& field, const ConstructionOptions& options = {});

struct TensorPower {
  AlgebraPtr algebra;
  // f placed in factor i, for i = 1..t-1.
  std::vector<Polynomial> parts;
  Polynomial g;
  VerificationReport report;
};

// Tensor product of t-1 copies of B(n); checks g^t = 0 and
// g^(t-1) = (t-1)! f (x) ... (x) f != 0.
TensorPower B_tensor_power(int n, int t, const FieldDescriptor& field, const ConstructionOptions& options = {});

struct KillingStep {
  AlgebraPtr result;
  AlgebraMap iota;
  VerificationReport report;
};

// R' = R (x) B_t / (r (x) 1 - 1 (x) g) with t the nilpotency index of r.
// Throws CapExceeded before building anything larger than the cap.
KillingStep killing_step(const AlgebraPtr& r_algebra, const Polynomial& r, const ConstructionOptions& options = {});

struct KillAll {
  AlgebraPtr result;
  AlgebraMap map;
  VerificationReport report;
};

// Kills d of each basis element of the maximal ideal in turn. A cap stops
// the chain with status cap_exceeded; the partial chain is returned.
KillAll kill_all_differentials(const AlgebraPtr& r_algebra, const ConstructionOptions& options = {});

enum class SequenceSeed { Preparatory, DualNumbers };

VerificationReport gabber_sequence(int steps, SequenceSeed seed, const FieldDescriptor& field,
                                   const ConstructionOptions& options = {});

// A_n = F_p[Y]/(Y^(p^n)), standing for k[X^(1/p^n)]/(X), with Y -> Y'^p.
VerificationReport charp_tower(std::uint32_t p, int n_max, const ConstructionOptions& options = {});

// A_n = L[U,Z]/(U^(p^n) - x - Z, Z^2) over L = F_p(x).
VerificationReport twisted_example(std::uint32_t p, int n, std::uint64_t seed = 1, std::size_t pairs = 50,
                                   const ConstructionOptions& options = {});

struct CorpusEntry {
  std::string name;
  Presentation presentation;
  // Named examples are also checked through the contrapositive.
  bool named_example = false;
};

// The fixed examples: k, Q[Z]/(Z^2), B(5).
std::vector<CorpusEntry> named_local_examples();
// Random local presentations over Q: random generators in m plus every
// monomial of some degree D.
std::vector<CorpusEntry> random_local_corpus(std::size_t count, std::uint64_t seed);

VerificationReport check_theorem_local_case(const std::vector<CorpusEntry>& corpus,
                                            const ConstructionOptions& options = {});

// Euler identity on random homogeneous polynomials, plus the replay of
// deg(f) f = 0 through the contraction on random graded algebras.
VerificationReport verify_euler(std::size_t trials, const FieldDescriptor& field, std::uint64_t seed = 1,
                                const ConstructionOptions& options = {});

}  // namespace kahler
