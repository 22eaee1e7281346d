#pragma once

// Exact coefficient fields: the rationals, prime fields F_p and the rational
// function fields F_p(x).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kahler {

enum class FieldKind { Rationals, PrimeField, RationalFunctions };

class FieldElement;

// Dense univariate polynomial over F_p, coefficients stored low degree first
// with no trailing zeros. The zero polynomial is the empty vector.
class FpPolynomial {
 public:
  FpPolynomial() = default;
  FpPolynomial(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static FpPolynomial constant(std::uint32_t p, std::uint64_t c);
  static FpPolynomial x(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::uint32_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  FpPolynomial operator+(const FpPolynomial& o) const;
  FpPolynomial operator-(const FpPolynomial& o) const;
  FpPolynomial operator*(const FpPolynomial& o) const;
  FpPolynomial operator-() const;
  FpPolynomial scaled(std::uint32_t c) const;
  FpPolynomial derivative() const;
  FpPolynomial monic() const;

  // Euclidean division; divisor must be nonzero.
  void divmod(const FpPolynomial& divisor, FpPolynomial& quotient, FpPolynomial& remainder) const;
  static FpPolynomial gcd(FpPolynomial a, FpPolynomial b);

  bool operator==(const FpPolynomial& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }

  // Terms written highest degree first: "x^2 + 2*x + 1".
  std::string to_string(std::string_view var) const;
  std::size_t term_count() const;

 private:
  void trim();

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> coeffs_;
};

// num/den with gcd(num, den) = 1 and den monic. Zero is 0/1.
struct RationalFunction {
  FpPolynomial num;
  FpPolynomial den;

  bool operator==(const RationalFunction&) const = default;
};

// Descriptors are interned: two descriptors describe the same field iff
// they are the same object.
class FieldDescriptor {
 public:
  static const FieldDescriptor& rationals();
  // Throws Error if p is not a prime below 2^31.
  static const FieldDescriptor& prime_field(std::uint32_t p);
  static const FieldDescriptor& rational_functions(std::uint32_t p, const std::string& variable = "x");

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  // Name of the transcendental in F_p(x); empty for the other kinds.
  const std::string& variable() const { return variable_; }
  // Compact command-line name: QQ, Fp:5, FpX:2.
  std::string name() const;
  bool is_perfect() const { return kind_ != FieldKind::RationalFunctions; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long value) const;
  FieldElement from_integer(const mpz_class& value) const;
  // The transcendental x of F_p(x).
  FieldElement generator() const;

  FieldDescriptor(FieldKind kind, std::uint32_t p, std::string variable)
      : kind_(kind), p_(p), variable_(std::move(variable)) {}
  FieldDescriptor(const FieldDescriptor&) = delete;
  FieldDescriptor& operator=(const FieldDescriptor&) = delete;

 private:
  FieldKind kind_;
  std::uint32_t p_;
  std::string variable_;
};

bool is_prime(std::uint64_t n);

// Immutable exact scalar. Arithmetic between elements of different fields
// throws MismatchError.
class FieldElement {
 public:
  using Payload = std::variant<mpq_class, std::uint32_t, RationalFunction>;

  FieldElement(const FieldDescriptor& field, Payload payload);

  const FieldDescriptor& field() const { return *field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  // Throws ArithmeticError on zero.
  FieldElement inverse() const;
  FieldElement pow(unsigned long e) const;
  // d/dx on F_p(x); throws Error for the other kinds.
  FieldElement formal_derivative() const;

  bool operator==(const FieldElement& o) const { return field_ == o.field_ && payload_ == o.payload_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  const mpq_class& rational() const { return std::get<mpq_class>(payload_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(payload_); }
  const RationalFunction& rational_function() const { return std::get<RationalFunction>(payload_); }
  const Payload& payload() const { return payload_; }

  // Negative rationals only; used by printers that pull the sign out.
  bool is_negative() const;
  // Multiple terms in the textual form, so it needs parentheses as a factor.
  bool needs_parentheses() const;

  std::string to_string() const;

 private:
  void require_same(const FieldElement& o) const;

  const FieldDescriptor* field_;
  Payload payload_;
};

FieldElement parse_scalar(std::string_view text, const FieldDescriptor& field);
std::string format_scalar(const FieldElement& a);

// Parses the command-line field syntax QQ, Fp:5, FpX:2 (FpX:2:t picks the
// variable name).
const FieldDescriptor& parse_field_name(std::string_view text);

}  // namespace kahler
