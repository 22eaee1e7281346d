#include "kahler/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "kahler/detail/expression_parser.hpp"
#include "kahler/error.hpp"

namespace kahler {

namespace {

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + (p - b); }

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (e) {
    if (e & 1) result = mod_mul(result, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw ArithmeticError("division by zero");
  return mod_pow(a, p - 2, p);
}

RationalFunction canonical(FpPolynomial num, FpPolynomial den) {
  if (den.is_zero()) throw ArithmeticError("division by zero");
  std::uint32_t p = den.modulus();
  if (num.is_zero()) return {FpPolynomial(p, {}), FpPolynomial::constant(p, 1)};
  FpPolynomial g = FpPolynomial::gcd(num, den);
  if (!g.is_one()) {
    FpPolynomial q, r;
    num.divmod(g, q, r);
    num = q;
    den.divmod(g, q, r);
    den = q;
  }
  std::uint32_t lc_inv = mod_inverse(den.leading(), p);
  return {num.scaled(lc_inv), den.scaled(lc_inv)};
}

}  // namespace

// ---------------------------------------------------------------------------
// FpPolynomial

FpPolynomial::FpPolynomial(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_;
  trim();
}

FpPolynomial FpPolynomial::constant(std::uint32_t p, std::uint64_t c) {
  return FpPolynomial(p, {static_cast<std::uint32_t>(c % p)});
}

FpPolynomial FpPolynomial::x(std::uint32_t p) { return FpPolynomial(p, {0, 1}); }

void FpPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPolynomial FpPolynomial::operator+(const FpPolynomial& o) const {
  FpPolynomial r;
  r.p_ = p_;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    std::uint32_t a = i < coeffs_.size() ? coeffs_[i] : 0;
    std::uint32_t b = i < o.coeffs_.size() ? o.coeffs_[i] : 0;
    r.coeffs_[i] = mod_add(a, b, p_);
  }
  r.trim();
  return r;
}

FpPolynomial FpPolynomial::operator-() const {
  FpPolynomial r = *this;
  for (auto& c : r.coeffs_) c = mod_sub(0, c, p_);
  return r;
}

FpPolynomial FpPolynomial::operator-(const FpPolynomial& o) const { return *this + (-o); }

FpPolynomial FpPolynomial::operator*(const FpPolynomial& o) const {
  FpPolynomial r;
  r.p_ = p_;
  if (is_zero() || o.is_zero()) return r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] = mod_add(r.coeffs_[i + j], mod_mul(coeffs_[i], o.coeffs_[j], p_), p_);
  }
  r.trim();
  return r;
}

FpPolynomial FpPolynomial::scaled(std::uint32_t c) const {
  FpPolynomial r = *this;
  for (auto& a : r.coeffs_) a = mod_mul(a, c % p_, p_);
  r.trim();
  return r;
}

FpPolynomial FpPolynomial::derivative() const {
  FpPolynomial r;
  r.p_ = p_;
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_[i - 1] = mod_mul(coeffs_[i], i % p_, p_);
  r.trim();
  return r;
}

FpPolynomial FpPolynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inverse(leading(), p_));
}

void FpPolynomial::divmod(const FpPolynomial& divisor, FpPolynomial& quotient, FpPolynomial& remainder) const {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  remainder = *this;
  quotient = FpPolynomial();
  quotient.p_ = p_;
  if (degree() < divisor.degree()) return;
  quotient.coeffs_.assign(static_cast<std::size_t>(degree() - divisor.degree() + 1), 0);
  std::uint32_t inv = mod_inverse(divisor.leading(), p_);
  auto& rc = remainder.coeffs_;
  const auto& dc = divisor.coeffs_;
  for (long k = degree() - divisor.degree(); k >= 0; --k) {
    std::size_t top = static_cast<std::size_t>(k) + dc.size() - 1;
    std::uint32_t c = mod_mul(rc[top], inv, p_);
    quotient.coeffs_[static_cast<std::size_t>(k)] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < dc.size(); ++j)
      rc[static_cast<std::size_t>(k) + j] = mod_sub(rc[static_cast<std::size_t>(k) + j], mod_mul(c, dc[j], p_), p_);
  }
  remainder.trim();
  quotient.trim();
}

FpPolynomial FpPolynomial::gcd(FpPolynomial a, FpPolynomial b) {
  while (!b.is_zero()) {
    FpPolynomial q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::size_t FpPolynomial::term_count() const {
  std::size_t n = 0;
  for (auto c : coeffs_) n += c != 0;
  return n;
}

std::string FpPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    std::uint32_t c = coeffs_[i];
    if (!c) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FieldDescriptor

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const FieldDescriptor& FieldDescriptor::rationals() {
  static const FieldDescriptor q(FieldKind::Rationals, 0, "");
  return q;
}

namespace {

const FieldDescriptor& intern(FieldKind kind, std::uint32_t p, const std::string& var) {
  static std::mutex mutex;
  static std::map<std::tuple<int, std::uint32_t, std::string>, std::unique_ptr<FieldDescriptor>> table;
  std::lock_guard lock(mutex);
  auto& slot = table[{static_cast<int>(kind), p, var}];
  if (!slot) slot = std::make_unique<FieldDescriptor>(kind, p, var);
  return *slot;
}

}  // namespace

const FieldDescriptor& FieldDescriptor::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw Error("not a prime below 2^31: " + std::to_string(p));
  return intern(FieldKind::PrimeField, p, "");
}

const FieldDescriptor& FieldDescriptor::rational_functions(std::uint32_t p, const std::string& variable) {
  if (p >= (1u << 31) || !is_prime(p)) throw Error("not a prime below 2^31: " + std::to_string(p));
  if (variable.empty() || !detail::is_identifier_start(variable[0])) throw Error("bad function field variable name");
  for (char c : variable)
    if (!detail::is_identifier_char(c)) throw Error("bad function field variable name");
  return intern(FieldKind::RationalFunctions, p, variable);
}

std::string FieldDescriptor::name() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "QQ";
    case FieldKind::PrimeField:
      return "Fp:" + std::to_string(p_);
    case FieldKind::RationalFunctions:
      return "FpX:" + std::to_string(p_) + (variable_ == "x" ? "" : ":" + variable_);
  }
  return "?";
}

FieldElement FieldDescriptor::zero() const { return from_int(0); }
FieldElement FieldDescriptor::one() const { return from_int(1); }

FieldElement FieldDescriptor::from_int(long value) const { return from_integer(mpz_class(value)); }

FieldElement FieldDescriptor::from_integer(const mpz_class& value) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return FieldElement(*this, mpq_class(value));
    case FieldKind::PrimeField:
      return FieldElement(*this, static_cast<std::uint32_t>(mpz_fdiv_ui(value.get_mpz_t(), p_)));
    case FieldKind::RationalFunctions: {
      auto c = static_cast<std::uint32_t>(mpz_fdiv_ui(value.get_mpz_t(), p_));
      return FieldElement(*this, RationalFunction{FpPolynomial::constant(p_, c), FpPolynomial::constant(p_, 1)});
    }
  }
  throw Error("unknown field kind");
}

FieldElement FieldDescriptor::generator() const {
  if (kind_ != FieldKind::RationalFunctions) throw Error("field " + name() + " has no generator");
  return FieldElement(*this, RationalFunction{FpPolynomial::x(p_), FpPolynomial::constant(p_, 1)});
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const FieldDescriptor& field, Payload payload) : field_(&field), payload_(std::move(payload)) {
  switch (field.kind()) {
    case FieldKind::Rationals:
      std::get<mpq_class>(payload_).canonicalize();
      break;
    case FieldKind::PrimeField:
      std::get<std::uint32_t>(payload_) %= field.characteristic();
      break;
    case FieldKind::RationalFunctions: {
      auto& rf = std::get<RationalFunction>(payload_);
      rf = canonical(std::move(rf.num), std::move(rf.den));
      break;
    }
  }
}

void FieldElement::require_same(const FieldElement& o) const {
  if (field_ != o.field_) throw MismatchError("field mismatch: " + field_->name() + " vs " + o.field_->name());
}

bool FieldElement::is_zero() const {
  switch (payload_.index()) {
    case 0:
      return sgn(std::get<0>(payload_)) == 0;
    case 1:
      return std::get<1>(payload_) == 0;
    default:
      return std::get<2>(payload_).num.is_zero();
  }
}

bool FieldElement::is_one() const {
  switch (payload_.index()) {
    case 0:
      return std::get<0>(payload_) == 1;
    case 1:
      return std::get<1>(payload_) == 1;
    default: {
      const auto& rf = std::get<2>(payload_);
      return rf.num.is_one() && rf.den.is_one();
    }
  }
}

bool FieldElement::is_negative() const { return payload_.index() == 0 && sgn(std::get<0>(payload_)) < 0; }

bool FieldElement::needs_parentheses() const {
  if (payload_.index() != 2) return false;
  const auto& rf = std::get<2>(payload_);
  return rf.den.is_one() && rf.num.term_count() > 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  std::uint32_t p = field_->characteristic();
  switch (payload_.index()) {
    case 0:
      return FieldElement(*field_, mpq_class(rational() + o.rational()));
    case 1:
      return FieldElement(*field_, mod_add(residue(), o.residue(), p));
    default: {
      const auto& a = rational_function();
      const auto& b = o.rational_function();
      if (a.den == b.den) return FieldElement(*field_, RationalFunction{a.num + b.num, a.den});
      return FieldElement(*field_, RationalFunction{a.num * b.den + b.num * a.den, a.den * b.den});
    }
  }
}

FieldElement FieldElement::operator-() const {
  std::uint32_t p = field_->characteristic();
  switch (payload_.index()) {
    case 0:
      return FieldElement(*field_, mpq_class(-rational()));
    case 1:
      return FieldElement(*field_, mod_sub(0, residue(), p));
    default:
      return FieldElement(*field_, RationalFunction{-rational_function().num, rational_function().den});
  }
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  std::uint32_t p = field_->characteristic();
  switch (payload_.index()) {
    case 0:
      return FieldElement(*field_, mpq_class(rational() * o.rational()));
    case 1:
      return FieldElement(*field_, mod_mul(residue(), o.residue(), p));
    default: {
      const auto& a = rational_function();
      const auto& b = o.rational_function();
      return FieldElement(*field_, RationalFunction{a.num * b.num, a.den * b.den});
    }
  }
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  switch (payload_.index()) {
    case 0:
      return FieldElement(*field_, mpq_class(1 / rational()));
    case 1:
      return FieldElement(*field_, mod_inverse(residue(), field_->characteristic()));
    default:
      return FieldElement(*field_, RationalFunction{rational_function().den, rational_function().num});
  }
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(o);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement result = field_->one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FieldElement FieldElement::formal_derivative() const {
  if (field_->kind() != FieldKind::RationalFunctions)
    throw Error("formal derivative needs a rational function field, got " + field_->name());
  const auto& a = rational_function();
  // (u/v)' = (u'v - uv') / v^2
  return FieldElement(*field_, RationalFunction{a.num.derivative() * a.den - a.num * a.den.derivative(), a.den * a.den});
}

std::string FieldElement::to_string() const {
  switch (payload_.index()) {
    case 0:
      return rational().get_str();
    case 1:
      return std::to_string(residue());
    default: {
      const auto& rf = rational_function();
      const std::string& var = field_->variable();
      std::string num = rf.num.to_string(var);
      if (rf.den.is_one()) return num;
      if (rf.num.term_count() > 1) num = "(" + num + ")";
      std::string den = rf.den.to_string(var);
      if (rf.den.term_count() > 1) den = "(" + den + ")";
      return num + "/" + den;
    }
  }
}

// ---------------------------------------------------------------------------
// Scalar grammar

namespace {

struct ScalarOps {
  const FieldDescriptor& field;

  FieldElement integer(const mpz_class& v) { return field.from_integer(v); }
  FieldElement identifier(std::string_view name, std::size_t column) {
    if (field.kind() == FieldKind::RationalFunctions && name == field.variable()) return field.generator();
    throw ParseError("unknown identifier '" + std::string(name) + "'", 0, column);
  }
  FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
  FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
  FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
  FieldElement neg(const FieldElement& a) { return -a; }
  FieldElement divide(const FieldElement& a, const FieldElement& b, std::size_t column) {
    if (b.is_zero()) throw ParseError("division by zero", 0, column);
    return a / b;
  }
  FieldElement power(const FieldElement& a, unsigned long e) { return a.pow(e); }
};

}  // namespace

FieldElement parse_scalar(std::string_view text, const FieldDescriptor& field) {
  ScalarOps ops{field};
  return detail::ExpressionParser<FieldElement, ScalarOps>(text, ops).parse();
}

std::string format_scalar(const FieldElement& a) { return a.to_string(); }

const FieldDescriptor& parse_field_name(std::string_view text) {
  std::string s(text);
  if (s == "QQ") return FieldDescriptor::rationals();
  auto number = [&](const std::string& digits) -> std::uint32_t {
    if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad field name '" + s + "' (expected QQ, Fp:<p> or FpX:<p>)");
    unsigned long long v = std::stoull(digits);
    if (v >= (1ull << 31)) throw Error("characteristic too large in '" + s + "'");
    return static_cast<std::uint32_t>(v);
  };
  if (s.rfind("Fp:", 0) == 0) return FieldDescriptor::prime_field(number(s.substr(3)));
  if (s.rfind("FpX:", 0) == 0) {
    std::string rest = s.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string::npos) return FieldDescriptor::rational_functions(number(rest));
    return FieldDescriptor::rational_functions(number(rest.substr(0, colon)), rest.substr(colon + 1));
  }
  throw Error("bad field name '" + s + "' (expected QQ, Fp:<p> or FpX:<p>)");
}

}  // namespace kahler
