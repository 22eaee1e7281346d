#include "kahler/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kahler/detail/expression_parser.hpp"
#include "kahler/error.hpp"

namespace kahler {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Exponents exps) : exps_(std::move(exps)) {
  for (auto e : exps_)
    if (e < 0 || e > kMaxExponent) throw Error("exponent out of range");
}

Monomial::Monomial(std::initializer_list<std::int32_t> exps) : Monomial(Exponents(exps.begin(), exps.end())) {}

void Monomial::set(std::size_t i, std::int32_t e) {
  if (e < 0 || e > kMaxExponent) throw Error("exponent out of range");
  exps_[i] = e;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int32_t e) { return e == 0; });
}

long Monomial::total_degree() const {
  long d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::int32_t e = exps_[i] + other.exps_[i];
    if (e > kMaxExponent) throw Error("exponent overflow");
    r.exps_[i] = e;
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
  return h;
}

// ---------------------------------------------------------------------------
// PolyRing

RingPtr PolyRing::make(const FieldDescriptor& field, std::vector<std::string> names, std::vector<int> weights,
                       MonomialOrder order) {
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw Error("one weight per variable is required");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !detail::is_identifier_start(n[0])) throw Error("bad variable name '" + n + "'");
    for (char c : n)
      if (!detail::is_identifier_char(c)) throw Error("bad variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
    if (field.kind() == FieldKind::RationalFunctions && n == field.variable())
      throw Error("variable '" + n + "' clashes with the function field variable");
  }
  for (int w : weights)
    if (w <= 0) throw Error("variable weights must be positive");
  return RingPtr(new PolyRing(field, std::move(names), std::move(weights), order));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

long PolyRing::weighted_degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(weights_[i]) * m[i];
  return d;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  if (order_ == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  long da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

Polynomial PolyRing::zero() const { return Polynomial(shared_from_this()); }

Polynomial PolyRing::one() const { return constant(field_->one()); }

Polynomial PolyRing::constant(const FieldElement& c) const {
  return Polynomial::monomial(shared_from_this(), unit_monomial(), c);
}

Polynomial PolyRing::variable(std::size_t i) const {
  if (i >= nvars()) throw Error("variable index out of range");
  Monomial m = unit_monomial();
  m.set(i, 1);
  return Polynomial::monomial(shared_from_this(), std::move(m), field_->one());
}

Polynomial PolyRing::variable(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw Error("unknown variable '" + std::string(name) + "'");
  return variable(*i);
}

namespace {

void enumerate_degree(const std::vector<int>& weights, std::size_t i, long remaining, Monomial& current,
                      std::vector<Monomial>& out) {
  if (i + 1 == weights.size()) {
    if (remaining % weights[i] == 0) {
      current.set(i, static_cast<std::int32_t>(remaining / weights[i]));
      out.push_back(current);
      current.set(i, 0);
    }
    return;
  }
  for (long e = remaining / weights[i]; e >= 0; --e) {
    current.set(i, static_cast<std::int32_t>(e));
    enumerate_degree(weights, i + 1, remaining - e * weights[i], current, out);
  }
  current.set(i, 0);
}

}  // namespace

std::vector<Monomial> PolyRing::monomials_of_degree(long d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars() == 0) {
    if (d == 0) out.push_back(unit_monomial());
    return out;
  }
  Monomial current = unit_monomial();
  enumerate_degree(weights_, 0, d, current, out);
  std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

std::vector<Monomial> PolyRing::monomials_of_total_degree(long d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars() == 0) {
    if (d == 0) out.push_back(unit_monomial());
    return out;
  }
  Monomial current = unit_monomial();
  std::vector<int> ones(nvars(), 1);
  enumerate_degree(ones, 0, d, current, out);
  return out;
}

std::string PolyRing::monomial_to_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += names_[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

bool PolyRing::same_as(const PolyRing& o) const {
  return this == &o ||
         (field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_ && order_ == o.order_);
}

// ---------------------------------------------------------------------------
// Term-list merges

namespace detail {

std::vector<Term> merge_add(const PolyRing& ring, const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      FieldElement s = a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<long>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<long>(j), b.end());
  return out;
}

std::vector<ModuleTerm> merge_add(const PolyRing& ring, const std::vector<ModuleTerm>& a,
                                  const std::vector<ModuleTerm>& b) {
  std::vector<ModuleTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare_module(ring, a[i].component, a[i].mono, b[j].component, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      FieldElement s = a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(ModuleTerm{a[i].component, a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<long>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<long>(j), b.end());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PolyRing& r = *ring;
  std::sort(terms.begin(), terms.end(), [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (t.mono.size() != r.nvars()) throw Error("monomial arity does not match the ring");
    if (&t.coeff.field() != &r.field()) throw MismatchError("coefficient field does not match the ring");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, FieldElement c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

FieldElement Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return ring_->field().zero();
}

FieldElement Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return ring_->field().zero();
}

void Polynomial::require_same(const Polynomial& o) const {
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw MismatchError("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same(o);
  return from_sorted_terms(ring_, detail::merge_add(*ring_, terms_, o.terms_));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scale(const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = ring_->one();
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scale(leading_coeff().inverse());
}

Polynomial Polynomial::partial_derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw Error("variable index out of range");
  const FieldDescriptor& k = ring_->field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::int32_t e = t.mono[var];
    if (!e) continue;
    FieldElement c = t.coeff * k.from_int(e);
    if (c.is_zero()) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back(Term{std::move(m), std::move(c)});
  }
  // Dividing by X_var keeps the relative order (the order is multiplicative).
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::partial_derivative(std::string_view var) const {
  auto i = ring_->index_of(var);
  if (!i) throw Error("unknown variable '" + std::string(var) + "'");
  return partial_derivative(*i);
}

std::optional<long> Polynomial::weighted_degree() const {
  if (terms_.empty()) return 0;
  long d = ring_->weighted_degree(terms_[0].mono);
  for (const auto& t : terms_)
    if (ring_->weighted_degree(t.mono) != d) return std::nullopt;
  return d;
}

long Polynomial::max_weighted_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_->weighted_degree(t.mono));
  return d;
}

std::map<long, Polynomial> Polynomial::homogeneous_components() const {
  std::map<long, std::vector<Term>> parts;
  for (const auto& t : terms_) parts[ring_->weighted_degree(t.mono)].push_back(t);
  std::map<long, Polynomial> out;
  for (auto& [d, ts] : parts) out.emplace(d, from_sorted_terms(ring_, std::move(ts)));
  return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, const RingPtr& target) const {
  if (images.size() != ring_->nvars()) throw Error("substitution needs one image per variable");
  for (const auto& img : images)
    if (!img.ring()->same_as(*target)) throw MismatchError("substitution image outside the target ring");
  if (&target->field() != &ring_->field()) throw MismatchError("substitution changes the coefficient field");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, std::int32_t e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(target->one());
    while (cache.size() <= static_cast<std::size_t>(e)) cache.push_back(cache.back() * images[v]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = target->constant(t.coeff);
    for (std::size_t v = 0; v < t.mono.size() && !term.is_zero(); ++v)
      if (t.mono[v]) term = term * power(v, t.mono[v]);
    result += term;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

namespace {

// Appends one term; `first` controls whether a leading '+' is written.
void write_term(std::ostringstream& os, const PolyRing& ring, const Monomial& m, const FieldElement& c, bool first) {
  bool negative = c.is_negative();
  FieldElement magnitude = negative ? -c : c;
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  if (m.is_one()) {
    os << magnitude.to_string();
    return;
  }
  if (!magnitude.is_one()) {
    if (magnitude.needs_parentheses())
      os << '(' << magnitude.to_string() << ")*";
    else
      os << magnitude.to_string() << '*';
  }
  os << ring.monomial_to_string(m);
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    write_term(os, *ring_, t.mono, t.coeff, first);
    first = false;
  }
  return os.str();
}

Polynomial euler_apply(const Polynomial& g) {
  const PolyRing& ring = *g.ring();
  const FieldDescriptor& k = ring.field();
  std::vector<Term> out;
  out.reserve(g.size());
  // Termwise, weight(X) * X * d/dX multiplies X^a by weight(X) * a; summing
  // over the variables gives the monomial's weighted degree.
  for (const auto& t : g.terms()) {
    FieldElement c = t.coeff * k.from_int(ring.weighted_degree(t.mono));
    if (!c.is_zero()) out.push_back(Term{t.mono, std::move(c)});
  }
  return Polynomial::from_sorted_terms(g.ring(), std::move(out));
}

Polynomial rename_variables(const Polynomial& p, const RingPtr& target,
                            const std::map<std::string, std::string>& renaming) {
  std::set<std::string> images;
  for (const auto& [from, to] : renaming)
    if (!images.insert(to).second) throw Error("renaming is not injective: two variables map to '" + to + "'");
  if (&target->field() != &p.ring()->field()) throw MismatchError("renaming changes the coefficient field");
  const PolyRing& src = *p.ring();
  std::vector<std::optional<std::size_t>> slot(src.nvars());
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    auto it = renaming.find(src.names()[i]);
    if (it == renaming.end()) continue;
    auto j = target->index_of(it->second);
    if (!j) throw Error("renaming target '" + it->second + "' is not a variable of the target ring");
    slot[i] = *j;
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = target->unit_monomial();
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (!t.mono[i]) continue;
      if (!slot[i]) throw Error("renaming does not cover variable '" + src.names()[i] + "'");
      m.set(*slot[i], t.mono[i]);
    }
    out.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Polynomial grammar

namespace {

struct PolynomialOps {
  const RingPtr& ring;

  Polynomial integer(const mpz_class& v) { return ring->constant(ring->field().from_integer(v)); }
  Polynomial identifier(std::string_view name, std::size_t column) {
    if (auto i = ring->index_of(name)) return ring->variable(*i);
    const FieldDescriptor& k = ring->field();
    if (k.kind() == FieldKind::RationalFunctions && name == k.variable()) return ring->constant(k.generator());
    throw ParseError("unknown identifier '" + std::string(name) + "'", 0, column);
  }
  Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
  Polynomial sub(const Polynomial& a, const Polynomial& b) { return a - b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
  Polynomial neg(const Polynomial& a) { return -a; }
  Polynomial divide(const Polynomial& a, const Polynomial& b, std::size_t column) {
    if (!b.is_constant()) throw ParseError("division by a non-constant", 0, column);
    if (b.is_zero()) throw ParseError("division by zero", 0, column);
    return a.scale(b.leading_coeff().inverse());
  }
  Polynomial power(const Polynomial& a, unsigned long e) {
    if (e > static_cast<unsigned long>(Monomial::kMaxExponent)) throw Error("exponent too large");
    return a.pow(static_cast<unsigned>(e));
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  PolynomialOps ops{ring};
  return detail::ExpressionParser<Polynomial, PolynomialOps>(text, ops).parse();
}

// ---------------------------------------------------------------------------
// ModuleVector

int compare_module(const PolyRing& ring, std::uint32_t ca, const Monomial& a, std::uint32_t cb, const Monomial& b) {
  if (ca != cb) return ca < cb ? 1 : -1;
  return ring.compare(a, b);
}

ModuleVector ModuleVector::unit(RingPtr ring, std::size_t rank, std::size_t i) {
  if (i >= rank) throw Error("component index out of range");
  ModuleVector v(ring, rank);
  v.terms_.push_back(ModuleTerm{static_cast<std::uint32_t>(i), ring->unit_monomial(), ring->field().one()});
  return v;
}

ModuleVector ModuleVector::from_components(RingPtr ring, const std::vector<Polynomial>& components) {
  ModuleVector v(ring, components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!components[i].ring()->same_as(*ring)) throw MismatchError("module component outside the ring");
    for (const auto& t : components[i].terms())
      v.terms_.push_back(ModuleTerm{static_cast<std::uint32_t>(i), t.mono, t.coeff});
  }
  return v;
}

ModuleVector ModuleVector::from_terms(RingPtr ring, std::size_t rank, std::vector<ModuleTerm> terms) {
  const PolyRing& r = *ring;
  std::sort(terms.begin(), terms.end(), [&r](const ModuleTerm& a, const ModuleTerm& b) {
    return compare_module(r, a.component, a.mono, b.component, b.mono) > 0;
  });
  ModuleVector v(std::move(ring), rank);
  for (auto& t : terms) {
    if (t.component >= rank) throw Error("component index out of range");
    if (!v.terms_.empty() && v.terms_.back().component == t.component && v.terms_.back().mono == t.mono) {
      v.terms_.back().coeff += t.coeff;
      if (v.terms_.back().coeff.is_zero()) v.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

ModuleVector ModuleVector::from_sorted_terms(RingPtr ring, std::size_t rank, std::vector<ModuleTerm> terms) {
  ModuleVector v(std::move(ring), rank);
  v.terms_ = std::move(terms);
  return v;
}

Polynomial ModuleVector::component(std::size_t i) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.component == i) ts.push_back(Term{t.mono, t.coeff});
  return Polynomial::from_sorted_terms(ring_, std::move(ts));
}

std::vector<Polynomial> ModuleVector::components() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < rank_; ++i) out.push_back(component(i));
  return out;
}

void ModuleVector::require_same(const ModuleVector& o) const {
  if (rank_ != o.rank_) throw MismatchError("module vectors of different rank");
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw MismatchError("module vectors over different rings");
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  require_same(o);
  return from_sorted_terms(ring_, rank_, detail::merge_add(*ring_, terms_, o.terms_));
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const { return *this + (-o); }

ModuleVector ModuleVector::scale(const FieldElement& c) const {
  if (c.is_zero()) return ModuleVector(ring_, rank_);
  ModuleVector r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

ModuleVector ModuleVector::mul_term(const Monomial& m, const FieldElement& c) const {
  if (c.is_zero()) return ModuleVector(ring_, rank_);
  ModuleVector r(ring_, rank_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(ModuleTerm{t.component, t.mono * m, t.coeff * c});
  return r;
}

ModuleVector ModuleVector::operator*(const Polynomial& p) const {
  if (!p.ring()->same_as(*ring_)) throw MismatchError("scalar polynomial outside the module's ring");
  ModuleVector r(ring_, rank_);
  for (const auto& t : p.terms()) r = r + mul_term(t.mono, t.coeff);
  return r;
}

bool ModuleVector::operator==(const ModuleVector& o) const {
  if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[i];
    if (a.component != b.component || a.mono != b.mono || a.coeff != b.coeff) return false;
  }
  return true;
}

std::string ModuleVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) s += ", ";
    s += component(i).to_string();
  }
  return s + ")";
}

}  // namespace kahler
