#include "kahler/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "kahler/error.hpp"

namespace kahler {

namespace {

// Bit i set when variable i (mod 64) occurs: a cheap necessary condition
// for divisibility.
std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) mask |= std::uint64_t{1} << (i % 64);
  return mask;
}

struct Leader {
  std::uint32_t component;
  Monomial mono;
  std::uint64_t mask;
};

class Reducer {
 public:
  Reducer(const PolyRing& ring, std::size_t* steps, std::size_t budget) : ring_(&ring), steps_(steps), budget_(budget) {}

  void add(const ModuleVector* g) {
    const auto& lt = g->leading_term();
    leaders_.push_back(Leader{lt.component, lt.mono, support_mask(lt.mono)});
    basis_.push_back(g);
  }

  std::optional<std::size_t> find(const ModuleTerm& t, std::optional<std::size_t> skip = std::nullopt) const {
    std::uint64_t mask = support_mask(t.mono);
    for (std::size_t i = 0; i < leaders_.size(); ++i) {
      if (skip && *skip == i) continue;
      const Leader& l = leaders_[i];
      if (l.component != t.component || (l.mask & ~mask)) continue;
      if (l.mono.divides(t.mono)) return i;
    }
    return std::nullopt;
  }

  // Full reduction: no term of the result is divisible by a leading term.
  std::vector<ModuleTerm> reduce(std::vector<ModuleTerm> rem, std::optional<std::size_t> skip = std::nullopt) const {
    std::vector<ModuleTerm> result;
    std::size_t pos = 0;
    while (pos < rem.size()) {
      auto idx = find(rem[pos], skip);
      if (!idx) {
        result.push_back(std::move(rem[pos++]));
        continue;
      }
      if (steps_) {
        if (++*steps_ > budget_)
          throw BudgetExceeded("Groebner step budget of " + std::to_string(budget_) + " reductions exceeded");
      }
      const ModuleVector& g = *basis_[*idx];
      Monomial q = rem[pos].mono / g.leading_term().mono;
      FieldElement c = -rem[pos].coeff;  // g is monic
      rem = subtract_tail(rem, pos + 1, g, q, c);
      pos = 0;
    }
    return result;
  }

 private:
  // rem[from..] + c * q * (g without its leading term), merged.
  std::vector<ModuleTerm> subtract_tail(const std::vector<ModuleTerm>& rem, std::size_t from, const ModuleVector& g,
                                        const Monomial& q, const FieldElement& c) const {
    const auto& gt = g.terms();
    std::vector<ModuleTerm> out;
    out.reserve(rem.size() - from + gt.size());
    std::size_t i = from, j = 1;
    while (i < rem.size() && j < gt.size()) {
      Monomial m = gt[j].mono * q;
      int cmp = compare_module(*ring_, rem[i].component, rem[i].mono, gt[j].component, m);
      if (cmp > 0) {
        out.push_back(rem[i++]);
      } else if (cmp < 0) {
        out.push_back(ModuleTerm{gt[j].component, std::move(m), gt[j].coeff * c});
        ++j;
      } else {
        FieldElement s = rem[i].coeff + gt[j].coeff * c;
        if (!s.is_zero()) out.push_back(ModuleTerm{rem[i].component, rem[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < rem.size(); ++i) out.push_back(rem[i]);
    for (; j < gt.size(); ++j) out.push_back(ModuleTerm{gt[j].component, gt[j].mono * q, gt[j].coeff * c});
    return out;
  }

  const PolyRing* ring_;
  std::size_t* steps_;
  std::size_t budget_;
  std::vector<Leader> leaders_;
  std::vector<const ModuleVector*> basis_;
};

ModuleVector make_monic(const ModuleVector& v) {
  if (v.is_zero() || v.leading_term().coeff.is_one()) return v;
  return v.scale(v.leading_term().coeff.inverse());
}

ModuleVector as_vector(const Polynomial& p) {
  std::vector<ModuleTerm> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) ts.push_back(ModuleTerm{0, t.mono, t.coeff});
  return ModuleVector::from_sorted_terms(p.ring(), 1, std::move(ts));
}

Polynomial as_polynomial(const ModuleVector& v) {
  std::vector<Term> ts;
  ts.reserve(v.terms().size());
  for (const auto& t : v.terms()) ts.push_back(Term{t.mono, t.coeff});
  return Polynomial::from_sorted_terms(v.ring(), std::move(ts));
}

ModuleVector s_vector(const ModuleVector& a, const ModuleVector& b) {
  const auto& la = a.leading_term();
  const auto& lb = b.leading_term();
  Monomial l = la.mono.lcm(lb.mono);
  const FieldElement one = a.ring()->field().one();
  return a.mul_term(l / la.mono, one) - b.mul_term(l / lb.mono, one);
}

}  // namespace

void GroebnerBasis::run(std::vector<ModuleVector> generators, const GroebnerOptions& options) {
  const PolyRing& ring = *ring_;
  std::vector<ModuleVector> g;
  g.reserve(generators.size() * 2);

  struct Pair {
    std::size_t i, j;
    std::uint32_t component;
    Monomial lcm;
  };
  auto pair_less = [&ring](const Pair& a, const Pair& b) {
    int c = compare_module(ring, a.component, a.lcm, b.component, b.lcm);
    if (c) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  // Reducer pointers must stay valid, so reserve generously and rebuild the
  // reducer if the vector would reallocate.
  std::size_t steps = 0;
  auto build_reducer = [&]() {
    Reducer r(ring, &steps, options.step_budget);
    for (const auto& v : g) r.add(&v);
    return r;
  };
  Reducer reducer = build_reducer();

  auto insert = [&](ModuleVector h) {
    if (g.size() == g.capacity()) {
      g.reserve(g.capacity() * 2 + 8);
      reducer = build_reducer();
    }
    std::size_t k = g.size();
    g.push_back(make_monic(h));
    reducer.add(&g.back());
    const auto& lk = g[k].leading_term();
    for (std::size_t i = 0; i < k; ++i) {
      const auto& li = g[i].leading_term();
      if (li.component != lk.component) continue;
      queue.insert(Pair{i, k, lk.component, li.mono.lcm(lk.mono)});
      pending.emplace(i, k);
    }
  };

  for (auto& v : generators) {
    auto terms = reducer.reduce(v.terms());
    if (!terms.empty()) insert(ModuleVector::from_sorted_terms(ring_, rank_, std::move(terms)));
  }

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    const auto& li = g[p.i].leading_term();
    const auto& lj = g[p.j].leading_term();
    // Coprime leading terms: the S-polynomial reduces to zero (ideals only).
    if (ideal_ && li.mono.coprime(lj.mono)) continue;
    // Chain criterion.
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      const auto& lk = g[k].leading_term();
      if (lk.component != p.component || !lk.mono.divides(p.lcm)) continue;
      if (pending.count({std::min(p.i, k), std::max(p.i, k)})) continue;
      if (pending.count({std::min(p.j, k), std::max(p.j, k)})) continue;
      chain = true;
    }
    if (chain) continue;

    auto terms = reducer.reduce(s_vector(g[p.i], g[p.j]).terms());
    if (!terms.empty()) insert(ModuleVector::from_sorted_terms(ring_, rank_, std::move(terms)));
  }
  steps_ = steps;

  // Minimalize: drop elements whose leading term is divisible by another's
  // (equal leading terms keep the earlier element).
  std::vector<ModuleVector> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& li = g[i].leading_term();
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& lj = g[j].leading_term();
      if (lj.component != li.component || !lj.mono.divides(li.mono)) continue;
      redundant = lj.mono != li.mono || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Interreduce tails.
  Reducer full(ring, nullptr, 0);
  for (const auto& v : minimal) full.add(&v);
  std::vector<ModuleVector> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    const auto& terms = minimal[i].terms();
    std::vector<ModuleTerm> tail(terms.begin() + 1, terms.end());
    std::vector<ModuleTerm> out{terms.front()};
    auto red = full.reduce(std::move(tail), i);
    out.insert(out.end(), std::make_move_iterator(red.begin()), std::make_move_iterator(red.end()));
    reduced.push_back(make_monic(ModuleVector::from_sorted_terms(ring_, rank_, std::move(out))));
  }
  std::sort(reduced.begin(), reduced.end(), [&ring](const ModuleVector& a, const ModuleVector& b) {
    const auto& la = a.leading_term();
    const auto& lb = b.leading_term();
    return compare_module(ring, la.component, la.mono, lb.component, lb.mono) < 0;
  });
  basis_ = std::move(reduced);
}

GroebnerBasis GroebnerBasis::ideal(const RingPtr& ring, const std::vector<Polynomial>& generators,
                                   const GroebnerOptions& options) {
  GroebnerBasis gb(ring, 1, true);
  std::vector<ModuleVector> vs;
  vs.reserve(generators.size());
  for (const auto& p : generators) {
    if (!p.ring()->same_as(*ring)) throw MismatchError("ideal generator outside the ring");
    vs.push_back(as_vector(p));
  }
  gb.run(std::move(vs), options);
  return gb;
}

GroebnerBasis GroebnerBasis::submodule(const RingPtr& ring, std::size_t rank,
                                       const std::vector<ModuleVector>& generators, const GroebnerOptions& options) {
  GroebnerBasis gb(ring, rank, false);
  for (const auto& v : generators) {
    if (v.rank() != rank) throw MismatchError("submodule generator of the wrong rank");
    if (!v.ring()->same_as(*ring)) throw MismatchError("submodule generator outside the ring");
  }
  gb.run(generators, options);
  return gb;
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (!ideal_) throw Error("polynomials() is only defined for ideal bases");
  std::vector<Polynomial> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(as_polynomial(v));
  return out;
}

std::vector<ModuleMonomial> GroebnerBasis::leading_monomials() const {
  std::vector<ModuleMonomial> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(ModuleMonomial{v.leading_term().component, v.leading_term().mono});
  return out;
}

bool GroebnerBasis::is_unit() const {
  std::vector<bool> covered(rank_, false);
  for (const auto& v : basis_)
    if (v.leading_term().mono.is_one()) covered[v.leading_term().component] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

ModuleVector GroebnerBasis::normal_form(const ModuleVector& v) const {
  if (v.rank() != rank_) throw MismatchError("vector rank does not match the basis");
  if (!v.ring()->same_as(*ring_)) throw MismatchError("vector outside the basis ring");
  Reducer r(*ring_, nullptr, 0);
  for (const auto& g : basis_) r.add(&g);
  return ModuleVector::from_sorted_terms(ring_, rank_, r.reduce(v.terms()));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!ideal_) throw Error("polynomial normal form needs an ideal basis");
  if (!f.ring()->same_as(*ring_)) throw MismatchError("polynomial outside the basis ring");
  return as_polynomial(normal_form(as_vector(f)));
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (basis_[i].leading_term().component != basis_[j].leading_term().component) continue;
      if (!normal_form(s_vector(basis_[i], basis_[j])).is_zero()) return false;
    }
  return true;
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators,
                         const GroebnerOptions& options) {
  return GroebnerBasis::ideal(ring, generators, options);
}

GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank, const std::vector<ModuleVector>& generators,
                         const GroebnerOptions& options) {
  return GroebnerBasis::submodule(ring, rank, generators, options);
}

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& generators, const GroebnerOptions& options) {
  if (f.is_zero()) return true;
  return GroebnerBasis::ideal(f.ring(), generators, options).contains(f);
}

bool module_member(const ModuleVector& v, const std::vector<ModuleVector>& generators,
                   const GroebnerOptions& options) {
  if (v.is_zero()) return true;
  return GroebnerBasis::submodule(v.ring(), v.rank(), generators, options).contains(v);
}

// ---------------------------------------------------------------------------
// Staircases

std::vector<Monomial> Staircase::monomials() const {
  std::vector<Monomial> out;
  for (const auto& e : elements_)
    if (e.component == 0) out.push_back(e.mono);
  return out;
}

std::map<long, std::size_t> Staircase::degree_counts(const PolyRing& ring, const std::vector<long>& shifts) const {
  std::map<long, std::size_t> counts;
  for (const auto& e : elements_) {
    long shift = e.component < shifts.size() ? shifts[e.component] : 0;
    ++counts[ring.weighted_degree(e.mono) + shift];
  }
  return counts;
}

namespace {

std::vector<std::vector<Monomial>> leaders_by_component(const GroebnerBasis& gb) {
  std::vector<std::vector<Monomial>> out(gb.rank());
  for (const auto& lm : gb.leading_monomials()) out[lm.component].push_back(lm.mono);
  return out;
}

bool divisible(const std::vector<Monomial>& leaders, const Monomial& m) {
  return std::any_of(leaders.begin(), leaders.end(), [&m](const Monomial& l) { return l.divides(m); });
}

bool component_finite(const std::vector<Monomial>& leaders, std::size_t nvars) {
  for (const auto& l : leaders)
    if (l.is_one()) return true;
  for (std::size_t v = 0; v < nvars; ++v) {
    bool pure = std::any_of(leaders.begin(), leaders.end(), [&](const Monomial& l) {
      for (std::size_t i = 0; i < nvars; ++i)
        if ((i == v) != (l[i] > 0)) return false;
      return true;
    });
    if (!pure) return false;
  }
  return true;
}

}  // namespace

Staircase staircase(const GroebnerBasis& gb, std::size_t limit) {
  const PolyRing& ring = *gb.ring();
  const std::size_t n = ring.nvars();
  auto leaders = leaders_by_component(gb);
  for (const auto& l : leaders)
    if (!component_finite(l, n)) return Staircase(false, {});

  std::vector<ModuleMonomial> out;
  for (std::uint32_t c = 0; c < gb.rank(); ++c) {
    Monomial one = ring.unit_monomial();
    if (divisible(leaders[c], one)) continue;
    // Each monomial is reached once: by raising variables in index order.
    std::vector<std::pair<Monomial, std::size_t>> stack{{one, 0}};
    out.push_back(ModuleMonomial{c, one});
    while (!stack.empty()) {
      auto [m, last] = std::move(stack.back());
      stack.pop_back();
      for (std::size_t v = last; v < n; ++v) {
        Monomial next = m;
        next.set(v, m[v] + 1);
        if (divisible(leaders[c], next)) continue;
        out.push_back(ModuleMonomial{c, next});
        if (out.size() > limit)
          throw CapExceeded("staircase has more than " + std::to_string(limit) + " monomials");
        stack.emplace_back(std::move(next), v);
      }
    }
  }
  std::sort(out.begin(), out.end(), [&ring](const ModuleMonomial& a, const ModuleMonomial& b) {
    return compare_module(ring, a.component, a.mono, b.component, b.mono) < 0;
  });
  return Staircase(true, std::move(out));
}

std::optional<std::size_t> dimension(const GroebnerBasis& gb, std::size_t limit) {
  Staircase s = staircase(gb, limit);
  if (!s.finite()) return std::nullopt;
  return s.size();
}

std::vector<ModuleMonomial> staircase_in_degree(const GroebnerBasis& gb, long degree, const std::vector<long>& shifts) {
  const PolyRing& ring = *gb.ring();
  auto leaders = leaders_by_component(gb);
  std::vector<ModuleMonomial> out;
  for (std::uint32_t c = 0; c < gb.rank(); ++c) {
    long shift = c < shifts.size() ? shifts[c] : 0;
    for (auto& m : ring.monomials_of_degree(degree - shift))
      if (!divisible(leaders[c], m)) out.push_back(ModuleMonomial{c, std::move(m)});
  }
  std::sort(out.begin(), out.end(), [&ring](const ModuleMonomial& a, const ModuleMonomial& b) {
    return compare_module(ring, a.component, a.mono, b.component, b.mono) < 0;
  });
  return out;
}

}  // namespace kahler
