#include <algorithm>
#include <string>
#include <utility>

#include "folcheck/ideal.hpp"

namespace folcheck {

namespace {

// Working representation: integer coefficients, terms sorted descending
// under the active order. Reductions are fraction free.
struct WTerm {
  Monomial m;
  Integer c;
};
using WPoly = std::vector<WTerm>;

WPoly toWork(const Polynomial& p, MonomialOrder order, Integer* multiplier = nullptr) {
  Integer den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  WPoly out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Integer scaled = c.get_num() * (den / c.get_den());
    out.push_back({m, std::move(scaled)});
  }
  if (order != MonomialOrder::kGrevlex) {
    std::sort(out.begin(), out.end(), [order](const WTerm& a, const WTerm& b) { return compare(order, a.m, b.m) > 0; });
  }
  if (multiplier != nullptr) *multiplier = den;
  return out;
}

Polynomial toPolynomial(const WPoly& w, int ambient, const Scalar& divisor = 1) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(w.size());
  for (const auto& t : w) terms.emplace_back(t.m, Scalar(t.c) / divisor);
  return Polynomial::fromTerms(ambient, std::move(terms));
}

Integer coefficientGcd(const WPoly& p, Integer g = 0) {
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void makePrimitive(WPoly& p) {
  if (p.empty()) return;
  Integer g = coefficientGcd(p);
  if (p.front().c < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

// a * shiftA * P[ps..] - b * shiftB * Q[qs..]
WPoly combine(MonomialOrder order, const Integer& a, const Monomial& shiftA, const WPoly& p, std::size_t ps,
              const Integer& b, const Monomial& shiftB, const WPoly& q, std::size_t qs) {
  WPoly out;
  out.reserve((p.size() - ps) + (q.size() - qs));
  std::size_t i = ps;
  std::size_t j = qs;
  Monomial mi;
  Monomial mj;
  if (i < p.size()) mi = p[i].m * shiftA;
  if (j < q.size()) mj = q[j].m * shiftB;
  while (i < p.size() || j < q.size()) {
    int cmp = 0;
    if (i == p.size()) {
      cmp = -1;
    } else if (j == q.size()) {
      cmp = 1;
    } else {
      cmp = compare(order, mi, mj);
    }
    if (cmp > 0) {
      out.push_back({mi, a * p[i].c});
      if (++i < p.size()) mi = p[i].m * shiftA;
    } else if (cmp < 0) {
      out.push_back({mj, -(b * q[j].c)});
      if (++j < q.size()) mj = q[j].m * shiftB;
    } else {
      Integer c = a * p[i].c - b * q[j].c;
      if (c != 0) out.push_back({mi, std::move(c)});
      if (++i < p.size()) mi = p[i].m * shiftA;
      if (++j < q.size()) mj = q[j].m * shiftB;
    }
  }
  return out;
}

class Reducer {
 public:
  Reducer(MonomialOrder order, const GroebnerBudget& budget) : order_(order), budget_(budget) {}

  // Returns r with r == scale * p modulo the divisors. When `scale` is null
  // the result is only defined up to a constant and comes back primitive.
  WPoly reduce(WPoly p, const std::vector<const WPoly*>& divisors, Scalar* scale) {
    WPoly r;
    std::size_t start = 0;
    unsigned sinceContent = 0;
    while (start < p.size()) {
      const WTerm& lead = p[start];
      const WPoly* divisor = nullptr;
      for (const WPoly* g : divisors) {
        if (g->front().m.divides(lead.m)) {
          divisor = g;
          break;
        }
      }
      if (divisor == nullptr) {
        r.push_back(lead);
        ++start;
        continue;
      }
      if (++reductions_ > budget_.max_reductions) {
        throw BudgetExceeded("reduction budget of " + std::to_string(budget_.max_reductions) + " steps exhausted");
      }
      const Integer& gl = divisor->front().c;
      Integer g;
      mpz_gcd(g.get_mpz_t(), gl.get_mpz_t(), lead.c.get_mpz_t());
      Integer a = gl / g;
      Integer b = lead.c / g;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      const Monomial shift = lead.m.quotient(divisor->front().m);
      p = combine(order_, a, Monomial(), p, start + 1, b, shift, *divisor, 1);
      start = 0;
      if (a != 1) {
        for (auto& t : r) t.c *= a;
        if (scale != nullptr) *scale *= a;
      }
      if (++sinceContent >= 8) {
        sinceContent = 0;
        Integer c = coefficientGcd(r, coefficientGcd(p));
        if (c > 1) {
          for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
          for (auto& t : r) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
          if (scale != nullptr) *scale /= c;
        }
      }
    }
    if (scale == nullptr) makePrimitive(r);
    return r;
  }

  WPoly sPolynomial(const WPoly& f, const WPoly& g) const {
    const Monomial l = Monomial::lcm(f.front().m, g.front().m);
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    return combine(order_, g.front().c / d, l.quotient(f.front().m), f, 1, f.front().c / d, l.quotient(g.front().m),
                   g, 1);
  }

  MonomialOrder order() const { return order_; }

 private:
  MonomialOrder order_;
  const GroebnerBudget& budget_;
  std::size_t reductions_ = 0;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(int ambient, MonomialOrder order, const GroebnerBudget& budget)
      : ambient_(ambient), order_(order), budget_(budget), reducer_(order, budget) {}

  // Returns false early when a nonzero constant appears (unit ideal).
  bool run(const std::vector<Polynomial>& generators) {
    for (const auto& g : generators) {
      WPoly w = toWork(g, order_);
      makePrimitive(w);
      w = reducer_.reduce(std::move(w), activeDivisors(), nullptr);
      if (w.empty()) continue;
      if (w.front().m.isOne()) return markUnit();
      update(std::move(w));
    }
    while (!pairs_.empty()) {
      const std::size_t pick = selectPair();
      const Pair pair = pairs_[pick];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(pick));
      WPoly s = reducer_.sPolynomial(polys_[pair.i], polys_[pair.j]);
      WPoly h = reducer_.reduce(std::move(s), activeDivisors(), nullptr);
      if (h.empty()) continue;
      if (h.front().m.isOne()) return markUnit();
      update(std::move(h));
    }
    return true;
  }

  GroebnerBasis result() {
    GroebnerBasis out;
    out.ambient = ambient_;
    out.order = order_;
    if (unit_) {
      out.basis.push_back(Polynomial::constant(ambient_, 1));
      return out;
    }
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) live.push_back(k);
    }
    std::vector<WPoly> reduced;
    for (std::size_t k : live) {
      std::vector<const WPoly*> others;
      for (std::size_t o : live) {
        if (o != k) others.push_back(&polys_[o]);
      }
      // The leading term is irreducible by the others, so only the tail moves.
      reduced.push_back(reducer_.reduce(polys_[k], others, nullptr));
    }
    std::sort(reduced.begin(), reduced.end(),
              [this](const WPoly& a, const WPoly& b) { return compare(order_, a.front().m, b.front().m) < 0; });
    for (const auto& w : reduced) out.basis.push_back(toPolynomial(w, ambient_, Scalar(w.front().c)));
    return out;
  }

 private:
  bool markUnit() {
    unit_ = true;
    return false;
  }

  std::vector<const WPoly*> activeDivisors() const {
    std::vector<const WPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  std::size_t selectPair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Monomial& a = pairs_[k].lcm;
      const Monomial& b = pairs_[best].lcm;
      if (a.degree() < b.degree() || (a.degree() == b.degree() && compare(order_, a, b) < 0)) best = k;
    }
    return best;
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(WPoly h) {
    const std::size_t hIndex = polys_.size();
    const Monomial hm = h.front().m;
    polys_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hIndex; ++k) {
      if (active_[k]) candidates.push_back({k, hIndex, Monomial::lcm(polys_[k].front().m, hm)});
    }
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      const bool coprime = polys_[p.i].front().m.coprimeWith(hm);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t o = c + 1; o < candidates.size() && !dominated; ++o) {
          dominated = candidates[o].lcm.divides(p.lcm);
        }
        for (std::size_t o = 0; o < kept.size() && !dominated; ++o) dominated = kept[o].lcm.divides(p.lcm);
      }
      if (!dominated) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const Pair& p : kept) {
      if (!polys_[p.i].front().m.coprimeWith(hm)) fresh.push_back(p);
    }

    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size() + fresh.size());
    for (const Pair& p : pairs_) {
      const bool divides = hm.divides(p.lcm);
      const Monomial l1 = Monomial::lcm(polys_[p.i].front().m, hm);
      const Monomial l2 = Monomial::lcm(polys_[p.j].front().m, hm);
      if (!divides || l1 == p.lcm || l2 == p.lcm) survivors.push_back(p);
    }
    survivors.insert(survivors.end(), fresh.begin(), fresh.end());
    pairs_ = std::move(survivors);
    if (pairs_.size() > budget_.max_pairs) {
      throw BudgetExceeded("pair queue exceeded " + std::to_string(budget_.max_pairs) + " entries");
    }
    for (std::size_t k = 0; k < hIndex; ++k) {
      if (active_[k] && hm.divides(polys_[k].front().m)) active_[k] = false;
    }
  }

  int ambient_;
  MonomialOrder order_;
  const GroebnerBudget& budget_;
  Reducer reducer_;
  std::vector<WPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

// Decides whether 1 lies in the ideal, stopping as soon as a constant shows up.
bool containsOne(int ambient, const std::vector<Polynomial>& generators, const GroebnerBudget& budget) {
  Buchberger engine(ambient, MonomialOrder::kGrevlex, budget);
  return !engine.run(generators);
}

// Radical membership with a cached basis of the ideal itself: plain
// membership is tried first, then the Rabinowitsch extension.
class RadicalOracle {
 public:
  RadicalOracle(const Ideal& ideal, const GroebnerBudget& budget) : ideal_(ideal), budget_(budget) {}

  bool contains(const Polynomial& f) {
    if (f.ambient() != ideal_.ambient()) throw AmbientMismatch(f.ambient(), ideal_.ambient());
    if (f.isZero()) return true;
    if (ideal_.isZero()) return false;
    if (!basis_) basis_ = buchberger(ideal_, MonomialOrder::kGrevlex, budget_);
    if (basis_->isUnit() || normalForm(f, *basis_).isZero()) return true;
    const int n = ideal_.ambient();
    if (n + 1 > kMaxVars) throw std::invalid_argument("no room for the auxiliary variable");
    std::vector<Polynomial> extended;
    extended.reserve(basis_->basis.size() + 1);
    for (const auto& g : basis_->basis) extended.push_back(g.withAmbient(n + 1));
    extended.push_back(Polynomial::constant(n + 1, 1) - Polynomial::variable(n + 1, n) * f.withAmbient(n + 1));
    return containsOne(n + 1, extended, budget_);
  }

 private:
  const Ideal& ideal_;
  const GroebnerBudget& budget_;
  std::optional<GroebnerBasis> basis_;
};

}  // namespace

Ideal::Ideal(int ambient, std::vector<Polynomial> generators) : ambient_(ambient) {
  for (auto& g : generators) {
    if (g.ambient() != ambient) throw AmbientMismatch(ambient, g.ambient());
    if (!g.isZero()) generators_.push_back(primitivePart(g));
  }
}

Monomial leadingMonomial(const Polynomial& p, MonomialOrder order) {
  if (p.isZero()) throw std::invalid_argument("leading monomial of zero");
  if (order == MonomialOrder::kGrevlex) return p.leadingMonomial();
  Monomial best = p.terms().front().first;
  for (const auto& [m, c] : p.terms()) {
    if (compare(order, m, best) > 0) best = m;
  }
  return best;
}

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order, const GroebnerBudget& budget) {
  if (ideal.isZero()) return GroebnerBasis{ideal.ambient(), order, {}};
  Buchberger engine(ideal.ambient(), order, budget);
  engine.run(ideal.generators());
  return engine.result();
}

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis) {
  if (f.ambient() != basis.ambient) throw AmbientMismatch(f.ambient(), basis.ambient);
  GroebnerBudget unlimited{static_cast<std::size_t>(-1), static_cast<std::size_t>(-1)};
  Reducer reducer(basis.order, unlimited);
  std::vector<WPoly> divisors;
  divisors.reserve(basis.basis.size());
  for (const auto& g : basis.basis) divisors.push_back(toWork(g, basis.order));
  std::vector<const WPoly*> pointers;
  for (const auto& d : divisors) pointers.push_back(&d);
  Integer multiplier;
  WPoly w = toWork(f, basis.order, &multiplier);
  Scalar scale = 1;
  WPoly r = reducer.reduce(std::move(w), pointers, &scale);
  return toPolynomial(r, f.ambient(), scale * multiplier);
}

bool satisfiesBuchbergerCriterion(const GroebnerBasis& basis) {
  GroebnerBudget unlimited{static_cast<std::size_t>(-1), static_cast<std::size_t>(-1)};
  Reducer reducer(basis.order, unlimited);
  std::vector<WPoly> work;
  for (const auto& g : basis.basis) {
    WPoly w = toWork(g, basis.order);
    makePrimitive(w);
    work.push_back(std::move(w));
  }
  std::vector<const WPoly*> pointers;
  for (const auto& w : work) pointers.push_back(&w);
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = i + 1; j < work.size(); ++j) {
      if (!reducer.reduce(reducer.sPolynomial(work[i], work[j]), pointers, nullptr).empty()) return false;
    }
  }
  return true;
}

bool idealMembership(const Polynomial& f, const Ideal& ideal, const GroebnerBudget& budget) {
  if (f.ambient() != ideal.ambient()) throw AmbientMismatch(f.ambient(), ideal.ambient());
  if (f.isZero()) return true;
  if (ideal.isZero()) return false;
  return normalForm(f, buchberger(ideal, MonomialOrder::kGrevlex, budget)).isZero();
}

bool radicalMembership(const Polynomial& f, const Ideal& ideal, const GroebnerBudget& budget) {
  RadicalOracle oracle(ideal, budget);
  return oracle.contains(f);
}

Ideal idealProduct(const Ideal& a, const Ideal& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch(a.ambient(), b.ambient());
  std::vector<Polynomial> products;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) products.push_back(f * g);
  }
  return Ideal(a.ambient(), std::move(products));
}

const char* toString(VarietyRelation relation) {
  switch (relation) {
    case VarietyRelation::kEqual:
      return "equal";
    case VarietyRelation::kLeftInRight:
      return "leftInRight";
    case VarietyRelation::kRightInLeft:
      return "rightInLeft";
    case VarietyRelation::kIncomparable:
      return "incomparable";
    case VarietyRelation::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

VarietyComparison varietyEquals(const Ideal& left, const Ideal& right, const GroebnerBudget& budget) {
  if (left.ambient() != right.ambient()) throw AmbientMismatch(left.ambient(), right.ambient());
  VarietyComparison out;
  try {
    RadicalOracle leftOracle(left, budget);
    RadicalOracle rightOracle(right, budget);
    // V(left) in V(right) iff every generator of right vanishes on V(left).
    bool leftInRight = true;
    for (const auto& g : right.generators()) {
      if (!leftOracle.contains(g)) {
        leftInRight = false;
        out.witness = g;
        break;
      }
    }
    bool rightInLeft = true;
    for (const auto& g : left.generators()) {
      if (!rightOracle.contains(g)) {
        rightInLeft = false;
        if (!out.witness) out.witness = g;
        break;
      }
    }
    if (leftInRight && rightInLeft) {
      out.relation = VarietyRelation::kEqual;
    } else if (leftInRight) {
      out.relation = VarietyRelation::kLeftInRight;
    } else if (rightInLeft) {
      out.relation = VarietyRelation::kRightInLeft;
    } else {
      out.relation = VarietyRelation::kIncomparable;
    }
  } catch (const BudgetExceeded& e) {
    out.relation = VarietyRelation::kInconclusive;
    out.witness.reset();
    out.note = e.what();
  }
  return out;
}

bool varietyContains(const Ideal& ideal, const Ideal& component, const GroebnerBudget& budget) {
  if (ideal.ambient() != component.ambient()) throw AmbientMismatch(ideal.ambient(), component.ambient());
  RadicalOracle oracle(component, budget);
  for (const auto& g : ideal.generators()) {
    if (!oracle.contains(g)) return false;
  }
  return true;
}

}  // namespace folcheck
