#include "folcheck/torus.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

namespace folcheck {

namespace {

void requireSpace(const OneForm& form) {
  if (form.ambient() != 4) throw std::invalid_argument("weight computations need a form on 4 variables");
}

void requireNonzero(const OneForm& form) {
  if (form.isZero()) throw std::invalid_argument("weight computations need a nonzero form");
}

using IntRow = std::array<Integer, 4>;

// Z-basis of {x in Z^4 : rows . x = 0} by unimodular column operations.
std::vector<IntRow> integerKernel(std::vector<IntRow> rows) {
  std::array<IntRow, 4> transform{};  // columns of U, stored as transform[col][row]
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) transform[c][r] = (r == c) ? 1 : 0;
  }
  auto columnOp = [&](int target, int source, const Integer& factor) {
    for (auto& row : rows) row[target] -= factor * row[source];
    for (int r = 0; r < 4; ++r) transform[target][r] -= factor * transform[source][r];
  };
  auto columnSwap = [&](int a, int b) {
    for (auto& row : rows) std::swap(row[a], row[b]);
    std::swap(transform[a], transform[b]);
  };
  int pivot = 0;
  for (std::size_t r = 0; r < rows.size() && pivot < 4; ++r) {
    while (true) {
      int best = -1;
      for (int c = pivot; c < 4; ++c) {
        if (rows[r][c] != 0 && (best < 0 || abs(rows[r][c]) < abs(rows[r][best]))) best = c;
      }
      if (best < 0) break;
      if (best != pivot) columnSwap(best, pivot);
      bool cleared = true;
      for (int c = pivot + 1; c < 4; ++c) {
        if (rows[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[r][pivot].get_mpz_t());
        columnOp(c, pivot, q);
        if (rows[r][c] != 0) cleared = false;
      }
      if (cleared) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<IntRow> kernel;
  for (int c = pivot; c < 4; ++c) kernel.push_back(transform[c]);
  return kernel;
}

// Row Hermite normal form: positive pivots, entries above a pivot reduced
// into [0, pivot).
std::vector<IntRow> hermiteNormalForm(std::vector<IntRow> basis) {
  std::size_t row = 0;
  for (int col = 0; col < 4 && row < basis.size(); ++col) {
    while (true) {
      std::size_t best = basis.size();
      for (std::size_t r = row; r < basis.size(); ++r) {
        if (basis[r][col] != 0 && (best == basis.size() || abs(basis[r][col]) < abs(basis[best][col]))) best = r;
      }
      if (best == basis.size()) break;
      std::swap(basis[row], basis[best]);
      bool cleared = true;
      for (std::size_t r = row + 1; r < basis.size(); ++r) {
        if (basis[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), basis[r][col].get_mpz_t(), basis[row][col].get_mpz_t());
        for (int c = 0; c < 4; ++c) basis[r][c] -= q * basis[row][c];
        if (basis[r][col] != 0) cleared = false;
      }
      if (!cleared) continue;
      if (basis[row][col] < 0) {
        for (auto& x : basis[row]) x = -x;
      }
      for (std::size_t r = 0; r < row; ++r) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), basis[r][col].get_mpz_t(), basis[row][col].get_mpz_t());
        for (int c = 0; c < 4; ++c) basis[r][c] -= q * basis[row][c];
      }
      ++row;
      break;
    }
  }
  return basis;
}

}  // namespace

WeightVector::WeightVector(long n1, long n2, long n3, long n4) : WeightVector(std::array<long, 4>{n1, n2, n3, n4}) {}

WeightVector::WeightVector(const std::array<long, 4>& n) : n_(n) {
  if (n[0] + n[1] + n[2] + n[3] != 0) throw std::invalid_argument("weights of a diagonal subgroup must sum to zero");
}

bool WeightVector::isZero() const {
  return std::all_of(n_.begin(), n_.end(), [](long x) { return x == 0; });
}

WeightVector WeightVector::primitive() const {
  long g = 0;
  for (long x : n_) g = std::gcd(g, x);
  if (g <= 1) return *this;
  return WeightVector(n_[0] / g, n_[1] / g, n_[2] / g, n_[3] / g);
}

WeightVector WeightVector::operator-() const { return WeightVector(-n_[0], -n_[1], -n_[2], -n_[3]); }

Matrix WeightVector::at(const Scalar& t) const {
  if (t == 0) throw std::invalid_argument("one-parameter subgroups are evaluated at t != 0");
  std::vector<Scalar> entries;
  for (long e : n_) {
    Scalar value = 1;
    const Scalar base = e >= 0 ? t : Scalar(1 / t);
    for (long k = 0; k < std::abs(e); ++k) value *= base;
    entries.push_back(value);
  }
  return Matrix::diagonal(entries);
}

long monomialWeight(const Monomial& m, int slot, const WeightVector& n) {
  long w = n[slot];
  for (int i = 0; i < 4; ++i) w += static_cast<long>(m[i]) * n[i];
  return w;
}

WeightDecomposition weightDecompose(const OneForm& form, const WeightVector& n) {
  requireSpace(form);
  requireNonzero(form);
  std::map<long, std::array<std::vector<Polynomial::Term>, 4>> buckets;
  for (int slot = 0; slot < 4; ++slot) {
    for (const auto& term : form[slot].terms()) {
      buckets[monomialWeight(term.first, slot, n)][static_cast<std::size_t>(slot)].push_back(term);
    }
  }
  WeightDecomposition parts;
  for (auto& [weight, slots] : buckets) {
    OneForm part(4);
    for (int slot = 0; slot < 4; ++slot) {
      part[slot] = Polynomial::fromTerms(4, std::move(slots[static_cast<std::size_t>(slot)]));
    }
    parts.emplace(weight, std::move(part));
  }
  return parts;
}

OneForm limitPoint(const OneForm& form, const WeightVector& n, LimitDirection direction) {
  WeightDecomposition parts = weightDecompose(form, n);
  return direction == LimitDirection::kToZero ? parts.begin()->second : parts.rbegin()->second;
}

std::vector<WeightVector> fixingLattice(const OneForm& form) {
  requireSpace(form);
  requireNonzero(form);
  std::vector<IntRow> rows;
  rows.push_back({Integer(1), Integer(1), Integer(1), Integer(1)});
  std::optional<IntRow> first;
  for (int slot = 0; slot < 4; ++slot) {
    for (const auto& [m, c] : form[slot].terms()) {
      IntRow w;
      for (int i = 0; i < 4; ++i) w[i] = static_cast<long>(m[i]) + (i == slot ? 1 : 0);
      if (!first) {
        first = w;
        continue;
      }
      IntRow diff;
      for (int i = 0; i < 4; ++i) diff[i] = w[i] - (*first)[i];
      rows.push_back(diff);
    }
  }
  std::vector<WeightVector> out;
  for (const auto& v : hermiteNormalForm(integerKernel(std::move(rows)))) {
    out.emplace_back(v[0].get_si(), v[1].get_si(), v[2].get_si(), v[3].get_si());
  }
  return out;
}

DestabilizingReport destabilizingCheck(const OneForm& form, const WeightVector& n) {
  const WeightDecomposition parts = weightDecompose(form, n);
  const long minWeight = parts.begin()->first;
  return {minWeight > 0, minWeight};
}

}  // namespace folcheck
