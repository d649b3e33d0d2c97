#include "oracles.hpp"

#include <functional>
#include <map>

#include "folcheck/matrix.hpp"

namespace oracle {

Scalar evaluate(const Polynomial& p, const std::vector<Scalar>& point) {
  Scalar total = 0;
  for (const auto& [m, c] : p.terms()) {
    Scalar term = c;
    for (int i = 0; i < p.ambient(); ++i) {
      for (int e = 0; e < m[i]; ++e) term *= point[static_cast<std::size_t>(i)];
    }
    total += term;
  }
  return total;
}

std::vector<Monomial> monomialsOfDegree(int n, int degree) {
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      exps[static_cast<std::size_t>(var)] = left;
      Monomial m;
      for (int i = 0; i < n; ++i) m.set(i, static_cast<folcheck::Exponent>(exps[static_cast<std::size_t>(i)]));
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[static_cast<std::size_t>(var)] = e;
      rec(var + 1, left - e);
    }
  };
  if (n > 0 && degree >= 0) rec(0, degree);
  return out;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Scalar f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < rows[i].size(); ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  return static_cast<int>(eliminate(rows, rows.front().size()).size());
}

std::optional<std::vector<Scalar>> solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  const auto pivots = eliminate(a, cols);
  // A pivot in the augmented column means 0 = nonzero.
  for (const auto& row : a) {
    bool zero = true;
    for (std::size_t c = 0; c < cols; ++c) zero = zero && row[c] == 0;
    if (zero && row[cols] != 0) return std::nullopt;
  }
  std::vector<Scalar> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols] / a[r][pivots[r]];
  return x;
}

bool homogeneousMembership(const Polynomial& f, const std::vector<Polynomial>& generators) {
  if (f.isZero()) return true;
  const int n = f.ambient();
  const int d = f.totalDegree();
  std::vector<Monomial> basis = monomialsOfDegree(n, d);
  std::map<std::vector<int>, std::size_t> index;
  auto key = [n](const Monomial& m) {
    std::vector<int> k;
    for (int i = 0; i < n; ++i) k.push_back(m[i]);
    return k;
  };
  for (std::size_t i = 0; i < basis.size(); ++i) index[key(basis[i])] = i;

  // One column per (generator, multiplier monomial).
  std::vector<std::vector<Scalar>> columns;
  for (const auto& g : generators) {
    if (g.isZero()) continue;
    const int dq = d - g.totalDegree();
    if (dq < 0) continue;
    for (const auto& q : monomialsOfDegree(n, dq)) {
      std::vector<Scalar> col(basis.size(), 0);
      for (const auto& [m, c] : g.terms()) col[index.at(key(m * q))] += c;
      columns.push_back(std::move(col));
    }
  }
  std::vector<std::vector<Scalar>> a(basis.size(), std::vector<Scalar>(columns.size(), 0));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < basis.size(); ++r) a[r][c] = columns[c][r];
  }
  std::vector<Scalar> b(basis.size(), 0);
  for (const auto& [m, c] : f.terms()) b[index.at(key(m))] = c;
  if (columns.empty()) return false;
  return solve(a, b).has_value();
}

Polynomial dCoefficient(const OneForm& form, int i, int j) {
  // d(sum A_k dz_k) = sum_{i<j} (d_i A_j - d_j A_i) dz_i ^ dz_j
  return folcheck::partialDerivative(form[j], i) - folcheck::partialDerivative(form[i], j);
}

Scalar Random::scalar(int bound, int maxDen) {
  Scalar s(uniform(-bound, bound), uniform(1, maxDen));
  s.canonicalize();
  return s;
}

Scalar Random::nonzeroScalar(int bound, int maxDen) {
  Scalar s = 0;
  while (s == 0) s = scalar(bound, maxDen);
  return s;
}

std::vector<Scalar> Random::point(int n, int bound) {
  std::vector<Scalar> out;
  for (int i = 0; i < n; ++i) out.push_back(scalar(bound, 3));
  return out;
}

Monomial Random::monomial(int ambient, int degree) {
  Monomial m;
  std::vector<int> exps(static_cast<std::size_t>(ambient), 0);
  for (int k = 0; k < degree; ++k) ++exps[static_cast<std::size_t>(uniform(0, ambient - 1))];
  for (int i = 0; i < ambient; ++i) m.set(i, static_cast<folcheck::Exponent>(exps[static_cast<std::size_t>(i)]));
  return m;
}

Polynomial Random::polynomial(int ambient, int maxDegree, int terms) {
  std::vector<Polynomial::Term> t;
  for (int k = 0; k < terms; ++k) t.emplace_back(monomial(ambient, uniform(0, maxDegree)), scalar());
  return Polynomial::fromTerms(ambient, std::move(t));
}

Polynomial Random::homogeneous(int ambient, int degree, int terms) {
  std::vector<Polynomial::Term> t;
  for (int k = 0; k < terms; ++k) t.emplace_back(monomial(ambient, degree), scalar());
  return Polynomial::fromTerms(ambient, std::move(t));
}

OneForm Random::form(int ambient, int maxDegree, int terms) {
  OneForm out(ambient);
  for (int i = 0; i < ambient; ++i) out[i] = polynomial(ambient, maxDegree, terms);
  return out;
}

OneForm Random::homogeneousForm(int ambient, int degree, int terms) {
  OneForm out(ambient);
  for (int i = 0; i < ambient; ++i) out[i] = homogeneous(ambient, degree, terms);
  return out;
}

folcheck::Matrix Random::matrix(int rows, int cols) {
  folcheck::Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = uniform(-2, 2);
  }
  return m;
}

folcheck::Matrix Random::invertible(int n) {
  while (true) {
    folcheck::Matrix m = matrix(n, n);
    std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c);
    }
    if (rank(rows) == n) return m;
  }
}

}  // namespace oracle
