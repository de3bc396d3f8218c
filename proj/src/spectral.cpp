#include "braidrep/spectral.hpp"

#include <algorithm>

namespace braidrep {

namespace {

// Divisors of |n|, ascending. n != 0.
std::vector<mpz_class> divisors(const mpz_class& n) {
  mpz_class a = abs(n);
  std::vector<mpz_class> low, high;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      low.push_back(d);
      if (d * d != a) high.push_back(a / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Rational evaluate_at(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Synthetic division of poly by (x - root); assumes root is a root.
std::vector<Rational> deflate(const std::vector<Rational>& poly,
                              const Rational& root) {
  const int d = static_cast<int>(poly.size()) - 1;
  std::vector<Rational> q(d);
  Rational carry = poly[d];
  for (int i = d - 1; i >= 0; --i) {
    q[i] = carry;
    carry = poly[i] + carry * root;
  }
  return q;
}

}  // namespace

std::vector<Scalar> minimal_polynomial(const Matrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("minimal_polynomial: non-square matrix");
  if (m.rows() == 0) return {Scalar(1)};  // empty matrix: p(x) = 1

  std::vector<Matrix> power_vecs;  // flattened I, m, m², ...
  Matrix power = Matrix::identity(m.rows());
  for (int d = 0;; ++d) {
    Matrix next = vectorize(power);
    if (!power_vecs.empty()) {
      std::optional<Matrix> dep = solve(hstack(power_vecs), next);
      if (dep) {
        std::vector<Scalar> coeffs(d + 1);
        for (int j = 0; j < d; ++j) coeffs[j] = -dep->at(j, 0);
        coeffs[d] = Scalar(1);
        return coeffs;
      }
    }
    power_vecs.push_back(std::move(next));
    power = power * m;
  }
}

std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly) {
  if (poly.empty() || poly.back() != Scalar(1))
    throw std::invalid_argument("rational_roots: polynomial must be monic");
  for (const Scalar& c : poly)
    if (!c.is_real())
      throw std::invalid_argument(
          "rational_roots: coefficients must have zero imaginary part");

  std::vector<Rational> p(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) p[i] = poly[i].re();

  std::vector<Scalar> roots;
  // Zero roots first.
  while (p.size() > 1 && sgn(p[0]) == 0) {
    roots.emplace_back(Rational(0));
    p.erase(p.begin());
  }
  if (p.size() == 1) return roots;

  // Clear denominators, strip content: candidates are ±(div of const)/(div
  // of leading) of the primitive integer form.
  mpz_class lcm_den(1);
  for (const Rational& c : p)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> ip(p.size());
  mpz_class content(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    ip[i] = Rational(p[i] * lcm_den).get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ip[i].get_mpz_t());
  }
  for (mpz_class& c : ip) c /= content;

  std::vector<Rational> candidates;
  for (const mpz_class& num : divisors(ip.front()))
    for (const mpz_class& den : divisors(ip.back())) {
      Rational c(num, den);
      c.canonicalize();
      candidates.push_back(c);
      candidates.push_back(-c);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  for (const Rational& c : candidates) {
    while (p.size() > 1 && sgn(evaluate_at(p, c)) == 0) {
      roots.emplace_back(c);
      p = deflate(p, c);
    }
  }
  if (p.size() > 1)
    throw partial_split_error(roots, static_cast<int>(p.size()) - 1);

  std::sort(roots.begin(), roots.end(), scalar_less);
  return roots;
}

std::vector<std::pair<Scalar, Matrix>> spectral_projections(const Matrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("spectral_projections: non-square matrix");
  std::vector<Scalar> minpoly = minimal_polynomial(m);
  for (const Scalar& c : minpoly)
    if (!c.is_real())
      throw irrational_spectrum_error(
          "minimal polynomial has non-real coefficients");
  std::vector<Scalar> roots;
  try {
    roots = rational_roots(minpoly);
  } catch (const partial_split_error&) {
    throw irrational_spectrum_error("minimal polynomial does not split over Q");
  }
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (roots[i] == roots[i - 1])
      throw not_diagonalizable_error("minimal polynomial has a repeated root");

  const Matrix id = Matrix::identity(m.rows());
  std::vector<std::pair<Scalar, Matrix>> result;
  for (std::size_t l = 0; l < roots.size(); ++l) {
    Matrix p = id;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == l) continue;
      Scalar scale = Scalar(1) / (roots[l] - roots[j]);
      p = p * (scale * (m - roots[j] * id));
    }
    result.emplace_back(roots[l], std::move(p));
  }
  return result;
}

Matrix evaluate_polynomial(const std::vector<Scalar>& poly, const Matrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("evaluate_polynomial: non-square matrix");
  Matrix acc(m.rows(), m.rows());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = acc * m;
    for (int i = 0; i < m.rows(); ++i) acc.at(i, i) += *it;
  }
  return acc;
}

}  // namespace braidrep
