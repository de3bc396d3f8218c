#include "braidrep/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace braidrep {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative size");
  e_.resize(static_cast<std::size_t>(rows) * cols);
}

Matrix::Matrix(int rows, int cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative size");
  if (e_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("Matrix: entry count does not match shape");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::column(std::vector<Scalar> entries) {
  int n = static_cast<int>(entries.size());
  return Matrix(n, 1, std::move(entries));
}

Matrix Matrix::conjugate_transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: non-square matrix");
  Scalar t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_scalar_multiple_of_identity() const {
  if (!is_square() || rows_ == 0) return is_square();
  const Scalar& lambda = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? at(i, j) != lambda : !at(i, j).is_zero()) return false;
    }
  return true;
}

Matrix Matrix::block(int row0, int col0, int rows, int cols) const {
  if (row0 < 0 || col0 < 0 || row0 + rows > rows_ || col0 + cols > cols_)
    throw std::invalid_argument("block: out of range");
  Matrix b(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b.at(i, j) = at(row0 + i, col0 + j);
  return b;
}

void Matrix::set_block(int row0, int col0, const Matrix& b) {
  if (row0 < 0 || col0 < 0 || row0 + b.rows() > rows_ || col0 + b.cols() > cols_)
    throw std::invalid_argument("set_block: out of range");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) at(row0 + i, col0 + j) = b.at(i, j);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix addition: shape mismatch");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product: inner dimension mismatch");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;  // block-permutation inputs are sparse
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = s * m.e_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

namespace {

// Gaussian integer a + b·i; the working element of fraction-free elimination.
struct GInt {
  mpz_class a, b;
  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
};

GInt gmul(const GInt& x, const GInt& y) {
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}

GInt gsub(const GInt& x, const GInt& y) { return {x.a - y.a, x.b - y.b}; }

// Exact division in Z[i]; throws if the quotient is not a Gaussian integer.
// Bareiss guarantees exactness on every division it performs.
GInt gdivexact(const GInt& x, const GInt& d) {
  mpz_class norm = d.a * d.a + d.b * d.b;
  if (sgn(norm) == 0) throw std::logic_error("gdivexact: zero divisor");
  mpz_class na = x.a * d.a + x.b * d.b;
  mpz_class nb = x.b * d.a - x.a * d.b;
  GInt q;
  mpz_class r;
  mpz_tdiv_qr(q.a.get_mpz_t(), r.get_mpz_t(), na.get_mpz_t(), norm.get_mpz_t());
  if (sgn(r) != 0) throw std::logic_error("gdivexact: inexact division");
  mpz_tdiv_qr(q.b.get_mpz_t(), r.get_mpz_t(), nb.get_mpz_t(), norm.get_mpz_t());
  if (sgn(r) != 0) throw std::logic_error("gdivexact: inexact division");
  return q;
}

std::size_t gsize(const GInt& x) {
  return mpz_sizeinbase(x.a.get_mpz_t(), 2) + mpz_sizeinbase(x.b.get_mpz_t(), 2);
}

Scalar to_scalar(const GInt& x) {
  return Scalar(Rational(x.a), Rational(x.b));
}

// Rows of m scaled by the lcm of their entry denominators: same row space,
// Gaussian-integer entries.
std::vector<std::vector<GInt>> integerize(const Matrix& m) {
  std::vector<std::vector<GInt>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).re().get_den().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).im().get_den().get_mpz_t());
    }
    rows[i].resize(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
      Rational re = m.at(i, j).re() * l;
      Rational im = m.at(i, j).im() * l;
      rows[i][j] = {re.get_num(), im.get_num()};
    }
  }
  return rows;
}

struct Echelon {
  std::vector<std::vector<GInt>> rows;  // first `pivots.size()` rows are nonzero
  std::vector<int> pivots;              // pivot column per echelon row
};

// One-step Bareiss: entries stay Gaussian integers, every division exact,
// entries re-canonicalized (divided by the previous pivot) after each step.
Echelon echelonize(std::vector<std::vector<GInt>> rows, int cols) {
  Echelon ech;
  int r = 0;
  GInt prev{1, 0};
  const int nrows = static_cast<int>(rows.size());
  for (int c = 0; c < cols && r < nrows; ++c) {
    int best = -1;
    std::size_t best_size = 0;
    for (int i = r; i < nrows; ++i) {
      if (rows[i][c].is_zero()) continue;
      std::size_t s = gsize(rows[i][c]);
      if (best < 0 || s < best_size) {
        best = i;
        best_size = s;
      }
    }
    if (best < 0) continue;
    std::swap(rows[r], rows[best]);
    const GInt pivot = rows[r][c];
    for (int i = r + 1; i < nrows; ++i) {
      if (rows[i][c].is_zero()) {
        // still rescale so the Bareiss invariant (entries = minors) holds
        for (int j = c; j < cols; ++j)
          rows[i][j] = gdivexact(gmul(pivot, rows[i][j]), prev);
        continue;
      }
      const GInt factor = rows[i][c];
      for (int j = c; j < cols; ++j) {
        GInt v = gsub(gmul(pivot, rows[i][j]), gmul(factor, rows[r][j]));
        rows[i][j] = gdivexact(v, prev);
      }
    }
    prev = pivot;
    ech.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  ech.rows = std::move(rows);
  return ech;
}

Echelon echelonize(const Matrix& m) { return echelonize(integerize(m), m.cols()); }

}  // namespace

std::vector<Matrix> kernel_basis(const Matrix& m) {
  Echelon ech = echelonize(m);
  const int cols = m.cols();
  const int r = static_cast<int>(ech.pivots.size());
  std::vector<bool> is_pivot(cols, false);
  for (int p : ech.pivots) is_pivot[p] = true;

  std::vector<Matrix> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols);
    v[f] = Scalar(1);
    for (int i = r - 1; i >= 0; --i) {
      const int p = ech.pivots[i];
      Scalar s;
      for (int j = p + 1; j < cols; ++j) {
        if (ech.rows[i][j].is_zero() || v[j].is_zero()) continue;
        s += to_scalar(ech.rows[i][j]) * v[j];
      }
      v[p] = -s / to_scalar(ech.rows[i][p]);
    }
    basis.push_back(Matrix::column(std::move(v)));
  }
  return basis;
}

int rank(const Matrix& m) { return static_cast<int>(echelonize(m).pivots.size()); }

std::vector<int> pivot_columns(const Matrix& m) { return echelonize(m).pivots; }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  const int n = m.rows();
  // Rational Gauss-Jordan on [m | I].
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("inverse: singular matrix");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    const Scalar p = a.at(c, c);
    for (int j = 0; j < n; ++j) {
      a.at(c, j) = a.at(c, j) / p;
      inv.at(c, j) = inv.at(c, j) / p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a.at(i, c).is_zero()) continue;
      const Scalar f = a.at(i, c);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) = a.at(i, j) - f * a.at(c, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve: row count mismatch");
  const int n = a.cols();
  // Echelonize [a | b]; consistency = no pivot lands in the b-part.
  Matrix aug(a.rows(), n + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  Echelon ech = echelonize(aug);
  for (int p : ech.pivots)
    if (p >= n) return std::nullopt;

  const int r = static_cast<int>(ech.pivots.size());
  Matrix x(n, b.cols());
  for (int col = 0; col < b.cols(); ++col) {
    for (int i = r - 1; i >= 0; --i) {
      const int p = ech.pivots[i];
      Scalar s = to_scalar(ech.rows[i][n + col]);
      for (int j = p + 1; j < n; ++j) {
        if (ech.rows[i][j].is_zero() || x.at(j, col).is_zero()) continue;
        s -= to_scalar(ech.rows[i][j]) * x.at(j, col);
      }
      x.at(p, col) = s / to_scalar(ech.rows[i][p]);
    }
  }
  return x;
}

Matrix vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw std::invalid_argument("vstack: empty");
  int rows = 0;
  for (const Matrix& p : parts) {
    if (p.cols() != parts.front().cols())
      throw std::invalid_argument("vstack: column mismatch");
    rows += p.rows();
  }
  Matrix r(rows, parts.front().cols());
  int at = 0;
  for (const Matrix& p : parts) {
    r.set_block(at, 0, p);
    at += p.rows();
  }
  return r;
}

Matrix hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw std::invalid_argument("hstack: empty");
  int cols = 0;
  for (const Matrix& p : parts) {
    if (p.rows() != parts.front().rows())
      throw std::invalid_argument("hstack: row mismatch");
    cols += p.cols();
  }
  Matrix r(parts.front().rows(), cols);
  int at = 0;
  for (const Matrix& p : parts) {
    r.set_block(0, at, p);
    at += p.cols();
  }
  return r;
}

Matrix vectorize(const Matrix& m) {
  std::vector<Scalar> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return Matrix::column(std::move(v));
}

}  // namespace braidrep
