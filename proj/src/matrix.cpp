#include "hlx/matrix.hpp"

namespace hlx {

Vec zero_vec(Field f, size_t n) { return Vec(n, FieldElement(f)); }

Vec unit_vec(Field f, size_t n, size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = FieldElement(f, 1);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "vector sizes differ");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "vector sizes differ");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const FieldElement& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

Vec neg(const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = -x;
  return r;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix::Matrix(Field f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, FieldElement(f)) {}

Matrix Matrix::identity(Field f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement(f, 1);
  return m;
}

Matrix Matrix::from_rows(Field f, size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, Errc::DimensionMismatch, "ragged row list");
    for (size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_cols(Field f, size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, Errc::DimensionMismatch, "ragged column list");
    for (size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

void Matrix::set(size_t i, size_t j, FieldElement v) {
  require(v.field() == field_, Errc::FieldMismatch,
          "entry over " + v.field().name() + " in matrix over " + field_.name());
  e_[i * cols_ + j] = std::move(v);
}

Vec Matrix::row(size_t i) const {
  Vec v;
  v.reserve(cols_);
  for (size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

Vec Matrix::col(size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(field_ == o.field_, Errc::FieldMismatch, "matrix product over different fields");
  require(cols_ == o.rows_, Errc::DimensionMismatch, "inner dimensions differ");
  Matrix r(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const FieldElement& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch,
          "matrix sum shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch,
          "matrix difference shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  require(x.size() == cols_, Errc::DimensionMismatch, "vector length != column count");
  Vec y = zero_vec(field_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

Matrix Matrix::hstack(const Matrix& o) const {
  require(field_ == o.field_ && rows_ == o.rows_, Errc::DimensionMismatch, "hstack row mismatch");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  require(field_ == o.field_ && cols_ == o.cols_, Errc::DimensionMismatch, "vstack column mismatch");
  Matrix r(field_, rows_ + o.rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (size_t i = 0; i < o.rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Matrix Matrix::submatrix(size_t r0, size_t c0, size_t nrows, size_t ncols) const {
  require(r0 + nrows <= rows_ && c0 + ncols <= cols_, Errc::DimensionMismatch, "submatrix bounds");
  Matrix r(field_, nrows, ncols);
  for (size_t i = 0; i < nrows; ++i)
    for (size_t j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

int Matrix::cmp(const Matrix& o) const {
  require(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch,
          "comparing matrices of different shapes");
  for (size_t i = 0; i < e_.size(); ++i) {
    int c = e_[i].cmp(o.e_[i]);
    if (c != 0) return c;
  }
  return 0;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t piv = a.rows();
    for (size_t i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == a.rows()) continue;
    if (piv != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
    FieldElement inv = a.at(r, c).inverse();
    for (size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      FieldElement factor = a.at(i, c);
      for (size_t j = c; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  const size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(m.field(), n);
    v[j] = FieldElement(m.field(), 1);
    for (size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.mat.at(i, j);
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(m.field(), n, rows);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  require(b.size() == a.rows(), Errc::DimensionMismatch, "rhs length != row count");
  Matrix aug = a.hstack(Matrix::from_cols(a.field(), a.rows(), {b}));
  RrefResult rr = rref(aug);
  for (size_t p : rr.pivots)
    if (p == a.cols()) return std::nullopt;  // pivot in the augmented column
  Vec x = zero_vec(a.field(), a.cols());
  for (size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.mat.at(i, a.cols());
  return x;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  require(b.rows() == a.rows(), Errc::DimensionMismatch, "rhs rows != lhs rows");
  Matrix x(a.field(), a.cols(), b.cols());
  for (size_t j = 0; j < b.cols(); ++j) {
    auto xj = solve(a, b.col(j));
    if (!xj) return std::nullopt;
    for (size_t i = 0; i < a.cols(); ++i) x.at(i, j) = (*xj)[i];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  RrefResult rr = rref(m.hstack(Matrix::identity(m.field(), m.rows())));
  for (size_t i = 0; i < m.rows(); ++i)
    if (rr.pivots.size() <= i || rr.pivots[i] != i) return std::nullopt;
  return rr.mat.submatrix(0, m.cols(), m.rows(), m.cols());
}

}  // namespace hlx
