#include <qhom/matrix.hpp>

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhom {

namespace {

// Work threshold below which the parallel kernels are not worth spawning.
constexpr long kParallelCells = 16384;

bool use_parallel(Exec policy, long cells) {
#ifdef _OPENMP
  if (policy == Exec::Parallel) return true;
  if (policy == Exec::Serial) return false;
  return cells >= kParallelCells && omp_get_max_threads() > 1;
#else
  (void)policy;
  (void)cells;
  return false;
#endif
}

}  // namespace

Matrix::Matrix(int rows, int cols, Field f)
    : rows_(rows), cols_(cols), field_(f),
      data_(static_cast<size_t>(rows) * cols, Scalar(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(int n, Field f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows,
                         Field f) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Matrix m(r, c, f);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw std::invalid_argument("ragged matrix literal");
    int j = 0;
    for (long v : row) m.at(i, j++) = f.from_long(v);
    ++i;
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!Field::is_zero(x)) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? field_.one() : field_.zero())) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    throw std::invalid_argument("matrix addition shape/field mismatch");
  Matrix r(rows_, cols_, field_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.add(data_[k], o.data_[k]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    throw std::invalid_argument("matrix subtraction shape/field mismatch");
  Matrix r(rows_, cols_, field_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.sub(data_[k], o.data_[k]);
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(rows_, cols_, field_);
  Scalar cc = field_.reduce(c);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.mul(data_[k], cc);
  return r;
}

Matrix Matrix::negated() const {
  Matrix r(rows_, cols_, field_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.neg(data_[k]);
  return r;
}

Matrix mul(const Matrix& a, const Matrix& b, Exec policy) {
  if (a.cols() != b.rows() || a.field() != b.field())
    throw std::invalid_argument("matrix product shape/field mismatch");
  const Field& f = a.field();
  Matrix r(a.rows(), b.cols(), f);
  long cells = static_cast<long>(a.rows()) * b.cols() * (a.cols() + 1);
  bool par = use_parallel(policy, cells);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (Field::is_zero(aik)) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (Field::is_zero(bkj)) continue;
        r.at(i, j) = f.add(r.at(i, j), f.mul(aik, bkj));
      }
    }
  }
  (void)par;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const { return mul(*this, o, Exec::Auto); }

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.field() != b.field())
    throw std::invalid_argument("hstack shape/field mismatch");
  Matrix r(a.rows(), a.cols() + b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.field() != b.field())
    throw std::invalid_argument("vstack shape/field mismatch");
  Matrix r(a.rows() + b.rows(), a.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
  Matrix r(rows_, static_cast<int>(idx.size()), field_);
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return r;
}

Matrix Matrix::rows_subset(const std::vector<int>& idx) const {
  Matrix r(static_cast<int>(idx.size()), cols_, field_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols_; ++j) r.at(static_cast<int>(i), j) = at(idx[i], j);
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Rref rref(const Matrix& a, Exec policy) {
  Rref out;
  out.reduced = a;
  Matrix& m = out.reduced;
  const Field& f = a.field();
  int row = 0;
  bool par = use_parallel(policy, static_cast<long>(a.rows()) * a.cols());
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!Field::is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = col; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    // Normalize the pivot row, then clear the column everywhere else.  The
    // row updates are independent of each other, hence the parallel loop.
    Scalar pinv = f.inv(m.at(row, col));
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(m.at(row, j), pinv);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Scalar fac = m.at(r, col);
      if (Field::is_zero(fac)) continue;
      for (int j = col; j < m.cols(); ++j)
        m.at(r, j) = f.sub(m.at(r, j), f.mul(fac, m.at(row, j)));
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  (void)par;
  out.rank = row;
  return out;
}

int rank(const Matrix& a, Exec policy) { return rref(a, policy).rank; }

Matrix kernel_basis(const Matrix& a, Exec policy) {
  Rref r = rref(a, policy);
  const Field& f = a.field();
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int c = 0; c < a.cols(); ++c) {
      if (p < r.pivot_cols.size() && r.pivot_cols[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  Matrix k(a.cols(), static_cast<int>(free_cols.size()), f);
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k.at(fc, static_cast<int>(j)) = f.one();
    for (size_t i = 0; i < r.pivot_cols.size(); ++i)
      k.at(r.pivot_cols[i], static_cast<int>(j)) =
          f.neg(r.reduced.at(static_cast<int>(i), fc));
  }
  return k;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b, Exec policy) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_linear: row count mismatch");
  if (a.field() != b.field())
    throw std::invalid_argument("solve_linear: field mismatch");
  Rref r = rref(Matrix::hstack(a, b), policy);
  for (int c : r.pivot_cols)
    if (c >= a.cols()) return std::nullopt;  // a pivot fell into the rhs block
  Matrix x(a.cols(), b.cols(), a.field());
  for (size_t i = 0; i < r.pivot_cols.size(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      x.at(r.pivot_cols[i], j) = r.reduced.at(static_cast<int>(i), a.cols() + j);
  return x;
}

Scalar det(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square matrix");
  const Field& f = a.field();
  Matrix m = a;
  int n = a.rows();
  Scalar d = f.one();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!Field::is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return f.zero();
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = f.neg(d);
    }
    const Scalar p = m.at(col, col);
    d = f.mul(d, p);
    Scalar pinv = f.inv(p);
    for (int r = col + 1; r < n; ++r) {
      Scalar fac = f.mul(m.at(r, col), pinv);
      if (Field::is_zero(fac)) continue;
      for (int j = col; j < n; ++j)
        m.at(r, j) = f.sub(m.at(r, j), f.mul(fac, m.at(col, j)));
    }
  }
  return d;
}

std::optional<Matrix> inverse(const Matrix& a, Exec policy) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  auto x = solve_linear(a, Matrix::identity(a.rows(), a.field()), policy);
  return x;
}

bool columns_contained(const Matrix& sub, const Matrix& space, Exec policy) {
  if (sub.rows() != space.rows())
    throw std::invalid_argument("columns_contained: row count mismatch");
  if (sub.cols() == 0) return true;
  return solve_linear(space, sub, policy).has_value();
}

Matrix column_space_basis(const Matrix& a, Exec policy) {
  Rref r = rref(a.transpose(), policy);
  // Rows of the echelon form span the same space; keep the nonzero ones.
  std::vector<int> keep;
  for (int i = 0; i < r.rank; ++i) keep.push_back(i);
  return r.reduced.rows_subset(keep).transpose();
}

}  // namespace qhom
