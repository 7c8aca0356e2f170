#include <waring/linalg.hpp>

#include <stdexcept>
#include <utility>

namespace waring {

Matrix::Matrix(NumberField field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field_.zero());
}

Matrix::Matrix(NumberField field, int rows, int cols, std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw std::invalid_argument("matrix entry count does not match its shape");
}

Vector Matrix::row(int i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)),
                data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0) + static_cast<std::size_t>(cols_)));
}

Vector Matrix::operator*(std::span<const FieldElement> v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  Vector out(static_cast<std::size_t>(rows_), field_.zero());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const auto& a = (*this)(i, j);
      if (a.is_zero()) continue;
      out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i)] + a * v[static_cast<std::size_t>(j)];
    }
  return out;
}

Matrix Matrix::with_column_order(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != cols_) throw std::invalid_argument("column order has wrong length");
  Matrix out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, order[static_cast<std::size_t>(j)]);
  return out;
}

Echelon bareiss_echelon(Matrix m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  FieldElement prev = m.field().one();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const FieldElement pivot = m(r, c);
    for (int i = r + 1; i < rows; ++i) {
      const FieldElement lead = m(i, c);
      for (int j = c + 1; j < cols; ++j) m(i, j) = (pivot * m(i, j) - lead * m(r, j)) / prev;
      m(i, c) = m.field().zero();
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

int matrix_rank(const Matrix& m) { return bareiss_echelon(m).rank(); }

Vector normalize_leading(Vector v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      const FieldElement inv = x.inverse();
      for (auto& y : v) y = y * inv;
      break;
    }
  return v;
}

namespace {

// Pivot variables from the echelon rows, given values for the free ones.
void back_substitute(const Echelon& e, Vector& x, const Vector* rhs) {
  for (int k = e.rank() - 1; k >= 0; --k) {
    const int pc = e.pivot_cols[static_cast<std::size_t>(k)];
    FieldElement s = rhs ? (*rhs)[static_cast<std::size_t>(k)] : e.form.field().zero();
    for (int j = pc + 1; j < e.form.cols(); ++j) {
      const auto& a = e.form(k, j);
      if (a.is_zero()) continue;
      s = s - a * x[static_cast<std::size_t>(j)];
    }
    x[static_cast<std::size_t>(pc)] = s / e.form(k, pc);
  }
}

}  // namespace

std::vector<Vector> nullspace(const Matrix& m) {
  const Echelon e = bareiss_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector x(static_cast<std::size_t>(m.cols()), m.field().zero());
    x[static_cast<std::size_t>(f)] = m.field().one();
    back_substitute(e, x, nullptr);
    basis.push_back(normalize_leading(std::move(x)));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const FieldElement> b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[static_cast<std::size_t>(i)];
  }
  Echelon e = bareiss_echelon(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector rhs;
  for (int k = 0; k < e.rank(); ++k) rhs.push_back(e.form(k, m.cols()));
  Echelon core{Matrix(m.field(), e.rank(), m.cols()), e.pivot_cols};
  for (int k = 0; k < e.rank(); ++k)
    for (int j = 0; j < m.cols(); ++j) core.form(k, j) = e.form(k, j);
  Vector x(static_cast<std::size_t>(m.cols()), m.field().zero());
  back_substitute(core, x, &rhs);
  return x;
}

}  // namespace waring
