#ifndef WARING_LINALG_HPP
#define WARING_LINALG_HPP

#include <waring/number_field.hpp>

#include <optional>
#include <span>
#include <vector>

namespace waring {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over a number field.
class Matrix {
 public:
  Matrix(NumberField field, int rows, int cols);
  Matrix(NumberField field, int rows, int cols, std::vector<FieldElement> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const NumberField& field() const { return field_; }

  const FieldElement& operator()(int i, int j) const { return data_[index(i, j)]; }
  FieldElement& operator()(int i, int j) { return data_[index(i, j)]; }

  Vector row(int i) const;
  Vector operator*(std::span<const FieldElement> v) const;
  Matrix with_column_order(std::span<const int> order) const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  NumberField field_;
  int rows_, cols_;
  std::vector<FieldElement> data_;
};

/// Row echelon form from fraction-free (Bareiss) elimination: every entry of
/// the echelon matrix is a minor of the input, so coordinates stay small.
struct Echelon {
  Matrix form;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Echelon bareiss_echelon(Matrix m);

int matrix_rank(const Matrix& m);

/// Right kernel basis: one vector per non-pivot column, in increasing column
/// order, each scaled so its first nonzero coordinate is 1.
std::vector<Vector> nullspace(const Matrix& m);

/// A solution of m x = b with free variables set to zero, or nullopt when the
/// system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const FieldElement> b);

/// Scale so the first nonzero coordinate is 1 (zero vector unchanged).
Vector normalize_leading(Vector v);

}  // namespace waring

#endif
