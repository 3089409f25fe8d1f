#pragma once

// Exact linear algebra over a prime field F_p.
//
// Entries are stored reduced mod p as 32-bit words; every product is formed in
// 64 bits and reduced immediately, so p < 2^31 never overflows.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace commacat {

/// Validates p (prime, 2 <= p < 2^31) and returns it. Throws InvalidArgument.
std::uint32_t checked_prime(std::uint64_t p);

/// Element of F_p. The modulus travels with the value so mixed-field
/// arithmetic is caught at runtime.
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  FieldElement inverse() const;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

namespace fp {
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
}  // namespace fp

/// Column vector over F_p (entries already reduced).
using Vector = std::vector<std::uint32_t>;

/// Dense row-major matrix over F_p. 0 x n and n x 0 matrices are legal and
/// represent zero maps out of / into the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  static Matrix identity(std::uint32_t p, std::size_t n);
  /// Builds from integer rows, reducing mod p. All rows must have `cols` entries.
  static Matrix from_rows(std::uint32_t p, std::size_t rows, std::size_t cols,
                          const std::vector<std::vector<std::int64_t>>& entries);
  static Matrix column(std::uint32_t p, const Vector& v);

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement element(std::size_t r, std::size_t c) const { return {(*this)(r, c), p_}; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  const std::vector<std::uint32_t>& data() const { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  Matrix scaled(std::uint32_t s) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend std::strong_ordering operator<=>(const Matrix&, const Matrix&) = default;

  /// Rows as nested integer lists, for serialization.
  std::vector<std::vector<std::int64_t>> to_rows() const;
  std::string to_string() const;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Linear subspace of F_p^ambient in canonical form: the basis rows are the
/// nonzero rows of a reduced row-echelon matrix. Two Subspaces are equal iff
/// their fields are identical.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace.
  Subspace(std::uint32_t p, std::size_t ambient);
  /// Row span of `generators` (rows are vectors of length ambient).
  static Subspace span_rows(const Matrix& generators);
  static Subspace full(std::uint32_t p, std::size_t ambient);

  std::uint32_t modulus() const { return basis_.modulus(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// ambient x dim matrix whose columns are the basis vectors.
  Matrix inclusion() const { return basis_.transpose(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis. Precondition: contains(v).
  Vector coordinates(const Vector& v) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
/// Column space of m as a subspace of F_p^rows.
Subspace image_basis(const Matrix& m);

/// Some x with m x = target, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& target);

/// Solution X of M X = R, with a flag telling whether it is unique.
struct MatrixSolution {
  Matrix value;
  bool unique = true;
};
std::optional<MatrixSolution> solve_left(const Matrix& m, const Matrix& r);
/// Solution X of X E = R.
std::optional<MatrixSolution> solve_right(const Matrix& e, const Matrix& r);

std::optional<Matrix> inverse(const Matrix& m);

/// Linear map F_p^ambient -> F_p^q whose kernel is exactly s. The quotient
/// coordinates are the non-pivot coordinates of s, after eliminating the
/// pivot coordinates with the basis rows.
struct QuotientMap {
  Matrix projection;  // q x ambient
  Matrix section;     // ambient x q, projection * section = identity
  std::size_t quotient_dim = 0;
};
QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& s);

Matrix compose(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Copy of rows [r0, r0+nr) and columns [c0, c0+nc).
Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);

/// Enumeration limits shared by every brute-force routine.
struct Budget {
  std::uint64_t max_vectors = std::uint64_t{1} << 16;  // p^dim cap per enumeration
  std::size_t max_total_dim = 6;                       // per-object cap
};

/// p^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t exponent);
/// Throws BudgetExceeded unless p^dim <= budget.max_vectors.
void check_vector_budget(std::uint32_t p, std::size_t dim, const Budget& budget, const char* what);

/// Every subspace of F_p^ambient exactly once, ordered by dimension, then by
/// pivot set (lexicographic), then by free entries (lexicographic).
std::vector<Subspace> enumerate_subspaces(std::uint32_t p, std::size_t ambient_dim,
                                          const Budget& budget = {});

/// Every vector of F_p^n in lexicographic order (budget-checked).
std::vector<Vector> enumerate_vectors(std::uint32_t p, std::size_t n, const Budget& budget = {});

}  // namespace commacat
