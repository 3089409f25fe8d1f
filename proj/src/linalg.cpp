#include "commacat/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "commacat/errors.hpp"

namespace commacat {

std::uint32_t checked_prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) {
    throw InvalidArgument("field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InvalidArgument("field modulus " + std::to_string(p) + " is not prime");
  }
  return static_cast<std::uint32_t>(p);
}

std::uint32_t fp::inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw InvalidArgument("inverse of zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t modulus)
    : value_(fp::reduce(value, modulus)), modulus_(modulus) {}

namespace {
void same_field(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) throw ShapeMismatch("field elements from different fields");
}
}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
  same_field(a, b);
  return {fp::add(a.value_, b.value_, a.modulus_), a.modulus_};
}
FieldElement operator-(FieldElement a, FieldElement b) {
  same_field(a, b);
  return {fp::sub(a.value_, b.value_, a.modulus_), a.modulus_};
}
FieldElement operator*(FieldElement a, FieldElement b) {
  same_field(a, b);
  return {fp::mul(a.value_, b.value_, a.modulus_), a.modulus_};
}
FieldElement FieldElement::inverse() const { return {fp::inv(value_, modulus_), modulus_}; }

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::uint32_t p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

Matrix Matrix::from_rows(std::uint32_t p, std::size_t rows, std::size_t cols,
                         const std::vector<std::vector<std::int64_t>>& entries) {
  if (entries.size() != rows) {
    throw ShapeMismatch("expected " + std::to_string(rows) + " rows, got " +
                        std::to_string(entries.size()));
  }
  Matrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) {
      throw ShapeMismatch("row " + std::to_string(r) + " has " + std::to_string(entries[r].size()) +
                          " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = fp::reduce(entries[r][c], p);
  }
  return m;
}

Matrix Matrix::column(std::uint32_t p, const Vector& v) {
  Matrix m(p, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw ShapeMismatch("matrix-vector shape mismatch");
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = (acc + std::uint64_t{(*this)(r, c)} * v[c]) % p_;
    }
    out[r] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

Matrix Matrix::scaled(std::uint32_t s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = fp::mul(x, s % p_, p_);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) {
    throw ShapeMismatch("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                        " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix out(a.p_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        out(r, c) = static_cast<std::uint32_t>((out(r, c) + x * b(k, c)) % a.p_);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.p_ != b.p_) {
    throw ShapeMismatch("matrix sum shape mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = fp::add(a.data_[i], b.data_[i], a.p_);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.p_ != b.p_) {
    throw ShapeMismatch("matrix difference shape mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = fp::sub(a.data_[i], b.data_[i], a.p_);
  return out;
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << "]";
  }
  os << "](" << rows_ << "x" << cols_ << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}, 0};
  Matrix& a = res.reduced;
  const std::uint32_t p = a.modulus();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    }
    const std::uint32_t piv_inv = fp::inv(a(row, col), p);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = fp::mul(a(row, c), piv_inv, p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const std::uint32_t factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        a(r, c) = fp::sub(a(r, c), fp::mul(factor, a(row, c), p), p);
      }
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::uint32_t p, std::size_t ambient) : ambient_(ambient), basis_(p, 0, ambient) {}

Subspace Subspace::span_rows(const Matrix& generators) {
  const RrefResult r = rref(generators);
  Subspace s(generators.modulus(), generators.cols());
  s.basis_ = block(r.reduced, 0, 0, r.rank, generators.cols());
  s.pivots_ = r.pivot_cols;
  return s;
}

Subspace Subspace::full(std::uint32_t p, std::size_t ambient) {
  return span_rows(Matrix::identity(p, ambient));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw ShapeMismatch("vector not in ambient space");
  const std::uint32_t p = modulus();
  Vector w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::uint32_t coef = w[pivots_[i]];
    if (coef == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) {
      w[c] = fp::sub(w[c], fp::mul(coef, basis_(i, c), p), p);
    }
  }
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeMismatch("subspaces of different ambient spaces");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeMismatch("subspaces of different ambient spaces");
  return span_rows(vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeMismatch("subspaces of different ambient spaces");
  // x = U a = W b  <=>  [U | -W] (a; b) = 0
  const std::uint32_t p = modulus();
  const Matrix u = inclusion();
  Matrix w_neg = other.inclusion();
  for (std::size_t r = 0; r < w_neg.rows(); ++r) {
    for (std::size_t c = 0; c < w_neg.cols(); ++c) w_neg(r, c) = fp::neg(w_neg(r, c), p);
  }
  const Subspace rel = kernel_basis(hstack(u, w_neg));
  Matrix gens(p, rel.dim(), ambient_);
  for (std::size_t i = 0; i < rel.dim(); ++i) {
    const Vector coeffs = rel.basis().row(i);
    const Vector a(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(dim()));
    const Vector x = u.apply(a);
    for (std::size_t c = 0; c < ambient_; ++c) gens(i, c) = x[c];
  }
  return span_rows(gens);
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  return a.basis_.data() <=> b.basis_.data();
}

Subspace kernel_basis(const Matrix& m) {
  const std::uint32_t p = m.modulus();
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  Matrix gens(p, n - r.rank, n);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    gens(k, free) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      gens(k, r.pivot_cols[i]) = fp::neg(r.reduced(i, free), p);
    }
    ++k;
  }
  return Subspace::span_rows(gens);
}

Subspace image_basis(const Matrix& m) { return Subspace::span_rows(m.transpose()); }

std::optional<Vector> solve(const Matrix& m, const Vector& target) {
  if (target.size() != m.rows()) throw ShapeMismatch("solve: target length mismatch");
  const auto sol = solve_left(m, Matrix::column(m.modulus(), target));
  if (!sol) return std::nullopt;
  return sol->value.col(0);
}

std::optional<MatrixSolution> solve_left(const Matrix& m, const Matrix& r) {
  if (m.rows() != r.rows() || m.modulus() != r.modulus()) {
    throw ShapeMismatch("solve_left: M is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " but R has " + std::to_string(r.rows()) + " rows");
  }
  const std::uint32_t p = m.modulus();
  const RrefResult red = rref(hstack(m, r));
  const std::size_t n = m.cols();
  // A pivot in the augmented block means inconsistency.
  if (std::any_of(red.pivot_cols.begin(), red.pivot_cols.end(), [n](std::size_t c) { return c >= n; })) {
    return std::nullopt;
  }
  Matrix x(p, n, r.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    for (std::size_t c = 0; c < r.cols(); ++c) x(red.pivot_cols[i], c) = red.reduced(i, n + c);
  }
  return MatrixSolution{std::move(x), red.rank == n};
}

std::optional<MatrixSolution> solve_right(const Matrix& e, const Matrix& r) {
  if (e.cols() != r.cols() || e.modulus() != r.modulus()) {
    throw ShapeMismatch("solve_right: E is " + std::to_string(e.rows()) + "x" + std::to_string(e.cols()) +
                        " but R has " + std::to_string(r.cols()) + " columns");
  }
  auto sol = solve_left(e.transpose(), r.transpose());
  if (!sol) return std::nullopt;
  sol->value = sol->value.transpose();
  return sol;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto sol = solve_left(m, Matrix::identity(m.modulus(), m.rows()));
  if (!sol || !sol->unique) return std::nullopt;
  return sol->value;
}

QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& s) {
  if (s.ambient_dim() != ambient_dim) throw ShapeMismatch("quotient_map: ambient mismatch");
  const std::uint32_t p = s.modulus();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto c : s.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  QuotientMap q{Matrix(p, free_cols.size(), ambient_dim), Matrix(p, ambient_dim, free_cols.size()),
                free_cols.size()};
  // v -> (v - sum_i v[piv_i] * row_i) restricted to free coordinates
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t fc = free_cols[j];
    q.projection(j, fc) = 1;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const std::size_t pc = s.pivots()[i];
      q.projection(j, pc) = fp::sub(q.projection(j, pc), s.basis()(i, fc), p);
    }
    q.section(fc, j) = 1;
  }
  return q;
}

Matrix compose(const Matrix& a, const Matrix& b) { return a * b; }

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (a.modulus() != b.modulus()) throw ShapeMismatch("direct_sum: different fields");
  Matrix out(a.modulus(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.modulus() != b.modulus()) throw ShapeMismatch("hstack: row mismatch");
  Matrix out(a.modulus(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.modulus() != b.modulus()) throw ShapeMismatch("vstack: column mismatch");
  Matrix out(a.modulus(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  }
  return out;
}

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  if (r0 + nr > m.rows() || c0 + nc > m.cols()) throw ShapeMismatch("block out of range");
  Matrix out(m.modulus(), nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = m(r0 + r, c0 + c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t exponent) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(r, p, &r)) return UINT64_MAX;
  }
  return r;
}

void check_vector_budget(std::uint32_t p, std::size_t dim, const Budget& budget, const char* what) {
  const std::uint64_t count = saturating_pow(p, dim);
  if (count > budget.max_vectors) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(p) + "^" + std::to_string(dim) +
                         " vectors exceeds budget of " + std::to_string(budget.max_vectors));
  }
}

namespace {

// Advances a base-p odometer (last digit fastest). Returns false on wrap.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t p) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

// Lexicographic next k-combination of {0..n-1}.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(std::uint32_t p, std::size_t ambient_dim, const Budget& budget) {
  check_vector_budget(p, ambient_dim, budget, "enumerate_subspaces");
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= ambient_dim; ++k) {
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    do {
      std::vector<bool> is_pivot(ambient_dim, false);
      for (auto c : pivots) is_pivot[c] = true;
      // free positions in row-major order: row i, columns after pivot i that are not pivots
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = pivots[i] + 1; c < ambient_dim; ++c) {
          if (!is_pivot[c]) free_pos.emplace_back(i, c);
        }
      }
      std::vector<std::uint32_t> digits(free_pos.size(), 0);
      do {
        Matrix basis(p, k, ambient_dim);
        for (std::size_t i = 0; i < k; ++i) basis(i, pivots[i]) = 1;
        for (std::size_t f = 0; f < free_pos.size(); ++f) {
          basis(free_pos[f].first, free_pos[f].second) = digits[f];
        }
        out.push_back(Subspace::span_rows(basis));
      } while (advance(digits, p));
    } while (k > 0 && next_combination(pivots, ambient_dim));
  }
  return out;
}

std::vector<Vector> enumerate_vectors(std::uint32_t p, std::size_t n, const Budget& budget) {
  check_vector_budget(p, n, budget, "enumerate_vectors");
  std::vector<Vector> out;
  Vector digits(n, 0);
  do {
    out.push_back(digits);
  } while (advance(digits, p));
  return out;
}

}  // namespace commacat
