#include "doctest.h"

#include "commacat/errors.hpp"
#include "commacat/linalg.hpp"
#include "commacat/random.hpp"
#include "commacat/rational.hpp"

using namespace commacat;

namespace {

Matrix random_matrix(Rng& rng, std::uint32_t p, std::size_t r, std::size_t c) {
  Matrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.field_element(p);
  }
  return m;
}

// Gaussian binomial [n choose k]_q by the product formula.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= saturating_pow(q, n - i) - 1;
    den *= saturating_pow(q, i + 1) - 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("rref examples") {
  const auto id = Matrix::identity(2, 2);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(r.rank == 2);

  const Matrix z(3, 3, 2);
  r = rref(z);
  CHECK(r.reduced == z);
  CHECK(r.pivot_cols.empty());
  CHECK(r.rank == 0);

  const auto ones = Matrix::from_rows(2, 2, 2, {{1, 1}, {1, 1}});
  r = rref(ones);
  CHECK(r.reduced == Matrix::from_rows(2, 2, 2, {{1, 1}, {0, 0}}));
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});
  CHECK(r.rank == 1);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix::identity(2, 2)).dim() == 0);
  CHECK(kernel_basis(Matrix(2, 2, 2)) == Subspace::full(2, 2));
  const auto k = kernel_basis(Matrix::from_rows(2, 1, 2, {{1, 1}}));
  // oracle: every vector of F_2^2 sent to zero
  Matrix gens(2, 0, 2);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& v : enumerate_vectors(2, 2)) {
    if ((v[0] + v[1]) % 2 == 0) rows.push_back({v[0], v[1]});
  }
  CHECK(k == Subspace::span_rows(Matrix::from_rows(2, rows.size(), 2, rows)));
  CHECK(k.dim() == 1);
  CHECK(k.contains(Vector{1, 1}));
}

TEST_CASE("solve and inverse") {
  const auto id = Matrix::identity(3, 3);
  CHECK(solve(id, Vector{1, 2, 0}) == Vector{1, 2, 0});
  CHECK_FALSE(solve(Matrix::from_rows(2, 2, 1, {{1}, {1}}), Vector{1, 0}).has_value());
  const auto m = Matrix::from_rows(5, 2, 2, {{1, 2}, {3, 4}});
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(5, 2));
  CHECK_FALSE(inverse(Matrix::from_rows(2, 2, 2, {{1, 1}, {1, 1}})).has_value());
}

TEST_CASE("solve_left and solve_right report uniqueness") {
  const auto mono = Matrix::from_rows(2, 2, 1, {{1}, {0}});
  auto s = solve_left(mono, Matrix::from_rows(2, 2, 3, {{1, 0, 1}, {0, 0, 0}}));
  REQUIRE(s.has_value());
  CHECK(s->unique);
  CHECK(mono * s->value == Matrix::from_rows(2, 2, 3, {{1, 0, 1}, {0, 0, 0}}));
  CHECK_FALSE(solve_left(mono, Matrix::from_rows(2, 2, 1, {{0}, {1}})).has_value());

  const auto epi = Matrix::from_rows(2, 1, 2, {{1, 1}});
  auto t = solve_right(epi, Matrix::from_rows(2, 2, 2, {{1, 1}, {0, 0}}));
  REQUIRE(t.has_value());
  CHECK(t->unique);
  CHECK(t->value * epi == Matrix::from_rows(2, 2, 2, {{1, 1}, {0, 0}}));

  auto u = solve_left(Matrix(2, 1, 2), Matrix(2, 1, 1));
  REQUIRE(u.has_value());
  CHECK_FALSE(u->unique);
}

TEST_CASE("quotient_map kills exactly the subspace") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    const std::size_t n = 1 + rng.below(4);
    const auto s = Subspace::span_rows(random_matrix(rng, p, rng.below(n + 1), n));
    const auto q = quotient_map(n, s);
    CHECK(q.quotient_dim == n - s.dim());
    CHECK(kernel_basis(q.projection) == s);
    CHECK(q.projection * q.section == Matrix::identity(p, q.quotient_dim));
  }
}

TEST_CASE("rref idempotence and rank-nullity on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = (trial % 3 == 0) ? 2 : (trial % 3 == 1 ? 3 : 7);
    const auto m = random_matrix(rng, p, rng.below(5), rng.below(5));
    const auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(r.rank == r.pivot_cols.size());
    CHECK(kernel_basis(m).dim() + rank(m) == m.cols());
    CHECK(image_basis(m).dim() == rank(m));
    CHECK(Subspace::span_rows(m) == Subspace::span_rows(r.reduced));
  }
}

TEST_CASE("enumerate_subspaces counts match Gaussian binomials") {
  CHECK(enumerate_subspaces(2, 2).size() == 5);
  CHECK(enumerate_subspaces(2, 3).size() == 16);
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t d = 0; d <= 4; ++d) {
      std::uint64_t expected = 0;
      for (std::size_t k = 0; k <= d; ++k) expected += gaussian_binomial(d, k, p);
      const auto subs = enumerate_subspaces(p, d);
      CHECK(subs.size() == expected);
      for (std::size_t i = 0; i < subs.size(); ++i) {
        CHECK(rref(subs[i].basis()).reduced == subs[i].basis());
        if (i > 0) CHECK(subs[i - 1] < subs[i]);
      }
    }
  }
}

TEST_CASE("enumeration budget") {
  Budget tiny;
  tiny.max_vectors = 8;
  CHECK_NOTHROW(enumerate_vectors(2, 3, tiny));
  CHECK_THROWS_AS(enumerate_vectors(2, 4, tiny), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_subspaces(3, 2, tiny), BudgetExceeded);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(Matrix(2, 2, 3) * Matrix(2, 2, 3), ShapeMismatch);
  CHECK_THROWS_AS(Matrix(2, 2, 2) + Matrix(3, 2, 2), Error);
  CHECK_THROWS_AS(checked_prime(4), InvalidArgument);
  CHECK_NOTHROW(checked_prime(2147483647));
}

TEST_CASE("subspace lattice operations") {
  const auto a = Subspace::span_rows(Matrix::from_rows(2, 1, 3, {{1, 0, 0}}));
  const auto b = Subspace::span_rows(Matrix::from_rows(2, 1, 3, {{0, 1, 0}}));
  CHECK(a.sum(b).dim() == 2);
  CHECK(a.intersect(b).dim() == 0);
  CHECK(a.sum(b).contains(a));
  CHECK(a.sum(b).intersect(a) == a);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).den() == 2);
  CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
  CHECK(Rational(3).to_string() == "3/1");
  CHECK(Rational(-1, 3) < Rational(0));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK_FALSE(Rational::parse("1e3").has_value());
  CHECK_FALSE(Rational::parse("pi").has_value());
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), Overflow);
}
