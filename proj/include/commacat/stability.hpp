#pragma once

// Stability functions, exact slopes, semistability and Harder-Narasimhan
// filtrations over any finite-length instance.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commacat/category.hpp"
#include "commacat/lattice.hpp"
#include "commacat/rational.hpp"

namespace commacat {

/// Exact rational or +infinity (the maximum).
class Slope {
 public:
  Slope() = default;  // +inf
  explicit Slope(Rational v) : value_(v) {}
  static Slope infinity() { return Slope(); }

  bool is_infinite() const { return !value_.has_value(); }
  const std::optional<Rational>& value() const { return value_; }
  /// "inf" or "n/d".
  std::string to_string() const { return value_ ? value_->to_string() : "inf"; }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<Rational> value_;
};

/// Z(cls) = sum_i cls_i * coefficients_i. Valid by construction: every
/// coefficient has im >= 0, and re < 0 where im = 0. Since classes of nonzero
/// objects are nonzero with nonnegative coordinates, this is exactly the
/// stability-function condition on all nonzero objects.
class StabilityFunction {
 public:
  /// Throws InvalidStability naming the first bad simple.
  explicit StabilityFunction(std::vector<GaussianRational> coefficients);

  const std::vector<GaussianRational>& coefficients() const { return coefficients_; }
  std::size_t rank() const { return coefficients_.size(); }
  /// Weights and split point when built by make_comma_stability.
  const std::optional<std::pair<Rational, Rational>>& weights() const { return weights_; }
  std::optional<std::size_t> split() const { return split_; }

  GaussianRational operator()(const ClassVector& c) const;

  /// Empty when valid, otherwise the reason.
  static std::optional<std::string> certificate_failure(const std::vector<GaussianRational>& coefficients);

  friend bool operator==(const StabilityFunction& a, const StabilityFunction& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  friend StabilityFunction make_comma_stability(const StabilityFunction&, const StabilityFunction&,
                                                const Rational&, const Rational&);
  std::vector<GaussianRational> coefficients_;
  std::optional<std::pair<Rational, Rational>> weights_;
  std::optional<std::size_t> split_;
};

/// Z = x Z_A + y Z_B on concatenated classes. Throws InvalidStability for
/// nonpositive weights.
StabilityFunction make_comma_stability(const StabilityFunction& za, const StabilityFunction& zb, const Rational& x,
                                       const Rational& y);
/// (Z_A, Z_B) with Z_A[a] = Z[(a,0,0)] and Z_B[b] = Z[(0,b,0)]; rank_a is the
/// class rank of A.
std::pair<StabilityFunction, StabilityFunction> restrict_comma_stability(const StabilityFunction& z,
                                                                         std::size_t rank_a);

/// -re/im, or +inf when im = 0. Throws InvalidArgument on the zero class.
Slope slope(const StabilityFunction& z, const ClassVector& c);

/// Every proper nontrivial subobject has slope <= (strict: <) slope(x).
template <AbelianInstance C>
bool is_semistable(const StabilityFunction& z, const C& c, const typename C::Object& x, bool strict = false) {
  if (c.is_zero(x)) throw InvalidArgument("semistability of the zero object");
  const ClassVector whole = c.cls(x);
  const Slope mu = slope(z, whole);
  for (const auto& s : c.enumerate_subobjects(x)) {
    const ClassVector k = c.cls(s.object);
    if (k.is_zero() || k == whole) continue;
    const Slope nu = slope(z, k);
    if (strict ? nu >= mu : nu > mu) return false;
  }
  return true;
}

template <AbelianInstance C>
bool is_stable(const StabilityFunction& z, const C& c, const typename C::Object& x) {
  return is_semistable(z, c, x, true);
}

/// Ascending chain of subobjects 0 = S_0 < ... < S_n = x and the factors
/// S_i / S_{i-1}.
template <AbelianInstance C>
struct Filtration {
  std::vector<Subobject<C>> steps;
  std::vector<typename C::Object> factors;
  std::vector<ClassVector> factor_classes;
  std::size_t length() const { return factors.size(); }
};

/// Builds the filtration for a chain of lattice indices, constructing each
/// factor as the cokernel of the lifted inclusion.
template <AbelianInstance C>
Filtration<C> build_filtration(const C& c, const std::vector<Subobject<C>>& subs, const std::vector<std::size_t>& chain) {
  Filtration<C> f;
  for (std::size_t idx : chain) f.steps.push_back(subs.at(idx));
  for (std::size_t i = 1; i < f.steps.size(); ++i) {
    const auto inclusion = c.lift(f.steps[i].mono, f.steps[i - 1].mono);
    if (!inclusion) throw Error("filtration step does not contain the previous step");
    const auto factor = c.cokernel(*inclusion).object;
    f.factor_classes.push_back(c.cls(factor));
    f.factors.push_back(factor);
  }
  return f;
}

/// Greedy HN chain on a lattice: from the current step, take the subobject of
/// maximal slope(S - current), then maximal size; that choice must be unique.
std::vector<std::size_t> hn_chain(const SubobjectLattice& lattice, const StabilityFunction& z);

/// The HN type: classes of the factors along hn_chain.
std::vector<ClassVector> hn_type(const SubobjectLattice& lattice, const StabilityFunction& z);

template <AbelianInstance C>
struct HNFiltration {
  Filtration<C> filtration;
  std::vector<Slope> factor_slopes;
};

/// Greedy HN filtration, re-verified (factors semistable, slopes strictly
/// decreasing). A failed re-check throws Error.
template <AbelianInstance C>
HNFiltration<C> hn_filtration(const StabilityFunction& z, const C& c, const typename C::Object& x,
                              ExecutionPolicy policy = ExecutionPolicy::parallel) {
  if (c.is_zero(x)) throw InvalidArgument("HN filtration of the zero object");
  if (z.rank() != c.class_rank()) throw ShapeMismatch("stability function rank does not match the instance");
  const auto subs = c.enumerate_subobjects(x, policy);
  const auto lattice = make_lattice(c, subs, policy);
  HNFiltration<C> hn{build_filtration(c, subs, hn_chain(lattice, z)), {}};
  for (std::size_t i = 0; i < hn.filtration.factors.size(); ++i) {
    hn.factor_slopes.push_back(slope(z, hn.filtration.factor_classes[i]));
    if (!is_semistable(z, c, hn.filtration.factors[i])) throw Error("HN factor " + std::to_string(i) + " is not semistable");
    if (i > 0 && !(hn.factor_slopes[i] < hn.factor_slopes[i - 1])) throw Error("HN slopes are not strictly decreasing");
  }
  return hn;
}

}  // namespace commacat
