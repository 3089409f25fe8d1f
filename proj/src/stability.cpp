#include "commacat/stability.hpp"

namespace commacat {

bool SubobjectLattice::covers(std::size_t i, std::size_t j) const {
  if (!less(i, j)) return false;
  for (std::size_t k = 0; k < size(); ++k) {
    if (less(i, k) && less(k, j)) return false;
  }
  return true;
}

std::optional<std::string> StabilityFunction::certificate_failure(const std::vector<GaussianRational>& coefficients) {
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const auto& c = coefficients[i];
    if (c.im.sign() < 0) return "simple " + std::to_string(i) + " has Im Z = " + c.im.to_string() + " < 0";
    if (c.im.is_zero() && c.re.sign() >= 0) {
      return "simple " + std::to_string(i) + " has Im Z = 0 but Re Z = " + c.re.to_string() + " >= 0";
    }
  }
  return std::nullopt;
}

StabilityFunction::StabilityFunction(std::vector<GaussianRational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (auto why = certificate_failure(coefficients_)) throw InvalidStability(*why);
}

GaussianRational StabilityFunction::operator()(const ClassVector& c) const {
  if (c.rank() != rank()) {
    throw ShapeMismatch("class of rank " + std::to_string(c.rank()) + " given to a stability function of rank " +
                        std::to_string(rank()));
  }
  GaussianRational z{};
  for (std::size_t i = 0; i < rank(); ++i) z = z + Rational(c.coords[i]) * coefficients_[i];
  return z;
}

StabilityFunction make_comma_stability(const StabilityFunction& za, const StabilityFunction& zb, const Rational& x,
                                       const Rational& y) {
  if (x.sign() <= 0 || y.sign() <= 0) {
    throw InvalidStability("weights must be positive, got x = " + x.to_string() + ", y = " + y.to_string());
  }
  std::vector<GaussianRational> coeffs;
  coeffs.reserve(za.rank() + zb.rank());
  for (const auto& c : za.coefficients()) coeffs.push_back(x * c);
  for (const auto& c : zb.coefficients()) coeffs.push_back(y * c);
  StabilityFunction z(std::move(coeffs));
  z.weights_ = std::make_pair(x, y);
  z.split_ = za.rank();
  return z;
}

std::pair<StabilityFunction, StabilityFunction> restrict_comma_stability(const StabilityFunction& z,
                                                                         std::size_t rank_a) {
  if (rank_a > z.rank()) throw ShapeMismatch("split point beyond the class rank");
  const auto& c = z.coefficients();
  return {StabilityFunction({c.begin(), c.begin() + static_cast<std::ptrdiff_t>(rank_a)}),
          StabilityFunction({c.begin() + static_cast<std::ptrdiff_t>(rank_a), c.end()})};
}

Slope slope(const StabilityFunction& z, const ClassVector& c) {
  if (c.is_zero()) throw InvalidArgument("slope of the zero class");
  const GaussianRational v = z(c);
  if (v.im.is_zero()) return Slope::infinity();
  return Slope(-v.re / v.im);
}

std::vector<std::size_t> hn_chain(const SubobjectLattice& L, const StabilityFunction& z) {
  std::vector<std::size_t> chain{L.bottom};
  std::size_t cur = L.bottom;
  while (cur != L.top) {
    std::optional<std::size_t> best;
    Slope best_slope;
    std::int64_t best_size = 0;
    bool tied = false;
    for (std::size_t s = 0; s < L.size(); ++s) {
      if (!L.less(cur, s)) continue;
      const Slope mu = slope(z, L.classes[s] - L.classes[cur]);
      const std::int64_t size = L.classes[s].total();
      if (!best || mu > best_slope || (mu == best_slope && size > best_size)) {
        best = s, best_slope = mu, best_size = size, tied = false;
      } else if (mu == best_slope && size == best_size) {
        tied = true;
      }
    }
    if (!best) throw Error("HN: current step has no strict successor but is not the whole object");
    if (tied) throw Error("HN: maximal destabilizing subobject is not unique");
    cur = *best;
    chain.push_back(cur);
  }
  return chain;
}

std::vector<ClassVector> hn_type(const SubobjectLattice& L, const StabilityFunction& z) {
  const auto chain = hn_chain(L, z);
  std::vector<ClassVector> type;
  for (std::size_t i = 1; i < chain.size(); ++i) type.push_back(L.classes[chain[i]] - L.classes[chain[i - 1]]);
  return type;
}

}  // namespace commacat
