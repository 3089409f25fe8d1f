#include "commacat/wall_scan.hpp"

#include <algorithm>
#include <exception>
#include <set>

namespace commacat {

namespace {
std::int64_t dot(const std::vector<std::int64_t>& f, const ClassVector& c, std::size_t offset) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * c.coords.at(offset + i);
  return s;
}
}  // namespace

void ToyGeometry::validate(const CommaCategory& c) const {
  if (gamma.size() != c.A().class_rank()) throw InvalidStability("gamma must have one value per simple of A");
  if (deg.size() != c.B().class_rank() || rk.size() != c.B().class_rank()) {
    throw InvalidStability("deg and rk must have one value per simple of B");
  }
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] <= 0) throw InvalidStability("gamma must be positive on every simple of A");
  }
  for (std::size_t i = 0; i < rk.size(); ++i) {
    if (rk[i] < 0) throw InvalidStability("rk is negative on simple " + std::to_string(i));
    if (rk[i] == 0 && deg[i] <= 0) {
      throw InvalidStability("rk = 0 on simple " + std::to_string(i) + " requires deg > 0");
    }
  }
}

ToyGeometry ToyGeometry::scaled(std::int64_t s) const {
  ToyGeometry g = *this;
  for (auto* v : {&g.gamma, &g.deg, &g.rk}) {
    for (auto& e : *v) e *= s;
  }
  return g;
}

StabilityFunction z_alpha(const ToyGeometry& g, const Rational& alpha) {
  if (alpha.sign() <= 0) throw InvalidStability("alpha must be positive, got " + alpha.to_string());
  std::vector<GaussianRational> za;
  for (auto v : g.gamma) za.push_back({-alpha * Rational(v), Rational(0)});
  std::vector<GaussianRational> zb;
  for (std::size_t i = 0; i < g.deg.size(); ++i) zb.push_back({Rational(-g.deg[i]), Rational(g.rk[i])});
  return make_comma_stability(StabilityFunction(std::move(za)), StabilityFunction(std::move(zb)), 1, 1);
}

AlphaScanReport alpha_scan(const CommaCategory& c, const CommaObject& x, const ToyGeometry& geometry,
                           const Rational& lo, const Rational& hi, ExecutionPolicy policy) {
  geometry.validate(c);
  if (lo.sign() < 0 || !(lo < hi)) {
    throw InvalidArgument("alpha range must satisfy 0 <= lo < hi, got " + lo.to_string() + ":" + hi.to_string());
  }
  const auto subs = c.enumerate_subobjects(x, policy);
  const auto L = make_lattice(c, subs, policy);

  std::set<ClassVector> subquotients;
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (std::size_t j = 0; j < L.size(); ++j) {
      if (L.less(i, j)) subquotients.insert(L.classes[j] - L.classes[i]);
    }
  }
  const std::size_t na = c.A().class_rank();
  struct Affine {
    std::int64_t deg, gamma, rk;
  };
  std::vector<Affine> forms;
  for (const auto& u : subquotients) forms.push_back({dot(geometry.deg, u, na), dot(geometry.gamma, u, 0), dot(geometry.rk, u, na)});

  // (deg_u + a gamma_u) / rk_u = (deg_v + a gamma_v) / rk_v, both ranks positive.
  std::set<Rational> cands;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      const auto& u = forms[i];
      const auto& v = forms[j];
      if (u.rk == 0 || v.rk == 0) continue;
      const std::int64_t den = u.gamma * v.rk - v.gamma * u.rk;
      if (den == 0) continue;
      const Rational a(v.deg * u.rk - u.deg * v.rk, den);
      if (lo < a && a < hi) cands.insert(a);
    }
  }

  AlphaScanReport report{lo, hi, {cands.begin(), cands.end()}, Rational(0), {}, subs.size()};
  if (report.candidates.empty()) return report;
  Rational gap = report.candidates.front() - lo;
  for (std::size_t i = 1; i < report.candidates.size(); ++i) {
    gap = std::min(gap, report.candidates[i] - report.candidates[i - 1]);
  }
  gap = std::min(gap, hi - report.candidates.back());
  report.epsilon = gap / Rational(2);

  const std::size_t n = report.candidates.size();
  std::vector<Wall> evaluated(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic) if (policy == ExecutionPolicy::parallel)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      const Rational a = report.candidates[i];
      evaluated[i] = {a, hn_type(L, z_alpha(geometry, a - report.epsilon)), hn_type(L, z_alpha(geometry, a)),
                      hn_type(L, z_alpha(geometry, a + report.epsilon))};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& w : evaluated) {
    if (w.below != w.at || w.at != w.above) report.walls.push_back(std::move(w));
  }
  return report;
}

}  // namespace commacat
