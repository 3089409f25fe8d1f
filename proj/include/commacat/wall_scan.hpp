#pragma once

// alpha-stability for the toy coherent systems (Gamma, F, sigma) in
// (id_FinVect / G): Z_alpha = -alpha dim(Gamma) on the A side and
// -deg + i rk on the B side, so mu_alpha = (deg + alpha dim Gamma) / rk.

#include <cstdint>
#include <vector>

#include "commacat/comma.hpp"
#include "commacat/rational.hpp"
#include "commacat/stability.hpp"

namespace commacat {

/// Integer functionals on simple classes. gamma lives on A, deg and rk on B.
struct ToyGeometry {
  std::vector<std::int64_t> gamma;
  std::vector<std::int64_t> deg;
  std::vector<std::int64_t> rk;

  /// rk >= 0, rk = 0 => deg > 0, gamma > 0, ranks matching the context.
  /// Throws InvalidStability.
  void validate(const CommaCategory& c) const;
  /// Every functional multiplied by s > 0.
  ToyGeometry scaled(std::int64_t s) const;
};

/// Throws InvalidStability for alpha <= 0.
StabilityFunction z_alpha(const ToyGeometry& geometry, const Rational& alpha);

using HNType = std::vector<ClassVector>;

struct Wall {
  Rational alpha;
  HNType below;
  HNType at;
  HNType above;
};

struct AlphaScanReport {
  Rational lo;
  Rational hi;
  std::vector<Rational> candidates;
  /// Half the smallest gap between lo, the candidates and hi.
  Rational epsilon;
  std::vector<Wall> walls;
  std::size_t subobjects = 0;
};

/// Walls of x in the open interval (lo, hi), lo >= 0. Candidates are the
/// alpha where two subquotient classes have equal mu_alpha; each is kept only
/// if the HN type at alpha - eps, alpha, alpha + eps is not constant.
AlphaScanReport alpha_scan(const CommaCategory& c, const CommaObject& x, const ToyGeometry& geometry,
                           const Rational& lo, const Rational& hi,
                           ExecutionPolicy policy = ExecutionPolicy::parallel);

}  // namespace commacat
