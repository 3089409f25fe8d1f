#pragma once

// The abstract contract shared by every concrete abelian instance (Rep(Q),
// FinVect) and by both comma constructions, plus the algorithms that only
// need that contract: image/coimage, the induced morphism Coim -> Im, short
// exact sequence checks and the randomized axiom suite.

#include <array>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commacat/errors.hpp"
#include "commacat/linalg.hpp"
#include "commacat/random.hpp"

namespace commacat {

/// Coordinates of a Grothendieck class over the simple classes of a
/// finite-length instance.
struct ClassVector {
  std::vector<std::int64_t> coords;

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;
  std::int64_t total() const;

  friend ClassVector operator+(const ClassVector& a, const ClassVector& b);
  friend ClassVector operator-(const ClassVector& a, const ClassVector& b);
  friend ClassVector operator*(std::int64_t s, const ClassVector& a);
  friend bool operator==(const ClassVector&, const ClassVector&) = default;
  friend std::strong_ordering operator<=>(const ClassVector&, const ClassVector&) = default;

  /// Concatenation, used for comma classes K(A) + K(B).
  static ClassVector concat(const ClassVector& a, const ClassVector& b);
  std::string to_string() const;
};

/// An object together with its canonical (co)kernel, (co)image map.
template <class Object, class Morphism>
struct UniversalArrow {
  Object object;
  Morphism map;
};

template <class Object, class Morphism>
struct BiproductData {
  Object object;
  std::array<Morphism, 2> injections;
  std::array<Morphism, 2> projections;
};

/// A subobject: the sub-object itself, its mono into the ambient object and a
/// canonical key (equal keys <=> same subobject).
template <class Object, class Morphism, class Key>
struct SubobjectOf {
  Object object;
  Morphism mono;
  Key key;
};

template <class C>
concept AbelianInstance = requires(const C& c, const typename C::Object& x,
                                   const typename C::Morphism& m, const typename C::SubobjectKey& key,
                                   Rng& rng, const std::vector<typename C::Morphism>& basis,
                                   const Vector& coeffs) {
  typename C::Object;
  typename C::Morphism;
  typename C::SubobjectKey;
  { c.modulus() } -> std::convertible_to<std::uint32_t>;
  { c.zero_object() } -> std::same_as<typename C::Object>;
  { c.identity(x) } -> std::same_as<typename C::Morphism>;
  { c.zero_morphism(x, x) } -> std::same_as<typename C::Morphism>;
  { c.compose(m, m) } -> std::same_as<typename C::Morphism>;
  { c.add(m, m) } -> std::same_as<typename C::Morphism>;
  { c.source(m) } -> std::convertible_to<typename C::Object>;
  { c.target(m) } -> std::convertible_to<typename C::Object>;
  { c.kernel(m) } -> std::same_as<UniversalArrow<typename C::Object, typename C::Morphism>>;
  { c.cokernel(m) } -> std::same_as<UniversalArrow<typename C::Object, typename C::Morphism>>;
  { c.biproduct(x, x) } -> std::same_as<BiproductData<typename C::Object, typename C::Morphism>>;
  { c.is_zero(x) } -> std::same_as<bool>;
  { c.is_mono(m) } -> std::same_as<bool>;
  { c.is_epi(m) } -> std::same_as<bool>;
  { c.lift(m, m) } -> std::same_as<std::optional<typename C::Morphism>>;
  { c.descend(m, m) } -> std::same_as<std::optional<typename C::Morphism>>;
  { c.inverse(m) } -> std::same_as<std::optional<typename C::Morphism>>;
  { c.enumerate_subobjects(x) };
  { c.sub_leq(key, key) } -> std::same_as<bool>;
  { c.cls(x) } -> std::same_as<ClassVector>;
  { c.class_rank() } -> std::convertible_to<std::size_t>;
  { c.total_dim(x) } -> std::convertible_to<std::size_t>;
  { c.hom_basis(x, x) } -> std::same_as<std::vector<typename C::Morphism>>;
  { c.flatten(m) } -> std::same_as<Vector>;
  { c.linear_combination(x, x, basis, coeffs) } -> std::same_as<typename C::Morphism>;
  { c.random_object(rng, std::size_t{}) } -> std::same_as<typename C::Object>;
  { c.describe(x) } -> std::convertible_to<std::string>;
};

template <class C>
using Universal = UniversalArrow<typename C::Object, typename C::Morphism>;
template <class C>
using Subobject = SubobjectOf<typename C::Object, typename C::Morphism, typename C::SubobjectKey>;

template <AbelianInstance C>
bool is_zero_morphism(const C& c, const typename C::Morphism& m) {
  return m == c.zero_morphism(c.source(m), c.target(m));
}

/// Im(m) = Ker(coker m).
template <AbelianInstance C>
Universal<C> image(const C& c, const typename C::Morphism& m) {
  return c.kernel(c.cokernel(m).map);
}

/// Coim(m) = Coker(ker m).
template <AbelianInstance C>
Universal<C> coimage(const C& c, const typename C::Morphism& m) {
  return c.cokernel(c.kernel(m).map);
}

/// The canonical m_bar : Coim(m) -> Im(m) with m = im o m_bar o coim.
template <AbelianInstance C>
typename C::Morphism induced_morphism(const C& c, const typename C::Morphism& m) {
  const auto coim = coimage(c, m);
  const auto im = image(c, m);
  const auto through_coim = c.descend(coim.map, m);
  if (!through_coim) throw Error("morphism does not factor through its coimage");
  const auto bar = c.lift(im.map, *through_coim);
  if (!bar) throw Error("coimage factor does not lift through the image");
  return *bar;
}

/// Mono test by kernel vanishing (valid in any abelian instance).
template <AbelianInstance C>
bool kernel_vanishes(const C& c, const typename C::Morphism& m) {
  return c.is_zero(c.kernel(m).object);
}

template <AbelianInstance C>
bool cokernel_vanishes(const C& c, const typename C::Morphism& m) {
  return c.is_zero(c.cokernel(m).object);
}

/// 0 -> X --sub--> Y --quot--> Z -> 0.
template <class Morphism>
struct ShortExactSequence {
  Morphism sub;
  Morphism quot;
};

/// sub mono, quot epi, quot o sub = 0 and sub factors through ker(quot) by an
/// isomorphism (exactness in the middle).
template <AbelianInstance C>
bool verify_ses(const C& c, const ShortExactSequence<typename C::Morphism>& s) {
  if (!(c.target(s.sub) == c.source(s.quot))) return false;
  if (!kernel_vanishes(c, s.sub) || !cokernel_vanishes(c, s.quot)) return false;
  if (!is_zero_morphism(c, c.compose(s.quot, s.sub))) return false;
  const auto k = c.kernel(s.quot);
  const auto u = c.lift(k.map, s.sub);
  return u && c.inverse(*u).has_value();
}

/// The SES 0 -> S -> X -> X/S -> 0 of a mono.
template <AbelianInstance C>
ShortExactSequence<typename C::Morphism> ses_of_mono(const C& c, const typename C::Morphism& mono) {
  return {mono, c.cokernel(mono).map};
}

template <AbelianInstance C>
typename C::Morphism random_morphism(const C& c, Rng& rng, const typename C::Object& x,
                                     const typename C::Object& y) {
  const auto basis = c.hom_basis(x, y);
  Vector coeffs(basis.size());
  for (auto& v : coeffs) v = rng.field_element(c.modulus());
  return c.linear_combination(x, y, basis, coeffs);
}

namespace detail {
// Basis of the coefficient vectors a with sum_i a_i * image_i = 0.
inline Subspace relation_space(std::uint32_t p, const std::vector<Vector>& images, std::size_t len) {
  Matrix cols(p, len, images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (std::size_t i = 0; i < len; ++i) cols(i, j) = images[j][i];
  }
  return kernel_basis(cols);
}

inline Vector random_in(const Subspace& s, Rng& rng) {
  Vector v(s.ambient_dim(), 0);
  const std::uint32_t p = s.modulus();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const std::uint32_t a = rng.field_element(p);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fp::add(v[i], fp::mul(a, s.basis()(r, i), p), p);
  }
  return v;
}
}  // namespace detail

/// Random h : x -> source(m) with m o h = 0, drawn from the whole solution
/// space (not just from morphisms that visibly factor through ker m).
template <AbelianInstance C>
typename C::Morphism random_morphism_killed_by(const C& c, Rng& rng, const typename C::Object& x,
                                               const typename C::Morphism& m) {
  const auto src = c.source(m);
  const auto basis = c.hom_basis(x, src);
  std::vector<Vector> images;
  images.reserve(basis.size());
  for (const auto& h : basis) images.push_back(c.flatten(c.compose(m, h)));
  const std::size_t len = c.flatten(c.zero_morphism(x, c.target(m))).size();
  const Subspace rel = detail::relation_space(c.modulus(), images, len);
  return c.linear_combination(x, src, basis, detail::random_in(rel, rng));
}

/// Random h : target(m) -> x with h o m = 0.
template <AbelianInstance C>
typename C::Morphism random_morphism_killing(const C& c, Rng& rng, const typename C::Morphism& m,
                                             const typename C::Object& x) {
  const auto tgt = c.target(m);
  const auto basis = c.hom_basis(tgt, x);
  std::vector<Vector> images;
  images.reserve(basis.size());
  for (const auto& h : basis) images.push_back(c.flatten(c.compose(h, m)));
  const std::size_t len = c.flatten(c.zero_morphism(c.source(m), x)).size();
  const Subspace rel = detail::relation_space(c.modulus(), images, len);
  return c.linear_combination(tgt, x, basis, detail::random_in(rel, rng));
}

struct Violation {
  std::string check;
  std::string detail;
};

struct VerificationReport {
  std::size_t checks = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void expect(bool condition, const std::string& check, const std::string& detail) {
    ++checks;
    if (!condition) violations.push_back({check, detail});
  }
  void merge(const VerificationReport& other) {
    checks += other.checks;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

/// Constructive universal-property checks for one morphism: kernel and
/// cokernel cones (existence by solving, uniqueness by mono/epi-ness of the
/// structure map) and invertibility of the induced morphism.
template <AbelianInstance C>
void verify_morphism_structure(const C& c, const typename C::Morphism& m, Rng& rng, std::size_t cones,
                               std::size_t max_total_dim, VerificationReport& report,
                               const std::string& tag = "") {
  const auto src = c.source(m);
  const auto tgt = c.target(m);
  const std::string where = tag.empty() ? std::string{} : " [" + tag + "]";

  const auto ker = c.kernel(m);
  report.expect(is_zero_morphism(c, c.compose(m, ker.map)), "kernel.composite_zero",
                "m o ker(m) != 0" + where);
  report.expect(kernel_vanishes(c, ker.map), "kernel.mono", "ker(m) is not mono" + where);

  const auto cok = c.cokernel(m);
  report.expect(is_zero_morphism(c, c.compose(cok.map, m)), "cokernel.composite_zero",
                "coker(m) o m != 0" + where);
  report.expect(cokernel_vanishes(c, cok.map), "cokernel.epi", "coker(m) is not epi" + where);

  for (std::size_t i = 0; i < cones; ++i) {
    const auto x = (i % 2 == 0) ? c.random_object(rng, max_total_dim) : src;
    const auto h = random_morphism_killed_by(c, rng, x, m);
    const auto u = c.lift(ker.map, h);
    report.expect(u.has_value() && c.compose(ker.map, *u) == h, "kernel.universal",
                  "cone into source does not factor through ker(m)" + where);

    const auto y = (i % 2 == 0) ? c.random_object(rng, max_total_dim) : tgt;
    const auto k = random_morphism_killing(c, rng, m, y);
    const auto v = c.descend(cok.map, k);
    report.expect(v.has_value() && c.compose(*v, cok.map) == k, "cokernel.universal",
                  "cocone out of target does not factor through coker(m)" + where);
  }

  try {
    const auto bar = induced_morphism(c, m);
    const auto inv = c.inverse(bar);
    bool ok = inv.has_value();
    if (ok) {
      ok = c.compose(*inv, bar) == c.identity(c.source(bar)) &&
           c.compose(bar, *inv) == c.identity(c.target(bar));
    }
    report.expect(ok, "induced.invertible", "Coim(m) -> Im(m) is not invertible" + where);
  } catch (const Error& e) {
    report.expect(false, "induced.exists", std::string(e.what()) + where);
  }

  report.expect(c.is_mono(m) == kernel_vanishes(c, m), "mono.kernel_vanishing",
                "is_mono disagrees with kernel vanishing" + where);
  report.expect(c.is_epi(m) == cokernel_vanishes(c, m), "epi.cokernel_vanishing",
                "is_epi disagrees with cokernel vanishing" + where);
}

/// Randomized axiom suite: identity and associativity laws, zero morphisms,
/// biproduct identities and the per-morphism universal-property checks.
/// Violations are reported, never thrown; deterministic for a fixed seed.
template <AbelianInstance C>
VerificationReport verify_category(const C& c, std::size_t samples, std::uint64_t seed,
                                   std::size_t max_total_dim = 3) {
  VerificationReport report;
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::string tag = "sample " + std::to_string(i);
    try {
      const auto x = c.random_object(rng, max_total_dim);
      const auto y = c.random_object(rng, max_total_dim);
      const auto z = c.random_object(rng, max_total_dim);
      const auto w = c.random_object(rng, max_total_dim);
      const auto f = random_morphism(c, rng, x, y);
      const auto g = random_morphism(c, rng, y, z);
      const auto h = random_morphism(c, rng, z, w);

      report.expect(c.compose(f, c.identity(x)) == f, "identity.right", "f o id != f [" + tag + "]");
      report.expect(c.compose(c.identity(y), f) == f, "identity.left", "id o f != f [" + tag + "]");
      report.expect(c.compose(h, c.compose(g, f)) == c.compose(c.compose(h, g), f), "associativity",
                    "h o (g o f) != (h o g) o f [" + tag + "]");
      report.expect(c.compose(g, c.zero_morphism(x, y)) == c.zero_morphism(x, z), "zero.absorbing",
                    "g o 0 != 0 [" + tag + "]");
      report.expect(c.compose(c.add(g, g), f) == c.add(c.compose(g, f), c.compose(g, f)), "bilinearity",
                    "(g + g) o f != g o f + g o f [" + tag + "]");

      const auto bp = c.biproduct(x, y);
      report.expect(c.compose(bp.projections[0], bp.injections[0]) == c.identity(x), "biproduct.p1i1",
                    "p1 o i1 != id [" + tag + "]");
      report.expect(c.compose(bp.projections[1], bp.injections[1]) == c.identity(y), "biproduct.p2i2",
                    "p2 o i2 != id [" + tag + "]");
      report.expect(is_zero_morphism(c, c.compose(bp.projections[1], bp.injections[0])), "biproduct.p2i1",
                    "p2 o i1 != 0 [" + tag + "]");
      report.expect(c.add(c.compose(bp.injections[0], bp.projections[0]),
                          c.compose(bp.injections[1], bp.projections[1])) == c.identity(bp.object),
                    "biproduct.sum", "i1 p1 + i2 p2 != id [" + tag + "]");

      verify_morphism_structure(c, g, rng, 1, max_total_dim, report, tag);
    } catch (const Error& e) {
      report.expect(false, "exception", std::string(e.what()) + " [" + tag + "]");
    }
  }
  return report;
}

}  // namespace commacat
