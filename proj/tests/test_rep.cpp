#include "doctest.h"

#include <algorithm>
#include <set>

#include "commacat/category.hpp"
#include "commacat/rep.hpp"

using namespace commacat;

namespace {

RepCategory a2(std::uint32_t p = 2) { return RepCategory(p, Quiver::linear(2)); }

// Counts morphisms x -> y by trying every tuple of component matrices.
std::size_t brute_force_hom_count(const RepCategory& c, const RepObject& x, const RepObject& y) {
  std::size_t entries = 0;
  for (std::size_t v = 0; v < x.dims.size(); ++v) entries += x.dims[v] * y.dims[v];
  std::size_t count = 0;
  for (const auto& flat : enumerate_vectors(c.modulus(), entries)) {
    try {
      c.make_morphism(x, y, c.unflatten(x, y, flat).components);
      ++count;
    } catch (const NotAMorphism&) {
    }
  }
  return count;
}

// Subrepresentations by checking every tuple of subspaces directly.
std::size_t brute_force_subobject_count(const RepCategory& c, const RepObject& x) {
  std::vector<std::vector<Subspace>> per_vertex;
  for (auto d : x.dims) per_vertex.push_back(enumerate_subspaces(c.modulus(), d));
  std::size_t count = 0;
  std::vector<std::size_t> idx(per_vertex.size(), 0);
  while (true) {
    bool closed = true;
    for (std::size_t a = 0; a < c.quiver().arrows().size(); ++a) {
      const auto [s, t] = c.quiver().arrows()[a];
      const auto& src = per_vertex[s][idx[s]];
      const auto& image = Subspace::span_rows((x.arrow_maps[a] * src.inclusion()).transpose());
      closed = closed && per_vertex[t][idx[t]].contains(image);
    }
    count += closed;
    std::size_t v = 0;
    while (v < idx.size() && ++idx[v] == per_vertex[v].size()) idx[v++] = 0;
    if (v == idx.size()) break;
  }
  return count;
}

template <class C>
struct CorruptCompose : C {
  using C::C;
  explicit CorruptCompose(C base) : C(std::move(base)) {}
  typename C::Morphism compose(const typename C::Morphism& g, const typename C::Morphism& f) const {
    auto m = C::compose(g, f);
    for (auto& comp : m.components) {
      if (comp.rows() > 0 && comp.cols() > 0) comp(0, 0) = fp::add(comp(0, 0), 1, comp.modulus());
    }
    return m;
  }
};

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver(2, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Quiver(2, {{0, 2}}), InvalidArgument);
  const Quiver q(3, {{2, 0}, {0, 1}});
  CHECK(q.topological_order() == std::vector<std::size_t>{2, 0, 1});
}

TEST_CASE("morphism construction checks the squares") {
  const auto c = a2();
  const auto p0 = c.projective(0);
  CHECK(p0.dims == std::vector<std::size_t>{1, 1});
  const auto s1 = c.simple(1);
  CHECK_THROWS_AS(c.make_morphism(p0, p0, {Matrix::identity(2, 1), Matrix(2, 1, 1)}), NotAMorphism);
  CHECK_THROWS_AS(c.make_morphism(p0, s1, {Matrix::identity(2, 1)}), ShapeMismatch);
  CHECK_NOTHROW(c.make_morphism(s1, p0, {Matrix(2, 1, 0), Matrix::identity(2, 1)}));
}

TEST_CASE("hom spaces") {
  const auto c = RepCategory(2, Quiver(2, {}));
  CHECK(c.hom_basis(c.simple(0), c.simple(0)).size() == 1);
  CHECK(c.hom_basis(c.simple(0), c.simple(1)).empty());

  const auto q = a2();
  const auto p0 = q.projective(0);
  // Hom(P_v, M) = M_v.
  CHECK(q.hom_basis(p0, q.simple(0)).size() == 1);
  CHECK(q.hom_basis(p0, q.simple(1)).empty());
  CHECK(q.hom_basis(q.simple(1), p0).size() == 1);
  CHECK(brute_force_hom_count(q, p0, q.simple(1)) == 1);
  CHECK(brute_force_hom_count(q, q.simple(1), p0) == 2);
}

TEST_CASE("hom spaces agree with brute force") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto c = a2(p);
    const auto objects = c.enumerate_objects(p == 2 ? 3 : 2);
    for (std::size_t i = 0; i < objects.size(); i += 3) {
      for (std::size_t j = 0; j < objects.size(); j += 5) {
        const auto basis = c.hom_basis(objects[i], objects[j]);
        CHECK(saturating_pow(p, basis.size()) == brute_force_hom_count(c, objects[i], objects[j]));
        for (const auto& m : basis) CHECK(c.hom_coordinates(m).size() == basis.size());
      }
    }
  }
}

TEST_CASE("simples have exactly two subobjects") {
  const auto c = RepCategory(2, Quiver(3, {{0, 1}, {0, 2}}));
  for (const auto& s : c.simples()) CHECK(c.enumerate_subobjects(s).size() == 2);
  const auto fv = RepCategory::finvect(2);
  CHECK(fv.enumerate_subobjects(fv.vect(1)).size() == 2);
  CHECK(fv.enumerate_subobjects(fv.vect(2)).size() == 5);
  CHECK(fv.enumerate_subobjects(fv.zero_object()).size() == 1);
}

TEST_CASE("subobject enumeration: brute force, serial == parallel, pullbacks") {
  for (const auto& c : {a2(2), a2(3), RepCategory(2, Quiver(3, {{0, 1}, {2, 1}}))}) {
    const auto objects = c.enumerate_objects(c.modulus() == 2 ? 3 : 2);
    for (std::size_t i = 0; i < objects.size(); i += 2) {
      const auto& x = objects[i];
      const auto par = c.enumerate_subobject_keys(x, ExecutionPolicy::parallel);
      const auto ser = c.enumerate_subobject_keys(x, ExecutionPolicy::serial);
      CHECK(par == ser);
      CHECK(par.size() == brute_force_subobject_count(c, x));
      CHECK(std::is_sorted(par.begin(), par.end()));
      const std::set<RepCategory::SubobjectKey> all(par.begin(), par.end());
      for (const auto& s : par) {
        for (const auto& t : par) {
          RepCategory::SubobjectKey meet;
          for (std::size_t v = 0; v < s.size(); ++v) meet.push_back(s[v].intersect(t[v]));
          CHECK(all.count(meet) == 1);
        }
      }
    }
  }
}

TEST_CASE("kernel, cokernel, image examples") {
  const auto c = RepCategory::finvect(2);
  CHECK(c.is_zero(c.kernel(c.identity(c.vect(2))).object));
  const auto zero = c.zero_morphism(c.vect(1), c.vect(1));
  const auto cok = c.cokernel(zero);
  CHECK(cok.object == c.vect(1));
  CHECK(cok.map == c.identity(c.vect(1)));

  const auto m = c.vect_map(Matrix::from_rows(2, 1, 2, {{1, 1}}));
  const auto im = image(c, m);
  CHECK(im.object.dims[0] == 1);
  CHECK(c.is_mono(im.map));
  CHECK(c.key_of_mono(im.map)[0] == image_basis(m.components[0]));

  CHECK(induced_morphism(c, c.identity(c.vect(2))) == c.identity(c.vect(2)));
  const auto bar0 = induced_morphism(c, zero);
  CHECK(c.is_zero(bar0.source));
  CHECK(c.is_zero(bar0.target));
  const auto bar = induced_morphism(c, c.vect_map(Matrix::from_rows(2, 2, 2, {{1, 1}, {0, 0}})));
  CHECK(bar.components[0].rows() == 1);
  CHECK(bar.components[0].cols() == 1);
  CHECK(c.inverse(bar).has_value());
}

TEST_CASE("verify_ses") {
  const auto c = RepCategory::finvect(2);
  const auto x = c.vect(2);
  CHECK(verify_ses(c, {c.identity(x), c.zero_morphism(x, c.zero_object())}));
  CHECK_FALSE(verify_ses(c, {c.identity(x), c.identity(x)}));
  const auto q = a2();
  const auto p0 = q.projective(0);
  const auto subs = q.enumerate_subobjects(p0);
  for (const auto& s : subs) CHECK(verify_ses(q, ses_of_mono(q, s.mono)));
}

TEST_CASE("mono/epi agree with cancellability") {
  for (const auto& c : {RepCategory::finvect(2), a2(2)}) {
    const auto objects = c.enumerate_objects(2);
    for (const auto& x : objects) {
      for (const auto& y : objects) {
        for (const auto& m : c.enumerate_morphisms(x, y)) {
          bool left_cancel = true;
          bool right_cancel = true;
          for (const auto& z : objects) {
            for (const auto& h : c.enumerate_morphisms(z, x)) {
              if (is_zero_morphism(c, c.compose(m, h)) && !is_zero_morphism(c, h)) left_cancel = false;
            }
            for (const auto& h : c.enumerate_morphisms(y, z)) {
              if (is_zero_morphism(c, c.compose(h, m)) && !is_zero_morphism(c, h)) right_cancel = false;
            }
          }
          CHECK(c.is_mono(m) == left_cancel);
          CHECK(c.is_epi(m) == right_cancel);
        }
      }
    }
  }
}

TEST_CASE("axiom suite") {
  const auto fv = RepCategory::finvect(2);
  const auto r1 = verify_category(fv, 50, 1);
  CHECK(r1.ok());
  CHECK(r1.checks > 50);
  CHECK(verify_category(a2(3), 50, 2).ok());
  CHECK(verify_category(RepCategory(2, Quiver(3, {{0, 1}, {0, 2}})), 50, 3).ok());

  const CorruptCompose<RepCategory> bad(RepCategory::finvect(2));
  CHECK_FALSE(verify_category(bad, 50, 1).ok());
}
