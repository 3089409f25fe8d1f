#pragma once

// Representations of a finite acyclic quiver over F_p. FinVect(F_p) is the
// one-vertex quiver with no arrows, so both concrete instances share this
// single implementation.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "commacat/category.hpp"
#include "commacat/linalg.hpp"
#include "commacat/random.hpp"

namespace commacat {

struct QuiverArrow {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const QuiverArrow&, const QuiverArrow&) = default;
};

class Quiver {
 public:
  Quiver() : Quiver(1, {}) {}
  /// Throws InvalidArgument on out-of-range endpoints or a directed cycle.
  Quiver(std::size_t vertices, std::vector<QuiverArrow> arrows);

  static Quiver point() { return Quiver(1, {}); }
  /// 0 -> 1 -> ... -> n-1.
  static Quiver linear(std::size_t n);

  std::size_t vertex_count() const { return vertices_; }
  const std::vector<QuiverArrow>& arrows() const { return arrows_; }
  const std::vector<std::size_t>& topological_order() const { return order_; }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::size_t vertices_;
  std::vector<QuiverArrow> arrows_;
  std::vector<std::size_t> order_;
};

struct RepObject {
  std::vector<std::size_t> dims;
  std::vector<Matrix> arrow_maps;  // arrow a : dims[target] x dims[source]

  std::size_t total_dim() const;
  friend bool operator==(const RepObject&, const RepObject&) = default;
};

struct RepMorphism {
  RepObject source;
  RepObject target;
  std::vector<Matrix> components;  // per vertex: target.dims[v] x source.dims[v]

  friend bool operator==(const RepMorphism&, const RepMorphism&) = default;
};

struct Factorization {
  RepMorphism value;
  bool unique = true;
};

class RepCategory {
 public:
  using Object = RepObject;
  using Morphism = RepMorphism;
  using SubobjectKey = std::vector<Subspace>;  // one canonical subspace per vertex
  using UniversalT = UniversalArrow<Object, Morphism>;
  using BiproductT = BiproductData<Object, Morphism>;
  using SubobjectT = SubobjectOf<Object, Morphism, SubobjectKey>;

  RepCategory(std::uint32_t p, Quiver quiver, std::string name = {}, Budget budget = {});
  static RepCategory finvect(std::uint32_t p, Budget budget = {});

  std::uint32_t modulus() const { return p_; }
  const Quiver& quiver() const { return quiver_; }
  const std::string& name() const { return name_; }
  const Budget& budget() const { return budget_; }
  void set_budget(const Budget& b) { budget_ = b; }
  bool is_finvect() const { return quiver_.vertex_count() == 1 && quiver_.arrows().empty(); }
  std::size_t class_rank() const { return quiver_.vertex_count(); }

  friend bool operator==(const RepCategory& a, const RepCategory& b) {
    return a.p_ == b.p_ && a.quiver_ == b.quiver_;
  }

  // --- construction -------------------------------------------------------
  Object make_object(std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps) const;
  /// FinVect only: the space F_p^dim.
  Object vect(std::size_t dim) const;
  /// Checks shapes and the commuting squares. Throws NotAMorphism/ShapeMismatch.
  Morphism make_morphism(const Object& source, const Object& target, std::vector<Matrix> components) const;
  /// FinVect only: the linear map given by m : F_p^cols -> F_p^rows.
  Morphism vect_map(const Matrix& m) const;
  /// Throws ForeignInstance when x does not fit this quiver/field.
  void check_object(const Object& x) const;

  /// Vertex simple S_v.
  Object simple(std::size_t v) const;
  std::vector<Object> simples() const;
  /// Indecomposable projective P_v (paths starting at v).
  Object projective(std::size_t v) const;

  // --- category structure -------------------------------------------------
  Object zero_object() const;
  Morphism identity(const Object& x) const;
  Morphism zero_morphism(const Object& x, const Object& y) const;
  /// g o f.
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism add(const Morphism& a, const Morphism& b) const;
  Morphism negate(const Morphism& a) const;
  const Object& source(const Morphism& m) const { return m.source; }
  const Object& target(const Morphism& m) const { return m.target; }

  UniversalT kernel(const Morphism& m) const;
  UniversalT cokernel(const Morphism& m) const;
  BiproductT biproduct(const Object& x, const Object& y) const;

  bool is_zero(const Object& x) const { return x.total_dim() == 0; }
  bool is_mono(const Morphism& m) const;
  bool is_epi(const Morphism& m) const;

  /// u with mono o u = h.
  std::optional<Morphism> lift(const Morphism& mono, const Morphism& h) const;
  /// u with u o epi = h.
  std::optional<Morphism> descend(const Morphism& epi, const Morphism& h) const;
  std::optional<Morphism> inverse(const Morphism& m) const;

  /// Some X with m o X = r (X : source r -> source m), with uniqueness flag.
  /// The solution is only returned if it is a morphism of representations.
  std::optional<Factorization> factor_left(const Morphism& m, const Morphism& r) const;
  /// Some X with X o e = r (X : target e -> target r).
  std::optional<Factorization> factor_right(const Morphism& e, const Morphism& r) const;
  /// <u, v> : x -> y1 (+) y2 and [u, v] : x1 (+) x2 -> y.
  Morphism pair(const Morphism& u, const Morphism& v) const;
  Morphism copair(const Morphism& u, const Morphism& v) const;

  /// Subrepresentation spanned by per-vertex subspaces closed under arrows,
  /// with its inclusion. Throws InvalidArgument when not closed.
  UniversalT subrep(const Object& x, const SubobjectKey& subspaces) const;
  /// Quotient by a subrepresentation, with its projection.
  UniversalT quotient(const Object& x, const SubobjectKey& subspaces) const;
  /// Canonical key (per-vertex image subspaces) of a mono.
  SubobjectKey key_of_mono(const Morphism& mono) const;

  /// Every subrepresentation exactly once, in canonical order (vertex 0 most
  /// significant, each vertex in enumerate_subspaces order).
  std::vector<SubobjectT> enumerate_subobjects(const Object& x,
                                               ExecutionPolicy policy = ExecutionPolicy::parallel) const;
  std::vector<SubobjectKey> enumerate_subobject_keys(const Object& x,
                                                     ExecutionPolicy policy = ExecutionPolicy::parallel) const;
  bool sub_leq(const SubobjectKey& a, const SubobjectKey& b) const;

  /// Dimension vector (composition factors of an acyclic quiver rep).
  ClassVector cls(const Object& x) const;
  std::size_t total_dim(const Object& x) const { return x.total_dim(); }

  // --- Hom spaces ---------------------------------------------------------
  /// Hom(x, y) as a canonical subspace of the flattened component space.
  Subspace hom_space(const Object& x, const Object& y) const;
  std::vector<Morphism> hom_basis(const Object& x, const Object& y) const;
  /// Coordinates of m in hom_basis(source, target).
  Vector hom_coordinates(const Morphism& m) const;
  Vector flatten(const Morphism& m) const;
  Morphism unflatten(const Object& x, const Object& y, const Vector& flat) const;
  Morphism linear_combination(const Object& x, const Object& y, const std::vector<Morphism>& basis,
                              const Vector& coeffs) const;

  // --- sampling -----------------------------------------------------------
  Object random_object(Rng& rng, std::size_t max_total_dim) const;
  /// Every object with total dimension <= max_total_dim (all arrow matrices).
  std::vector<Object> enumerate_objects(std::size_t max_total_dim) const;
  /// Every morphism x -> y (all points of the Hom space).
  std::vector<Morphism> enumerate_morphisms(const Object& x, const Object& y) const;

  std::string describe(const Object& x) const;

 private:
  std::uint32_t p_;
  Quiver quiver_;
  std::string name_;
  Budget budget_;
};

}  // namespace commacat
