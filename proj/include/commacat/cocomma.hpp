#pragma once

// The co-comma category (F\G) for F : A -> C covariant and G : B -> C
// contravariant. Objects (a, b, alpha : F(a) -> G(b)). A morphism
// (a, b, alpha) -> (a', b', alpha') is (f : a' -> a, g : b -> b') with
// alpha o F(f) = G(g) o alpha'; composition is (f', g') o (f, g) = (f o f', g' o g).

#include <cstddef>
#include <string>
#include <vector>

#include "commacat/comma.hpp"

namespace commacat {

struct CoCommaObject {
  RepObject a;
  RepObject b;
  RepMorphism alpha;
  friend bool operator==(const CoCommaObject&, const CoCommaObject&) = default;
};

struct CoCommaMorphism {
  CoCommaObject source;
  CoCommaObject target;
  RepMorphism f;  // target.a -> source.a
  RepMorphism g;  // source.b -> target.b
  friend bool operator==(const CoCommaMorphism&, const CoCommaMorphism&) = default;
};

class CoCommaCategory {
 public:
  using Object = CoCommaObject;
  using Morphism = CoCommaMorphism;
  /// a: kernel of the quotient of the A-component; b: the B-subobject.
  using SubobjectKey = PairKey;
  using UniversalT = UniversalArrow<Object, Morphism>;
  using BiproductT = BiproductData<Object, Morphism>;
  using SubobjectT = SubobjectOf<Object, Morphism, SubobjectKey>;

  CoCommaCategory(Functor F, Functor G, StructurePolicy policy = StructurePolicy::require_flags,
                  std::string name = {});

  const RepCategory& A() const { return F_.source(); }
  const RepCategory& B() const { return G_.source(); }
  const RepCategory& C() const { return F_.target(); }
  const Functor& F() const { return F_; }
  const Functor& G() const { return G_; }
  const std::string& name() const { return name_; }
  StructurePolicy policy() const { return policy_; }
  std::uint32_t modulus() const { return A().modulus(); }
  /// F right exact and G right exact in the contravariant sense (epis to monos).
  bool abelian_capable() const { return F_.flags().right_exact && G_.flags().right_exact; }
  std::size_t class_rank() const { return A().class_rank() + B().class_rank(); }

  Object make_object(const RepObject& a, const RepObject& b, const RepMorphism& alpha) const;
  Object make_object(const RepObject& a, const RepObject& b) const;
  /// f : y.a -> x.a, g : x.b -> y.b. Throws NotAMorphism.
  Morphism make_morphism(const Object& x, const Object& y, const RepMorphism& f, const RepMorphism& g) const;
  void check_object(const Object& x) const;

  Object zero_object() const;
  Morphism identity(const Object& x) const;
  Morphism zero_morphism(const Object& x, const Object& y) const;
  Morphism compose(const Morphism& second, const Morphism& first) const;
  Morphism add(const Morphism& u, const Morphism& v) const;
  const Object& source(const Morphism& m) const { return m.source; }
  const Object& target(const Morphism& m) const { return m.target; }

  /// ((Coker f, Ker g, beta), (coker f, ker g)) with beta o F(coker f) = G(ker g) o alpha.
  UniversalT kernel(const Morphism& m) const;
  /// ((Ker f, Coker g, gamma), (ker f, coker g)) with G(coker g) o gamma = alpha' o F(ker f).
  UniversalT cokernel(const Morphism& m) const;
  /// (a (+) a', b (+) b', beta) with G(i_j) o beta = alpha_j o F(pi_j).
  BiproductT biproduct(const Object& x, const Object& y) const;

  bool is_zero(const Object& x) const { return A().is_zero(x.a) && B().is_zero(x.b); }
  /// Mono iff f is epi and g is mono.
  bool is_mono(const Morphism& m) const { return A().is_epi(m.f) && B().is_mono(m.g); }
  bool is_epi(const Morphism& m) const { return A().is_mono(m.f) && B().is_epi(m.g); }
  std::optional<Morphism> lift(const Morphism& mono, const Morphism& h) const;
  std::optional<Morphism> descend(const Morphism& epi, const Morphism& h) const;
  std::optional<Morphism> inverse(const Morphism& m) const;

  /// Pairs (quotient q : a ->> a/K, B' <= b) such that G(i_B') o alpha
  /// factors through F(q). Canonical order by (K, B').
  std::vector<SubobjectT> enumerate_subobjects(const Object& x,
                                               ExecutionPolicy policy = ExecutionPolicy::parallel) const;
  /// S <= T iff K_T <= K_S and B'_S <= B'_T.
  bool sub_leq(const SubobjectKey& s, const SubobjectKey& t) const {
    return A().sub_leq(t.a, s.a) && B().sub_leq(s.b, t.b);
  }

  ClassVector cls(const Object& x) const { return ClassVector::concat(A().cls(x.a), B().cls(x.b)); }
  std::size_t total_dim(const Object& x) const { return x.a.total_dim() + x.b.total_dim(); }

  std::vector<Morphism> hom_basis(const Object& x, const Object& y) const;
  Vector flatten(const Morphism& m) const;
  Morphism linear_combination(const Object& x, const Object& y, const std::vector<Morphism>& basis,
                              const Vector& coeffs) const;

  Object random_object(Rng& rng, std::size_t max_total_dim) const;
  std::vector<Object> enumerate_objects(std::size_t max_total_dim) const;
  std::vector<Morphism> enumerate_morphisms(const Object& x, const Object& y) const;

  std::string describe(const Object& x) const;

 private:
  void require_capability(const char* what) const;

  Functor F_;
  Functor G_;
  StructurePolicy policy_;
  std::string name_;
};

}  // namespace commacat
