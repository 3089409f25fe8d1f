#pragma once

// The comma category (F/G) for F : A -> C, G : B -> C covariant.
// Objects (a, b, alpha : F(a) -> G(b)); morphisms (f, g) with
// alpha' o F(f) = G(g) o alpha.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "commacat/category.hpp"
#include "commacat/functor.hpp"
#include "commacat/rep.hpp"

namespace commacat {

/// require_flags: abelian operations refuse contexts whose functors lack the
/// exactness flags. attempt: run them anyway and let the checks decide.
enum class StructurePolicy { require_flags, attempt };

struct CommaObject {
  RepObject a;
  RepObject b;
  RepMorphism alpha;
  friend bool operator==(const CommaObject&, const CommaObject&) = default;
};

struct CommaMorphism {
  CommaObject source;
  CommaObject target;
  RepMorphism f;  // a -> a'
  RepMorphism g;  // b -> b'
  friend bool operator==(const CommaMorphism&, const CommaMorphism&) = default;
};

/// Subobject key shared by both comma constructions: a canonical key in A and
/// one in B. For (F/G) `a` is the A-subobject; for (F\G) it is the kernel of
/// the A-quotient.
struct PairKey {
  RepCategory::SubobjectKey a;
  RepCategory::SubobjectKey b;
  friend bool operator==(const PairKey&, const PairKey&) = default;
  friend std::strong_ordering operator<=>(const PairKey&, const PairKey&) = default;
};

class CommaCategory {
 public:
  using Object = CommaObject;
  using Morphism = CommaMorphism;
  using SubobjectKey = PairKey;
  using UniversalT = UniversalArrow<Object, Morphism>;
  using BiproductT = BiproductData<Object, Morphism>;
  using SubobjectT = SubobjectOf<Object, Morphism, SubobjectKey>;

  /// Throws InvalidArgument when F, G do not share a target or are contravariant.
  CommaCategory(Functor F, Functor G, StructurePolicy policy = StructurePolicy::require_flags, std::string name = {});

  const RepCategory& A() const { return F_.source(); }
  const RepCategory& B() const { return G_.source(); }
  const RepCategory& C() const { return F_.target(); }
  const Functor& F() const { return F_; }
  const Functor& G() const { return G_; }
  const std::string& name() const { return name_; }
  StructurePolicy policy() const { return policy_; }
  void set_policy(StructurePolicy p) { policy_ = p; }
  std::uint32_t modulus() const { return A().modulus(); }
  /// F right exact and G left exact.
  bool abelian_capable() const { return F_.flags().right_exact && G_.flags().left_exact; }
  std::size_t class_rank() const { return A().class_rank() + B().class_rank(); }

  // --- construction -------------------------------------------------------
  /// Checks alpha : F(a) -> G(b). Throws ShapeMismatch / NotAMorphism.
  Object make_object(const RepObject& a, const RepObject& b, const RepMorphism& alpha) const;
  /// (a, b, 0).
  Object make_object(const RepObject& a, const RepObject& b) const;
  /// Checks the commuting square; throws NotAMorphism.
  Morphism make_morphism(const Object& x, const Object& y, const RepMorphism& f, const RepMorphism& g) const;
  void check_object(const Object& x) const;

  // --- category structure -------------------------------------------------
  Object zero_object() const;
  Morphism identity(const Object& x) const;
  Morphism zero_morphism(const Object& x, const Object& y) const;
  Morphism compose(const Morphism& second, const Morphism& first) const;
  Morphism add(const Morphism& u, const Morphism& v) const;
  const Object& source(const Morphism& m) const { return m.source; }
  const Object& target(const Morphism& m) const { return m.target; }

  /// ((Ker f, Ker g, beta), (ker f, ker g)) with G(ker g) o beta = alpha o F(ker f).
  UniversalT kernel(const Morphism& m) const;
  /// ((Coker f, Coker g, gamma), (coker f, coker g)) with
  /// gamma o F(coker f) = G(coker g) o alpha'.
  UniversalT cokernel(const Morphism& m) const;
  /// (a (+) a', b (+) b', beta) with beta o F(i_j) = G(i_j) o alpha_j.
  BiproductT biproduct(const Object& x, const Object& y) const;

  bool is_zero(const Object& x) const { return A().is_zero(x.a) && B().is_zero(x.b); }
  bool is_mono(const Morphism& m) const { return A().is_mono(m.f) && B().is_mono(m.g); }
  bool is_epi(const Morphism& m) const { return A().is_epi(m.f) && B().is_epi(m.g); }
  std::optional<Morphism> lift(const Morphism& mono, const Morphism& h) const;
  std::optional<Morphism> descend(const Morphism& epi, const Morphism& h) const;
  std::optional<Morphism> inverse(const Morphism& m) const;

  /// Pairs (A' <= a, B' <= b) with alpha(F(A')) inside G(B'), each with its
  /// unique restricted structure map. Canonical order: A-key, then B-key.
  std::vector<SubobjectT> enumerate_subobjects(const Object& x,
                                               ExecutionPolicy policy = ExecutionPolicy::parallel) const;
  bool sub_leq(const SubobjectKey& s, const SubobjectKey& t) const {
    return A().sub_leq(s.a, t.a) && B().sub_leq(s.b, t.b);
  }

  /// cls_A(a) followed by cls_B(b).
  ClassVector cls(const Object& x) const { return ClassVector::concat(A().cls(x.a), B().cls(x.b)); }
  std::size_t total_dim(const Object& x) const { return x.a.total_dim() + x.b.total_dim(); }

  std::vector<Morphism> hom_basis(const Object& x, const Object& y) const;
  Vector flatten(const Morphism& m) const;
  Morphism linear_combination(const Object& x, const Object& y, const std::vector<Morphism>& basis,
                              const Vector& coeffs) const;

  Object random_object(Rng& rng, std::size_t max_total_dim) const;
  /// Every object with total dimension <= max_total_dim.
  std::vector<Object> enumerate_objects(std::size_t max_total_dim) const;
  std::vector<Morphism> enumerate_morphisms(const Object& x, const Object& y) const;

  /// The two component sequences of a comma SES, each verified.
  std::pair<ShortExactSequence<RepMorphism>, ShortExactSequence<RepMorphism>> extract_component_ses(
      const ShortExactSequence<Morphism>& s) const;

  std::string describe(const Object& x) const;

 private:
  void require_capability(const char* what) const;

  Functor F_;
  Functor G_;
  StructurePolicy policy_;
  std::string name_;
};

/// When G is the zero functor, (F/G) is equivalent to A x B whatever F is.
/// Checks on every pair of objects of total dimension <= max_total_dim that
/// the forgetful functor to A x B is bijective on objects and Hom sets and
/// carries kernels, cokernels and biproducts to the componentwise ones.
VerificationReport check_product_equivalence(const CommaCategory& c, std::size_t max_total_dim);

}  // namespace commacat
