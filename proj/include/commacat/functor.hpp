#pragma once

// Functors between Rep(Q)/FinVect instances. Each kind carries claimed
// exactness flags; check_functor audits the claims empirically.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commacat/rep.hpp"

namespace commacat {

enum class FunctorKind {
  identity,
  zero,
  hom_from,        // Hom(X, -)
  hom_into,        // Hom(-, W), contravariant
  eval_vertex,     // M |-> M_v
  arrow_kernel,    // M |-> Ker(M_a)
  arrow_cokernel,  // M |-> Coker(M_a)
  tensor,          // M |-> M (x) k^w
  one_plus,        // V |-> k (+) V, f |-> 1 (+) f. Not additive.
  constant,        // M |-> C, f |-> id_C
};

std::string to_string(FunctorKind kind);
std::optional<FunctorKind> parse_functor_kind(const std::string& name);

/// Claims about a functor. For a contravariant functor "left exact" means
/// X -> Y -> Z -> 0 exact goes to G(Z) -> G(Y) -> G(X) -> 0 exact, and
/// "right exact" means 0 -> X -> Y -> Z exact goes to 0 -> G(Z) -> G(Y) -> G(X)
/// exact; i.e. exactness is read on the side the arrows land on.
struct ExactnessFlags {
  bool additive = true;
  bool left_exact = false;
  bool right_exact = false;
  friend bool operator==(const ExactnessFlags&, const ExactnessFlags&) = default;
};

struct FunctorParams {
  std::optional<RepObject> object;  // X for hom_from, W for hom_into, C for constant
  std::size_t index = 0;            // vertex for eval_vertex, arrow for arrow_*
  std::size_t width = 1;            // tensor width
};

class Functor {
 public:
  /// `target` is needed only for zero and constant; every other kind derives
  /// its target instance (FinVect over the same field, or the source itself).
  Functor(FunctorKind kind, RepCategory source, FunctorParams params = {},
          std::optional<RepCategory> target = std::nullopt, std::string name = {});

  static Functor identity(const RepCategory& c) { return Functor(FunctorKind::identity, c); }
  static Functor zero(const RepCategory& source, const RepCategory& target) {
    return Functor(FunctorKind::zero, source, {}, target);
  }
  static Functor hom_from(const RepCategory& c, const RepObject& x) {
    return Functor(FunctorKind::hom_from, c, {x});
  }
  static Functor hom_into(const RepCategory& c, const RepObject& w) {
    return Functor(FunctorKind::hom_into, c, {w});
  }
  static Functor eval_vertex(const RepCategory& c, std::size_t v) {
    return Functor(FunctorKind::eval_vertex, c, {std::nullopt, v});
  }
  static Functor arrow_kernel(const RepCategory& c, std::size_t a) {
    return Functor(FunctorKind::arrow_kernel, c, {std::nullopt, a});
  }
  static Functor arrow_cokernel(const RepCategory& c, std::size_t a) {
    return Functor(FunctorKind::arrow_cokernel, c, {std::nullopt, a});
  }
  static Functor tensor(const RepCategory& c, std::size_t w) {
    return Functor(FunctorKind::tensor, c, {std::nullopt, 0, w});
  }
  static Functor one_plus(const RepCategory& c) { return Functor(FunctorKind::one_plus, c); }
  static Functor constant(const RepCategory& source, const RepCategory& target, const RepObject& value) {
    return Functor(FunctorKind::constant, source, {value}, target);
  }

  static ExactnessFlags default_flags(FunctorKind kind, const RepCategory& source, const FunctorParams& params);

  FunctorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const RepCategory& source() const { return source_; }
  const RepCategory& target() const { return target_; }
  const FunctorParams& params() const { return params_; }
  bool contravariant() const { return kind_ == FunctorKind::hom_into; }
  const ExactnessFlags& flags() const { return flags_; }
  void set_flags(const ExactnessFlags& flags) { flags_ = flags; }

  RepObject apply(const RepObject& x) const;
  /// For a contravariant functor F(m) : F(target m) -> F(source m).
  RepMorphism apply(const RepMorphism& m) const;

 private:
  FunctorKind kind_;
  RepCategory source_;
  RepCategory target_;
  FunctorParams params_;
  ExactnessFlags flags_;
  std::string name_;
};

struct Finding {
  std::string property;  // identity, composition, additivity, left_exact, right_exact
  bool claimed = false;
  bool holds = true;
  std::size_t probes = 0;
  std::string detail;  // first counterexample, empty when none

  bool violation() const { return claimed && !holds; }
};

struct FunctorReport {
  std::string functor;
  std::vector<Finding> findings;

  bool clean() const;
  const Finding& get(const std::string& property) const;
};

struct FunctorCheckOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  std::size_t sample_max_dim = 3;
  /// Every SES and morphism pair among objects up to this total dimension is
  /// probed in addition to the random samples.
  std::size_t exhaustive_max_dim = 2;
  /// Extra short exact sequences (sub, quot) in the source instance.
  std::vector<ShortExactSequence<RepMorphism>> extra_ses;
};

/// Functor laws, additivity and both exactness properties on sampled and
/// exhaustive probes. Every property is tested whether or not it is claimed.
FunctorReport check_functor(const Functor& f, const FunctorCheckOptions& options = {});

/// The SES 0 -> k -> k^2 -> k -> 0 in FinVect used for the one_plus counterexample.
ShortExactSequence<RepMorphism> standard_split_ses(const RepCategory& finvect);

}  // namespace commacat
