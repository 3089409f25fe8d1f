#pragma once

// Grothendieck classes. K of every instance here is free on the simple
// classes, so a class is a coordinate vector and an additive function is a
// linear map on those coordinates.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "commacat/category.hpp"
#include "commacat/cocomma.hpp"
#include "commacat/comma.hpp"

namespace commacat {

/// Additive function given by its values on the simple classes. Values live
/// in Z^target_rank.
struct AdditiveAssignment {
  std::string name;
  std::vector<ClassVector> values_on_simples;
};

/// The unique linear map K -> Z^n extending an assignment.
class ClassHom {
 public:
  explicit ClassHom(const AdditiveAssignment& assignment);
  ClassVector apply(const ClassVector& c) const;
  std::size_t source_rank() const { return columns_.size(); }
  /// Row i as integer coefficients, e.g. (-1, 1) for deg on Rep(1 -> 2).
  std::vector<std::int64_t> row(std::size_t i) const;

 private:
  std::vector<ClassVector> columns_;
};

inline ClassHom induced_hom(const AdditiveAssignment& a) { return ClassHom(a); }

/// Checks every SES is exact and f(mid) = f(sub) + f(quot).
template <AbelianInstance C>
VerificationReport verify_additivity(const C& c, const std::vector<ShortExactSequence<typename C::Morphism>>& seqs,
                                     const std::function<ClassVector(const typename C::Object&)>& f) {
  VerificationReport report;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const auto& s = seqs[i];
    const std::string tag = " [sequence " + std::to_string(i) + "]";
    report.expect(verify_ses(c, s), "ses.exact", "sequence is not short exact" + tag);
    const auto sub = f(c.source(s.sub));
    const auto mid = f(c.target(s.sub));
    const auto quot = f(c.target(s.quot));
    report.expect(mid == sub + quot, "additivity",
                  "f(mid)=" + mid.to_string() + " but f(sub)+f(quot)=" + (sub + quot).to_string() + tag);
  }
  return report;
}

template <class Morphism>
struct Decomposition {
  ClassVector a;
  ClassVector b;
  ShortExactSequence<Morphism> witness;
  bool verified = false;
};

/// 0 -> (0, b, 0) -> (a, b, alpha) -> (a, 0, 0) -> 0.
Decomposition<CommaMorphism> decompose(const CommaCategory& c, const CommaObject& x);
/// In (F\G) the split runs the other way: 0 -> (a, 0, 0) -> (a, b, alpha) -> (0, b, 0) -> 0.
Decomposition<CoCommaMorphism> decompose(const CoCommaCategory& c, const CoCommaObject& x);

}  // namespace commacat
