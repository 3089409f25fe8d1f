#include "commacat/kgroup.hpp"

namespace commacat {

ClassHom::ClassHom(const AdditiveAssignment& assignment) : columns_(assignment.values_on_simples) {
  for (const auto& col : columns_) {
    if (col.rank() != columns_.front().rank()) {
      throw ShapeMismatch("additive assignment '" + assignment.name + "' has values of different ranks");
    }
  }
}

ClassVector ClassHom::apply(const ClassVector& c) const {
  if (c.rank() != columns_.size()) {
    throw ShapeMismatch("class of rank " + std::to_string(c.rank()) + " given to a map on rank " +
                        std::to_string(columns_.size()));
  }
  ClassVector out{std::vector<std::int64_t>(columns_.empty() ? 0 : columns_.front().rank(), 0)};
  for (std::size_t i = 0; i < columns_.size(); ++i) out = out + c.coords[i] * columns_[i];
  return out;
}

std::vector<std::int64_t> ClassHom::row(std::size_t i) const {
  std::vector<std::int64_t> r;
  r.reserve(columns_.size());
  for (const auto& col : columns_) r.push_back(col.coords.at(i));
  return r;
}

Decomposition<CommaMorphism> decompose(const CommaCategory& c, const CommaObject& x) {
  c.check_object(x);
  const auto& A = c.A();
  const auto& B = c.B();
  const auto sub = c.make_object(A.zero_object(), x.b);
  const auto quot = c.make_object(x.a, B.zero_object());
  Decomposition<CommaMorphism> d{
      A.cls(x.a), B.cls(x.b),
      {c.make_morphism(sub, x, A.zero_morphism(sub.a, x.a), B.identity(x.b)),
       c.make_morphism(x, quot, A.identity(x.a), B.zero_morphism(x.b, quot.b))},
      false};
  d.verified = verify_ses(c, d.witness) && c.cls(sub) + c.cls(quot) == c.cls(x);
  return d;
}

Decomposition<CoCommaMorphism> decompose(const CoCommaCategory& c, const CoCommaObject& x) {
  c.check_object(x);
  const auto& A = c.A();
  const auto& B = c.B();
  const auto sub = c.make_object(x.a, B.zero_object());
  const auto quot = c.make_object(A.zero_object(), x.b);
  // Components run A-backwards: sub -> x is (id : a -> a, 0 -> b).
  Decomposition<CoCommaMorphism> d{
      A.cls(x.a), B.cls(x.b),
      {c.make_morphism(sub, x, A.identity(x.a), B.zero_morphism(sub.b, x.b)),
       c.make_morphism(x, quot, A.zero_morphism(quot.a, x.a), B.identity(x.b))},
      false};
  d.verified = verify_ses(c, d.witness) && c.cls(sub) + c.cls(quot) == c.cls(x);
  return d;
}

}  // namespace commacat
