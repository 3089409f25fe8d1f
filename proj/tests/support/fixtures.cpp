#include "fixtures.hpp"

namespace commacat::fixtures {

RepCategory finvect() { return RepCategory::finvect(2); }

RepCategory a2() { return RepCategory(2, Quiver::linear(2), "Rep(1->2)"); }

CommaCategory arrow() { return CommaCategory(Functor::identity(finvect()), Functor::identity(finvect()), {}, "arrow"); }

namespace {
StabilityFunction minus_dim(std::size_t n) { return StabilityFunction(std::vector<GaussianRational>(n, {-1, 0})); }
StabilityFunction i_dim(std::size_t n) { return StabilityFunction(std::vector<GaussianRational>(n, {0, 1})); }
}  // namespace

StabilityFunction arrow_stability() { return make_comma_stability(minus_dim(1), i_dim(1), 1, 1); }

CommaCategory toy() {
  const auto q = a2();
  return CommaCategory(Functor::identity(finvect()), Functor::hom_from(q, q.projective(0)), {}, "toy");
}

CommaObject toy_system(const CommaCategory& toy) {
  const auto& B = toy.B();
  const auto f = B.make_object({1, 2}, {Matrix::from_rows(2, 2, 1, {{1}, {0}})});
  // Hom(P_0, F) = F_0 = k; sigma picks its generator.
  return toy.make_object(toy.A().vect(1), f, toy.C().vect_map(Matrix::from_rows(2, 1, 1, {{1}})));
}

ToyGeometry toy_geometry() { return {{1}, {-1, 1}, {1, 1}}; }

CommaCategory quiver_side() {
  return CommaCategory(Functor::eval_vertex(a2(), 0), Functor::identity(finvect()), {}, "quiver-side");
}

StabilityFunction quiver_side_stability() {
  return make_comma_stability(StabilityFunction({{1, 1}, {-1, 1}}), i_dim(1), 1, 1);
}

CommaCategory one_plus_zero() {
  return CommaCategory(Functor::one_plus(finvect()), Functor::zero(finvect(), finvect()), StructurePolicy::attempt,
                       "one_plus/zero");
}

CoCommaCategory framed() {
  return CoCommaCategory(Functor::identity(finvect()), Functor::hom_into(finvect(), finvect().vect(1)), {}, "framed");
}

}  // namespace commacat::fixtures
