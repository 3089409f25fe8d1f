#include "commacat/cocomma.hpp"

#include <sstream>

#include "commacat/errors.hpp"

namespace commacat {

CoCommaCategory::CoCommaCategory(Functor F, Functor G, StructurePolicy policy, std::string name)
    : F_(std::move(F)), G_(std::move(G)), policy_(policy), name_(std::move(name)) {
  if (F_.contravariant()) throw InvalidArgument("co-comma category needs a covariant F");
  if (!G_.contravariant()) throw InvalidArgument("co-comma category needs a contravariant G");
  if (!(F_.target() == G_.target())) throw InvalidArgument("F and G must share their target instance");
  if (A().modulus() != B().modulus()) throw InvalidArgument("A and B are over different fields");
  if (name_.empty()) name_ = "(" + F_.name() + "\\" + G_.name() + ")";
}

void CoCommaCategory::require_capability(const char* what) const {
  if (policy_ == StructurePolicy::attempt || abelian_capable()) return;
  throw CapabilityMissing(std::string(what) + " in " + name_ + " needs F right exact and G right exact");
}

void CoCommaCategory::check_object(const Object& x) const {
  A().check_object(x.a);
  B().check_object(x.b);
  if (!(x.alpha.source == F_.apply(x.a)) || !(x.alpha.target == G_.apply(x.b))) {
    throw ForeignInstance("structure map does not go from F(a) to G(b) in " + name_);
  }
}

CoCommaObject CoCommaCategory::make_object(const RepObject& a, const RepObject& b, const RepMorphism& alpha) const {
  const RepObject fa = F_.apply(a);
  const RepObject gb = G_.apply(b);
  if (!(alpha.source.dims == fa.dims) || !(alpha.target.dims == gb.dims)) {
    throw ShapeMismatch("alpha must go from F(a) to G(b)");
  }
  return {a, b, C().make_morphism(fa, gb, alpha.components)};
}

CoCommaObject CoCommaCategory::make_object(const RepObject& a, const RepObject& b) const {
  return {a, b, C().zero_morphism(F_.apply(a), G_.apply(b))};
}

CoCommaMorphism CoCommaCategory::make_morphism(const Object& x, const Object& y, const RepMorphism& f,
                                               const RepMorphism& g) const {
  const RepMorphism ff = A().make_morphism(y.a, x.a, f.components);
  const RepMorphism gg = B().make_morphism(x.b, y.b, g.components);
  if (!(C().compose(x.alpha, F_.apply(ff)) == C().compose(G_.apply(gg), y.alpha))) {
    throw NotAMorphism("square alpha o F(f) = G(g) o alpha' does not commute");
  }
  return {x, y, ff, gg};
}

CoCommaObject CoCommaCategory::zero_object() const { return make_object(A().zero_object(), B().zero_object()); }

CoCommaMorphism CoCommaCategory::identity(const Object& x) const {
  return {x, x, A().identity(x.a), B().identity(x.b)};
}

CoCommaMorphism CoCommaCategory::zero_morphism(const Object& x, const Object& y) const {
  return {x, y, A().zero_morphism(y.a, x.a), B().zero_morphism(x.b, y.b)};
}

CoCommaMorphism CoCommaCategory::compose(const Morphism& second, const Morphism& first) const {
  if (!(first.target == second.source)) throw ShapeMismatch("compose: morphisms are not composable");
  return {first.source, second.target, A().compose(first.f, second.f), B().compose(second.g, first.g)};
}

CoCommaMorphism CoCommaCategory::add(const Morphism& u, const Morphism& v) const {
  if (!(u.source == v.source) || !(u.target == v.target)) throw ShapeMismatch("add: morphisms not parallel");
  return {u.source, u.target, A().add(u.f, v.f), B().add(u.g, v.g)};
}

CoCommaCategory::UniversalT CoCommaCategory::kernel(const Morphism& m) const {
  require_capability("kernel");
  const auto cf = A().cokernel(m.f);
  const auto kg = B().kernel(m.g);
  const RepMorphism rhs = C().compose(G_.apply(kg.map), m.source.alpha);
  const auto beta = C().factor_right(F_.apply(cf.map), rhs);
  if (!beta) throw ExactnessViolation("kernel: G(ker g) o alpha does not factor through F(coker f)");
  if (!beta->unique && policy_ == StructurePolicy::require_flags) {
    throw ExactnessViolation("kernel: beta is not unique (F(coker f) is not epi)");
  }
  Object k{cf.object, kg.object, beta->value};
  return {k, Morphism{k, m.source, cf.map, kg.map}};
}

CoCommaCategory::UniversalT CoCommaCategory::cokernel(const Morphism& m) const {
  require_capability("cokernel");
  const auto kf = A().kernel(m.f);
  const auto cg = B().cokernel(m.g);
  const RepMorphism rhs = C().compose(m.target.alpha, F_.apply(kf.map));
  const auto gamma = C().factor_left(G_.apply(cg.map), rhs);
  if (!gamma) throw ExactnessViolation("cokernel: alpha' o F(ker f) does not factor through G(coker g)");
  if (!gamma->unique && policy_ == StructurePolicy::require_flags) {
    throw ExactnessViolation("cokernel: gamma is not unique (G(coker g) is not mono)");
  }
  Object q{kf.object, cg.object, gamma->value};
  return {q, Morphism{m.target, q, kf.map, cg.map}};
}

CoCommaCategory::BiproductT CoCommaCategory::biproduct(const Object& x, const Object& y) const {
  const auto ba = A().biproduct(x.a, y.a);
  const auto bb = B().biproduct(x.b, y.b);
  const RepMorphism m = C().pair(G_.apply(bb.injections[0]), G_.apply(bb.injections[1]));
  const RepMorphism r = C().pair(C().compose(x.alpha, F_.apply(ba.projections[0])),
                                 C().compose(y.alpha, F_.apply(ba.projections[1])));
  const auto beta = C().factor_left(m, r);
  if (!beta) throw ExactnessViolation("biproduct: no beta with G(i_j) o beta = alpha_j o F(pi_j)");
  if (!beta->unique && policy_ == StructurePolicy::require_flags) {
    throw ExactnessViolation("biproduct: beta is not unique (G is not additive)");
  }
  Object s{ba.object, bb.object, beta->value};
  return {s,
          {Morphism{x, s, ba.projections[0], bb.injections[0]}, Morphism{y, s, ba.projections[1], bb.injections[1]}},
          {Morphism{s, x, ba.injections[0], bb.projections[0]}, Morphism{s, y, ba.injections[1], bb.projections[1]}}};
}

std::optional<CoCommaMorphism> CoCommaCategory::lift(const Morphism& mono, const Morphism& h) const {
  auto f = A().descend(mono.f, h.f);
  auto g = B().lift(mono.g, h.g);
  if (!f || !g) return std::nullopt;
  try {
    return make_morphism(h.source, mono.source, *f, *g);
  } catch (const NotAMorphism&) {
    return std::nullopt;
  }
}

std::optional<CoCommaMorphism> CoCommaCategory::descend(const Morphism& epi, const Morphism& h) const {
  auto f = A().lift(epi.f, h.f);
  auto g = B().descend(epi.g, h.g);
  if (!f || !g) return std::nullopt;
  try {
    return make_morphism(epi.target, h.target, *f, *g);
  } catch (const NotAMorphism&) {
    return std::nullopt;
  }
}

std::optional<CoCommaMorphism> CoCommaCategory::inverse(const Morphism& m) const {
  auto f = A().inverse(m.f);
  auto g = B().inverse(m.g);
  if (!f || !g) return std::nullopt;
  return Morphism{m.target, m.source, *f, *g};
}

std::vector<CoCommaCategory::SubobjectT> CoCommaCategory::enumerate_subobjects(const Object& x,
                                                                               ExecutionPolicy policy) const {
  require_capability("subobject enumeration");
  check_object(x);
  const auto kernels = A().enumerate_subobject_keys(x.a, policy);
  const auto subs_b = B().enumerate_subobjects(x.b, policy);
  const std::size_t na = kernels.size();
  const std::size_t nb = subs_b.size();
  if (na * nb > A().budget().max_vectors) {
    throw BudgetExceeded("co-comma subobject candidates (" + std::to_string(na * nb) + ") exceed the budget");
  }
  std::vector<RepCategory::UniversalT> quotients;
  std::vector<RepMorphism> f_quot;
  for (const auto& k : kernels) {
    quotients.push_back(A().quotient(x.a, k));
    f_quot.push_back(F_.apply(quotients.back().map));
  }
  std::vector<RepMorphism> restricted;
  for (const auto& s : subs_b) restricted.push_back(C().compose(G_.apply(s.mono), x.alpha));

  std::vector<std::optional<Factorization>> found(na * nb);
  std::vector<std::string> errors(na * nb);
  auto evaluate = [&](std::size_t idx) {
    try {
      found[idx] = C().factor_right(f_quot[idx / nb], restricted[idx % nb]);
    } catch (const Error& e) {
      errors[idx] = e.what();
    }
  };
  const auto n = static_cast<std::ptrdiff_t>(na * nb);
  if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) evaluate(static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) evaluate(static_cast<std::size_t>(i));
  }

  std::vector<SubobjectT> out;
  for (std::size_t idx = 0; idx < na * nb; ++idx) {
    if (!errors[idx].empty()) throw Error(errors[idx]);
    if (!found[idx]) continue;
    if (!found[idx]->unique && policy_ == StructurePolicy::require_flags) {
      throw ExactnessViolation("restricted structure map is not unique (F(q) is not epi)");
    }
    const auto& q = quotients[idx / nb];
    const auto& sb = subs_b[idx % nb];
    Object sub{q.object, sb.object, found[idx]->value};
    out.push_back({sub, Morphism{sub, x, q.map, sb.mono}, PairKey{kernels[idx / nb], sb.key}});
  }
  return out;
}

std::vector<CoCommaMorphism> CoCommaCategory::hom_basis(const Object& x, const Object& y) const {
  const auto fa = A().hom_basis(y.a, x.a);
  const auto gb = B().hom_basis(x.b, y.b);
  std::vector<Vector> images;
  for (const auto& f : fa) images.push_back(C().flatten(C().compose(x.alpha, F_.apply(f))));
  for (const auto& g : gb) images.push_back(C().flatten(C().negate(C().compose(G_.apply(g), y.alpha))));
  const std::size_t len = C().flatten(C().zero_morphism(y.alpha.source, x.alpha.target)).size();
  const Subspace rel = detail::relation_space(modulus(), images, len);

  std::vector<Morphism> out;
  for (std::size_t r = 0; r < rel.dim(); ++r) {
    const Vector row = rel.basis().row(r);
    const Vector cf(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(fa.size()));
    const Vector cg(row.begin() + static_cast<std::ptrdiff_t>(fa.size()), row.end());
    out.push_back({x, y, A().linear_combination(y.a, x.a, fa, cf), B().linear_combination(x.b, y.b, gb, cg)});
  }
  return out;
}

Vector CoCommaCategory::flatten(const Morphism& m) const {
  Vector out = A().flatten(m.f);
  const Vector g = B().flatten(m.g);
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

CoCommaMorphism CoCommaCategory::linear_combination(const Object& x, const Object& y,
                                                    const std::vector<Morphism>& basis, const Vector& coeffs) const {
  std::vector<RepMorphism> fs, gs;
  for (const auto& m : basis) {
    fs.push_back(m.f);
    gs.push_back(m.g);
  }
  return {x, y, A().linear_combination(y.a, x.a, fs, coeffs), B().linear_combination(x.b, y.b, gs, coeffs)};
}

CoCommaObject CoCommaCategory::random_object(Rng& rng, std::size_t max_total_dim) const {
  RepObject a, b;
  if (rng.below(2) == 0) {
    a = A().random_object(rng, max_total_dim);
    b = B().random_object(rng, max_total_dim - a.total_dim());
  } else {
    b = B().random_object(rng, max_total_dim);
    a = A().random_object(rng, max_total_dim - b.total_dim());
  }
  return {a, b, random_morphism(C(), rng, F_.apply(a), G_.apply(b))};
}

std::vector<CoCommaObject> CoCommaCategory::enumerate_objects(std::size_t max_total_dim) const {
  const auto as = A().enumerate_objects(max_total_dim);
  const auto bs = B().enumerate_objects(max_total_dim);
  std::vector<Object> out;
  for (const auto& a : as) {
    const RepObject fa = F_.apply(a);
    for (const auto& b : bs) {
      if (a.total_dim() + b.total_dim() > max_total_dim) continue;
      for (auto& alpha : C().enumerate_morphisms(fa, G_.apply(b))) out.push_back({a, b, std::move(alpha)});
    }
  }
  return out;
}

std::vector<CoCommaMorphism> CoCommaCategory::enumerate_morphisms(const Object& x, const Object& y) const {
  const auto basis = hom_basis(x, y);
  std::vector<Morphism> out;
  for (const auto& coeffs : enumerate_vectors(modulus(), basis.size(), A().budget())) {
    out.push_back(linear_combination(x, y, basis, coeffs));
  }
  return out;
}

std::string CoCommaCategory::describe(const Object& x) const {
  std::ostringstream os;
  os << "(" << A().describe(x.a) << ", " << B().describe(x.b) << ", alpha=";
  for (std::size_t v = 0; v < x.alpha.components.size(); ++v) {
    os << (v ? ";" : "") << x.alpha.components[v].to_string();
  }
  os << ")";
  return os.str();
}

}  // namespace commacat
