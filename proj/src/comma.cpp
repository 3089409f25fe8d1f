#include "commacat/comma.hpp"

#include <sstream>

#include "commacat/errors.hpp"

namespace commacat {

CommaCategory::CommaCategory(Functor F, Functor G, StructurePolicy policy, std::string name)
    : F_(std::move(F)), G_(std::move(G)), policy_(policy), name_(std::move(name)) {
  if (F_.contravariant() || G_.contravariant()) throw InvalidArgument("comma category needs covariant F and G");
  if (!(F_.target() == G_.target())) throw InvalidArgument("F and G must share their target instance");
  if (A().modulus() != B().modulus()) throw InvalidArgument("A and B are over different fields");
  if (name_.empty()) name_ = "(" + F_.name() + "/" + G_.name() + ")";
}

void CommaCategory::require_capability(const char* what) const {
  if (policy_ == StructurePolicy::attempt || abelian_capable()) return;
  throw CapabilityMissing(std::string(what) + " in " + name_ + " needs F right exact and G left exact (F: " +
                          (F_.flags().right_exact ? "yes" : "no") + ", G: " + (G_.flags().left_exact ? "yes" : "no") +
                          ")");
}

// ---------------------------------------------------------------------------
// construction

void CommaCategory::check_object(const Object& x) const {
  A().check_object(x.a);
  B().check_object(x.b);
  if (!(x.alpha.source == F_.apply(x.a)) || !(x.alpha.target == G_.apply(x.b))) {
    throw ForeignInstance("structure map does not go from F(a) to G(b) in " + name_);
  }
}

CommaObject CommaCategory::make_object(const RepObject& a, const RepObject& b, const RepMorphism& alpha) const {
  const RepObject fa = F_.apply(a);
  const RepObject gb = G_.apply(b);
  if (!(alpha.source.dims == fa.dims) || !(alpha.target.dims == gb.dims)) {
    throw ShapeMismatch("alpha must go from F(a) to G(b)");
  }
  return {a, b, C().make_morphism(fa, gb, alpha.components)};
}

CommaObject CommaCategory::make_object(const RepObject& a, const RepObject& b) const {
  return {a, b, C().zero_morphism(F_.apply(a), G_.apply(b))};
}

CommaMorphism CommaCategory::make_morphism(const Object& x, const Object& y, const RepMorphism& f,
                                           const RepMorphism& g) const {
  const RepMorphism ff = A().make_morphism(x.a, y.a, f.components);
  const RepMorphism gg = B().make_morphism(x.b, y.b, g.components);
  if (!(C().compose(y.alpha, F_.apply(ff)) == C().compose(G_.apply(gg), x.alpha))) {
    throw NotAMorphism("square alpha' o F(f) = G(g) o alpha does not commute");
  }
  return {x, y, ff, gg};
}

// ---------------------------------------------------------------------------
// structure

CommaObject CommaCategory::zero_object() const { return make_object(A().zero_object(), B().zero_object()); }

CommaMorphism CommaCategory::identity(const Object& x) const {
  return {x, x, A().identity(x.a), B().identity(x.b)};
}

CommaMorphism CommaCategory::zero_morphism(const Object& x, const Object& y) const {
  return {x, y, A().zero_morphism(x.a, y.a), B().zero_morphism(x.b, y.b)};
}

CommaMorphism CommaCategory::compose(const Morphism& second, const Morphism& first) const {
  if (!(first.target == second.source)) throw ShapeMismatch("compose: morphisms are not composable");
  return {first.source, second.target, A().compose(second.f, first.f), B().compose(second.g, first.g)};
}

CommaMorphism CommaCategory::add(const Morphism& u, const Morphism& v) const {
  if (!(u.source == v.source) || !(u.target == v.target)) throw ShapeMismatch("add: morphisms not parallel");
  return {u.source, u.target, A().add(u.f, v.f), B().add(u.g, v.g)};
}

CommaCategory::UniversalT CommaCategory::kernel(const Morphism& m) const {
  require_capability("kernel");
  const auto kf = A().kernel(m.f);
  const auto kg = B().kernel(m.g);
  const RepMorphism rhs = C().compose(m.source.alpha, F_.apply(kf.map));
  const auto beta = C().factor_left(G_.apply(kg.map), rhs);
  if (!beta) throw ExactnessViolation("kernel: alpha o F(ker f) does not factor through G(ker g)");
  if (!beta->unique && policy_ == StructurePolicy::require_flags) {
    throw ExactnessViolation("kernel: connecting morphism beta is not unique (G(ker g) is not mono)");
  }
  Object k{kf.object, kg.object, beta->value};
  return {k, Morphism{k, m.source, kf.map, kg.map}};
}

CommaCategory::UniversalT CommaCategory::cokernel(const Morphism& m) const {
  require_capability("cokernel");
  const auto cf = A().cokernel(m.f);
  const auto cg = B().cokernel(m.g);
  const RepMorphism rhs = C().compose(G_.apply(cg.map), m.target.alpha);
  const auto gamma = C().factor_right(F_.apply(cf.map), rhs);
  if (!gamma) throw ExactnessViolation("cokernel: G(coker g) o alpha' does not factor through F(coker f)");
  if (!gamma->unique && policy_ == StructurePolicy::require_flags) {
    throw ExactnessViolation("cokernel: connecting morphism gamma is not unique (F(coker f) is not epi)");
  }
  Object q{cf.object, cg.object, gamma->value};
  return {q, Morphism{m.target, q, cf.map, cg.map}};
}

CommaCategory::BiproductT CommaCategory::biproduct(const Object& x, const Object& y) const {
  const auto ba = A().biproduct(x.a, y.a);
  const auto bb = B().biproduct(x.b, y.b);
  const RepMorphism e = C().copair(F_.apply(ba.injections[0]), F_.apply(ba.injections[1]));
  const RepMorphism r = C().copair(C().compose(G_.apply(bb.injections[0]), x.alpha),
                                   C().compose(G_.apply(bb.injections[1]), y.alpha));
  const auto beta = C().factor_right(e, r);
  if (!beta) throw ExactnessViolation("biproduct: no beta with beta o F(i_j) = G(i_j) o alpha_j");
  if (!beta->unique && policy_ == StructurePolicy::require_flags) {
    throw ExactnessViolation("biproduct: beta is not unique (F is not additive)");
  }
  Object s{ba.object, bb.object, beta->value};
  return {s,
          {Morphism{x, s, ba.injections[0], bb.injections[0]}, Morphism{y, s, ba.injections[1], bb.injections[1]}},
          {Morphism{s, x, ba.projections[0], bb.projections[0]}, Morphism{s, y, ba.projections[1], bb.projections[1]}}};
}

std::optional<CommaMorphism> CommaCategory::lift(const Morphism& mono, const Morphism& h) const {
  auto f = A().lift(mono.f, h.f);
  auto g = B().lift(mono.g, h.g);
  if (!f || !g) return std::nullopt;
  try {
    return make_morphism(h.source, mono.source, *f, *g);
  } catch (const NotAMorphism&) {
    return std::nullopt;
  }
}

std::optional<CommaMorphism> CommaCategory::descend(const Morphism& epi, const Morphism& h) const {
  auto f = A().descend(epi.f, h.f);
  auto g = B().descend(epi.g, h.g);
  if (!f || !g) return std::nullopt;
  try {
    return make_morphism(epi.target, h.target, *f, *g);
  } catch (const NotAMorphism&) {
    return std::nullopt;
  }
}

std::optional<CommaMorphism> CommaCategory::inverse(const Morphism& m) const {
  auto f = A().inverse(m.f);
  auto g = B().inverse(m.g);
  if (!f || !g) return std::nullopt;
  return Morphism{m.target, m.source, *f, *g};
}

// ---------------------------------------------------------------------------
// subobjects

std::vector<CommaCategory::SubobjectT> CommaCategory::enumerate_subobjects(const Object& x,
                                                                           ExecutionPolicy policy) const {
  require_capability("subobject enumeration");
  check_object(x);
  const auto subs_a = A().enumerate_subobjects(x.a, policy);
  const auto subs_b = B().enumerate_subobjects(x.b, policy);
  const std::size_t na = subs_a.size();
  const std::size_t nb = subs_b.size();
  if (na * nb > A().budget().max_vectors) {
    throw BudgetExceeded("comma subobject candidates (" + std::to_string(na * nb) + ") exceed the budget");
  }
  // alpha o F(i_A') and G(i_B') are shared across candidate pairs.
  std::vector<RepMorphism> restricted;
  for (const auto& s : subs_a) restricted.push_back(C().compose(x.alpha, F_.apply(s.mono)));
  std::vector<RepMorphism> g_incl;
  for (const auto& s : subs_b) g_incl.push_back(G_.apply(s.mono));

  std::vector<std::optional<Factorization>> found(na * nb);
  std::vector<std::string> errors(na * nb);
  auto evaluate = [&](std::size_t idx) {
    try {
      found[idx] = C().factor_left(g_incl[idx % nb], restricted[idx / nb]);
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
      throw ExactnessViolation("restricted structure map is not unique (G(i_B') is not mono)");
    }
    const auto& sa = subs_a[idx / nb];
    const auto& sb = subs_b[idx % nb];
    Object sub{sa.object, sb.object, found[idx]->value};
    out.push_back({sub, Morphism{sub, x, sa.mono, sb.mono}, PairKey{sa.key, sb.key}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hom spaces and sampling

std::vector<CommaMorphism> CommaCategory::hom_basis(const Object& x, const Object& y) const {
  const auto fa = A().hom_basis(x.a, y.a);
  const auto gb = B().hom_basis(x.b, y.b);
  std::vector<Vector> images;
  for (const auto& f : fa) images.push_back(C().flatten(C().compose(y.alpha, F_.apply(f))));
  for (const auto& g : gb) images.push_back(C().flatten(C().negate(C().compose(G_.apply(g), x.alpha))));
  const std::size_t len = C().flatten(C().zero_morphism(x.alpha.source, y.alpha.target)).size();
  const Subspace rel = detail::relation_space(modulus(), images, len);

  std::vector<Morphism> out;
  for (std::size_t r = 0; r < rel.dim(); ++r) {
    const Vector row = rel.basis().row(r);
    const Vector cf(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(fa.size()));
    const Vector cg(row.begin() + static_cast<std::ptrdiff_t>(fa.size()), row.end());
    Morphism m{x, y, A().linear_combination(x.a, y.a, fa, cf), B().linear_combination(x.b, y.b, gb, cg)};
    // Only a non-additive F can make the linearized solution fail the square.
    if (F_.flags().additive || C().compose(y.alpha, F_.apply(m.f)) == C().compose(G_.apply(m.g), x.alpha)) {
      out.push_back(std::move(m));
    }
  }
  return out;
}

Vector CommaCategory::flatten(const Morphism& m) const {
  Vector out = A().flatten(m.f);
  const Vector g = B().flatten(m.g);
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

CommaMorphism CommaCategory::linear_combination(const Object& x, const Object& y, const std::vector<Morphism>& basis,
                                                const Vector& coeffs) const {
  std::vector<RepMorphism> fs, gs;
  for (const auto& m : basis) {
    fs.push_back(m.f);
    gs.push_back(m.g);
  }
  return {x, y, A().linear_combination(x.a, y.a, fs, coeffs), B().linear_combination(x.b, y.b, gs, coeffs)};
}

CommaObject CommaCategory::random_object(Rng& rng, std::size_t max_total_dim) const {
  RepObject a, b;
  if (rng.below(2) == 0) {
    a = A().random_object(rng, max_total_dim);
    b = B().random_object(rng, max_total_dim - a.total_dim());
  } else {
    b = B().random_object(rng, max_total_dim);
    a = A().random_object(rng, max_total_dim - b.total_dim());
  }
  const RepMorphism alpha = random_morphism(C(), rng, F_.apply(a), G_.apply(b));
  return {a, b, alpha};
}

std::vector<CommaObject> CommaCategory::enumerate_objects(std::size_t max_total_dim) const {
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

std::vector<CommaMorphism> CommaCategory::enumerate_morphisms(const Object& x, const Object& y) const {
  const auto basis = hom_basis(x, y);
  std::vector<Morphism> out;
  for (const auto& coeffs : enumerate_vectors(modulus(), basis.size(), A().budget())) {
    out.push_back(linear_combination(x, y, basis, coeffs));
  }
  return out;
}

std::pair<ShortExactSequence<RepMorphism>, ShortExactSequence<RepMorphism>> CommaCategory::extract_component_ses(
    const ShortExactSequence<Morphism>& s) const {
  ShortExactSequence<RepMorphism> sa{s.sub.f, s.quot.f};
  ShortExactSequence<RepMorphism> sb{s.sub.g, s.quot.g};
  if (!verify_ses(A(), sa)) throw InvalidArgument("A-component sequence is not short exact");
  if (!verify_ses(B(), sb)) throw InvalidArgument("B-component sequence is not short exact");
  return {sa, sb};
}

std::string CommaCategory::describe(const Object& x) const {
  std::ostringstream os;
  os << "(" << A().describe(x.a) << ", " << B().describe(x.b) << ", alpha=";
  for (std::size_t v = 0; v < x.alpha.components.size(); ++v) {
    os << (v ? ";" : "") << x.alpha.components[v].to_string();
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

VerificationReport check_product_equivalence(const CommaCategory& c, std::size_t max_total_dim) {
  VerificationReport report;
  const auto as = c.A().enumerate_objects(max_total_dim);
  const auto bs = c.B().enumerate_objects(max_total_dim);
  std::vector<CommaObject> objects;
  for (const auto& a : as) {
    for (const auto& b : bs) {
      if (a.total_dim() + b.total_dim() > max_total_dim) continue;
      const auto structures = c.C().enumerate_morphisms(c.F().apply(a), c.G().apply(b));
      report.expect(structures.size() == 1, "equivalence.objects",
                    "more than one comma object over " + c.A().describe(a) + ", " + c.B().describe(b));
      objects.push_back(c.make_object(a, b));
    }
  }
  for (const auto& x : objects) {
    for (const auto& y : objects) {
      const std::string where = " [" + c.describe(x) + " -> " + c.describe(y) + "]";
      const auto fs = c.A().enumerate_morphisms(x.a, y.a);
      const auto gs = c.B().enumerate_morphisms(x.b, y.b);
      const auto ms = c.enumerate_morphisms(x, y);
      report.expect(ms.size() == fs.size() * gs.size(), "equivalence.faithful_full",
                    "Hom set size differs from Hom_A x Hom_B" + where);
      for (const auto& f : fs) {
        for (const auto& g : gs) {
          try {
            const auto m = c.make_morphism(x, y, f, g);
            const auto k = c.kernel(m);
            report.expect(k.map.f == c.A().kernel(f).map && k.map.g == c.B().kernel(g).map, "equivalence.kernel",
                          "kernel is not componentwise" + where);
            const auto q = c.cokernel(m);
            report.expect(q.map.f == c.A().cokernel(f).map && q.map.g == c.B().cokernel(g).map,
                          "equivalence.cokernel", "cokernel is not componentwise" + where);
          } catch (const Error& e) {
            report.expect(false, "equivalence.full", std::string(e.what()) + where);
          }
        }
      }
      try {
        const auto bp = c.biproduct(x, y);
        report.expect(bp.object.a == c.A().biproduct(x.a, y.a).object && bp.object.b == c.B().biproduct(x.b, y.b).object,
                      "equivalence.biproduct", "biproduct is not componentwise" + where);
      } catch (const Error& e) {
        report.expect(false, "equivalence.biproduct", std::string(e.what()) + where);
      }
    }
  }
  return report;
}

}  // namespace commacat
