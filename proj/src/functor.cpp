#include "commacat/functor.hpp"

#include <functional>
#include <map>

#include "commacat/errors.hpp"

namespace commacat {

namespace {

const std::map<std::string, FunctorKind>& kind_names() {
  static const std::map<std::string, FunctorKind> names = {
      {"identity", FunctorKind::identity},       {"zero", FunctorKind::zero},
      {"hom_from", FunctorKind::hom_from},       {"hom_into", FunctorKind::hom_into},
      {"eval_vertex", FunctorKind::eval_vertex}, {"arrow_kernel", FunctorKind::arrow_kernel},
      {"arrow_cokernel", FunctorKind::arrow_cokernel}, {"tensor", FunctorKind::tensor},
      {"one_plus", FunctorKind::one_plus},       {"constant", FunctorKind::constant},
  };
  return names;
}

RepCategory derived_target(FunctorKind kind, const RepCategory& source, const std::optional<RepCategory>& target) {
  switch (kind) {
    case FunctorKind::identity:
    case FunctorKind::tensor:
      return source;
    case FunctorKind::zero:
    case FunctorKind::constant:
      if (!target) throw InvalidArgument(to_string(kind) + " functor needs an explicit target instance");
      return *target;
    default:
      return RepCategory::finvect(source.modulus(), source.budget());
  }
}

}  // namespace

std::string to_string(FunctorKind kind) {
  for (const auto& [name, k] : kind_names()) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<FunctorKind> parse_functor_kind(const std::string& name) {
  const auto it = kind_names().find(name);
  if (it == kind_names().end()) return std::nullopt;
  return it->second;
}

ExactnessFlags Functor::default_flags(FunctorKind kind, const RepCategory& source, const FunctorParams& params) {
  switch (kind) {
    case FunctorKind::identity:
    case FunctorKind::zero:
    case FunctorKind::eval_vertex:
    case FunctorKind::tensor:
      return {true, true, true};
    case FunctorKind::hom_from:
    case FunctorKind::arrow_kernel:
      return {true, true, false};
    case FunctorKind::arrow_cokernel:
      return {true, false, true};
    case FunctorKind::hom_into:
      // Hom(-, W) always sends right-exact sequences to left-exact ones; it is
      // exact when W is injective, which holds for every space in FinVect.
      return {true, source.is_finvect(), true};
    case FunctorKind::one_plus:
      return {false, false, false};
    case FunctorKind::constant: {
      const bool zero = params.object && params.object->total_dim() == 0;
      return {zero, zero, zero};
    }
  }
  return {};
}

Functor::Functor(FunctorKind kind, RepCategory source, FunctorParams params, std::optional<RepCategory> target,
                 std::string name)
    : kind_(kind),
      source_(source),
      target_(derived_target(kind, source, target)),
      params_(std::move(params)),
      flags_(default_flags(kind, source, params_)),
      name_(name.empty() ? to_string(kind) : std::move(name)) {
  switch (kind_) {
    case FunctorKind::hom_from:
    case FunctorKind::hom_into:
      if (!params_.object) throw InvalidArgument(to_string(kind_) + " needs a fixed object");
      source_.check_object(*params_.object);
      break;
    case FunctorKind::constant:
      if (!params_.object) throw InvalidArgument("constant functor needs a value object");
      target_.check_object(*params_.object);
      break;
    case FunctorKind::eval_vertex:
      if (params_.index >= source_.quiver().vertex_count()) throw InvalidArgument("eval_vertex: vertex out of range");
      break;
    case FunctorKind::arrow_kernel:
    case FunctorKind::arrow_cokernel:
      if (params_.index >= source_.quiver().arrows().size()) throw InvalidArgument(to_string(kind_) + ": arrow out of range");
      break;
    case FunctorKind::tensor:
      if (params_.width == 0) throw InvalidArgument("tensor width must be positive");
      break;
    case FunctorKind::one_plus:
      if (!source_.is_finvect()) throw InvalidArgument("one_plus is defined on FinVect only");
      break;
    default:
      break;
  }
  if (target_.modulus() != source_.modulus()) throw InvalidArgument("functor between different fields");
}

RepObject Functor::apply(const RepObject& x) const {
  source_.check_object(x);
  switch (kind_) {
    case FunctorKind::identity:
      return x;
    case FunctorKind::zero:
      return target_.zero_object();
    case FunctorKind::hom_from:
      return target_.vect(source_.hom_space(*params_.object, x).dim());
    case FunctorKind::hom_into:
      return target_.vect(source_.hom_space(x, *params_.object).dim());
    case FunctorKind::eval_vertex:
      return target_.vect(x.dims[params_.index]);
    case FunctorKind::arrow_kernel:
      return target_.vect(kernel_basis(x.arrow_maps[params_.index]).dim());
    case FunctorKind::arrow_cokernel: {
      const Matrix& m = x.arrow_maps[params_.index];
      return target_.vect(m.rows() - rank(m));
    }
    case FunctorKind::tensor: {
      RepObject out = x;
      for (std::size_t i = 1; i < params_.width; ++i) out = source_.biproduct(out, x).object;
      return out;
    }
    case FunctorKind::one_plus:
      return target_.vect(1 + x.dims[0]);
    case FunctorKind::constant:
      return *params_.object;
  }
  throw InvalidArgument("unknown functor kind");
}

RepMorphism Functor::apply(const RepMorphism& m) const {
  const std::uint32_t p = source_.modulus();
  const RepObject fx = apply(m.source);
  const RepObject fy = apply(m.target);
  switch (kind_) {
    case FunctorKind::identity:
      return m;
    case FunctorKind::zero:
      return target_.zero_morphism(fx, fy);
    case FunctorKind::hom_from: {
      const Subspace hy = source_.hom_space(*params_.object, m.target);
      const auto basis = source_.hom_basis(*params_.object, m.source);
      Matrix out(p, hy.dim(), basis.size());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Vector c = hy.coordinates(source_.flatten(source_.compose(m, basis[j])));
        for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
      }
      return {fx, fy, {out}};
    }
    case FunctorKind::hom_into: {
      const Subspace hx = source_.hom_space(m.source, *params_.object);
      const auto basis = source_.hom_basis(m.target, *params_.object);
      Matrix out(p, hx.dim(), basis.size());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Vector c = hx.coordinates(source_.flatten(source_.compose(basis[j], m)));
        for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
      }
      return {fy, fx, {out}};
    }
    case FunctorKind::eval_vertex:
      return {fx, fy, {m.components[params_.index]}};
    case FunctorKind::arrow_kernel: {
      const auto s = source_.quiver().arrows()[params_.index].source;
      const Subspace kx = kernel_basis(m.source.arrow_maps[params_.index]);
      const Subspace ky = kernel_basis(m.target.arrow_maps[params_.index]);
      Matrix out(p, ky.dim(), kx.dim());
      for (std::size_t j = 0; j < kx.dim(); ++j) {
        const Vector c = ky.coordinates(m.components[s].apply(kx.basis().row(j)));
        for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
      }
      return {fx, fy, {out}};
    }
    case FunctorKind::arrow_cokernel: {
      const auto t = source_.quiver().arrows()[params_.index].target;
      const Matrix& xa = m.source.arrow_maps[params_.index];
      const Matrix& ya = m.target.arrow_maps[params_.index];
      const QuotientMap qx = quotient_map(xa.rows(), image_basis(xa));
      const QuotientMap qy = quotient_map(ya.rows(), image_basis(ya));
      return {fx, fy, {qy.projection * m.components[t] * qx.section}};
    }
    case FunctorKind::tensor: {
      std::vector<Matrix> comps = m.components;
      for (std::size_t i = 1; i < params_.width; ++i) {
        for (std::size_t v = 0; v < comps.size(); ++v) comps[v] = direct_sum(comps[v], m.components[v]);
      }
      return {fx, fy, comps};
    }
    case FunctorKind::one_plus:
      return {fx, fy, {direct_sum(Matrix::identity(p, 1), m.components[0])}};
    case FunctorKind::constant:
      return target_.identity(*params_.object);
  }
  throw InvalidArgument("unknown functor kind");
}

// ---------------------------------------------------------------------------
// auditing

bool FunctorReport::clean() const {
  for (const auto& f : findings) {
    if (f.violation()) return false;
  }
  return true;
}

const Finding& FunctorReport::get(const std::string& property) const {
  for (const auto& f : findings) {
    if (f.property == property) return f;
  }
  throw InvalidArgument("no finding named " + property);
}

ShortExactSequence<RepMorphism> standard_split_ses(const RepCategory& finvect) {
  const std::uint32_t p = finvect.modulus();
  return {finvect.vect_map(Matrix::from_rows(p, 2, 1, {{1}, {0}})),
          finvect.vect_map(Matrix::from_rows(p, 1, 2, {{0, 1}}))};
}

namespace {

class Recorder {
 public:
  Recorder(std::string property, bool claimed) : finding_{std::move(property), claimed, true, 0, {}} {}
  void record(bool ok, const std::function<std::string()>& detail) {
    ++finding_.probes;
    if (!ok && finding_.holds) {
      finding_.holds = false;
      finding_.detail = detail();
    }
  }
  const Finding& finding() const { return finding_; }

 private:
  Finding finding_;
};

std::string dims_of(const RepObject& x) {
  std::string s = "(";
  for (std::size_t v = 0; v < x.dims.size(); ++v) s += (v ? "," : "") + std::to_string(x.dims[v]);
  return s + ")";
}

std::string describe_ses(const ShortExactSequence<RepMorphism>& s) {
  return "0 -> " + dims_of(s.sub.source) + " -> " + dims_of(s.sub.target) + " -> " + dims_of(s.quot.target) + " -> 0";
}

// Middle exactness of U --a--> V --b--> W, vertexwise.
bool middle_exact(const RepMorphism& a, const RepMorphism& b, const std::string& a_name, const std::string& b_name,
                  std::string& why) {
  if (!(a.target == b.source)) {
    why = "image sequence is not composable";
    return false;
  }
  for (std::size_t v = 0; v < a.components.size(); ++v) {
    const Subspace im = image_basis(a.components[v]);
    const Subspace ker = kernel_basis(b.components[v]);
    if (!(im == ker)) {
      why = "Im F(" + a_name + ") has dim " + std::to_string(im.dim()) + " but Ker F(" + b_name + ") has dim " +
            std::to_string(ker.dim()) + (a.components.size() > 1 ? " at vertex " + std::to_string(v) : "");
      return false;
    }
  }
  return true;
}

void probe_ses(const Functor& f, const ShortExactSequence<RepMorphism>& s, Recorder& left, Recorder& right) {
  const RepCategory& t = f.target();
  const RepMorphism fsub = f.apply(s.sub);
  const RepMorphism fquot = f.apply(s.quot);
  // Image sequence in arrow order.
  const RepMorphism& first = f.contravariant() ? fquot : fsub;
  const RepMorphism& second = f.contravariant() ? fsub : fquot;
  const std::string first_name = f.contravariant() ? "quot" : "sub";
  const std::string second_name = f.contravariant() ? "sub" : "quot";
  std::string why;
  const bool mid = middle_exact(first, second, first_name, second_name, why);
  const bool first_mono = t.is_mono(first);
  const bool second_epi = t.is_epi(second);
  const std::string where = " on " + describe_ses(s);
  // Covariant: left = 0 -> F(X) -> F(Y) -> F(Z), right = F(X) -> F(Y) -> F(Z) -> 0.
  // Contravariant: right = 0 -> F(Z) -> F(Y) -> F(X), left = F(Z) -> F(Y) -> F(X) -> 0.
  Recorder& mono_side = f.contravariant() ? right : left;
  Recorder& epi_side = f.contravariant() ? left : right;
  mono_side.record(mid && first_mono, [&] {
    return (mid ? "F(" + first_name + ") is not mono" : why) + where;
  });
  epi_side.record(mid && second_epi, [&] {
    return (mid ? "F(" + second_name + ") is not epi" : why) + where;
  });
}

}  // namespace

FunctorReport check_functor(const Functor& f, const FunctorCheckOptions& options) {
  const RepCategory& s = f.source();
  const RepCategory& t = f.target();
  Recorder identity("identity", true);
  Recorder composition("composition", true);
  Recorder additivity("additivity", f.flags().additive);
  Recorder left("left_exact", f.flags().left_exact);
  Recorder right("right_exact", f.flags().right_exact);

  auto check_identity = [&](const RepObject& x) {
    identity.record(f.apply(s.identity(x)) == t.identity(f.apply(x)),
                    [&] { return "F(id) != id on " + s.describe(x); });
  };
  auto check_additive = [&](const RepMorphism& a, const RepMorphism& b) {
    additivity.record(f.apply(s.add(a, b)) == t.add(f.apply(a), f.apply(b)), [&] {
      return "F(f + g) != F(f) + F(g) for maps " + s.describe(a.source) + " -> " + s.describe(a.target);
    });
  };
  auto check_composition = [&](const RepMorphism& a, const RepMorphism& b) {
    const RepMorphism lhs = f.apply(s.compose(b, a));
    const RepMorphism rhs = f.contravariant() ? t.compose(f.apply(a), f.apply(b)) : t.compose(f.apply(b), f.apply(a));
    composition.record(lhs == rhs, [&] { return "F(g o f) != F(g) o F(f) through " + s.describe(a.target); });
  };
  auto subobject_ses = [&](const RepObject& y) {
    std::vector<ShortExactSequence<RepMorphism>> out;
    for (const auto& sub : s.enumerate_subobjects(y, ExecutionPolicy::serial)) out.push_back(ses_of_mono(s, sub.mono));
    return out;
  };

  for (const auto& ses : options.extra_ses) probe_ses(f, ses, left, right);

  // Exhaustive probes.
  const auto objects = s.enumerate_objects(options.exhaustive_max_dim);
  for (const auto& x : objects) {
    check_identity(x);
    for (const auto& ses : subobject_ses(x)) probe_ses(f, ses, left, right);
    for (const auto& y : objects) {
      const auto maps = s.enumerate_morphisms(x, y);
      for (const auto& a : maps) {
        for (const auto& b : maps) check_additive(a, b);
      }
    }
  }

  // Sampled probes.
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const auto x = s.random_object(rng, options.sample_max_dim);
    const auto y = s.random_object(rng, options.sample_max_dim);
    const auto z = s.random_object(rng, options.sample_max_dim);
    const auto a = random_morphism(s, rng, x, y);
    const auto a2 = random_morphism(s, rng, x, y);
    const auto b = random_morphism(s, rng, y, z);
    check_identity(x);
    check_composition(a, b);
    check_additive(a, a2);
    const auto subs = s.enumerate_subobjects(y, ExecutionPolicy::serial);
    probe_ses(f, ses_of_mono(s, subs[rng.below(subs.size())].mono), left, right);
  }

  return {f.name(), {identity.finding(), composition.finding(), additivity.finding(), left.finding(), right.finding()}};
}

}  // namespace commacat
