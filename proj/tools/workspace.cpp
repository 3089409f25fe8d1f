#include "workspace.hpp"

namespace commacat::cli {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "commacat-workspace/1";

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::string str(const json& j, const char* key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_string()) throw SpecError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SpecError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

std::size_t count(const json& v, const std::string& where) {
  const auto n = integer(v, where);
  if (n < 0) throw SpecError(where + ": expected a nonnegative integer");
  return static_cast<std::size_t>(n);
}

std::vector<std::int64_t> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw SpecError(where + ": expected a list of integers");
  std::vector<std::int64_t> out;
  for (const auto& e : v) out.push_back(integer(e, where));
  return out;
}

Rational rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    if (auto r = Rational::parse(v.get<std::string>())) return *r;
  }
  throw SpecError(where + ": expected an integer or a rational string such as \"-3/2\"");
}

template <class Map>
const auto& lookup(const Map& m, const std::string& name, const char* kind, const std::string& where) {
  const auto it = m.find(name);
  if (it == m.end()) throw SpecError(where + ": unknown " + std::string(kind) + " '" + name + "'");
  return it->second;
}

/// [] is the zero matrix; otherwise exactly rows x cols integers.
Matrix matrix(const json& v, std::uint32_t p, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array()) throw SpecError(where + ": expected a matrix (list of rows)");
  if (v.empty()) return Matrix(p, rows, cols);
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (v.size() != rows) throw SpecError(where + ": expected a " + shape + " matrix");
  std::vector<std::vector<std::int64_t>> entries;
  for (const auto& row : v) {
    auto r = int_list(row, where);
    if (r.size() != cols) throw SpecError(where + ": expected a " + shape + " matrix");
    entries.push_back(std::move(r));
  }
  return Matrix::from_rows(p, rows, cols, entries);
}

/// Per-vertex components of a morphism x -> y in `cat`. A single-vertex
/// instance takes a bare matrix.
RepMorphism components(const RepCategory& cat, const RepObject& x, const RepObject& y, const json* v,
                       const std::string& where) {
  const std::size_t n = cat.quiver().vertex_count();
  std::vector<Matrix> comps;
  for (std::size_t i = 0; i < n; ++i) {
    const json* mv = nullptr;
    if (v && n == 1) mv = v;
    if (v && n > 1) {
      if (!v->is_array() || v->size() != n) throw SpecError(where + ": expected one matrix per vertex");
      mv = &(*v)[i];
    }
    comps.push_back(mv ? matrix(*mv, cat.modulus(), y.dims[i], x.dims[i], where) : Matrix(cat.modulus(), y.dims[i], x.dims[i]));
  }
  return cat.make_morphism(x, y, std::move(comps));
}

const json* optional_field(const json& j, const char* key) { return j.contains(key) ? &j.at(key) : nullptr; }

RepCategory parse_category(const json& j, std::uint32_t p, const Budget& budget, const std::string& name) {
  const std::string where = "categories." + name;
  const auto kind = str(j, "kind", where);
  if (kind == "finvect") return RepCategory(p, Quiver::point(), name, budget);
  if (kind != "quiver") throw SpecError(where + ": kind must be 'finvect' or 'quiver'");
  const std::size_t vertices = count(field(j, "vertices", where), where + ".vertices");
  std::vector<QuiverArrow> arrows;
  if (const json* a = optional_field(j, "arrows")) {
    for (const auto& e : *a) {
      const auto st = int_list(e, where + ".arrows");
      if (st.size() != 2 || st[0] < 0 || st[1] < 0) throw SpecError(where + ": arrows are [source, target] pairs");
      arrows.push_back({static_cast<std::size_t>(st[0]), static_cast<std::size_t>(st[1])});
    }
  }
  return RepCategory(p, Quiver(vertices, std::move(arrows)), name, budget);
}

RepObject parse_rep_object(const json& j, const RepCategory& cat, const std::string& where) {
  std::vector<std::size_t> dims;
  for (auto d : int_list(field(j, "dims", where), where + ".dims")) {
    if (d < 0) throw SpecError(where + ": negative dimension");
    dims.push_back(static_cast<std::size_t>(d));
  }
  if (dims.size() != cat.quiver().vertex_count()) throw SpecError(where + ": one dimension per vertex required");
  std::vector<Matrix> maps;
  const json* a = optional_field(j, "arrows");
  const auto& arrows = cat.quiver().arrows();
  if (a && (!a->is_array() || a->size() != arrows.size())) throw SpecError(where + ": one matrix per arrow required");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::size_t rows = dims[arrows[i].target];
    const std::size_t cols = dims[arrows[i].source];
    maps.push_back(a ? matrix((*a)[i], cat.modulus(), rows, cols, where + ".arrows") : Matrix(cat.modulus(), rows, cols));
  }
  return cat.make_object(std::move(dims), std::move(maps));
}

ExactnessFlags parse_flags(const json& j, ExactnessFlags flags, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!value.is_boolean()) throw SpecError(where + ".flags: values must be true or false");
    if (key == "additive") flags.additive = value.get<bool>();
    else if (key == "left_exact") flags.left_exact = value.get<bool>();
    else if (key == "right_exact") flags.right_exact = value.get<bool>();
    else throw SpecError(where + ".flags: unknown flag '" + key + "'");
  }
  return flags;
}

StabilityFunction coefficient_table(const json& v, const std::string& where) {
  if (!v.is_array()) throw SpecError(where + ": expected a list of [re, im] pairs");
  std::vector<GaussianRational> coeffs;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2) throw SpecError(where + ": expected [re, im] pairs");
    coeffs.push_back({rational(e[0], where), rational(e[1], where)});
  }
  return StabilityFunction(std::move(coeffs));
}

std::pair<const RepCategory*, const RepCategory*> sides(const Context& c) {
  return std::visit([](const auto& cat) { return std::make_pair(&cat.A(), &cat.B()); }, c);
}

std::size_t class_rank(const Context& c) {
  return std::visit([](const auto& cat) { return cat.class_rank(); }, c);
}

}  // namespace

const Context& Workspace::context(const std::string& name) const { return lookup(contexts, name, "context", "command"); }
const Named<AnyObject>& Workspace::object(const std::string& name) const {
  return lookup(objects, name, "object", "command");
}
const Named<AnyMorphism>& Workspace::morphism(const std::string& name) const {
  return lookup(morphisms, name, "morphism", "command");
}

Workspace load_workspace(const json& j, const Overrides& ov) {
  if (!j.is_object()) throw SpecError("workspace must be a JSON object");
  if (!j.contains("schema") || j.at("schema") != kSchema) {
    throw SpecError(std::string("workspace schema must be \"") + kSchema + "\"");
  }
  Workspace ws;
  ws.p = static_cast<std::uint32_t>(count(field(j, "field_modulus", "workspace"), "field_modulus"));
  try {
    checked_prime(ws.p);
  } catch (const Error& e) {
    throw SpecError(std::string("field_modulus: ") + e.what());
  }
  if (const json* s = optional_field(j, "seed")) ws.seed = count(*s, "seed");
  if (const json* b = optional_field(j, "budget")) {
    if (const json* v = optional_field(*b, "max_vectors")) ws.budget.max_vectors = count(*v, "budget.max_vectors");
    if (const json* v = optional_field(*b, "max_total_dim")) ws.budget.max_total_dim = count(*v, "budget.max_total_dim");
  }
  if (const json* v = optional_field(j, "validation")) {
    if (const json* s = optional_field(*v, "samples")) ws.validation.samples = count(*s, "validation.samples");
    if (const json* s = optional_field(*v, "functor_samples")) {
      ws.validation.functor_samples = count(*s, "validation.functor_samples");
    }
    if (const json* s = optional_field(*v, "max_total_dim")) {
      ws.validation.max_total_dim = count(*s, "validation.max_total_dim");
    }
  }
  if (ov.seed) ws.seed = *ov.seed;
  if (ov.max_vectors) ws.budget.max_vectors = *ov.max_vectors;
  if (ov.max_total_dim) ws.budget.max_total_dim = *ov.max_total_dim;

  const auto section = [&](const char* key) -> const json& {
    static const json empty = json::object();
    if (!j.contains(key)) return empty;
    if (!j.at(key).is_object()) throw SpecError(std::string(key) + " must be an object of named entries");
    return j.at(key);
  };

  std::string current = "workspace";
  try {
    for (const auto& [name, e] : section("categories").items()) ws.categories.emplace(name, parse_category(e, ws.p, ws.budget, name));

    for (const auto& [name, e] : section("rep_objects").items()) {
      const std::string where = "rep_objects." + name;
      current = where;
      const auto cat = str(e, "category", where);
      ws.rep_objects.insert({name, {cat, parse_rep_object(e, lookup(ws.categories, cat, "category", where), where)}});
    }

    for (const auto& [name, e] : section("functors").items()) {
      const std::string where = "functors." + name;
      current = where;
      const auto kind = parse_functor_kind(str(e, "kind", where));
      if (!kind) throw SpecError(where + ": unknown functor kind '" + str(e, "kind", where) + "'");
      const auto& source = lookup(ws.categories, str(e, "source", where), "category", where);
      FunctorParams params;
      if (const json* o = optional_field(e, "object")) {
        if (!o->is_string()) throw SpecError(where + ": object must name a rep_object");
        params.object = lookup(ws.rep_objects, o->get<std::string>(), "rep_object", where).value;
      }
      if (const json* v = optional_field(e, "index")) params.index = count(*v, where + ".index");
      if (const json* v = optional_field(e, "width")) params.width = count(*v, where + ".width");
      std::optional<RepCategory> target;
      if (const json* t = optional_field(e, "target")) {
        if (!t->is_string()) throw SpecError(where + ": target must name a category");
        target = lookup(ws.categories, t->get<std::string>(), "category", where);
      }
      Functor f(*kind, source, params, target, name);
      if (const json* fl = optional_field(e, "flags")) f.set_flags(parse_flags(*fl, f.flags(), where));
      ws.functors.emplace(name, std::move(f));
    }

    for (const auto& [name, e] : section("contexts").items()) {
      const std::string where = "contexts." + name;
      current = where;
      const auto kind = str(e, "kind", where);
      const auto& F = lookup(ws.functors, str(e, "F", where), "functor", where);
      const auto& G = lookup(ws.functors, str(e, "G", where), "functor", where);
      StructurePolicy policy = StructurePolicy::require_flags;
      if (const json* pv = optional_field(e, "policy")) {
        if (*pv == "attempt") policy = StructurePolicy::attempt;
        else if (*pv != "require_flags") throw SpecError(where + ": policy must be 'require_flags' or 'attempt'");
      }
      if (kind == "comma") ws.contexts.emplace(name, Context(std::in_place_type<CommaCategory>, F, G, policy, name));
      else if (kind == "cocomma") ws.contexts.emplace(name, Context(std::in_place_type<CoCommaCategory>, F, G, policy, name));
      else throw SpecError(where + ": kind must be 'comma' or 'cocomma'");
    }

    for (const auto& [name, e] : section("objects").items()) {
      const std::string where = "objects." + name;
      current = where;
      const auto ctx_name = str(e, "context", where);
      const auto& ctx = lookup(ws.contexts, ctx_name, "context", where);
      const auto [A, B] = sides(ctx);
      const auto& a = lookup(ws.rep_objects, str(e, "a", where), "rep_object", where);
      const auto& b = lookup(ws.rep_objects, str(e, "b", where), "rep_object", where);
      if (!(lookup(ws.categories, a.category, "category", where) == *A)) throw SpecError(where + ": a is not an object of A");
      if (!(lookup(ws.categories, b.category, "category", where) == *B)) throw SpecError(where + ": b is not an object of B");
      AnyObject obj = std::visit(
          [&](const auto& c) -> AnyObject {
            const auto fa = c.F().apply(a.value);
            const auto gb = c.G().apply(b.value);
            return c.make_object(a.value, b.value, components(c.C(), fa, gb, optional_field(e, "alpha"), where + ".alpha"));
          },
          ctx);
      ws.objects.insert({name, {ctx_name, std::move(obj)}});
    }

    for (const auto& [name, e] : section("morphisms").items()) {
      const std::string where = "morphisms." + name;
      current = where;
      const auto& src = lookup(ws.objects, str(e, "source", where), "object", where);
      const auto& tgt = lookup(ws.objects, str(e, "target", where), "object", where);
      if (src.context != tgt.context) throw SpecError(where + ": source and target live in different contexts");
      const auto& ctx = ws.contexts.at(src.context);
      AnyMorphism m = std::visit(
          [&](const auto& c) -> AnyMorphism {
            using O = typename std::decay_t<decltype(c)>::Object;
            const auto& x = std::get<O>(src.value);
            const auto& y = std::get<O>(tgt.value);
            if constexpr (std::is_same_v<O, CommaObject>) {
              return c.make_morphism(x, y, components(c.A(), x.a, y.a, optional_field(e, "f"), where + ".f"),
                                     components(c.B(), x.b, y.b, optional_field(e, "g"), where + ".g"));
            } else {
              // Co-comma: f runs y.a -> x.a.
              return c.make_morphism(x, y, components(c.A(), y.a, x.a, optional_field(e, "f"), where + ".f"),
                                     components(c.B(), x.b, y.b, optional_field(e, "g"), where + ".g"));
            }
          },
          ctx);
      ws.morphisms.insert({name, {src.context, std::move(m)}});
    }

    for (const auto& [name, e] : section("stability").items()) {
      const std::string where = "stability." + name;
      current = where;
      const auto ctx_name = str(e, "context", where);
      const auto& ctx = lookup(ws.contexts, ctx_name, "context", where);
      const auto [A, B] = sides(ctx);
      std::optional<StabilityFunction> z;
      if (const json* c = optional_field(e, "coefficients")) {
        z = coefficient_table(*c, where + ".coefficients");
      } else {
        const auto za = coefficient_table(field(e, "A", where), where + ".A");
        const auto zb = coefficient_table(field(e, "B", where), where + ".B");
        if (za.rank() != A->class_rank() || zb.rank() != B->class_rank()) {
          throw SpecError(where + ": A and B tables need one entry per simple of each side");
        }
        const json one = 1;
        const json* x = optional_field(e, "x");
        const json* y = optional_field(e, "y");
        z = make_comma_stability(za, zb, rational(x ? *x : one, where + ".x"), rational(y ? *y : one, where + ".y"));
      }
      if (z->rank() != class_rank(ctx)) throw SpecError(where + ": coefficient count does not match the class rank");
      ws.stability.insert({name, {ctx_name, *z}});
    }

    for (const auto& [name, e] : section("geometries").items()) {
      const std::string where = "geometries." + name;
      current = where;
      const auto ctx_name = str(e, "context", where);
      const auto& ctx = lookup(ws.contexts, ctx_name, "context", where);
      if (!std::holds_alternative<CommaCategory>(ctx)) throw SpecError(where + ": geometry needs a comma context");
      ToyGeometry g{int_list(field(e, "gamma", where), where + ".gamma"), int_list(field(e, "deg", where), where + ".deg"),
                    int_list(field(e, "rk", where), where + ".rk")};
      g.validate(std::get<CommaCategory>(ctx));
      ws.geometries.insert({name, {ctx_name, std::move(g)}});
    }
  } catch (const SpecError&) {
    throw;
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(current + ": " + e.what());
  }
  return ws;
}

}  // namespace commacat::cli
