#include "commacat/rep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "commacat/errors.hpp"

namespace commacat {

Quiver::Quiver(std::size_t vertices, std::vector<QuiverArrow> arrows)
    : vertices_(vertices), arrows_(std::move(arrows)) {
  if (vertices_ == 0) throw InvalidArgument("quiver needs at least one vertex");
  std::vector<std::size_t> indegree(vertices_, 0);
  for (const auto& a : arrows_) {
    if (a.source >= vertices_ || a.target >= vertices_) {
      throw InvalidArgument("quiver arrow endpoint out of range");
    }
    ++indegree[a.target];
  }
  // Kahn's algorithm, smallest vertex first for a canonical order.
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices_; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const auto it = std::min_element(ready.begin(), ready.end());
    const std::size_t v = *it;
    ready.erase(it);
    order_.push_back(v);
    for (const auto& a : arrows_) {
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
    }
  }
  if (order_.size() != vertices_) throw InvalidArgument("quiver has a directed cycle");
}

Quiver Quiver::linear(std::size_t n) {
  std::vector<QuiverArrow> arrows;
  for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
  return Quiver(n, std::move(arrows));
}

std::size_t RepObject::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

RepCategory::RepCategory(std::uint32_t p, Quiver quiver, std::string name, Budget budget)
    : p_(checked_prime(p)), quiver_(std::move(quiver)), name_(std::move(name)), budget_(budget) {
  if (name_.empty()) {
    name_ = is_finvect() ? "FinVect(F_" + std::to_string(p_) + ")" : "Rep(Q) over F_" + std::to_string(p_);
  }
}

RepCategory RepCategory::finvect(std::uint32_t p, Budget budget) {
  return RepCategory(p, Quiver::point(), {}, budget);
}

// ---------------------------------------------------------------------------
// construction

void RepCategory::check_object(const Object& x) const {
  if (x.dims.size() != quiver_.vertex_count() || x.arrow_maps.size() != quiver_.arrows().size()) {
    throw ForeignInstance("object does not belong to " + name_);
  }
  for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
    const auto& arr = quiver_.arrows()[a];
    const Matrix& m = x.arrow_maps[a];
    if (m.modulus() != p_ || m.rows() != x.dims[arr.target] || m.cols() != x.dims[arr.source]) {
      throw ForeignInstance("arrow map " + std::to_string(a) + " has the wrong shape for " + name_);
    }
  }
}

RepObject RepCategory::make_object(std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps) const {
  RepObject x{std::move(dims), std::move(arrow_maps)};
  try {
    check_object(x);
  } catch (const ForeignInstance& e) {
    throw ShapeMismatch(e.what());
  }
  return x;
}

RepObject RepCategory::vect(std::size_t dim) const {
  if (!is_finvect()) throw InvalidArgument("vect() needs a FinVect instance");
  return {{dim}, {}};
}

RepMorphism RepCategory::make_morphism(const Object& source, const Object& target,
                                       std::vector<Matrix> components) const {
  check_object(source);
  check_object(target);
  if (components.size() != quiver_.vertex_count()) throw ShapeMismatch("wrong number of components");
  for (std::size_t v = 0; v < components.size(); ++v) {
    const Matrix& c = components[v];
    if (c.modulus() != p_ || c.rows() != target.dims[v] || c.cols() != source.dims[v]) {
      throw ShapeMismatch("component " + std::to_string(v) + " is " + std::to_string(c.rows()) + "x" +
                          std::to_string(c.cols()) + ", expected " + std::to_string(target.dims[v]) + "x" +
                          std::to_string(source.dims[v]));
    }
  }
  for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
    const auto& arr = quiver_.arrows()[a];
    if (!(target.arrow_maps[a] * components[arr.source] == components[arr.target] * source.arrow_maps[a])) {
      throw NotAMorphism("components do not commute with arrow " + std::to_string(a));
    }
  }
  return {source, target, std::move(components)};
}

RepMorphism RepCategory::vect_map(const Matrix& m) const {
  if (!is_finvect()) throw InvalidArgument("vect_map() needs a FinVect instance");
  return make_morphism(vect(m.cols()), vect(m.rows()), {m});
}

RepObject RepCategory::simple(std::size_t v) const {
  if (v >= quiver_.vertex_count()) throw InvalidArgument("vertex out of range");
  std::vector<std::size_t> dims(quiver_.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : quiver_.arrows()) maps.emplace_back(p_, dims[a.target], dims[a.source]);
  return {dims, maps};
}

std::vector<RepObject> RepCategory::simples() const {
  std::vector<RepObject> out;
  for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) out.push_back(simple(v));
  return out;
}

RepObject RepCategory::projective(std::size_t v) const {
  if (v >= quiver_.vertex_count()) throw InvalidArgument("vertex out of range");
  // paths[w] = list of paths v -> w, each a sequence of arrow indices
  std::vector<std::vector<std::vector<std::size_t>>> paths(quiver_.vertex_count());
  paths[v].push_back({});
  for (std::size_t s : quiver_.topological_order()) {
    for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
      if (quiver_.arrows()[a].source != s) continue;
      for (const auto& path : paths[s]) {
        auto ext = path;
        ext.push_back(a);
        paths[quiver_.arrows()[a].target].push_back(std::move(ext));
      }
    }
  }
  std::vector<std::size_t> dims(quiver_.vertex_count());
  for (std::size_t w = 0; w < dims.size(); ++w) dims[w] = paths[w].size();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
    const auto& arr = quiver_.arrows()[a];
    Matrix m(p_, dims[arr.target], dims[arr.source]);
    for (std::size_t i = 0; i < paths[arr.source].size(); ++i) {
      auto ext = paths[arr.source][i];
      ext.push_back(a);
      const auto& targets = paths[arr.target];
      const auto j = static_cast<std::size_t>(std::find(targets.begin(), targets.end(), ext) - targets.begin());
      m(j, i) = 1;
    }
    maps.push_back(std::move(m));
  }
  return {dims, maps};
}

// ---------------------------------------------------------------------------
// structure

RepObject RepCategory::zero_object() const {
  std::vector<std::size_t> dims(quiver_.vertex_count(), 0);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) maps.emplace_back(p_, 0, 0);
  return {dims, maps};
}

RepMorphism RepCategory::identity(const Object& x) const {
  check_object(x);
  std::vector<Matrix> comps;
  for (auto d : x.dims) comps.push_back(Matrix::identity(p_, d));
  return {x, x, comps};
}

RepMorphism RepCategory::zero_morphism(const Object& x, const Object& y) const {
  check_object(x);
  check_object(y);
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < x.dims.size(); ++v) comps.emplace_back(p_, y.dims[v], x.dims[v]);
  return {x, y, comps};
}

RepMorphism RepCategory::compose(const Morphism& g, const Morphism& f) const {
  if (!(f.target == g.source)) throw ShapeMismatch("compose: target of f is not the source of g");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.components.size(); ++v) comps.push_back(g.components[v] * f.components[v]);
  return {f.source, g.target, comps};
}

RepMorphism RepCategory::add(const Morphism& a, const Morphism& b) const {
  if (!(a.source == b.source) || !(a.target == b.target)) throw ShapeMismatch("add: morphisms not parallel");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < a.components.size(); ++v) comps.push_back(a.components[v] + b.components[v]);
  return {a.source, a.target, comps};
}

RepMorphism RepCategory::negate(const Morphism& a) const {
  Morphism out = a;
  for (auto& c : out.components) c = c.scaled(p_ - 1);
  return out;
}

RepCategory::UniversalT RepCategory::subrep(const Object& x, const SubobjectKey& subspaces) const {
  if (subspaces.size() != quiver_.vertex_count()) throw ShapeMismatch("subrep: one subspace per vertex");
  std::vector<std::size_t> dims;
  for (const auto& s : subspaces) dims.push_back(s.dim());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
    const auto& arr = quiver_.arrows()[a];
    const Subspace& src = subspaces[arr.source];
    const Subspace& tgt = subspaces[arr.target];
    Matrix m(p_, tgt.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
      const Vector image = x.arrow_maps[a].apply(src.basis().row(j));
      if (!tgt.contains(image)) throw InvalidArgument("subspaces are not closed under arrow " + std::to_string(a));
      const Vector coords = tgt.coordinates(image);
      for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = coords[i];
    }
    maps.push_back(std::move(m));
  }
  Object sub{dims, maps};
  std::vector<Matrix> incl;
  for (const auto& s : subspaces) incl.push_back(s.inclusion());
  return {sub, Morphism{sub, x, incl}};
}

RepCategory::UniversalT RepCategory::quotient(const Object& x, const SubobjectKey& subspaces) const {
  if (subspaces.size() != quiver_.vertex_count()) throw ShapeMismatch("quotient: one subspace per vertex");
  std::vector<QuotientMap> qs;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < subspaces.size(); ++v) {
    qs.push_back(quotient_map(x.dims[v], subspaces[v]));
    dims.push_back(qs.back().quotient_dim);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
    const auto& arr = quiver_.arrows()[a];
    const Subspace& src = subspaces[arr.source];
    for (std::size_t j = 0; j < src.dim(); ++j) {
      if (!subspaces[arr.target].contains(x.arrow_maps[a].apply(src.basis().row(j)))) {
        throw InvalidArgument("quotient by a non-subrepresentation");
      }
    }
    maps.push_back(qs[arr.target].projection * x.arrow_maps[a] * qs[arr.source].section);
  }
  Object quot{dims, maps};
  std::vector<Matrix> proj;
  for (const auto& q : qs) proj.push_back(q.projection);
  return {quot, Morphism{x, quot, proj}};
}

RepCategory::SubobjectKey RepCategory::key_of_mono(const Morphism& mono) const {
  SubobjectKey key;
  for (const auto& c : mono.components) key.push_back(image_basis(c));
  return key;
}

RepCategory::UniversalT RepCategory::kernel(const Morphism& m) const {
  SubobjectKey ks;
  for (const auto& c : m.components) ks.push_back(kernel_basis(c));
  return subrep(m.source, ks);
}

RepCategory::UniversalT RepCategory::cokernel(const Morphism& m) const {
  return quotient(m.target, key_of_mono(m));
}

RepCategory::BiproductT RepCategory::biproduct(const Object& x, const Object& y) const {
  check_object(x);
  check_object(y);
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < x.dims.size(); ++v) dims.push_back(x.dims[v] + y.dims[v]);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < x.arrow_maps.size(); ++a) maps.push_back(direct_sum(x.arrow_maps[a], y.arrow_maps[a]));
  Object s{dims, maps};
  std::vector<Matrix> i1, i2, p1, p2;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    const Matrix ix = direct_sum(Matrix::identity(p_, x.dims[v]), Matrix(p_, y.dims[v], 0));
    const Matrix iy = direct_sum(Matrix(p_, x.dims[v], 0), Matrix::identity(p_, y.dims[v]));
    i1.push_back(ix);
    i2.push_back(iy);
    p1.push_back(ix.transpose());
    p2.push_back(iy.transpose());
  }
  return {s, {Morphism{x, s, i1}, Morphism{y, s, i2}}, {Morphism{s, x, p1}, Morphism{s, y, p2}}};
}

bool RepCategory::is_mono(const Morphism& m) const {
  for (const auto& c : m.components) {
    if (rank(c) != c.cols()) return false;
  }
  return true;
}

bool RepCategory::is_epi(const Morphism& m) const {
  for (const auto& c : m.components) {
    if (rank(c) != c.rows()) return false;
  }
  return true;
}

std::optional<Factorization> RepCategory::factor_left(const Morphism& m, const Morphism& r) const {
  if (!(m.target == r.target)) throw ShapeMismatch("factor_left: maps have different targets");
  std::vector<Matrix> comps;
  bool unique = true;
  for (std::size_t v = 0; v < m.components.size(); ++v) {
    auto sol = solve_left(m.components[v], r.components[v]);
    if (!sol) return std::nullopt;
    unique = unique && sol->unique;
    comps.push_back(std::move(sol->value));
  }
  try {
    return Factorization{make_morphism(r.source, m.source, std::move(comps)), unique};
  } catch (const NotAMorphism&) {
    return std::nullopt;
  }
}

std::optional<Factorization> RepCategory::factor_right(const Morphism& e, const Morphism& r) const {
  if (!(e.source == r.source)) throw ShapeMismatch("factor_right: maps have different sources");
  std::vector<Matrix> comps;
  bool unique = true;
  for (std::size_t v = 0; v < e.components.size(); ++v) {
    auto sol = solve_right(e.components[v], r.components[v]);
    if (!sol) return std::nullopt;
    unique = unique && sol->unique;
    comps.push_back(std::move(sol->value));
  }
  try {
    return Factorization{make_morphism(e.target, r.target, std::move(comps)), unique};
  } catch (const NotAMorphism&) {
    return std::nullopt;
  }
}

RepMorphism RepCategory::pair(const Morphism& u, const Morphism& v) const {
  const auto bp = biproduct(u.target, v.target);
  return add(compose(bp.injections[0], u), compose(bp.injections[1], v));
}

RepMorphism RepCategory::copair(const Morphism& u, const Morphism& v) const {
  const auto bp = biproduct(u.source, v.source);
  return add(compose(u, bp.projections[0]), compose(v, bp.projections[1]));
}

std::optional<RepMorphism> RepCategory::lift(const Morphism& mono, const Morphism& h) const {
  auto f = factor_left(mono, h);
  if (!f) return std::nullopt;
  return std::move(f->value);
}

std::optional<RepMorphism> RepCategory::descend(const Morphism& epi, const Morphism& h) const {
  auto f = factor_right(epi, h);
  if (!f) return std::nullopt;
  return std::move(f->value);
}

std::optional<RepMorphism> RepCategory::inverse(const Morphism& m) const {
  std::vector<Matrix> comps;
  for (const auto& c : m.components) {
    auto inv = commacat::inverse(c);
    if (!inv) return std::nullopt;
    comps.push_back(std::move(*inv));
  }
  return Morphism{m.target, m.source, comps};
}

// ---------------------------------------------------------------------------
// subobjects

namespace {

bool closed_under_arrows(const Quiver& q, const RepObject& x, const std::vector<const Subspace*>& key) {
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    const Subspace& src = *key[arr.source];
    const Subspace& tgt = *key[arr.target];
    for (std::size_t j = 0; j < src.dim(); ++j) {
      if (!tgt.contains(x.arrow_maps[a].apply(src.basis().row(j)))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<RepCategory::SubobjectKey> RepCategory::enumerate_subobject_keys(const Object& x,
                                                                             ExecutionPolicy policy) const {
  check_object(x);
  if (x.total_dim() > budget_.max_total_dim) {
    throw BudgetExceeded("object of total dimension " + std::to_string(x.total_dim()) +
                         " exceeds the per-object budget of " + std::to_string(budget_.max_total_dim));
  }
  std::vector<std::vector<Subspace>> per_vertex;
  std::size_t total = 1;
  for (auto d : x.dims) {
    per_vertex.push_back(enumerate_subspaces(p_, d, budget_));
    total *= per_vertex.back().size();
    if (total > budget_.max_vectors) {
      throw BudgetExceeded("subobject candidate grid exceeds budget of " + std::to_string(budget_.max_vectors));
    }
  }
  const std::size_t nv = per_vertex.size();
  auto decode = [&](std::size_t index) {
    std::vector<const Subspace*> key(nv);
    for (std::size_t v = nv; v-- > 0;) {
      key[v] = &per_vertex[v][index % per_vertex[v].size()];
      index /= per_vertex[v].size();
    }
    return key;
  };

  std::vector<char> keep(total, 0);
  const auto n = static_cast<std::ptrdiff_t>(total);
  if (policy == ExecutionPolicy::parallel && !quiver_.arrows().empty()) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      keep[static_cast<std::size_t>(i)] = closed_under_arrows(quiver_, x, decode(static_cast<std::size_t>(i)));
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      keep[static_cast<std::size_t>(i)] = closed_under_arrows(quiver_, x, decode(static_cast<std::size_t>(i)));
    }
  }

  std::vector<SubobjectKey> out;
  for (std::size_t i = 0; i < total; ++i) {
    if (!keep[i]) continue;
    SubobjectKey key;
    for (const Subspace* s : decode(i)) key.push_back(*s);
    out.push_back(std::move(key));
  }
  return out;
}

std::vector<RepCategory::SubobjectT> RepCategory::enumerate_subobjects(const Object& x,
                                                                       ExecutionPolicy policy) const {
  std::vector<SubobjectT> out;
  for (auto& key : enumerate_subobject_keys(x, policy)) {
    auto sub = subrep(x, key);
    out.push_back({std::move(sub.object), std::move(sub.map), std::move(key)});
  }
  return out;
}

bool RepCategory::sub_leq(const SubobjectKey& a, const SubobjectKey& b) const {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (!b[v].contains(a[v])) return false;
  }
  return true;
}

ClassVector RepCategory::cls(const Object& x) const {
  ClassVector c;
  for (auto d : x.dims) c.coords.push_back(static_cast<std::int64_t>(d));
  return c;
}

// ---------------------------------------------------------------------------
// Hom spaces

Subspace RepCategory::hom_space(const Object& x, const Object& y) const {
  check_object(x);
  check_object(y);
  std::vector<std::size_t> offset(x.dims.size() + 1, 0);
  for (std::size_t v = 0; v < x.dims.size(); ++v) offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
  const std::size_t unknowns = offset.back();

  std::size_t rows = 0;
  for (const auto& a : quiver_.arrows()) rows += y.dims[a.target] * x.dims[a.source];
  Matrix constraints(p_, rows, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
    const auto [s, t] = quiver_.arrows()[a];
    const Matrix& ya = y.arrow_maps[a];  // y_t x y_s
    const Matrix& xa = x.arrow_maps[a];  // x_t x x_s
    // (ya * phi_s - phi_t * xa)(i, j) = 0 for i < y_t, j < x_s
    for (std::size_t i = 0; i < y.dims[t]; ++i) {
      for (std::size_t j = 0; j < x.dims[s]; ++j, ++row) {
        for (std::size_t k = 0; k < y.dims[s]; ++k) {
          const std::size_t idx = offset[s] + k * x.dims[s] + j;
          constraints(row, idx) = fp::add(constraints(row, idx), ya(i, k), p_);
        }
        for (std::size_t k = 0; k < x.dims[t]; ++k) {
          const std::size_t idx = offset[t] + i * x.dims[t] + k;
          constraints(row, idx) = fp::sub(constraints(row, idx), xa(k, j), p_);
        }
      }
    }
  }
  return kernel_basis(constraints);
}

std::vector<RepMorphism> RepCategory::hom_basis(const Object& x, const Object& y) const {
  const Subspace h = hom_space(x, y);
  std::vector<Morphism> out;
  for (std::size_t r = 0; r < h.dim(); ++r) out.push_back(unflatten(x, y, h.basis().row(r)));
  return out;
}

Vector RepCategory::hom_coordinates(const Morphism& m) const {
  return hom_space(m.source, m.target).coordinates(flatten(m));
}

Vector RepCategory::flatten(const Morphism& m) const {
  Vector out;
  for (const auto& c : m.components) out.insert(out.end(), c.data().begin(), c.data().end());
  return out;
}

RepMorphism RepCategory::unflatten(const Object& x, const Object& y, const Vector& flat) const {
  std::vector<Matrix> comps;
  std::size_t pos = 0;
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    Matrix c(p_, y.dims[v], x.dims[v]);
    for (std::size_t r = 0; r < c.rows(); ++r) {
      for (std::size_t col = 0; col < c.cols(); ++col) c(r, col) = flat.at(pos++);
    }
    comps.push_back(std::move(c));
  }
  if (pos != flat.size()) throw ShapeMismatch("unflatten: length mismatch");
  return {x, y, comps};
}

RepMorphism RepCategory::linear_combination(const Object& x, const Object& y, const std::vector<Morphism>& basis,
                                            const Vector& coeffs) const {
  if (basis.size() != coeffs.size()) throw ShapeMismatch("linear_combination: coefficient count");
  Morphism acc = zero_morphism(x, y);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t v = 0; v < acc.components.size(); ++v) {
      acc.components[v] = acc.components[v] + basis[i].components[v].scaled(coeffs[i]);
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// sampling

RepObject RepCategory::random_object(Rng& rng, std::size_t max_total_dim) const {
  const std::size_t nv = quiver_.vertex_count();
  std::vector<std::size_t> dims(nv, 0);
  const std::size_t total = rng.below(max_total_dim + 1);
  for (std::size_t i = 0; i < total; ++i) ++dims[rng.below(nv)];
  std::vector<Matrix> maps;
  for (const auto& a : quiver_.arrows()) {
    Matrix m(p_, dims[a.target], dims[a.source]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rng.field_element(p_);
    }
    maps.push_back(std::move(m));
  }
  return {dims, maps};
}

std::vector<RepObject> RepCategory::enumerate_objects(std::size_t max_total_dim) const {
  const std::size_t nv = quiver_.vertex_count();
  std::vector<RepObject> out;
  std::vector<std::size_t> dims(nv, 0);
  // all dimension vectors with sum <= max_total_dim, lexicographic
  std::vector<std::vector<std::size_t>> dim_vectors;
  auto rec = [&](auto&& self, std::size_t v, std::size_t remaining) -> void {
    if (v == nv) {
      dim_vectors.push_back(dims);
      return;
    }
    for (std::size_t d = 0; d <= remaining; ++d) {
      dims[v] = d;
      self(self, v + 1, remaining - d);
    }
    dims[v] = 0;
  };
  rec(rec, 0, max_total_dim);
  std::sort(dim_vectors.begin(), dim_vectors.end(), [](const auto& a, const auto& b) {
    const auto sa = std::accumulate(a.begin(), a.end(), std::size_t{0});
    const auto sb = std::accumulate(b.begin(), b.end(), std::size_t{0});
    return sa != sb ? sa < sb : a < b;
  });
  for (const auto& dv : dim_vectors) {
    std::size_t entries = 0;
    for (const auto& a : quiver_.arrows()) entries += dv[a.target] * dv[a.source];
    for (const Vector& flat : enumerate_vectors(p_, entries, budget_)) {
      std::vector<Matrix> maps;
      std::size_t pos = 0;
      for (const auto& a : quiver_.arrows()) {
        Matrix m(p_, dv[a.target], dv[a.source]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
          for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = flat[pos++];
        }
        maps.push_back(std::move(m));
      }
      out.push_back({dv, maps});
    }
  }
  return out;
}

std::vector<RepMorphism> RepCategory::enumerate_morphisms(const Object& x, const Object& y) const {
  const auto basis = hom_basis(x, y);
  std::vector<Morphism> out;
  for (const Vector& coeffs : enumerate_vectors(p_, basis.size(), budget_)) {
    out.push_back(linear_combination(x, y, basis, coeffs));
  }
  return out;
}

std::string RepCategory::describe(const Object& x) const {
  std::ostringstream os;
  if (is_finvect()) {
    os << "k^" << x.dims[0];
    return os.str();
  }
  os << "(";
  for (std::size_t v = 0; v < x.dims.size(); ++v) os << (v ? "," : "") << x.dims[v];
  os << ")";
  for (std::size_t a = 0; a < x.arrow_maps.size(); ++a) os << " a" << a << "=" << x.arrow_maps[a].to_string();
  return os.str();
}

}  // namespace commacat
