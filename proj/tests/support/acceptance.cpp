#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <sstream>

#include "commacat/jordan_holder.hpp"
#include "commacat/kgroup.hpp"
#include "commacat/wall_scan.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace commacat::acceptance {

namespace {

constexpr std::size_t kMaxViolations = 5;

CriterionResult start(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL);
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

/// Runs body(i, report) for i in [0, n) in parallel, merging reports in index order.
VerificationReport parallel_reports(std::size_t n, const std::function<void(std::size_t, VerificationReport&)>& body) {
  std::vector<VerificationReport> parts(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i, parts[i]);
    } catch (const std::exception& e) {
      parts[i].expect(false, "exception", std::string(e.what()) + " [item " + std::to_string(i) + "]");
    }
  }
  VerificationReport all;
  for (const auto& p : parts) all.merge(p);
  return all;
}

void finish(CriterionResult& r, const VerificationReport& rep, bool extra_ok = true) {
  r.checks += rep.checks;
  r.pass = rep.ok() && extra_ok;
  for (std::size_t i = 0; i < rep.violations.size() && r.violations.size() < kMaxViolations; ++i) {
    r.violations.push_back(rep.violations[i].check + ": " + rep.violations[i].detail);
  }
}

std::vector<ClassVector> step_classes(const auto& c, const auto& filtration) {
  std::vector<ClassVector> out;
  for (const auto& s : filtration.steps) out.push_back(c.cls(s.object));
  return out;
}

// --- 1 ---------------------------------------------------------------------
CriterionResult abelianness(std::uint64_t seed) {
  auto r = start(1, "abelianness suite");
  const auto fv = fixtures::finvect();
  const auto q = fixtures::a2();
  const std::vector<CommaCategory> contexts{
      CommaCategory(Functor::identity(fv), Functor::identity(fv), {}, "id/id"),
      CommaCategory(Functor::tensor(fv, 2), Functor::identity(fv), {}, "tensor2/id"),
      CommaCategory(Functor::identity(fv), Functor::hom_from(q, q.projective(0)), {}, "id/hom(P0,-)"),
      CommaCategory(Functor::tensor(fv, 2), Functor::hom_from(q, q.projective(0)), {}, "tensor2/hom(P0,-)")};
  constexpr std::size_t kSamples = 500;
  VerificationReport all;
  std::size_t nonzero = 0;
  for (std::size_t ci = 0; ci < contexts.size(); ++ci) {
    const auto& c = contexts[ci];
    std::vector<char> nz(kSamples, 0);
    all.merge(parallel_reports(kSamples, [&](std::size_t i, VerificationReport& rep) {
      Rng rng(mix(seed, 1000 + ci, i));
      const auto x = c.random_object(rng, 4);
      const auto y = (i % 2 == 0) ? x : c.random_object(rng, 4);
      const auto m = random_morphism(c, rng, x, y);
      nz[i] = !is_zero_morphism(c, m);
      verify_morphism_structure(c, m, rng, 2, 4, rep, c.name() + " #" + std::to_string(i));
    }));
    nonzero += static_cast<std::size_t>(std::count(nz.begin(), nz.end(), 1));
  }
  finish(r, all);
  r.detail = std::to_string(contexts.size()) + " contexts x " + std::to_string(kSamples) + " morphisms (" +
             std::to_string(nonzero) + " nonzero), " + std::to_string(all.violations.size()) + " failures";
  return r;
}

// --- 2 ---------------------------------------------------------------------
CriterionResult kgroup(std::uint64_t seed) {
  auto r = start(2, "K-group decomposition");
  const std::vector<CommaCategory> contexts{fixtures::arrow(), fixtures::toy()};
  constexpr std::size_t kSes = 100;
  constexpr std::size_t kAlpha = 50;
  VerificationReport all;
  for (std::size_t ci = 0; ci < contexts.size(); ++ci) {
    const auto& c = contexts[ci];
    all.merge(parallel_reports(kSes, [&](std::size_t i, VerificationReport& rep) {
      Rng rng(mix(seed, 2000 + ci, i));
      ShortExactSequence<CommaMorphism> s;
      if (i % 4 == 3) {
        const auto bp = c.biproduct(c.random_object(rng, 2), c.random_object(rng, 2));
        s = {bp.injections[0], bp.projections[1]};
      } else {
        const auto x = c.random_object(rng, 4);
        const auto subs = c.enumerate_subobjects(x, ExecutionPolicy::serial);
        s = ses_of_mono(c, subs[rng.below(subs.size())].mono);
      }
      rep.merge(verify_additivity<CommaCategory>(c, {s}, [&](const CommaObject& o) { return c.cls(o); }));
      const auto d = decompose(c, c.target(s.sub));
      rep.expect(d.verified, "decompose.witness", "witness SES failed for " + c.describe(c.target(s.sub)));
    }));
    all.merge(parallel_reports(kAlpha, [&](std::size_t i, VerificationReport& rep) {
      Rng rng(mix(seed, 2100 + ci, i));
      for (int attempt = 0; attempt < 50; ++attempt) {
        const auto a = c.A().random_object(rng, 2);
        const auto b = c.B().random_object(rng, 2);
        const auto fa = c.F().apply(a);
        const auto gb = c.G().apply(b);
        const auto alpha = random_morphism(c.C(), rng, fa, gb);
        if (is_zero_morphism(c.C(), alpha)) continue;
        const auto x = c.make_object(a, b, alpha);
        rep.expect(c.cls(x) == c.cls(c.make_object(a, b)), "cls.alpha_independent",
                   "cls depends on alpha for " + c.describe(x));
        const auto d = decompose(c, x);
        rep.expect(d.verified && ClassVector::concat(d.a, d.b) == c.cls(x), "decompose.witness",
                   "witness SES failed for " + c.describe(x));
        return;
      }
      rep.expect(false, "cls.alpha_independent", "no nonzero alpha found");
    }));
  }
  finish(r, all);
  r.detail = std::to_string(kSes * contexts.size()) + " sequences, " + std::to_string(kAlpha * contexts.size()) +
             " nonzero alpha, " + std::to_string(all.violations.size()) + " failures";
  return r;
}

// --- 3 ---------------------------------------------------------------------
CriterionResult hn_correctness(std::uint64_t) {
  auto r = start(3, "HN correctness");
  const auto c = fixtures::arrow();
  const auto z = fixtures::arrow_stability();
  const auto objects = c.enumerate_objects(4);
  std::vector<std::size_t> steps(objects.size(), 0);
  const auto all = parallel_reports(objects.size(), [&](std::size_t i, VerificationReport& rep) {
    const auto& x = objects[i];
    if (c.is_zero(x)) return;
    const auto subs = c.enumerate_subobjects(x, ExecutionPolicy::serial);
    const auto L = make_lattice(c, subs, ExecutionPolicy::serial);
    const auto chains = oracles::hn_chains(L, z);
    rep.expect(chains.size() == 1, "hn.unique",
               std::to_string(chains.size()) + " brute-force HN filtrations for " + c.describe(x));
    const auto hn = hn_filtration(z, c, x, ExecutionPolicy::serial);
    steps[i] = hn.filtration.length();
    if (chains.size() != 1) return;
    bool same = hn.filtration.steps.size() == chains[0].size();
    for (std::size_t j = 0; same && j < chains[0].size(); ++j) same = hn.filtration.steps[j].key == subs[chains[0][j]].key;
    rep.expect(same, "hn.greedy_equals_brute_force", "greedy HN differs for " + c.describe(x));
  });
  finish(r, all);
  const auto multi = std::count_if(steps.begin(), steps.end(), [](std::size_t s) { return s > 1; });
  r.detail = std::to_string(objects.size() - 1) + " nonzero objects, " + std::to_string(multi) +
             " with more than one factor, " + std::to_string(all.violations.size()) + " mismatches";
  return r;
}

// --- 4 ---------------------------------------------------------------------
CriterionResult restriction(std::uint64_t) {
  auto r = start(4, "restriction theorem");
  struct Case {
    CommaCategory c;
    StabilityFunction z;
  };
  const std::vector<Case> cases{{fixtures::arrow(), fixtures::arrow_stability()},
                                {fixtures::quiver_side(), fixtures::quiver_side_stability()}};
  VerificationReport all;
  std::size_t count = 0;
  std::size_t nontrivial = 0;
  for (const auto& [c, z] : cases) {
    const auto za = restrict_comma_stability(z, c.A().class_rank()).first;
    const auto objects = c.A().enumerate_objects(4);
    std::vector<char> multi(objects.size(), 0);
    all.merge(parallel_reports(objects.size(), [&](std::size_t i, VerificationReport& rep) {
      const auto& a = objects[i];
      if (c.A().is_zero(a)) return;
      const auto lifted = hn_filtration(z, c, c.make_object(a, c.B().zero_object()), ExecutionPolicy::serial);
      const auto direct = hn_filtration(za, c.A(), a, ExecutionPolicy::serial);
      std::vector<ClassVector> expected;
      for (const auto& cl : step_classes(c.A(), direct.filtration)) {
        expected.push_back(ClassVector::concat(cl, c.B().cls(c.B().zero_object())));
      }
      multi[i] = direct.filtration.length() > 1;
      rep.expect(step_classes(c, lifted.filtration) == expected, "hn.restriction",
                 "HN of (A,0,0) differs from HN of A for A = " + c.A().describe(a) + " in " + c.name());
    }));
    count += objects.size() - 1;
    nontrivial += static_cast<std::size_t>(std::count(multi.begin(), multi.end(), 1));
  }
  finish(r, all);
  r.detail = std::to_string(count) + " objects A over 2 contexts (" + std::to_string(nontrivial) +
             " with nontrivial HN), " + std::to_string(all.violations.size()) + " mismatches";
  return r;
}

// --- 5 ---------------------------------------------------------------------
template <class Cat>
VerificationReport jh_sweep(const Cat& c, std::size_t& count) {
  const auto objects = c.enumerate_objects(4);
  count += objects.size();
  return parallel_reports(objects.size(), [&](std::size_t i, VerificationReport& rep) {
    const auto& x = objects[i];
    const std::string where = " for " + c.describe(x) + " in " + c.name();
    const auto base = jh_filtration(c, x, SelectionPolicy::canonical(), ExecutionPolicy::serial);
    const auto ms = base.factor_multiset();
    for (std::uint64_t s = 1; s <= 5; ++s) {
      rep.expect(jh_filtration(c, x, SelectionPolicy::seeded(s * 7919 + i), ExecutionPolicy::serial).factor_multiset() == ms,
                 "jh.multiset_invariant", "seed " + std::to_string(s) + where);
    }
    const auto subs = c.enumerate_subobjects(x, ExecutionPolicy::serial);
    const auto every = oracles::jh_multisets(make_lattice(c, subs, ExecutionPolicy::serial));
    rep.expect(every.size() == 1 && *every.begin() == ms, "jh.exhaustive", "composition series disagree" + where);
    const std::size_t la = jh_filtration(c.A(), x.a, SelectionPolicy::canonical(), ExecutionPolicy::serial).length();
    const std::size_t lb = jh_filtration(c.B(), x.b, SelectionPolicy::canonical(), ExecutionPolicy::serial).length();
    rep.expect(base.length() == la + lb, "jh.length_additive",
               std::to_string(base.length()) + " != " + std::to_string(la) + " + " + std::to_string(lb) + where);
  });
}

CriterionResult jordan_holder(std::uint64_t) {
  auto r = start(5, "JH suite");
  std::size_t count = 0;
  VerificationReport all = jh_sweep(fixtures::arrow(), count);
  all.merge(jh_sweep(fixtures::toy(), count));
  all.merge(jh_sweep(fixtures::framed(), count));
  finish(r, all);
  r.detail = std::to_string(count) + " objects over 3 contexts, 6 policies each, " +
             std::to_string(all.violations.size()) + " failures";
  return r;
}

// --- 6 ---------------------------------------------------------------------
CriterionResult counterexample(std::uint64_t seed) {
  auto r = start(6, "counterexample reproduction");
  const auto fv = fixtures::finvect();
  FunctorCheckOptions opts;
  opts.samples = 0;
  opts.exhaustive_max_dim = 0;
  opts.seed = seed;
  opts.extra_ses = {standard_split_ses(fv)};
  const auto fr = check_functor(Functor::one_plus(fv), opts);
  const auto& right = fr.get("right_exact");
  const bool not_right_exact = !right.holds;

  const auto c = fixtures::one_plus_zero();
  VerificationReport rep = verify_category(c, 200, seed, 3);
  rep.merge(check_product_equivalence(c, 2));
  finish(r, rep, not_right_exact && !c.abelian_capable());
  if (!not_right_exact) r.violations.insert(r.violations.begin(), "one_plus passed the right-exactness probe");
  r.checks += right.probes;
  r.detail = "one_plus right exact: " + std::string(right.holds ? "yes" : "no") +
             (right.detail.empty() ? "" : " (" + right.detail + ")") + "; (one_plus / zero) suite " +
             std::to_string(rep.checks) + " checks, " + std::to_string(rep.violations.size()) + " failures";
  return r;
}

// --- 7 ---------------------------------------------------------------------
CriterionResult cocomma(std::uint64_t seed) {
  auto r = start(7, "co-comma suite");
  const auto c = fixtures::framed();
  const auto& A = c.A();
  const auto& B = c.B();
  const auto& C = c.C();
  constexpr std::size_t kSamples = 100;
  VerificationReport all = parallel_reports(kSamples, [&](std::size_t i, VerificationReport& rep) {
    Rng rng(mix(seed, 7000, i));
    const auto x = c.random_object(rng, 4);
    const auto y = (i % 2 == 0) ? x : c.random_object(rng, 4);
    const auto m = random_morphism(c, rng, x, y);
    const std::string where = " [#" + std::to_string(i) + "]";

    const auto ker = c.kernel(m);
    const auto cok_f = A.cokernel(m.f);
    const auto ker_g = B.kernel(m.g);
    rep.expect(ker.object.a == cok_f.object && ker.object.b == ker_g.object, "kernel.carrier",
               "kernel is not (Coker f, Ker g, beta)" + where);
    rep.expect(C.compose(ker.object.alpha, c.F().apply(cok_f.map)) == C.compose(c.G().apply(ker_g.map), x.alpha),
               "kernel.beta", "beta o F(coker f) != G(ker g) o alpha" + where);

    const auto cok = c.cokernel(m);
    const auto ker_f = A.kernel(m.f);
    const auto cok_g = B.cokernel(m.g);
    rep.expect(cok.object.a == ker_f.object && cok.object.b == cok_g.object, "cokernel.carrier",
               "cokernel is not (Ker f, Coker g, gamma)" + where);
    rep.expect(C.compose(c.G().apply(cok_g.map), cok.object.alpha) == C.compose(y.alpha, c.F().apply(ker_f.map)),
               "cokernel.gamma", "G(coker g) o gamma != alpha' o F(ker f)" + where);
    verify_morphism_structure(c, m, rng, 2, 3, rep, "framed #" + std::to_string(i));
  });

  // mono <=> (f epi, g mono), by kernel vanishing and by cancellation against
  // every object of total dimension <= 1 (a nonzero kernel contains a simple).
  const auto objects = c.enumerate_objects(3);
  std::vector<CoCommaObject> probes;
  for (const auto& z : objects) {
    if (c.total_dim(z) <= 1) probes.push_back(z);
  }
  std::size_t morphisms = 0;
  std::vector<std::size_t> counts(objects.size() * objects.size(), 0);
  all.merge(parallel_reports(objects.size() * objects.size(), [&](std::size_t k, VerificationReport& rep) {
    const auto& x = objects[k / objects.size()];
    const auto& y = objects[k % objects.size()];
    for (const auto& m : c.enumerate_morphisms(x, y)) {
      ++counts[k];
      const bool predicate = A.is_epi(m.f) && B.is_mono(m.g);
      bool cancels = true;
      for (const auto& z : probes) {
        for (const auto& h : c.enumerate_morphisms(z, x)) {
          if (!is_zero_morphism(c, h) && is_zero_morphism(c, c.compose(m, h))) cancels = false;
        }
      }
      rep.expect(kernel_vanishes(c, m) == predicate && cancels == predicate, "mono.characterization",
                 "mono test disagrees for a morphism " + c.describe(x) + " -> " + c.describe(y));
    }
  }));
  for (auto n : counts) morphisms += n;
  finish(r, all);
  r.detail = std::to_string(kSamples) + " sampled morphisms, " + std::to_string(morphisms) +
             " exhaustive morphisms at total dim <= 3, " + std::to_string(all.violations.size()) + " failures";
  return r;
}

// --- 8 ---------------------------------------------------------------------
std::string set_string(const std::set<Rational>& s) {
  std::string out = "{";
  for (const auto& a : s) out += (out.size() > 1 ? ", " : "") + a.to_string();
  return out + "}";
}

CriterionResult wall_scan(std::uint64_t) {
  auto r = start(8, "wall scan");
  const auto c = fixtures::toy();
  const auto x = fixtures::toy_system(c);
  const auto g = fixtures::toy_geometry();
  const Rational lo(0);
  const Rational hi(6);
  std::set<Rational> scanned;
  std::set<Rational> scaled;
  for (const auto& w : alpha_scan(c, x, g, lo, hi).walls) scanned.insert(w.alpha);
  for (const auto& w : alpha_scan(c, x, g.scaled(2), lo, hi).walls) scaled.insert(w.alpha);
  const auto grid = oracles::wall_grid(c, x, g, lo, hi);
  VerificationReport rep;
  rep.expect(scanned == grid.walls, "walls.oracle",
             "scan " + set_string(scanned) + " but grid oracle " + set_string(grid.walls));
  rep.expect(scaled == scanned, "walls.scaled", "scaled scan " + set_string(scaled) + " vs " + set_string(scanned));
  finish(r, rep);
  r.checks += grid.probes;
  r.detail = "walls " + set_string(scanned) + " on (0,6); oracle grid step 1/" + std::to_string(2 * grid.lcm) +
             " gives " + set_string(grid.walls) + "; scaled Z gives " + set_string(scaled);
  return r;
}

}  // namespace

std::vector<CriterionResult> run(std::uint64_t seed, const std::vector<int>& only) {
  using Fn = CriterionResult (*)(std::uint64_t);
  const std::vector<std::pair<int, Fn>> all{{1, abelianness},   {2, kgroup},         {3, hn_correctness},
                                           {4, restriction},   {5, jordan_holder},  {6, counterexample},
                                           {7, cocomma},       {8, wall_scan}};
  std::vector<CriterionResult> out;
  for (const auto& [id, fn] : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
      res = fn(seed);
    } catch (const std::exception& e) {
      res = start(id, "criterion " + std::to_string(id));
      res.detail = std::string("aborted: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(res));
  }
  return out;
}

std::string fingerprint(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.id << '|' << r.title << '|' << r.pass << '|' << r.checks << '|' << r.detail;
    for (const auto& v : r.violations) os << '|' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace commacat::acceptance
