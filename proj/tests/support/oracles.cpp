#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace commacat::oracles {

namespace {
bool interval_semistable(const SubobjectLattice& L, const StabilityFunction& z, std::size_t lo, std::size_t hi) {
  const Slope mu = slope(z, L.classes[hi] - L.classes[lo]);
  for (std::size_t t = 0; t < L.size(); ++t) {
    if (L.less(lo, t) && L.less(t, hi) && slope(z, L.classes[t] - L.classes[lo]) > mu) return false;
  }
  return true;
}
}  // namespace

std::vector<std::vector<std::size_t>> hn_chains(const SubobjectLattice& L, const StabilityFunction& z) {
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> chain{L.bottom};
  std::function<void(std::optional<Slope>)> extend = [&](std::optional<Slope> last) {
    const std::size_t cur = chain.back();
    if (cur == L.top) {
      found.push_back(chain);
      return;
    }
    for (std::size_t s = 0; s < L.size(); ++s) {
      if (!L.less(cur, s)) continue;
      const Slope mu = slope(z, L.classes[s] - L.classes[cur]);
      if (last && !(mu < *last)) continue;
      if (!interval_semistable(L, z, cur, s)) continue;
      chain.push_back(s);
      extend(mu);
      chain.pop_back();
    }
  };
  extend(std::nullopt);
  return found;
}

std::set<std::vector<ClassVector>> jh_multisets(const SubobjectLattice& L) {
  std::set<std::vector<ClassVector>> out;
  std::vector<ClassVector> factors;
  std::function<void(std::size_t)> walk = [&](std::size_t cur) {
    if (cur == L.top) {
      auto m = factors;
      std::sort(m.begin(), m.end());
      out.insert(m);
      return;
    }
    for (std::size_t s = 0; s < L.size(); ++s) {
      if (!L.covers(cur, s)) continue;
      factors.push_back(L.classes[s] - L.classes[cur]);
      walk(s);
      factors.pop_back();
    }
  };
  walk(L.bottom);
  return out;
}

namespace {
std::int64_t total(const std::vector<std::int64_t>& f, const ClassVector& c, std::size_t offset) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * c.coords[offset + i];
  return s;
}

std::vector<ClassVector> type_at(const SubobjectLattice& L, const ToyGeometry& g, const Rational& alpha) {
  const auto z = z_alpha(g, alpha);
  const auto chains = hn_chains(L, z);
  if (chains.size() != 1) throw Error("brute-force HN is not unique at alpha = " + alpha.to_string());
  std::vector<ClassVector> type;
  for (std::size_t i = 1; i < chains[0].size(); ++i) type.push_back(L.classes[chains[0][i]] - L.classes[chains[0][i - 1]]);
  return type;
}
}  // namespace

WallGrid wall_grid(const CommaCategory& c, const CommaObject& x, const ToyGeometry& g, const Rational& lo,
                   const Rational& hi) {
  const auto subs = c.enumerate_subobjects(x, ExecutionPolicy::serial);
  const auto L = make_lattice(c, subs, ExecutionPolicy::serial);
  const ClassVector whole = c.cls(x);
  const std::size_t na = c.A().class_rank();
  const std::int64_t gamma_tot = total(g.gamma, whole, 0);
  const std::int64_t rk_tot = total(g.rk, whole, na);

  // Subquotient values lie in [0, total]; every crossing denominator is a
  // nonzero |g1 r2 - g2 r1| over that box.
  WallGrid out;
  for (std::int64_t g1 = 0; g1 <= gamma_tot; ++g1) {
    for (std::int64_t g2 = 0; g2 <= gamma_tot; ++g2) {
      for (std::int64_t r1 = 0; r1 <= rk_tot; ++r1) {
        for (std::int64_t r2 = 0; r2 <= rk_tot; ++r2) {
          const std::int64_t d = std::abs(g1 * r2 - g2 * r1);
          if (d != 0) out.lcm = std::lcm(out.lcm, d);
        }
      }
    }
  }
  const Rational step(1, out.lcm);
  const Rational half(1, 2 * out.lcm);
  // First multiple of 1/N strictly above lo.
  std::int64_t j = (lo * Rational(out.lcm)).num() / (lo * Rational(out.lcm)).den() + 1;
  for (Rational p(j, out.lcm); p < hi; p += step) {
    const Rational left = std::max(p - half, (lo + p) / Rational(2));
    const Rational right = std::min(p + half, (p + hi) / Rational(2));
    const auto below = type_at(L, g, left);
    const auto at = type_at(L, g, p);
    const auto above = type_at(L, g, right);
    out.probes += 3;
    if (below != at || at != above) out.walls.insert(p);
  }
  return out;
}

}  // namespace commacat::oracles
