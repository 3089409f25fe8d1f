#pragma once

// Simple objects, composition series and length.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "commacat/cocomma.hpp"
#include "commacat/comma.hpp"
#include "commacat/lattice.hpp"
#include "commacat/random.hpp"
#include "commacat/stability.hpp"

namespace commacat {

template <AbelianInstance C>
bool is_simple(const C& c, const typename C::Object& x) {
  return !c.is_zero(x) && c.enumerate_subobjects(x).size() == 2;
}

/// Which covering subobject to take next: the first in canonical order, or a
/// seeded random one.
struct SelectionPolicy {
  std::optional<std::uint64_t> seed;
  static SelectionPolicy canonical() { return {}; }
  static SelectionPolicy seeded(std::uint64_t s) { return {s}; }
};

/// A maximal chain of the lattice chosen per policy.
std::vector<std::size_t> composition_chain(const SubobjectLattice& lattice, const SelectionPolicy& policy);

template <AbelianInstance C>
struct JHFiltration {
  Filtration<C> filtration;
  std::size_t length() const { return filtration.length(); }
  /// The factor classes, sorted.
  std::vector<ClassVector> factor_multiset() const {
    auto m = filtration.factor_classes;
    std::sort(m.begin(), m.end());
    return m;
  }
};

/// Composition series; every factor is checked simple (throws Error if not).
/// The zero object gets the empty series.
template <AbelianInstance C>
JHFiltration<C> jh_filtration(const C& c, const typename C::Object& x,
                              const SelectionPolicy& policy = SelectionPolicy::canonical(),
                              ExecutionPolicy exec = ExecutionPolicy::parallel) {
  const auto subs = c.enumerate_subobjects(x, exec);
  const auto lattice = make_lattice(c, subs, exec);
  JHFiltration<C> jh{build_filtration(c, subs, composition_chain(lattice, policy))};
  for (std::size_t i = 0; i < jh.filtration.factors.size(); ++i) {
    if (!is_simple(c, jh.filtration.factors[i])) throw Error("JH factor " + std::to_string(i) + " is not simple");
  }
  return jh;
}

/// JH length. Two different maximal chains are compared as a check.
template <AbelianInstance C>
std::size_t length(const C& c, const typename C::Object& x) {
  if (c.is_zero(x)) return 0;
  const auto subs = c.enumerate_subobjects(x);
  const auto lattice = make_lattice(c, subs);
  const std::size_t n = composition_chain(lattice, SelectionPolicy::canonical()).size() - 1;
  const std::size_t m = composition_chain(lattice, SelectionPolicy::seeded(0)).size() - 1;
  if (n != m) throw Error("composition series of different lengths");
  return n;
}

/// (S,0,0) for S simple in A and (0,T,0) for T simple in B, each checked simple.
std::vector<CommaObject> comma_simples(const CommaCategory& c);
std::vector<CoCommaObject> comma_simples(const CoCommaCategory& c);

}  // namespace commacat
