#pragma once

// The subobject lattice of one object, reduced to what HN, JH and the wall
// scan need: classes and the order relation. Indices follow the canonical
// enumeration order of the instance.

#include <cstddef>
#include <vector>

#include "commacat/category.hpp"
#include "commacat/random.hpp"

namespace commacat {

struct SubobjectLattice {
  std::vector<ClassVector> classes;
  /// leq[i][j] iff subobject i <= subobject j.
  std::vector<std::vector<char>> leq;
  std::size_t bottom = 0;
  std::size_t top = 0;

  std::size_t size() const { return classes.size(); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq[i][j]; }
  /// j covers i: i < j with nothing strictly between.
  bool covers(std::size_t i, std::size_t j) const;
};

template <AbelianInstance C>
SubobjectLattice make_lattice(const C& c, const std::vector<Subobject<C>>& subs,
                              ExecutionPolicy policy = ExecutionPolicy::parallel) {
  SubobjectLattice L;
  const std::size_t n = subs.size();
  L.classes.reserve(n);
  for (const auto& s : subs) L.classes.push_back(c.cls(s.object));
  L.leq.assign(n, std::vector<char>(n, 0));
#pragma omp parallel for schedule(dynamic, 4) if (policy == ExecutionPolicy::parallel && n > 16)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) L.leq[i][j] = (i == j) || c.sub_leq(subs[i].key, subs[j].key);
  }
  // 0 and the whole object: the unique elements below / above everything.
  bool found_bottom = false;
  bool found_top = false;
  for (std::size_t i = 0; i < n; ++i) {
    bool below_all = true;
    bool above_all = true;
    for (std::size_t j = 0; j < n; ++j) {
      below_all = below_all && L.leq[i][j];
      above_all = above_all && L.leq[j][i];
    }
    if (below_all) L.bottom = i, found_bottom = true;
    if (above_all) L.top = i, found_top = true;
  }
  if (!found_bottom || !found_top) throw Error("subobject enumeration is missing 0 or the whole object");
  return L;
}

}  // namespace commacat
