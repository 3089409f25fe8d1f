#include "commacat/jordan_holder.hpp"

namespace commacat {

std::vector<std::size_t> composition_chain(const SubobjectLattice& L, const SelectionPolicy& policy) {
  std::optional<Rng> rng;
  if (policy.seed) rng.emplace(*policy.seed);
  std::vector<std::size_t> chain{L.bottom};
  std::size_t cur = L.bottom;
  while (cur != L.top) {
    std::vector<std::size_t> next;
    for (std::size_t s = 0; s < L.size(); ++s) {
      if (L.covers(cur, s)) next.push_back(s);
    }
    if (next.empty()) throw Error("lattice step has no cover below the whole object");
    cur = rng ? next[rng->below(next.size())] : next.front();
    chain.push_back(cur);
  }
  return chain;
}

namespace {
template <class Cat>
std::vector<typename Cat::Object> simples_of(const Cat& c) {
  std::vector<typename Cat::Object> out;
  for (const auto& s : c.A().simples()) out.push_back(c.make_object(s, c.B().zero_object()));
  for (const auto& t : c.B().simples()) out.push_back(c.make_object(c.A().zero_object(), t));
  for (const auto& x : out) {
    if (!is_simple(c, x)) throw Error("expected simple object " + c.describe(x) + " has proper subobjects");
  }
  return out;
}
}  // namespace

std::vector<CommaObject> comma_simples(const CommaCategory& c) { return simples_of(c); }
std::vector<CoCommaObject> comma_simples(const CoCommaCategory& c) { return simples_of(c); }

}  // namespace commacat
