#include "doctest.h"

#include "commacat/jordan_holder.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace commacat;

TEST_CASE("simple objects") {
  const auto c = fixtures::arrow();
  const auto& fv = c.A();
  const auto k = fv.vect(1);
  CHECK(is_simple(fv, k));
  CHECK_FALSE(is_simple(fv, fv.vect(2)));
  CHECK_FALSE(is_simple(fv, fv.zero_object()));
  CHECK_FALSE(is_simple(c, c.make_object(k, k)));
  CHECK(is_simple(c, c.make_object(k, fv.zero_object())));

  const auto s = comma_simples(c);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == c.make_object(k, fv.zero_object()));
  CHECK(s[1] == c.make_object(fv.zero_object(), k));
  CHECK(comma_simples(fixtures::toy()).size() == 3);
  CHECK(comma_simples(fixtures::framed()).size() == 2);
}

TEST_CASE("simple comma objects have one simple side") {
  const auto c = fixtures::toy();
  for (const auto& x : c.enumerate_objects(3)) {
    if (!is_simple(c, x)) continue;
    const bool a = !c.A().is_zero(x.a);
    const bool b = !c.B().is_zero(x.b);
    CHECK(a != b);
    CHECK((a ? is_simple(c.A(), x.a) : is_simple(c.B(), x.b)));
  }
}

TEST_CASE("JH filtrations in the arrow instance") {
  const auto c = fixtures::arrow();
  const auto& fv = c.A();
  const auto k = fv.vect(1);
  const auto jh0 = jh_filtration(c, c.make_object(k, k));
  CHECK(jh0.length() == 2);
  CHECK(jh0.factor_multiset() == std::vector<ClassVector>{ClassVector{{0, 1}}, ClassVector{{1, 0}}});

  const auto kk_id = c.make_object(k, k, fv.identity(k));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto jh = jh_filtration(c, kk_id, SelectionPolicy::seeded(seed));
    REQUIRE(jh.filtration.steps.size() == 3);
    CHECK(jh.filtration.steps[1].object == c.make_object(fv.zero_object(), k));
  }
  CHECK(jh_filtration(c, c.make_object(k, fv.zero_object())).length() == 1);
  CHECK(length(c, c.zero_object()) == 0);
  CHECK(jh_filtration(c, c.zero_object()).length() == 0);

  const auto x = c.make_object(fv.vect(2), k, fv.vect_map(Matrix::from_rows(2, 1, 2, {{1, 0}})));
  CHECK(length(c, x) == 3);
}

TEST_CASE("JH multisets are policy independent and match the exhaustive search") {
  const auto c = fixtures::toy();
  for (const auto& x : c.enumerate_objects(3)) {
    const auto base = jh_filtration(c, x).factor_multiset();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      CHECK(jh_filtration(c, x, SelectionPolicy::seeded(seed)).factor_multiset() == base);
    }
    const auto subs = c.enumerate_subobjects(x);
    const auto all = oracles::jh_multisets(make_lattice(c, subs));
    REQUIRE(all.size() == 1);
    CHECK(*all.begin() == base);
    CHECK(length(c, x) == length(c.A(), x.a) + length(c.B(), x.b));
  }
}
