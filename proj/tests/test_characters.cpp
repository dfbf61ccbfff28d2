#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"
#include "spincq/errors.hpp"
#include "spincq/examples_catalog.hpp"

using namespace spincq;

namespace {
WeightVector w(std::initializer_list<Rational> c) { return WeightVector(c); }

std::vector<std::int64_t> ones(std::initializer_list<int> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("integer boxes") {
  auto b = IntBox::parse("-2:2", 1);
  CHECK(b.size() == 5);
  auto c = IntBox::parse("-1:0,3:4", 2);
  CHECK(c.points() == std::vector<IntVector>{{-1, 3}, {-1, 4}, {0, 3}, {0, 4}});
  CHECK(IntBox::parse("-3:3", 2).size() == 49);
  CHECK_THROWS_AS(IntBox::parse("3:-3", 1), ParseError);
  CHECK_THROWS_AS(IntBox::parse("x", 1), ParseError);
}

TEST_CASE("single series term") {
  SeriesTerm t{1, {0}, {{1}}, {1}};
  CHECK(term_mult_at(t, {5}) == 1);
  CHECK(term_mult_at(t, {-1}) == 0);
  SeriesTerm two{1, {0, 0}, {{1, 0}, {1, 1}}, {1, 1}};
  // μ = (3, 1): k1 + k2 = 3, k2 = 1
  CHECK(term_mult_at(two, {3, 1}) == 1);
  SeriesTerm parts{1, {0}, {{1}, {2}}, {1}};
  CHECK(term_mult_at(parts, {6}) == 4);
}

TEST_CASE("polarization witness is validated") {
  FormalCharacter f(1);
  CHECK_THROWS_AS(f.add_term(SeriesTerm{1, {0}, {{1}}, {-1}}), PreconditionViolated);
  CHECK_THROWS_AS(f.add_term(SeriesTerm{1, {0}, {{0}}, {1}}), PreconditionViolated);
}

TEST_CASE("windows") {
  auto p = build("p1:4");
  auto g = global_index(p.torus_model, generic_polarization(p.torus_model));
  CHECK(window(g, IntBox{{-2}, {6}}) == ones({0, 0, 1, 1, 1, 1, 1, 0, 0}));
  CHECK(window(FormalCharacter(2), IntBox::cube(2, -1, 1)) == std::vector<std::int64_t>(9, 0));
  auto q = build("product_p1");
  auto gq = global_index(q.torus_model, generic_polarization(q.torus_model));
  CHECK(window(gq, IntBox{{-2}, {2}}) == ones({0, 0, 1, 0, 0}));
  CHECK(window_csv(g, IntBox{{0}, {1}}) == "mu1,mult\n0,1\n1,1\n");
}

TEST_CASE("window is independent of the worker count") {
  auto h = build("hirzebruch:3,6");
  auto g = global_index(h.torus_model, generic_polarization(h.torus_model));
  auto box = IntBox::cube(2, -9, 9);
  auto one = window(g, box, 1);
  CHECK(window(g, box, 4) == one);
  CHECK(window(g, box, 7) == one);
  CHECK(window(g, box, 4) == oracle::expand_window(g, box));
}

TEST_CASE("term multiplicities agree with naive series expansion") {
  for (const auto& d : catalog_descriptors()) {
    auto b = build(d);
    auto g = global_index(b.torus_model, generic_polarization(b.torus_model));
    for (const auto& t : g.terms()) {
      auto ref = oracle::expand_term(t, b.window);
      for (const auto& p : b.window.points()) {
        auto it = ref.find(p);
        CHECK(term_mult_at(t, p) == (it == ref.end() ? 0 : it->second));
      }
    }
  }
}

TEST_CASE("product example: Q_0 at -3") {
  auto q = build("product_p1");
  auto parts = witten_decomposition(q.torus_model);
  auto it = std::find_if(parts.begin(), parts.end(), [](const WittenComponent& c) { return c.label.is_zero(); });
  REQUIRE(it != parts.end());
  CHECK(mult_at(it->character, {-3}) == 2);
}

TEST_CASE("P1 local term at the north pole") {
  auto p = build("p1:4");
  auto q = local_term(p.torus_model.points[1], {1});
  CHECK(term_mult_at(q, {7}) == -1);
  CHECK(term_mult_at(q, {4}) == 0);
}

TEST_CASE("K-characters") {
  auto u2 = RootDatum::u2();
  CharacterK k(u2);
  k.add(w({frac(1, 2), frac(-7, 2)}), 1);
  CHECK(k.at(w({frac(1, 2), frac(-7, 2)})) == 1);
  CHECK(k.at(w({frac(3, 2), frac(1, 2)})) == 0);
  CHECK_THROWS_AS(k.add(w({frac(1, 2), frac(1, 2)}), 1), PreconditionViolated);
  CHECK_THROWS_AS(k.add(w({1, 0}), 1), PreconditionViolated);
  k.add(w({frac(1, 2), frac(-7, 2)}), -1);
  CHECK(k.mults().empty());
  CHECK(character_from_json(to_json_value(CharacterK(u2)), u2) == CharacterK(u2));
}

TEST_CASE("irreducible weights") {
  auto u2 = RootDatum::u2();
  for (int k = 0; k <= 5; ++k) {
    Rational second(-2 * k - 1, 2);
    second.canonicalize();
    auto wts = irreducible_weights(w({frac(1, 2), second}), u2);
    std::map<IntVector, std::int64_t> ref;
    for (int j = 0; j <= k; ++j) ref[{-j, j - k}] = 1;
    CHECK(wts == ref);
  }
  auto g = RootDatum::su3();
  CHECK(irreducible_weights(rho(g), g) == std::map<IntVector, std::int64_t>{{{0, 0}, 1}});
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) CHECK(irreducible_weights(w({p + 1, q + 1}), g) == oracle::su3_weights_gt(p, q));
  auto su2 = RootDatum::su2();
  CHECK(irreducible_weights(w({3}), su2) == std::map<IntVector, std::int64_t>{{{-2}, 1}, {{0}, 1}, {{2}, 1}});
}

TEST_CASE("restriction of Q_K(3,6) to the torus") {
  auto h = build("hirzebruch:3,6");
  REQUIRE(h.golden_K);
  REQUIRE(h.golden_T);
  auto box = IntBox::cube(2, -8, 8);
  CHECK(window(restrict_to_torus(*h.golden_K), box) == window(*h.golden_T, box));
}

TEST_CASE("holomorphic induction") {
  auto u2 = RootDatum::u2();
  const WeightVector rc{frac(1, 2), frac(-1, 2)};
  FormalCharacter a(2);
  for (int k = 0; k <= 5; ++k) a.add_monomial({0, k - 8}, 1);
  CharacterK qa(u2);
  for (int k = 3; k <= 8; ++k) {
    Rational s(-2 * k - 1, 2);
    s.canonicalize();
    qa.add(w({frac(1, 2), s}), 1);
  }
  CHECK(holomorphic_induct(a, rc, u2) == qa);

  FormalCharacter b(2);
  for (int k = 0; k <= 6; ++k) b.add_monomial({0, k - 3}, 1);
  CharacterK qb(u2);
  for (int k = 0; k <= 3; ++k) {
    Rational s(-2 * k - 1, 2);
    s.canonicalize();
    qb.add(w({frac(1, 2), s}), 1);
  }
  qb.add(w({frac(3, 2), frac(1, 2)}), -1);
  qb.add(w({frac(5, 2), frac(1, 2)}), -1);
  CHECK(holomorphic_induct(b, rc, u2) == qb);

  // ν + ρ_C = (0, 0) is fixed by the reflection
  CHECK(holomorphic_induct(FormalCharacter::monomial({-1, 0}), w({frac(1, 2), frac(-1, 2)}), u2) ==
        CharacterK(u2));
  FormalCharacter infinite(2);
  infinite.add_term(SeriesTerm{1, {0, 0}, {{0, 1}}, {0, 1}});
  CHECK_THROWS_AS(holomorphic_induct(infinite, rc, u2), InfiniteSupport);
}

TEST_CASE("coefficient at an orbit") {
  auto s = build("su3_flag:4,1");
  REQUIRE(s.slice);
  auto k = induced_character(*s.slice);
  auto g = RootDatum::su3();
  CHECK(coefficient(k, CoadjointOrbit::through(rho(g), g)) == -2);
  CHECK(coefficient(k, CoadjointOrbit::through(w({5, 5}), g)) == 0);
  auto h = build("hirzebruch:8,5");
  CHECK(coefficient(induced_character(*h.slice),
                    CoadjointOrbit::through(w({frac(1, 2), frac(-7, 2)}), RootDatum::u2())) == 1);
  CHECK_THROWS_AS(coefficient(k, CoadjointOrbit::through(w({frac(3, 2), 0}), g)), PreconditionViolated);
}
