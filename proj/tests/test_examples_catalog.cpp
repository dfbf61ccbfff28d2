#include "doctest.h"
#include "oracles.hpp"
#include "spincq/errors.hpp"
#include "spincq/examples_catalog.hpp"

using namespace spincq;

namespace {
CharacterK character_of(const nlohmann::json& arr, const RootDatum& g) {
  CharacterK k(g);
  for (const auto& e : arr) k.add(parse_weight(e.at("label").get<std::string>()), e.at("mult").get<std::int64_t>());
  return k;
}
}  // namespace

TEST_CASE("descriptors") {
  auto d = ExampleDescriptor::parse("hirzebruch:3,6");
  CHECK(d.kind == ExampleKind::Hirzebruch);
  CHECK(d.params == std::vector<std::int64_t>{3, 6});
  CHECK(d.to_string() == "hirzebruch:3,6");
  CHECK(ExampleDescriptor::parse("product_p1").to_string() == "product_p1");
  CHECK_THROWS_AS(ExampleDescriptor::parse("p2:1"), UnknownDescriptor);
  CHECK_THROWS_AS(ExampleDescriptor::parse("p1:1,2"), UnknownDescriptor);
  CHECK_THROWS_AS(ExampleDescriptor::parse("p1:x"), UnknownDescriptor);
  CHECK_THROWS_AS(ExampleDescriptor::parse("su3_flag:4"), UnknownDescriptor);
}

TEST_CASE("every catalog model validates and matches its golden character") {
  for (const auto& d : catalog_descriptors()) {
    auto b = build(d);
    CHECK_NOTHROW(b.torus_model.validate());
    auto g = global_index(b.torus_model, generic_polarization(b.torus_model));
    if (b.golden_T) CHECK_MESSAGE(window(g, b.window) == window(*b.golden_T, b.window), d.to_string());
    if (b.slice) {
      auto k = induced_character(*b.slice);
      if (b.golden_K) CHECK_MESSAGE(k == *b.golden_K, d.to_string());
      // the induced torus model is M itself, so both routes give the same T-character
      CHECK_MESSAGE(window(restrict_to_torus(k), b.window) == window(g, b.window), d.to_string());
    }
  }
}

TEST_CASE("P1 golden") {
  auto b = build("p1:4");
  REQUIRE(b.golden_T);
  CHECK(window(*b.golden_T, IntBox{{-1}, {5}}) == std::vector<std::int64_t>{0, 1, 1, 1, 1, 1, 0});
}

TEST_CASE("Hirzebruch fixtures") {
  auto j = oracle::load_fixture(SPINCQ_FIXTURES, "hirzebruch.json");
  for (const auto& c : j["cases"]) {
    auto b = build(c["example"].get<std::string>());
    REQUIRE(b.slice);
    CHECK(induced_character(*b.slice) == character_of(c["golden_K"], b.group));
    if (c.contains("golden_T")) {
      auto g = global_index(b.torus_model, generic_polarization(b.torus_model));
      CHECK(window(g, b.window) == oracle::dense(oracle::fixture_monomials(c["golden_T"]), b.window));
    }
  }
}

TEST_CASE("Hirzebruch slice inducing weights") {
  auto b = build("hirzebruch:8,5");
  auto y = slice_index(*b.slice);
  CHECK(y.is_finite());
  std::map<IntVector, std::int64_t> ref;
  for (int k = 0; k <= 5; ++k) ref[{0, k - 8}] = 1;
  CHECK(y.tail() == ref);
  CHECK(b.slice->rho_c == WeightVector{frac(1, 2), frac(-1, 2)});
}

TEST_CASE("SU(3) flag fixtures") {
  auto j = oracle::load_fixture(SPINCQ_FIXTURES, "su3_flag.json");
  for (const auto& c : j["cases"]) {
    auto b = build(c["example"].get<std::string>());
    auto k = induced_character(*b.slice);
    CHECK(k == character_of(c["golden_K"], b.group));
    CHECK(k.at(rho(b.group)) == c["coefficient_at_rho"].get<std::int64_t>());
  }
}

TEST_CASE("SU(3) flag structure") {
  auto b = build("su3_flag:4,1");
  CHECK(vanishing_criterion(b.generic_stabilizer, b.group));
  CHECK(b.slice->rho_c == WeightVector{frac(3, 2), 0});
  CHECK(b.torus_model.points.size() == 6);
  for (const auto& p : b.torus_model.points) CHECK(p.tangent_weights.size() == 3);
  // no golden data outside a ≥ 4, b ≥ 1, but the model still builds
  auto small = build("su3_flag:3,0");
  CHECK_FALSE(small.golden_K);
  CHECK_NOTHROW(induced_character(*small.slice));
}

TEST_CASE("induced U(2) model reproduces the Hirzebruch fixed points") {
  for (const char* d : {"hirzebruch:3,6", "hirzebruch:8,5", "hirzebruch:0,0"}) {
    auto b = build(d);
    auto m = induce_torus_model(*b.slice);
    REQUIRE(m.points.size() == 4);
    auto key = [](const FixedPointModel& x) {
      std::vector<std::pair<WeightVector, std::vector<IntVector>>> out;
      for (auto p : x.points) {
        std::sort(p.tangent_weights.begin(), p.tangent_weights.end());
        out.push_back({p.s_weight, p.tangent_weights});
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK_MESSAGE(key(m) == key(b.torus_model), d);
  }
}

TEST_CASE("generic stabilizers pass the vanishing criterion") {
  for (const auto& d : catalog_descriptors()) {
    auto b = build(d);
    CHECK(vanishing_criterion(b.generic_stabilizer, b.group));
  }
}

TEST_CASE("non-golden parameters still build") {
  for (const char* d : {"hirzebruch:-2,3", "hirzebruch:2,-1", "p1_deformed:2,0", "p1_deformed:0,3", "p1:-7"}) {
    auto b = build(d);
    CHECK_NOTHROW(b.torus_model.validate());
    auto r = verify_qr_abelian(b.torus_model, b.window, ProfileOptions{b.torus_relint, b.torus_fibers, {}, 0});
    CHECK_MESSAGE(r.summary, d);
  }
}
