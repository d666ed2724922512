// Module operations built on the Gröbner engine: Koszul submodules,
// syzygies, intersection, quotient, saturation, minimal generators,
// minimal free resolutions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kv/error.hpp"
#include "kv/modalg.hpp"
#include "kv/parse.hpp"

using namespace kv;

namespace {

Submodule ideal_of(const std::string& text) {
  return Submodule::ideal(parse_generator_list(text));
}

ModuleElement elem(const FreeModule& f, const std::string& csv) {
  std::vector<Polynomial> comps;
  for (const Polynomial& p : parse_generator_list(csv)) comps.push_back(p);
  return ModuleElement(f, std::move(comps));
}

// Σ_i v_i · f_i — the pairing a syzygy must kill.
Polynomial pair_with(const ModuleElement& v,
                     const std::vector<Polynomial>& f) {
  Polynomial acc;
  for (std::size_t i = 0; i < f.size(); ++i)
    acc = acc + v[static_cast<int>(i)] * f[i];
  return acc;
}

}  // namespace

TEST_CASE("Koszul submodule of three generators") {
  auto f = parse_generator_list("x*y, x*z, y*z");
  Submodule k = koszul_submodule(f);
  REQUIRE(k.generators.size() == 3);
  CHECK(k.ambient.twists == std::vector<int>{2, 2, 2});
  // (j,k) pairs in lexicographic order
  CHECK(to_string(k.generators[0]) == "(x*z, -x*y, 0)");
  CHECK(to_string(k.generators[1]) == "(y*z, 0, -x*y)");
  CHECK(to_string(k.generators[2]) == "(0, y*z, -x*z)");
  for (const ModuleElement& g : k.generators) {
    CHECK(g.module_degree() == 4);
    CHECK(pair_with(g, f).is_zero());
  }
  CHECK_THROWS_AS(koszul_submodule({parse_polynomial("x")}), InputError);
  CHECK_THROWS_AS(koszul_submodule(parse_generator_list("x, y + 1")),
                  InputError);
}

TEST_CASE("syzygies of the coordinate-line products") {
  auto f = parse_generator_list("x*y, x*z, y*z");
  Submodule s = syzygies(Submodule::ideal(f));
  CHECK(s.ambient.twists == std::vector<int>{2, 2, 2});
  for (const ModuleElement& g : s.generators)
    CHECK(pair_with(g, f).is_zero());

  auto min = minimal_generators(s);
  REQUIRE(min.size() == 2);
  CHECK(min[0].module_degree() == 3);
  CHECK(min[1].module_degree() == 3);

  // the classical presentation matrix generates the same module
  FreeModule amb{{2, 2, 2}};
  Submodule classical{amb, {elem(amb, "z, -y, 0"), elem(amb, "0, y, -x")}};
  CHECK(submodule_equal(s, classical));
}

TEST_CASE("syzygies of a single generator vanish") {
  Submodule s = syzygies(ideal_of("x^2 + y*z"));
  CHECK(s.generators.empty());
}

TEST_CASE("syzygies detect generator redundancy") {
  // x is redundant inside ⟨x, x+0·y⟩-style lists: e-relations appear
  auto f = parse_generator_list("x, x*y");
  Submodule s = syzygies(Submodule::ideal(f));
  REQUIRE(!s.generators.empty());
  for (const ModuleElement& g : s.generators)
    CHECK(pair_with(g, f).is_zero());
  // (x*y)·e₀ − x·e₁ must lie in the syzygy module
  FreeModule amb{{1, 2}};
  CHECK(contains(s, elem(amb, "x*y, -x")));
}

TEST_CASE("intersection of ideals") {
  CHECK(submodule_equal(intersect(ideal_of("x"), ideal_of("y")),
                        ideal_of("x*y")));
  CHECK(submodule_equal(intersect(ideal_of("x, y"), ideal_of("z")),
                        ideal_of("x*z, y*z")));
  CHECK(submodule_equal(intersect(ideal_of("x, y"), ideal_of("x, y")),
                        ideal_of("x, y")));
  // intersection inside a rank-2 module
  FreeModule f{{0, 0}};
  Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  Submodule a{f, {ModuleElement(f, {x, Polynomial{}})}};
  Submodule b{f, {ModuleElement(f, {Polynomial{}, y})}};
  CHECK(intersect(a, b).is_zero());
  Submodule c{f,
              {ModuleElement(f, {x, Polynomial{}}),
               ModuleElement(f, {Polynomial{}, x})}};
  Submodule d{f,
              {ModuleElement(f, {y, Polynomial{}}),
               ModuleElement(f, {Polynomial{}, y})}};
  Submodule cd = intersect(c, d);
  Submodule expect{f,
                   {ModuleElement(f, {x * y, Polynomial{}}),
                    ModuleElement(f, {Polynomial{}, x * y})}};
  CHECK(submodule_equal(cd, expect));
}

TEST_CASE("ideal quotient by a polynomial") {
  CHECK(submodule_equal(quotient_by(ideal_of("x*y, x*z, y*z"),
                                    parse_polynomial("x")),
                        ideal_of("y, z")));
  CHECK(submodule_equal(quotient_by(ideal_of("x^2"), parse_polynomial("x")),
                        ideal_of("x")));
  CHECK(submodule_equal(quotient_by(ideal_of("x"), parse_polynomial("y")),
                        ideal_of("x")));
  CHECK_THROWS_AS(quotient_by(ideal_of("x"), parse_polynomial("x + 1")),
                  InputError);
  CHECK_THROWS_AS(quotient_by(ideal_of("x"), Polynomial{}), InputError);
}

TEST_CASE("saturation with respect to the irrelevant ideal") {
  // x·⟨x,y,z⟩ saturates to ⟨x⟩
  Submodule s1 = saturate(ideal_of("x^2, x*y, x*z"));
  CHECK(submodule_equal(s1, ideal_of("x")));

  // ⟨x², x*y⟩ = ⟨x⟩ ∩ ⟨x,y⟩² is already saturated: z misses every
  // associated prime
  Submodule s2 = saturate(ideal_of("x^2, x*y"));
  CHECK(submodule_equal(s2, ideal_of("x^2, x*y")));

  // the irrelevant ideal saturates to the whole ring
  Submodule s3 = saturate(ideal_of("x, y, z"));
  CHECK(contains(s3, ModuleElement(FreeModule::ring(),
                                   {Polynomial::constant(1)})));

  // a line pair truncated above degree 2 recovers the line pair
  Submodule s4 = saturate(ideal_of(
      "x^3, x^2*y, x^2*z, x*y^2, x*y*z, x*z^2, y^3, y^2*z, y*z^2"));
  CHECK(submodule_equal(s4, ideal_of("x, y")));

  // saturation is idempotent
  CHECK(submodule_equal(saturate(s4), s4));
}

TEST_CASE("minimal generator extraction") {
  auto min = minimal_generators(ideal_of("x, x^2, x + y, y"));
  REQUIRE(min.size() == 2);
  CHECK(min[0].module_degree() == 1);
  CHECK(min[1].module_degree() == 1);
  Submodule trimmed{FreeModule::ring(), min};
  CHECK(submodule_equal(trimmed, ideal_of("x, y")));

  // generators are reported monic and in ascending module degree
  auto min2 = minimal_generators(ideal_of("3*y^2, 2*x"));
  REQUIRE(min2.size() == 2);
  CHECK(to_string(min2[0]) == "(x)");
  CHECK(to_string(min2[1]) == "(y^2)");

  CHECK_THROWS_AS(minimal_generators(ideal_of("x + 1")), InputError);
}

TEST_CASE("minimal free resolution: Hilbert–Burch shape") {
  GradedResolution res = minimal_resolution(ideal_of("x*y, x*z, y*z"));
  REQUIRE(res.length() == 1);
  CHECK(res.steps[0].target.rank() == 1);
  CHECK(res.steps[0].source.twists == std::vector<int>{2, 2, 2});
  CHECK(res.steps[1].source.twists == std::vector<int>{3, 3});

  // composition of consecutive maps is zero
  for (const ModuleElement& col : res.steps[1].columns) {
    ModuleElement img = ModuleElement::zero(res.steps[0].target);
    for (int j = 0; j < res.steps[0].source.rank(); ++j)
      img += res.steps[0].columns[static_cast<std::size_t>(j)].times(col[j]);
    CHECK(img.is_zero());
  }

  // minimality: no unit entries anywhere in the presentation matrix
  for (const ResolutionStep& step : res.steps)
    for (const ModuleElement& col : step.columns)
      for (int j = 0; j < step.target.rank(); ++j)
        if (!col[j].is_zero()) CHECK(col[j].degree() >= 1);
}

TEST_CASE("minimal free resolution: longer and shorter shapes") {
  // the irrelevant ideal has the length-2 Koszul resolution
  GradedResolution koszul = minimal_resolution(ideal_of("x, y, z"));
  CHECK(koszul.length() == 2);
  CHECK(koszul.steps[0].source.twists == std::vector<int>{1, 1, 1});
  CHECK(koszul.steps[1].source.twists == std::vector<int>{2, 2, 2});
  CHECK(koszul.steps[2].source.twists == std::vector<int>{3});

  // a principal ideal is free: no syzygy step at all
  GradedResolution free1 = minimal_resolution(ideal_of("x^2 + y*z"));
  CHECK(free1.length() == 0);

  // two generators with one syzygy
  GradedResolution two = minimal_resolution(ideal_of("x^2, x*y"));
  CHECK(two.length() == 1);
  CHECK(two.steps[1].source.twists == std::vector<int>{3});
}
