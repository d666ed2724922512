// Field arithmetic, monomial order, polynomial arithmetic, parsing and
// printing.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kv/error.hpp"
#include "kv/parse.hpp"
#include "kv/rng.hpp"

using namespace kv;

TEST_CASE("field arithmetic in the default characteristic") {
  CHECK(field_characteristic() == 32003);
  Fp a = Fp::from_int(32003);
  CHECK(a.is_zero());
  CHECK(Fp::from_int(-1).value() == 32002);
  CHECK(Fp::from_int(-1).balanced() == -1);
  CHECK(Fp::from_int(16002).balanced() == -16001);
  CHECK(Fp::from_int(16001).balanced() == 16001);

  Fp b = Fp::from_int(12345);
  CHECK((b * b.inverse()) == Fp::one());
  CHECK((b - b).is_zero());
  CHECK((b + (-b)).is_zero());
  CHECK_THROWS_AS(Fp::zero().inverse(), InputError);
}

TEST_CASE("characteristic is a validated session setting") {
  CHECK_THROWS_AS(set_field_characteristic(32004), InputError);
  {
    ScopedField f(101);
    CHECK(field_characteristic() == 101);
    CHECK(Fp::from_int(102).value() == 1);
  }
  CHECK(field_characteristic() == 32003);
}

TEST_CASE("graded reverse lexicographic order, x > y > z") {
  Monomial x = Monomial::variable(0), y = Monomial::variable(1),
           z = Monomial::variable(2);
  CHECK(grevlex_cmp(x, y) > 0);
  CHECK(grevlex_cmp(y, z) > 0);
  CHECK(grevlex_cmp(x * x, x * y) > 0);   // degree ties: compare from z back
  CHECK(grevlex_cmp(x * y, y * y) > 0);
  CHECK(grevlex_cmp(x * x, y * z) > 0);
  CHECK(grevlex_cmp(x * z, y * y) < 0);   // x z < y² in grevlex
  CHECK(grevlex_cmp(z * z * z, x * x) > 0);  // degree dominates
  CHECK(grevlex_cmp(x, x) == 0);

  CHECK(lcm(x * y, y * z) == x * y * z);
  CHECK(coprime(x * x, y * z));
  CHECK(!coprime(x * y, y * z));
  CHECK((x * y).divides(x * x * y));
  CHECK(!(x * y).divides(x * x));
  CHECK((x * y).quotient_of(x * x * y) == x);
}

TEST_CASE("monomial enumeration by degree") {
  CHECK(monomials_of_degree(-1).empty());
  CHECK(monomials_of_degree(0).size() == 1);
  CHECK(monomials_of_degree(4).size() == 15);
  auto degree3 = monomials_of_degree(3);
  for (std::size_t i = 1; i < degree3.size(); ++i)
    CHECK(grevlex_cmp(degree3[i - 1], degree3[i]) > 0);
}

TEST_CASE("polynomial arithmetic and normal form") {
  Polynomial x = Polynomial::variable(0);
  Polynomial y = Polynomial::variable(1);
  Polynomial z = Polynomial::variable(2);

  Polynomial f = x * x + y.scaled(Fp::from_int(3)) * z - z * z;
  CHECK(f.terms().size() == 3);
  CHECK(f.lead().mono == Monomial{{2, 0, 0}});
  CHECK((f - f).is_zero());
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.homogeneous_degree() == 2);
  CHECK(!(f + Polynomial::constant(1)).is_homogeneous());

  Polynomial g = (x + y) * (x - y);
  CHECK(g == x * x - y * y);
  CHECK(g.monic() == g);
  CHECK((x + y).scaled(Fp::from_int(2)).monic() == x + y);

  CHECK(divide_exact((x + y) * (x - y), x + y) == x - y);
  CHECK_THROWS_AS(divide_exact(x * x + y, x), InputError);
  CHECK_THROWS_AS(divide_exact(x, Polynomial{}), InputError);
}

TEST_CASE("derivatives and jacobian generators") {
  Polynomial x = Polynomial::variable(0);
  Polynomial y = Polynomial::variable(1);
  Polynomial z = Polynomial::variable(2);
  Polynomial q = x * y * z;
  auto jac = jacobian_ideal_generators(q);
  CHECK(jac[0] == y * z);
  CHECK(jac[1] == x * z);
  CHECK(jac[2] == x * y);
  CHECK(derivative(x * x * y, 0) == (x * y).scaled(Fp::from_int(2)));
  CHECK(derivative(z, 0).is_zero());
  CHECK_THROWS_AS(jacobian_ideal_generators(x + Polynomial::constant(1)),
                  InputError);
  {
    // Euler relation degenerates when the characteristic divides deg
    ScopedField f(3);
    CHECK_THROWS_AS(
        jacobian_ideal_generators(Polynomial::variable(0) *
                                  Polynomial::variable(1) *
                                  Polynomial::variable(2)),
        InputError);
  }
}

TEST_CASE("parser accepts the documented grammar") {
  Polynomial x = Polynomial::variable(0);
  Polynomial y = Polynomial::variable(1);
  Polynomial z = Polynomial::variable(2);

  CHECK(parse_polynomial("x^2*y + 3z^3") ==
        x * x * y + (z * z * z).scaled(Fp::from_int(3)));
  CHECK(parse_polynomial("x^2*y + 3*z^3") == parse_polynomial("x^2y+3z^3"));
  CHECK(parse_polynomial(" - x + x ").is_zero());
  CHECK(parse_polynomial("2*3*x") == x.scaled(Fp::from_int(6)));
  CHECK(parse_polynomial("x*x*x") == parse_polynomial("x^3"));
  CHECK(parse_polynomial("7") == Polynomial::constant(7));
  CHECK(parse_polynomial("x - 32003*y") == x);
  CHECK(parse_polynomial("x^0") == Polynomial::constant(1));

  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("w"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("3..5"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x*"), ParseError);

  try {
    parse_polynomial("x + $");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }

  auto gens = parse_generator_list("x*y, x*z, y*z");
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == x * y);
  CHECK(gens[2] == y * z);
  CHECK_THROWS_AS(parse_generator_list("x,,y"), ParseError);
}

TEST_CASE("printer emits explicit products and balanced coefficients") {
  CHECK(to_string(parse_polynomial("x^2*y - 3*z^3")) == "x^2*y - 3*z^3");
  CHECK(to_string(parse_polynomial("32002*x")) == "-x");
  CHECK(to_string(parse_polynomial("-x - 1")) == "-x - 1");
  CHECK(to_string(Polynomial{}) == "0");
  CHECK(to_string(Polynomial::constant(1)) == "1");
  CHECK(to_string(parse_polynomial("y*x")) == "x*y");
  CHECK(to_string(parse_polynomial("z + y + x + z^2")) == "z^2 + x + y + z");
}

TEST_CASE("parse of print is the identity on random polynomials") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Term> terms;
    int nterms = rng.uniform_int(0, 12);
    for (int i = 0; i < nterms; ++i) {
      Monomial m{{rng.uniform_int(0, 4), rng.uniform_int(0, 4),
                  rng.uniform_int(0, 4)}};
      terms.push_back({rng.field_element(), m});
    }
    Polynomial f = Polynomial::from_terms(std::move(terms));
    CHECK(parse_polynomial(to_string(f)) == f);
  }
}
