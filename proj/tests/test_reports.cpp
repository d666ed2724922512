// JSON serialization: schema fields, determinism, and the round trip.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kv/error.hpp"
#include "kv/parse.hpp"
#include "kv/report_json.hpp"
#include "kv/suites.hpp"

using namespace kv;

TEST_CASE("hilbert data round-trips through JSON") {
  HilbertData h = hilbert_polynomial(GradedModule::of_quotient(
      Submodule::ideal(parse_generator_list("x*y, x*z, y*z"))));
  Json j = hilbert_to_json(h);
  HilbertData back = hilbert_from_json(j);
  CHECK(back == h);
  CHECK(hilbert_to_json(back) == j);
  // fractional coefficients survive
  HilbertData free3 = hilbert_of_free(FreeModule{{2, 2, 2}});
  CHECK(hilbert_from_json(hilbert_to_json(free3)) == free3);
}

TEST_CASE("verdict report serializes per the kv-report/1 schema") {
  KVReport rep = kv_verdict(parse_generator_list("x^2, x*y, y^2"));
  Json j = report_to_json(rep);

  CHECK(j.at("schema") == "kv-report/1");
  CHECK(j.at("field_char") == 32003);
  CHECK(j.at("input") == Json::array({"x^2", "x*y", "y^2"}));
  CHECK(j.at("degrees") == Json::array({2, 2, 2}));
  CHECK(j.at("deg_Z") == 3);
  CHECK(j.at("herzog_slack") == 1);
  CHECK(j.at("hilbert").contains("K"));
  CHECK(j.at("hilbert").contains("V"));
  CHECK(j.at("hilbert").contains("I_mod_I2"));
  CHECK(j.at("verdicts").at("k_eq_v") == false);
  CHECK(j.at("verdicts").at("lci") == false);
  CHECK(j.at("verdicts").at("consistent") == true);
  REQUIRE(j.at("witnesses").size() == 1);
  CHECK(j.at("witnesses")[0].at("module_degree") == 4);
  CHECK(j.at("witnesses")[0].at("components").size() == 3);

  // keys appear in schema order
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema", "field_char", "input",
                                         "degrees", "deg_Z", "hilbert",
                                         "herzog_slack", "verdicts",
                                         "witnesses"});
}

TEST_CASE("report round trip is the identity on documents") {
  for (const char* gens :
       {"x*y, x*z, y*z", "x^2, x*y, y^2", "x, y, x^2 + y^2"}) {
    KVReport rep = kv_verdict(parse_generator_list(gens));
    Json j = report_to_json(rep);
    KVReport back = report_from_json(j);
    CHECK(report_to_json(back) == j);
    CHECK(back.field_char == rep.field_char);
    CHECK(back.input == rep.input);
    CHECK(back.degrees == rep.degrees);
    CHECK(back.deg_Z == rep.deg_Z);
    CHECK(back.herzog_slack == rep.herzog_slack);
    CHECK(back.k_eq_v == rep.k_eq_v);
    CHECK(back.lci == rep.lci);
    CHECK(back.consistent == rep.consistent);
    CHECK(back.h_koszul == rep.h_koszul);
    CHECK(back.h_vanishing == rep.h_vanishing);
    CHECK(back.h_i_mod_i2 == rep.h_i_mod_i2);
    CHECK(back.witness.has_value() == rep.witness.has_value());
    if (rep.witness) CHECK(*back.witness == *rep.witness);
  }
}

TEST_CASE("serialization is byte-deterministic") {
  KVReport a = kv_verdict(parse_generator_list("x*y, x*z, y*z"));
  KVReport b = kv_verdict(parse_generator_list("x*y, x*z, y*z"));
  CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));
}

TEST_CASE("family reports serialize with their own schemas") {
  ArrangementSpec s;
  s.m = 1;
  s.n = 1;
  s.a = {Fp::from_int(2)};
  s.b = {Fp::from_int(3)};
  Json ja = arrangement_to_json(arrangement_report(s));
  CHECK(ja.at("schema") == "kv-arrangement/1");
  CHECK(ja.at("m") == 1);
  CHECK(ja.at("checks").at("all") == true);
  CHECK(ja.at("report").at("schema") == "kv-report/1");

  Json jf = five_points_to_json(five_points_counterexample(2026));
  CHECK(jf.at("schema") == "kv-five-points/1");
  CHECK(jf.at("pass") == true);
  CHECK(jf.at("points").size() == 5);

  Json js = sym2_to_json(sym2_euler_check(
      Submodule::ideal(parse_generator_list("x^2, x*y, y^2"))));
  CHECK(js.at("schema") == "kv-sym2/1");
  CHECK(js.at("total_discrepancy") == 4);
  CHECK(js.at("verdict_iso") == false);
}

TEST_CASE("suites report structured results") {
  auto names = suite_names();
  CHECK(names.size() == 7);
  SuiteResult r = run_suite("sym2", 0, 0);
  CHECK(r.name == "sym2");
  CHECK(r.all_pass());
  CHECK(r.total() == 4);
  CHECK_THROWS_AS(run_suite("nope", 0, 0), InputError);
}
