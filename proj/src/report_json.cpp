#include "kv/report_json.hpp"

#include "kv/error.hpp"
#include "kv/parse.hpp"

namespace kv {

namespace {

Json halfint_to_json(HalfInt h) { return to_string(h); }

HalfInt halfint_from_json(const Json& j) {
  std::string s = j.get<std::string>();
  bool halves = s.size() > 2 && s.substr(s.size() - 2) == "/2";
  if (halves) s = s.substr(0, s.size() - 2);
  long long num = std::stoll(s);
  return halves ? HalfInt{num, 2} : HalfInt{num, 1};
}

Json witness_to_json(const ModuleElement& w) {
  Json jw;
  auto d = w.module_degree();
  jw["module_degree"] = d ? Json(*d) : Json(nullptr);
  Json comps = Json::array();
  for (const Polynomial& c : w.components()) comps.push_back(to_string(c));
  jw["components"] = comps;
  return jw;
}

ModuleElement witness_from_json(const Json& jw, const FreeModule& ambient) {
  std::vector<Polynomial> comps;
  for (const auto& c : jw.at("components"))
    comps.push_back(parse_polynomial(c.get<std::string>()));
  return ModuleElement(ambient, std::move(comps));
}

}  // namespace

Json hilbert_to_json(const HilbertData& h) {
  Json j;
  j["coeff"] = Json::array({halfint_to_json(h.coeff[0]),
                            halfint_to_json(h.coeff[1]),
                            halfint_to_json(h.coeff[2])});
  j["stable_from"] = h.stable_from;
  Json vals = Json::array();
  for (const auto& [n, v] : h.values) vals.push_back(Json::array({n, v}));
  j["values"] = vals;
  return j;
}

HilbertData hilbert_from_json(const Json& j) {
  HilbertData h;
  for (std::size_t i = 0; i < 3; ++i)
    h.coeff[i] = halfint_from_json(j.at("coeff").at(i));
  h.stable_from = j.at("stable_from").get<int>();
  for (const auto& pair : j.at("values"))
    h.values[pair.at(0).get<int>()] = pair.at(1).get<long long>();
  return h;
}

Json report_to_json(const KVReport& r) {
  Json j;
  j["schema"] = "kv-report/1";
  j["field_char"] = r.field_char;
  j["input"] = r.input;
  j["degrees"] = r.degrees;
  j["deg_Z"] = r.deg_Z;
  j["hilbert"] = Json{{"K", hilbert_to_json(r.h_koszul)},
                      {"V", hilbert_to_json(r.h_vanishing)},
                      {"I_mod_I2", hilbert_to_json(r.h_i_mod_i2)}};
  j["herzog_slack"] = r.herzog_slack;
  j["verdicts"] = Json{{"k_eq_v", r.k_eq_v},
                       {"lci", r.lci},
                       {"consistent", r.consistent}};
  Json witnesses = Json::array();
  if (r.witness) witnesses.push_back(witness_to_json(*r.witness));
  j["witnesses"] = witnesses;
  return j;
}

KVReport report_from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != "kv-report/1")
    throw InputError("unsupported report schema");
  KVReport r;
  r.field_char = j.at("field_char").get<std::uint32_t>();
  r.input = j.at("input").get<std::vector<std::string>>();
  r.degrees = j.at("degrees").get<std::vector<int>>();
  r.deg_Z = j.at("deg_Z").get<long long>();
  r.h_koszul = hilbert_from_json(j.at("hilbert").at("K"));
  r.h_vanishing = hilbert_from_json(j.at("hilbert").at("V"));
  r.h_i_mod_i2 = hilbert_from_json(j.at("hilbert").at("I_mod_I2"));
  r.herzog_slack = j.at("herzog_slack").get<long long>();
  r.k_eq_v = j.at("verdicts").at("k_eq_v").get<bool>();
  r.lci = j.at("verdicts").at("lci").get<bool>();
  r.consistent = j.at("verdicts").at("consistent").get<bool>();
  const Json& ws = j.at("witnesses");
  if (!ws.empty())
    r.witness = witness_from_json(ws.at(0), FreeModule{r.degrees});
  return r;
}

Json arrangement_to_json(const ArrangementReport& r) {
  Json j;
  j["schema"] = "kv-arrangement/1";
  j["m"] = r.m;
  j["n"] = r.n;
  j["report"] = report_to_json(r.kv);
  j["target_shifts"] = r.target_shifts;
  j["source_shifts"] = r.source_shifts;
  j["expected_deg_Z"] = r.expected_deg_z;
  j["checks"] = Json{{"deg_Z", r.deg_z_ok},
                     {"H_I_mod_I2", r.h_i_mod_i2_ok},
                     {"shifts", r.shifts_ok},
                     {"all", r.all_ok}};
  return j;
}

Json five_points_to_json(const FivePointsReport& r) {
  Json j;
  j["schema"] = "kv-five-points/1";
  j["seed"] = r.seed;
  j["redraws"] = r.redraws;
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(Json::array({p[0], p[1], p[2]}));
  j["points"] = pts;
  j["dim_J2"] = r.dim_j2;
  j["dim_J3"] = r.dim_j3;
  j["J_generator_degrees"] = r.j_generator_degrees;
  j["ideal_matches_locus"] = r.ideal_matches_locus;
  j["report"] = report_to_json(r.kv);
  j["witness_vanishes"] = r.witness_vanishes;
  j["pass"] = r.pass;
  return j;
}

Json sym2_to_json(const Sym2Report& r) {
  Json j;
  j["schema"] = "kv-sym2/1";
  j["a_shifts"] = r.a_shifts;
  j["b_shifts"] = r.b_shifts;
  Json disc = Json::array();
  for (const auto& [n, v] : r.discrepancy) disc.push_back(Json::array({n, v}));
  j["discrepancy"] = disc;
  j["total_discrepancy"] = r.total_discrepancy;
  j["verdict_iso"] = r.verdict_iso;
  return j;
}

}  // namespace kv
