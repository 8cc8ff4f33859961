#include "ggt/report_json.hpp"

#include <cinttypes>
#include <cstdio>

namespace ggt {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json rational_json(const Rational& r) { return r.str(); }

}  // namespace

Json interval_json(const Interval& iv) {
  return Json{{"lo", iv.lo}, {"hi", iv.hi}};
}

Json to_json(const SCReport& rep, const Presentation& p) {
  Json j;
  j["variant"] = rep.variant == SCVariant::Cprime ? "cprime" : "cdprime";
  j["lambda"] = rational_json(rep.lambda);
  j["max_piece_len"] = rep.max_piece_len;
  j["shortest_relator_len"] = rep.shortest_relator_len;
  j["verdict"] = rep.verdict ? "pass" : "fail";
  j["witness"] = p.word_str(rep.witness);
  return j;
}

Json to_json(const GrowthReport& rep) {
  Json j;
  j["ball_sizes"] = rep.ball_sizes;
  Json fu = Json::array();
  for (double v : rep.fekete_upper) fu.push_back(v);
  j["fekete_upper"] = fu;
  j["fekete_valid"] = rep.fekete_valid;
  j["lower_bound"] = rep.lower_bound;
  j["lower_provenance"] = rep.lower_provenance;
  j["psg_ratio"] = rep.psg_ratio;
  return j;
}

Json to_json(const DeltaReport& rep) {
  Json j;
  j["delta"] = rational_json(rep.delta);
  j["exhaustive"] = rep.exhaustive;
  j["scanned"] = rep.scanned;
  j["skipped"] = rep.skipped;
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  return j;
}

Json to_json(const EnergyReport& rep, const Presentation& p) {
  Json j;
  j["min_value"] = rep.min_value;
  j["argmin"] = p.word_str(rep.argmin);
  j["scan_limit"] = rep.scan_limit;
  Json pts = Json::array();
  for (const auto& [w, v] : rep.per_point)
    pts.push_back(Json{{"point", p.word_str(w)}, {"energy", v}});
  j["per_point"] = pts;
  Json sk = Json::array();
  for (const Word& w : rep.skipped) sk.push_back(p.word_str(w));
  j["skipped"] = sk;
  return j;
}

Json to_json(const TranslationReport& rep) {
  Json j;
  j["tlen"] = rational_json(rep.tlen);
  j["exact"] = rep.exact;
  Json samples = Json::array();
  for (const auto& [n, v] : rep.stable_samples)
    samples.push_back(Json{{"n", n}, {"value", rational_json(v)}});
  j["stable_samples"] = samples;
  j["stable_lower"] = rational_json(rep.stable_lower);
  j["stable_upper"] = rational_json(rep.stable_upper);
  return j;
}

Json to_json(const FellowTravelReport& rep, const Presentation& p) {
  Json j;
  j["value"] = rational_json(rep.value);
  Json adm = Json::array();
  for (const Word& w : rep.admissible) adm.push_back(p.word_str(w));
  j["admissible"] = adm;
  Json fil = Json::array();
  for (const auto& [kept, dropped] : rep.filtered)
    fil.push_back(Json{{"kept", p.word_str(kept)}, {"dropped", p.word_str(dropped)}});
  j["filtered"] = fil;
  j["axis_size"] = rep.axis_size;
  return j;
}

Json to_json(const ReducedReport& rep, const Presentation& p) {
  Json j;
  j["alpha"] = rational_json(rep.alpha);
  j["delta"] = rational_json(rep.delta);
  j["basepoint"] = p.word_str(rep.basepoint);
  j["verdict"] = rep.verdict;
  j["inverse_clash"] = rep.inverse_clash;
  if (rep.failing_pair) {
    j["failing_pair"] = Json{{"u1", p.word_str(rep.failing_pair->first)},
                             {"u2", p.word_str(rep.failing_pair->second)}};
  } else {
    j["failing_pair"] = nullptr;
  }
  Json margins = Json::array();
  for (const auto& m : rep.pair_margins)
    margins.push_back(Json{{"u1", p.word_str(m.u1)},
                           {"u2", p.word_str(m.u2)},
                           {"product", rational_json(m.product)},
                           {"threshold", rational_json(m.threshold)},
                           {"ok", m.ok}});
  j["pair_margins"] = margins;
  Json disp = Json::array();
  for (const auto& [u, d] : rep.displacements)
    disp.push_back(Json{{"u", p.word_str(u)}, {"displacement", d}});
  j["displacements"] = disp;
  j["displacement_floor_ok"] = rep.displacement_floor_ok;
  return j;
}

Json to_json(const MovingFamily& fam, const Presentation& p) {
  Json j;
  Json members = Json::array();
  for (const auto& m : fam.members)
    members.push_back(
        Json{{"h", p.word_str(m.h)}, {"conjugator", p.word_str(m.conjugator)}});
  j["members"] = members;
  j["T_estimate"] = rational_json(fam.T_estimate);
  j["Delta_estimate"] = rational_json(fam.Delta_estimate);
  j["eps"] = rational_json(fam.eps);
  j["source_radius"] = fam.source_radius;
  return j;
}

Json to_json(const SCConditionReport& rep) {
  Json j;
  j["sc1"] = rep.sc1;
  j["sc2"] = rep.sc2;
  j["verdict"] = rep.verdict;
  j["lambda"] = rational_json(rep.lambda);
  j["mu"] = rational_json(rep.mu);
  j["delta"] = rational_json(rep.delta);
  j["Delta_estimate"] = rational_json(rep.Delta_estimate);
  j["T_estimate"] = rational_json(rep.T_estimate);
  return j;
}

Json to_json(const ShorteningVerdict& v, const Presentation& p) {
  Json j;
  j["is_shortening"] = v.is_shortening;
  j["y0"] = p.word_str(v.y0);
  j["yn"] = p.word_str(v.yn);
  j["proj_gap"] = v.proj_gap;
  j["margin_start"] = rational_json(v.margin_start);
  j["margin_end"] = rational_json(v.margin_end);
  j["member"] = v.member;
  return j;
}

Json to_json(const ConstantsRecord& rec) {
  Json j;
  Json in;
  in["delta"] = rational_json(rec.in.delta);
  in["delta0"] = rational_json(rec.in.delta0);
  in["Delta0"] = rational_json(rec.in.Delta0);
  in["rho0"] = rational_json(rec.in.rho0);
  in["kappa"] = rational_json(rec.in.kappa);
  in["N"] = rec.in.N;
  in["L0"] = rational_json(rec.in.L0);
  in["epsilon"] = rational_json(rec.in.epsilon);
  in["xi"] = rational_json(rec.in.xi);
  in["U_size"] = rec.in.U_size;
  if (rec.in.Delta_Q) in["Delta_Q"] = rational_json(*rec.in.Delta_Q);
  if (rec.in.energy) in["energy"] = rational_json(*rec.in.energy);
  if (rec.in.stable_tlen) in["stable_tlen"] = rational_json(*rec.in.stable_tlen);
  if (rec.in.Delta_g) in["Delta_g"] = rational_json(*rec.in.Delta_g);
  j["inputs"] = in;
  j["alpha"] = rational_json(rec.alpha);
  j["C"] = rec.C;
  j["tau0"] = rational_json(rec.tau0);
  j["b"] = rec.b;
  j["M"] = rec.M;
  j["M_ge_b"] = rec.M_ge_b;
  j["d1"] = interval_json(rec.d1);
  j["d2"] = interval_json(rec.d2);
  j["M0"] = interval_json(rec.M0);
  j["tau1"] = interval_json(rec.tau1);
  j["rho"] = interval_json(rec.rho);
  j["tau2"] = interval_json(rec.tau2);
  j["lambda0"] = interval_json(rec.lambda0);
  j["mu0"] = interval_json(rec.mu0);
  j["sigma_rescale"] = rational_json(rec.sigma_rescale);
  j["nu"] = rational_json(rec.nu);
  j["xi_counting"] = interval_json(rec.xi_counting);
  j["sigma_counting"] = interval_json(rec.sigma_counting);
  j["xi_out"] = rec.xi_out;
  j["a0"] = rational_json(rec.a0);
  j["b0"] = rational_json(rec.b0);
  return j;
}

Json to_json(const PingpongConstants& pc) {
  Json j;
  j["C"] = pc.C;
  j["n1"] = pc.n1;
  j["n2"] = pc.n2;
  j["energy_n1"] = pc.energy_n1;
  j["energy_n2"] = pc.energy_n2;
  j["energy_pingpong"] = pc.energy_pingpong;
  j["min_n"] = pc.min_n;
  j["power_coeff"] = pc.power_coeff;
  return j;
}

std::string growth_csv(const GrowthReport& rep) {
  std::string out = "n,ball_size,fekete_upper\n";
  for (std::size_t n = 1; n < rep.ball_sizes.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += std::to_string(rep.ball_sizes[n]);
    out += ',';
    out += fmt_double(rep.fekete_upper[n - 1]);
    out += '\n';
  }
  return out;
}

std::string shortfree_csv(const ShorteningFreeCounts& counts, std::uint64_t U_size) {
  CountingBoundReport bound = verify_counting_bound(counts.counts, U_size);
  std::string out = "k,count,bound_ok\n";
  for (std::size_t k = 0; k < counts.counts.size(); ++k) {
    bool ok = bound.power_ok[k] && (k + 1 < counts.counts.size() ? bound.step_ok[k] : true);
    out += std::to_string(k);
    out += ',';
    out += std::to_string(counts.counts[k]);
    out += ',';
    out += ok ? "true" : "false";
    out += '\n';
  }
  return out;
}

namespace {

Json field(const char* type) { return Json{{"type", type}}; }

Json object_schema(std::initializer_list<std::pair<const char*, Json>> fields) {
  Json props = Json::object();
  Json required = Json::array();
  for (const auto& [name, schema] : fields) {
    props[name] = schema;
    required.push_back(name);
  }
  return Json{{"type", "object"}, {"properties", props}, {"required", required}};
}

Json array_schema(Json item) { return Json{{"type", "array"}, {"items", item}}; }

}  // namespace

Json subcommand_schema(const std::string& name) {
  Json interval = object_schema({{"lo", field("number")}, {"hi", field("number")}});
  if (name == "check-sc")
    return object_schema({{"variant", field("string")},
                          {"lambda", field("string")},
                          {"max_piece_len", field("integer")},
                          {"shortest_relator_len", field("integer")},
                          {"verdict", field("string")},
                          {"witness", field("string")}});
  if (name == "dehn")
    return object_schema(
        {{"input", field("string")},
         {"result", field("string")},
         {"trace", array_schema(object_schema({{"pos", field("integer")},
                                               {"matched", field("string")},
                                               {"replacement", field("string")},
                                               {"element", field("integer")}}))}});
  if (name == "growth")
    return object_schema({{"ball_sizes", array_schema(field("integer"))},
                          {"fekete_upper", array_schema(field("number"))},
                          {"fekete_valid", field("boolean")},
                          {"lower_bound", field("number")},
                          {"lower_provenance", field("string")},
                          {"psg_ratio", field("number")}});
  if (name == "delta")
    return object_schema({{"delta", field("string")},
                          {"exhaustive", field("boolean")},
                          {"scanned", field("integer")},
                          {"skipped", field("integer")},
                          {"samples", field("integer")},
                          {"seed", field("integer")}});
  if (name == "energy")
    return object_schema(
        {{"min_value", field("integer")},
         {"argmin", field("string")},
         {"scan_limit", field("integer")},
         {"per_point", array_schema(object_schema(
                           {{"point", field("string")}, {"energy", field("integer")}}))},
         {"skipped", array_schema(field("string"))}});
  if (name == "reduced")
    return object_schema(
        {{"alpha", field("string")},
         {"delta", field("string")},
         {"basepoint", field("string")},
         {"verdict", field("boolean")},
         {"inverse_clash", field("boolean")},
         {"failing_pair", field("any")},
         {"pair_margins", array_schema(object_schema({{"u1", field("string")},
                                                      {"u2", field("string")},
                                                      {"product", field("string")},
                                                      {"threshold", field("string")},
                                                      {"ok", field("boolean")}}))},
         {"displacements",
          array_schema(object_schema(
              {{"u", field("string")}, {"displacement", field("integer")}}))},
         {"displacement_floor_ok", field("boolean")}});
  if (name == "pingpong")
    return object_schema({{"set", array_schema(field("string"))},
                          {"b0", field("string")},
                          {"b_below_threshold", field("boolean")},
                          {"delta_g_estimate", field("string")},
                          {"energy_LUp", field("string")},
                          {"report", subcommand_schema("reduced")}});
  if (name == "family")
    return object_schema(
        {{"members", array_schema(object_schema({{"h", field("string")},
                                                 {"conjugator", field("string")}}))},
         {"T_estimate", field("string")},
         {"Delta_estimate", field("string")},
         {"eps", field("string")},
         {"source_radius", field("integer")}});
  if (name == "shortfree")
    return object_schema({{"counts", array_schema(field("integer"))},
                          {"bound_ok", field("boolean")},
                          {"member_unique", field("boolean")},
                          {"minimal_words",
                           array_schema(object_schema({{"member", field("integer")},
                                                       {"word", field("string")}}))},
                          {"words", array_schema(field("string"))}});
  if (name == "constants")
    return object_schema({{"inputs", field("object")},
                          {"alpha", field("string")},
                          {"C", field("integer")},
                          {"tau0", field("string")},
                          {"b", field("integer")},
                          {"M", field("integer")},
                          {"M_ge_b", field("boolean")},
                          {"d1", interval},
                          {"d2", interval},
                          {"M0", interval},
                          {"tau1", interval},
                          {"rho", interval},
                          {"tau2", interval},
                          {"lambda0", interval},
                          {"mu0", interval},
                          {"sigma_rescale", field("string")},
                          {"nu", field("string")},
                          {"xi_counting", interval},
                          {"sigma_counting", interval},
                          {"xi_out", field("number")},
                          {"a0", field("string")},
                          {"b0", field("string")}});
  fail("UsageError", "no schema for subcommand '" + name + "'");
}

bool matches_schema(const Json& value, const Json& schema, std::string* why) {
  std::string type = schema.value("type", "any");
  auto mismatch = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (type == "any") return true;
  if (type == "object") {
    if (!value.is_object()) return mismatch("expected object");
    if (schema.contains("required"))
      for (const auto& name : schema["required"])
        if (!value.contains(name.get<std::string>()))
          return mismatch("missing field " + name.get<std::string>());
    if (schema.contains("properties")) {
      for (auto it = schema["properties"].begin(); it != schema["properties"].end();
           ++it) {
        if (!value.contains(it.key())) continue;
        if (!matches_schema(value[it.key()], it.value(), why)) {
          if (why) *why = it.key() + ": " + *why;
          return false;
        }
      }
    }
    return true;
  }
  if (type == "array") {
    if (!value.is_array()) return mismatch("expected array");
    for (const auto& item : value)
      if (!matches_schema(item, schema["items"], why)) return false;
    return true;
  }
  if (type == "string") return value.is_string() || mismatch("expected string");
  if (type == "integer")
    return value.is_number_integer() || mismatch("expected integer");
  if (type == "number") return value.is_number() || mismatch("expected number");
  if (type == "boolean") return value.is_boolean() || mismatch("expected boolean");
  return mismatch("unknown schema type " + type);
}

}  // namespace ggt
