#pragma once

#include "cyclosum/fixture.hpp"

// Structured report payloads. Reports are versioned documents whose bytes
// depend only on the inputs: fixed key order, no timestamps, sorted records.

namespace cyclosum {

inline constexpr const char* kToolVersion = "cyclosum 0.1.0";
inline constexpr int kReportSchemaVersion = 1;

inline ordered_json to_json(const WitnessReport& r) {
  ordered_json j;
  j["character"] = r.chi.params;
  j["p"] = r.p;
  j["k_prime"] = r.k_prime;
  if (r.m < 0)
    j["m"] = nullptr;
  else
    j["m"] = r.m;
  j["f_prime_p"] = r.f_prime_p;
  if (r.cls)
    j["class"] = r.cls->params;
  else
    j["class"] = nullptr;
  j["l_counts"] = r.l_counts;
  j["branch"] = to_string(r.branch);
  j["in_sl"] = r.in_sl;
  j["verdict"] = to_string(r.verdict);
  return j;
}

inline Branch branch_from_string(const std::string& s) {
  for (Branch b : {Branch::generic, Branch::congruent_remark45, Branch::sl_branch,
                   Branch::lemma21_trivial,
                   Branch::not_applicable_p_divides_degree})
    if (s == to_string(b)) return b;
  throw std::invalid_argument("unknown branch: " + s);
}

inline Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::holds, Verdict::holds_trivially,
                    Verdict::no_statement, Verdict::fails})
    if (s == to_string(v)) return v;
  throw std::invalid_argument("unknown verdict: " + s);
}

inline WitnessReport witness_report_from_json(const ordered_json& j,
                                              std::int64_t n, std::int64_t q) {
  WitnessReport r;
  r.chi.q = q;
  r.chi.n = n;
  r.chi.params = j.at("character").get<std::vector<std::int64_t>>();
  r.p = j.at("p").get<std::int64_t>();
  r.k_prime = j.at("k_prime").get<std::int64_t>();
  r.m = j.at("m").is_null() ? -1 : j.at("m").get<std::int64_t>();
  r.f_prime_p = j.at("f_prime_p").get<std::int64_t>();
  if (!j.at("class").is_null()) {
    ClassParams cls;
    cls.q = q;
    cls.n = n;
    cls.params = j.at("class").get<std::vector<std::int64_t>>();
    r.cls = cls;
  }
  r.l_counts = j.at("l_counts").get<std::vector<std::int64_t>>();
  r.branch = branch_from_string(j.at("branch").get<std::string>());
  r.in_sl = j.at("in_sl").get<bool>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  return r;
}

inline FixtureReport fixture_report_from_json(const ordered_json& j) {
  FixtureReport r;
  r.character = j.at("character").get<std::string>();
  r.p = j.at("p").get<std::int64_t>();
  r.degree = Int(j.at("degree").get<std::string>());
  r.f_chi = j.at("f_chi").get<std::int64_t>();
  r.f_chi_p = j.at("f_chi_p").get<std::int64_t>();
  r.witness_class = j.at("witness_class").get<std::string>();
  r.f_witness_p = j.at("f_witness_p").get<std::int64_t>();
  r.branch = branch_from_string(j.at("branch").get<std::string>());
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  return r;
}

// Document wrapper: schema version, tool version, command echo, payload.
inline ordered_json report_document(const std::string& command,
                                    ordered_json payload) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = kToolVersion;
  j["command"] = command;
  j["result"] = std::move(payload);
  return j;
}

}  // namespace cyclosum
