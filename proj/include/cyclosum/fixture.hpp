#pragma once

#include <string>

#include "cyclosum/witness.hpp"

#include "json.hpp"

// Character-table fixtures: a named group given by classes (name, element
// order) and characters (one root-sum value per class), plus the generic
// verifier that hunts a p-element witness per character and prime.

namespace cyclosum {

using ordered_json = nlohmann::ordered_json;

struct FixtureClass {
  std::string name;
  std::int64_t order = 1;
  // p -> index of the class of g^(o(g)_{p'}); diagnostics only.
  std::map<std::int64_t, std::int64_t> p_power_map;
};

struct FixtureCharacter {
  std::string name;
  std::vector<RootSum> values;  // one per class, fixture modulus
};

struct TableFixture {
  std::string name;
  std::int64_t exponent_modulus = 1;
  std::vector<FixtureClass> classes;
  std::vector<FixtureCharacter> characters;

  std::size_t identity_class() const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i].order == 1) return i;
    throw std::invalid_argument("fixture: no identity class (order 1)");
  }

  void validate() const {
    if (exponent_modulus < 1)
      throw std::invalid_argument("fixture: exponent_modulus must be >= 1");
    for (auto& c : classes) {
      if (c.order < 1 || exponent_modulus % c.order != 0)
        throw std::invalid_argument("fixture: class order must divide the modulus");
      for (auto& [p, idx] : c.p_power_map)
        if (idx < 0 || idx >= static_cast<std::int64_t>(classes.size()))
          throw std::invalid_argument("fixture: p_power_map index out of range");
    }
    std::size_t id = identity_class();
    for (auto& chi : characters) {
      if (chi.values.size() != classes.size())
        throw std::invalid_argument("fixture: character " + chi.name +
                                    " needs one value per class");
      for (std::size_t i = 0; i < chi.values.size(); ++i) {
        const RootSum& v = chi.values[i];
        if (v.modulus != exponent_modulus)
          throw std::invalid_argument("fixture: value modulus mismatch in " +
                                      chi.name);
        // entries must be o(g)-th roots of unity
        const std::int64_t stride = exponent_modulus / classes[i].order;
        for (auto& [e, m] : v.counts)
          if (e % stride != 0)
            throw std::invalid_argument("fixture: value entry of too-high order in " +
                                        chi.name + " at class " + classes[i].name);
      }
      Int deg;
      if (!rational_value(chi.values[id], &deg) || deg < 0)
        throw std::invalid_argument("fixture: identity value of " + chi.name +
                                    " is not a nonnegative integer");
    }
  }

  Int degree_of(std::size_t char_idx) const {
    Int deg;
    rational_value(characters.at(char_idx).values[identity_class()], &deg);
    return deg;
  }
};

// Conductor of the compositum of all values of one character: the least
// f | N (avoiding f == 2 mod 4) with every value fixed by every unit
// a == 1 (mod f). The valid set is gcd-closed, so the minimum is attained.
inline Conductor char_conductor(const std::vector<RootSum>& values,
                                std::int64_t modulus) {
  std::vector<CycValue> bases;
  bases.reserve(values.size());
  for (auto& v : values) {
    if (v.modulus != modulus)
      throw std::invalid_argument("char_conductor: value modulus mismatch");
    bases.push_back(reduce_rootsum(v));
  }
  for (std::int64_t f : divisors(modulus)) {
    if (f % 4 == 2) continue;
    bool ok = true;
    for (std::int64_t a = 1; a < modulus && ok; a += f) {
      if (a == 1 || std::gcd(a, modulus) != 1) continue;
      for (std::size_t i = 0; i < values.size(); ++i)
        if (!(reduce_rootsum(apply_exponent_map(values[i], a)) == bases[i])) {
          ok = false;
          break;
        }
    }
    if (ok) return Conductor{f};
  }
  return Conductor{modulus};
}

inline Conductor char_conductor(const TableFixture& fx, std::size_t char_idx) {
  return char_conductor(fx.characters.at(char_idx).values, fx.exponent_modulus);
}

struct FixtureReport {
  std::string character;
  std::int64_t p = 3;
  Int degree;
  std::int64_t f_chi = 1;          // conductor of the character
  std::int64_t f_chi_p = 1;        // its p-part
  std::string witness_class;       // empty when no witness applies
  std::int64_t f_witness_p = 1;    // p-part of the conductor of chi(g)
  Branch branch = Branch::lemma21_trivial;
  Verdict verdict = Verdict::holds_trivially;
};

// Witness search for one character and one odd prime: rows with p | degree
// make no statement; p-parts <= p hold with the identity; otherwise scan
// the classes of p-power element order for one whose value has the full
// conductor p-part. Every found witness is re-verified through the
// canonical-form conductor route and the Galois stabilizer.
inline FixtureReport find_witness(const TableFixture& fx, std::size_t char_idx,
                                  std::int64_t p) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("find_witness: p must be an odd prime");
  const auto& chi = fx.characters.at(char_idx);
  FixtureReport rep;
  rep.character = chi.name;
  rep.p = p;
  rep.degree = fx.degree_of(char_idx);
  Conductor f = char_conductor(fx, char_idx);
  rep.f_chi = f.value;
  rep.f_chi_p = f.p_part(p);
  if (rep.degree % p == 0) {
    rep.branch = Branch::not_applicable_p_divides_degree;
    rep.verdict = Verdict::no_statement;
    return rep;
  }
  if (rep.f_chi_p <= p) {
    rep.branch = Branch::lemma21_trivial;
    rep.verdict = Verdict::holds_trivially;
    rep.witness_class = fx.classes[fx.identity_class()].name;
    rep.f_witness_p = 1;
    return rep;
  }
  rep.branch = Branch::generic;
  for (std::size_t c = 0; c < fx.classes.size(); ++c) {
    const std::int64_t order = fx.classes[c].order;
    if (!is_power_of(order, p)) continue;  // p-elements only
    const RootSum& v = chi.values[c];
    std::int64_t fv_p = conductor(v).p_part(p);
    // second, independent conductor route through canonical stripping
    RootSum local = rescale_down(v, fx.exponent_modulus / order);
    if (conductor_p_part_via_canonical(local, p) != fv_p)
      throw std::logic_error("find_witness: conductor routes disagree");
    if (fv_p != rep.f_chi_p) continue;
    // Galois re-verification of the certified inequality:
    // [Q_{f_chi_p} : Q(chi(g))] = phi(f_chi_p) / [Q(chi(g)) : Q].
    std::int64_t value_degree = totient(order) / galois_stabilizer_size(local);
    if (totient(rep.f_chi_p) % value_degree != 0)
      throw std::logic_error("find_witness: degree does not divide phi(f_p)");
    if ((totient(rep.f_chi_p) / value_degree) % p == 0)
      throw std::logic_error("find_witness: witness fails the index check");
    rep.witness_class = fx.classes[c].name;
    rep.f_witness_p = fv_p;
    rep.verdict = Verdict::holds;
    return rep;
  }
  rep.verdict = Verdict::fails;
  return rep;
}

// All (character, p) reports for the odd primes dividing the exponent, or
// for one chosen p. Deterministic: characters in fixture order.
inline std::vector<FixtureReport> verify_table(const TableFixture& fx,
                                               std::int64_t only_p = 0) {
  fx.validate();
  std::vector<std::int64_t> primes;
  if (only_p != 0) {
    primes.push_back(only_p);
  } else {
    std::int64_t m = fx.exponent_modulus;
    for (std::int64_t p = 3; p <= m; p += 2)
      if (is_prime(p) && m % p == 0) primes.push_back(p);
  }
  std::vector<FixtureReport> out;
  for (std::size_t i = 0; i < fx.characters.size(); ++i)
    for (std::int64_t p : primes) out.push_back(find_witness(fx, i, p));
  return out;
}

// chi(g) vs chi(g_p) conductor p-parts for classes carrying a p_power_map
// entry; diagnostic only, no bearing on verdicts.
struct PPowerDiagnostic {
  std::string class_name;
  std::string p_power_class;
  std::int64_t f_value_p = 1;
  std::int64_t f_p_power_value_p = 1;
};

inline std::vector<PPowerDiagnostic> p_power_diagnostics(const TableFixture& fx,
                                                         std::size_t char_idx,
                                                         std::int64_t p) {
  std::vector<PPowerDiagnostic> out;
  const auto& chi = fx.characters.at(char_idx);
  for (std::size_t c = 0; c < fx.classes.size(); ++c) {
    auto it = fx.classes[c].p_power_map.find(p);
    if (it == fx.classes[c].p_power_map.end()) continue;
    PPowerDiagnostic d;
    d.class_name = fx.classes[c].name;
    d.p_power_class = fx.classes[static_cast<std::size_t>(it->second)].name;
    d.f_value_p = conductor(chi.values[c]).p_part(p);
    d.f_p_power_value_p =
        conductor(chi.values[static_cast<std::size_t>(it->second)]).p_part(p);
    out.push_back(d);
  }
  return out;
}

// ---- JSON round-trip ----

inline ordered_json to_json(const TableFixture& fx) {
  ordered_json j;
  j["name"] = fx.name;
  j["exponent_modulus"] = fx.exponent_modulus;
  j["classes"] = ordered_json::array();
  for (auto& c : fx.classes) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["order"] = c.order;
    if (!c.p_power_map.empty()) {
      ordered_json pm;
      for (auto& [p, idx] : c.p_power_map) pm[std::to_string(p)] = idx;
      jc["p_power_map"] = pm;
    }
    j["classes"].push_back(jc);
  }
  j["characters"] = ordered_json::array();
  for (auto& chi : fx.characters) {
    ordered_json jx;
    jx["name"] = chi.name;
    jx["values"] = ordered_json::array();
    for (auto& v : chi.values) jx["values"].push_back(to_string(v));
    j["characters"].push_back(jx);
  }
  return j;
}

inline TableFixture fixture_from_json(const ordered_json& j) {
  TableFixture fx;
  fx.name = j.at("name").get<std::string>();
  fx.exponent_modulus = j.at("exponent_modulus").get<std::int64_t>();
  for (auto& jc : j.at("classes")) {
    FixtureClass c;
    c.name = jc.at("name").get<std::string>();
    c.order = jc.at("order").get<std::int64_t>();
    if (jc.contains("p_power_map"))
      for (auto& [key, idx] : jc.at("p_power_map").items())
        c.p_power_map[std::stoll(key)] = idx.get<std::int64_t>();
    fx.classes.push_back(std::move(c));
  }
  for (auto& jx : j.at("characters")) {
    FixtureCharacter chi;
    chi.name = jx.at("name").get<std::string>();
    for (auto& jv : jx.at("values"))
      chi.values.push_back(parse_rootsum(jv.get<std::string>()));
    fx.characters.push_back(std::move(chi));
  }
  fx.validate();
  return fx;
}

inline ordered_json to_json(const FixtureReport& r) {
  ordered_json j;
  j["character"] = r.character;
  j["p"] = r.p;
  j["degree"] = r.degree.str();
  j["f_chi"] = r.f_chi;
  j["f_chi_p"] = r.f_chi_p;
  j["witness_class"] = r.witness_class;
  j["f_witness_p"] = r.f_witness_p;
  j["branch"] = to_string(r.branch);
  j["verdict"] = to_string(r.verdict);
  return j;
}

}  // namespace cyclosum
