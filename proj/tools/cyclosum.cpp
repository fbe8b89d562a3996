// Command-line surface for the exact roots-of-unity and GL_n(q) character
// toolkit. Subcommands map one-to-one onto library operations; output is
// deterministic text or a versioned JSON document. Exit codes: 0 all checks
// passed, 1 a verification produced a violation or counterexample, 2 input
// error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cyclosum/green.hpp"
#include "cyclosum/report.hpp"
#include "cyclosum/twof4.hpp"

using namespace cyclosum;

namespace {

struct Output {
  std::string format = "text";
  std::string out_path;

  void emit(const std::string& text_body, const ordered_json& doc) const {
    std::string payload =
        format == "json" ? doc.dump(2) + "\n" : text_body;
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
      out << payload;
    }
  }
};

// Command echo for report documents: the semantic arguments only, with the
// output-destination flags stripped so the payload bytes depend on nothing
// but the computation inputs.
std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--out" || arg == "--format") {
      ++i;  // skip the flag value too
      continue;
    }
    if (arg.rfind("--out=", 0) == 0 || arg.rfind("--format=", 0) == 0) continue;
    if (!s.empty()) s += ' ';
    s += arg;
  }
  return s;
}

TableFixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return fixture_from_json(ordered_json::parse(ss.str()));
}

ordered_json summary_json(const VerifySummary& s) {
  ordered_json j;
  j["total"] = s.total;
  j["holds"] = s.holds;
  j["holds_trivially"] = s.holds_trivially;
  j["no_statement"] = s.no_statement;
  j["guarantee_p_gt_nn1"] = s.guarantee_p_gt_nn1;
  j["guarantee_p_gt_n"] = s.guarantee_p_gt_n;
  return j;
}

std::string summary_text(const VerifySummary& s) {
  std::ostringstream os;
  os << "characters " << s.total << ": holds " << s.holds
     << ", holds-trivially " << s.holds_trivially << ", no-statement "
     << s.no_statement << "\n"
     << "hypothesis flags: p>n(n-1) " << (s.guarantee_p_gt_nn1 ? "yes" : "no")
     << ", p>n " << (s.guarantee_p_gt_n ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sums-of-roots-of-unity calculus and GL_n(q) character checks"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Output output;
  app.add_option("--format", output.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", output.out_path, "write output to a file");

  const std::string command_echo = join_args(argc, argv);

  // ---- rsum ----
  auto* rsum = app.add_subcommand("rsum", "sums of roots of unity");
  rsum->require_subcommand(1);

  std::string rs_text;
  std::int64_t budget_subsets = kDefaultSubsetBudget;

  auto* canon = rsum->add_subcommand("canon", "canonical minimal representative");
  canon->add_option("rootsum", rs_text, "sum as N:e^m,...")->required();

  auto* cond = rsum->add_subcommand("conductor", "conductor of the value");
  cond->add_option("rootsum", rs_text, "sum as N:e^m,...")->required();

  auto* minimal = rsum->add_subcommand("minimal", "minimality test");
  minimal->add_option("rootsum", rs_text, "sum as N:e^m,...")->required();
  minimal->add_option("--budget-subsets", budget_subsets,
                      "subset enumeration budget")->capture_default_str();

  std::int64_t en_modulus = 0, en_maxlen = 6;
  auto* enumerate = rsum->add_subcommand(
      "enumerate", "minimal vanishing sums up to rotation");
  enumerate->add_option("--modulus", en_modulus, "modulus N")->required();
  enumerate->add_option("--max-len", en_maxlen, "maximum length")
      ->capture_default_str();
  enumerate->add_option("--budget-subsets", budget_subsets,
                        "subset enumeration budget")->capture_default_str();

  // ---- gl ----
  auto* gl = app.add_subcommand("gl", "GL_n(q) class/character combinatorics");
  gl->require_subcommand(1);
  std::int64_t opt_n = 0, opt_q = 0, opt_d = 1, opt_p = 0, max_m = 6;

  auto* simp = gl->add_subcommand("simplices", "orbits of multiplication by q");
  simp->add_option("--q", opt_q, "prime power q")->required();
  simp->add_option("--d", opt_d, "degree d")->required();

  auto* labels = gl->add_subcommand("labels", "class and character labels");
  labels->add_option("--n", opt_n, "rank n")->required();
  labels->add_option("--q", opt_q, "prime power q")->required();

  auto* degrees = gl->add_subcommand("degrees", "character degrees in factored form");
  degrees->add_option("--n", opt_n, "rank n")->required();
  degrees->add_option("--q", opt_q, "prime power q")->required();

  auto* sumsq = gl->add_subcommand("sumsq", "sum of squared degrees vs group order");
  sumsq->add_option("--n", opt_n, "rank n")->required();
  sumsq->add_option("--q", opt_q, "prime power q")->required();

  auto* lemma = gl->add_subcommand(
      "lemma43", "cyclotomic divisibility bound over all shapes");
  lemma->add_option("--n", opt_n, "maximum rank")->required();
  lemma->add_option("--max-m", max_m, "maximum cyclotomic index")
      ->capture_default_str();

  // ---- p13 ----
  auto* p13 = app.add_subcommand("p13", "character-field witness verifiers");
  p13->require_subcommand(1);
  std::int64_t budget_perms = kDefaultPermBudget;
  std::string fixture_path;

  auto* vgl = p13->add_subcommand("verify-gl", "GL_n(q) witness verification");
  vgl->add_option("--n", opt_n, "rank n")->required();
  vgl->add_option("--q", opt_q, "prime power q")->required();
  vgl->add_option("--p", opt_p, "odd prime p | q-1")->required();
  vgl->add_option("--budget-perms", budget_perms, "permutation budget")
      ->capture_default_str();

  auto* vsl = p13->add_subcommand("verify-sl", "SL_n(q) witness verification");
  vsl->add_option("--n", opt_n, "rank n")->required();
  vsl->add_option("--q", opt_q, "prime power q")->required();
  vsl->add_option("--p", opt_p, "odd prime p | q-1")->required();
  vsl->add_option("--budget-perms", budget_perms, "permutation budget")
      ->capture_default_str();

  auto* vtab = p13->add_subcommand("verify-table", "character-table fixture check");
  vtab->add_option("--fixture", fixture_path, "fixture JSON path")->required();
  vtab->add_option("--p", opt_p, "restrict to one odd prime");

  auto* tf4 = p13->add_subcommand("twof4", "residue search over the 24-exponent family");

  try {
    app.parse(argc, argv);

    if (canon->parsed()) {
      RootSum s = parse_rootsum(rs_text);
      RootSum c = canonical_minimal(s);
      ordered_json j;
      j["input"] = to_string(s);
      j["canonical"] = to_string(c);
      output.emit(to_string(c) + "\n", report_document(command_echo, j));
      return 0;
    }
    if (cond->parsed()) {
      RootSum s = parse_rootsum(rs_text);
      Conductor c = conductor(s);
      ordered_json j;
      j["input"] = to_string(s);
      j["conductor"] = c.value;
      ordered_json parts;
      for (auto& [p, pp] : c.decompose()) parts[std::to_string(p)] = pp;
      j["p_parts"] = parts;
      output.emit("conductor " + std::to_string(c.value) + "\n",
                  report_document(command_echo, j));
      return 0;
    }
    if (minimal->parsed()) {
      RootSum s = parse_rootsum(rs_text);
      bool is_min = is_minimal(s, budget_subsets);
      ordered_json j;
      j["input"] = to_string(s);
      j["minimal"] = is_min;
      output.emit(std::string(is_min ? "minimal" : "not-minimal") + "\n",
                  report_document(command_echo, j));
      return 0;
    }
    if (enumerate->parsed()) {
      auto classes = enumerate_minimal_vanishing(en_modulus, en_maxlen,
                                                 budget_subsets);
      ordered_json j;
      j["modulus"] = en_modulus;
      j["max_len"] = en_maxlen;
      j["classes"] = ordered_json::array();
      std::string text;
      for (auto& c : classes) {
        j["classes"].push_back(to_string(c));
        text += to_string(c) + "\n";
      }
      text += std::to_string(classes.size()) + " rotation classes\n";
      output.emit(text, report_document(command_echo, j));
      return 0;
    }

    if (simp->parsed()) {
      auto list = simplices(opt_q, opt_d);
      ordered_json j;
      j["q"] = opt_q;
      j["d"] = opt_d;
      j["reps"] = ordered_json::array();
      std::string text;
      for (auto& s : list) {
        j["reps"].push_back(s.rep);
        text += std::to_string(s.rep) + "\n";
      }
      text += std::to_string(list.size()) + " simplices\n";
      output.emit(text, report_document(command_echo, j));
      return 0;
    }
    if (labels->parsed()) {
      auto [cls, chars] = enumerate_labels(opt_n, opt_q);
      ordered_json j;
      j["n"] = opt_n;
      j["q"] = opt_q;
      j["count"] = cls.size();
      j["classes"] = ordered_json::array();
      j["characters"] = ordered_json::array();
      std::string text;
      for (auto& c : cls) j["classes"].push_back(to_string(c));
      for (auto& c : chars) {
        j["characters"].push_back(to_string(c));
        text += to_string(c) + "\n";
      }
      text += std::to_string(cls.size()) + " labels\n";
      output.emit(text, report_document(command_echo, j));
      return 0;
    }
    if (degrees->parsed()) {
      auto maps = enumerate_label_maps(opt_n, opt_q);
      ordered_json j;
      j["n"] = opt_n;
      j["q"] = opt_q;
      j["items"] = ordered_json::array();
      std::string text;
      for (auto& label : maps) {
        CharLabel chi;
        static_cast<LabelMap&>(chi) = label;
        CycFactored deg = degree(chi);
        Rat value = evaluate(deg, opt_q);
        ordered_json item;
        item["label"] = to_string(label);
        item["degree"] = to_string(deg);
        item["value"] = boost::multiprecision::numerator(value).str();
        j["items"].push_back(item);
        text += to_string(label) + "  " + to_string(deg) + "  = " +
                boost::multiprecision::numerator(value).str() + "\n";
      }
      output.emit(text, report_document(command_echo, j));
      return 0;
    }
    if (sumsq->parsed()) {
      auto maps = enumerate_label_maps(opt_n, opt_q);
      std::map<CharShape, CycFactored> memo;
      Rat total = 0;
      for (auto& label : maps) {
        CharShape shape = shape_of(label);
        auto it = memo.find(shape);
        if (it == memo.end()) it = memo.emplace(shape, degree_from_shape(shape)).first;
        Rat v = evaluate(it->second, opt_q);
        total += v * v;
      }
      Int order = group_order(opt_n, opt_q);
      bool equal = total == Rat(order);
      ordered_json j;
      j["n"] = opt_n;
      j["q"] = opt_q;
      j["labels"] = maps.size();
      j["sum_of_squares"] = boost::multiprecision::numerator(total).str();
      j["group_order"] = order.str();
      j["equal"] = equal;
      std::string text = boost::multiprecision::numerator(total).str() + " = " +
                         order.str() + (equal ? " (equal)\n" : " (MISMATCH)\n");
      output.emit(text, report_document(command_echo, j));
      return equal ? 0 : 1;
    }
    if (lemma->parsed()) {
      std::int64_t checked = 0;
      ordered_json violations = ordered_json::array();
      std::string text;
      for (std::int64_t n = 1; n <= opt_n; ++n) {
        for (const CharShape& shape : enumerate_shapes(n)) {
          CycFactored deg = degree_from_shape(shape);
          for (std::int64_t m = 1; m <= max_m; ++m) {
            ++checked;
            std::int64_t a = lemma_divisibility_lhs(shape, m) / m;
            if (valuation_F(deg, m) < a) {
              ordered_json v;
              v["n"] = n;
              v["m"] = m;
              v["bound"] = a;
              v["valuation"] = valuation_F(deg, m);
              violations.push_back(v);
            }
          }
        }
      }
      ordered_json j;
      j["max_n"] = opt_n;
      j["max_m"] = max_m;
      j["checked"] = checked;
      j["violations"] = violations;
      text += std::to_string(checked) + " checks, " +
              std::to_string(violations.size()) + " violations\n";
      output.emit(text, report_document(command_echo, j));
      return violations.empty() ? 0 : 1;
    }

    if (vgl->parsed() || vsl->parsed()) {
      VerifyOptions opts;
      opts.budget_perms = budget_perms;
      ordered_json reports = ordered_json::array();
      // per-report records are only materialized for structured output
      std::function<void(const WitnessReport&)> sink = nullptr;
      if (output.format == "json")
        sink = [&](const WitnessReport& r) { reports.push_back(to_json(r)); };
      VerifySummary sum = vgl->parsed()
                              ? verify_gl(opt_n, opt_q, opt_p, opts, sink)
                              : verify_sl(opt_n, opt_q, opt_p, opts, sink);
      ordered_json j;
      j["n"] = opt_n;
      j["q"] = opt_q;
      j["p"] = opt_p;
      j["group"] = vgl->parsed() ? "GL" : "SL";
      j["summary"] = summary_json(sum);
      j["reports"] = std::move(reports);
      output.emit(summary_text(sum), report_document(command_echo, j));
      return sum.all_certified() ? 0 : 1;
    }
    if (vtab->parsed()) {
      TableFixture fx = load_fixture(fixture_path);
      auto reports = verify_table(fx, opt_p);
      ordered_json j;
      j["fixture"] = fx.name;
      j["reports"] = ordered_json::array();
      std::string text;
      bool ok = true;
      for (auto& r : reports) {
        j["reports"].push_back(to_json(r));
        text += r.character + " p=" + std::to_string(r.p) + " " +
                to_string(r.verdict);
        if (!r.witness_class.empty()) text += " witness=" + r.witness_class;
        text += "\n";
        if (r.verdict == Verdict::fails) ok = false;
      }
      output.emit(text, report_document(command_echo, j));
      return ok ? 0 : 1;
    }
    if (tf4->parsed()) {
      auto bad = twof4_p11_search();
      ordered_json j;
      j["counterexamples"] = ordered_json::array();
      for (auto& t : bad) j["counterexamples"].push_back({t[0], t[1], t[2]});
      j["count"] = bad.size();
      output.emit(std::to_string(bad.size()) + " counterexamples\n",
                  report_document(command_echo, j));
      return bad.empty() ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
