// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "christoffel/borders.hpp"
#include "christoffel/freegroup.hpp"
#include "christoffel/graph_io.hpp"
#include "christoffel/graphs.hpp"
#include "christoffel/ostrowski.hpp"
#include "christoffel/verify.hpp"
#include "christoffel/words.hpp"

namespace christoffel::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string alphas;
  std::string n;
  std::string digits;
  std::string mode = "greedy";
  std::string method = "theorem";
  std::string kind = "compact";
  std::string format = "text";
  std::size_t max_m = 3;
  std::string max_a = "3";
  std::size_t threads = 0;
};

json digits_json(const DigitString& ds) {
  json out = json::array();
  for (const Integer& d : ds.digits()) out.push_back(d.str());
  return out;
}

std::string tag_list(const std::vector<std::string>& tags) {
  std::string out;
  for (const auto& t : tags) out += (out.empty() ? "" : ", ") + t;
  return out;
}

int cmd_ostrowski(const Options& o, std::ostream& out) {
  const OstrowskiSystem sys = parse_system(o.alphas);
  const Integer n = parse_integer(o.n);
  std::vector<DigitString> reps;
  if (o.mode == "greedy") {
    reps.push_back(greedy(sys, n));
  } else if (o.mode == "lazy") {
    reps.push_back(lazy(sys, n));
  } else {
    reps = enumerate_legal(sys, n);
    if (reps.empty()) throw std::out_of_range("N=" + n.str() + " has no legal representation");
  }
  if (o.format == "json") {
    json j = {{"system", to_string(sys)}, {"n", n.str()}, {"mode", o.mode}, {"representations", json::array()}};
    for (const auto& ds : reps) {
      j["representations"].push_back({{"digits", digits_json(ds)}, {"flavor", to_string(classify(ds))},
                                      {"value", value(ds).str()}});
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& ds : reps) out << to_string(ds) << " (" << to_string(classify(ds)) << ", value " << value(ds) << ")\n";
  return kExitOk;
}

int cmd_word(const Options& o, std::ostream& out) {
  const OstrowskiSystem sys = parse_system(o.alphas);
  const Integer q = sys.denominator(static_cast<int>(sys.size()));
  std::optional<DigitString> digits;
  if (!o.digits.empty()) {
    digits = DigitString(sys, parse_digits(o.digits));
  } else {
    const Integer n = parse_integer(o.n);
    if (n < 0 || n > q - 1) throw std::out_of_range("N must lie in [0, " + Integer(q - 1).str() + "]");
    digits = greedy(sys, n);
  }
  const Integer n = value(*digits);

  if (!is_legal(*digits)) {
    const GroupWord g = v_group_word(*digits);
    if (o.format == "json") {
      out << json{{"system", to_string(sys)}, {"digits", digits_json(*digits)}, {"value", n.str()},
                  {"group_word", g.str()}, {"conjugator", conjugator_h(*digits).str()}}
                 .dump(2)
          << "\n";
    } else {
      out << g << " (free group, unrestricted digits, N=" << n << ")\n";
      out << "conjugator: " << conjugator_h(*digits) << "\n";
    }
    return kExitOk;
  }

  const BinaryWord w = v_word(*digits);
  const Integer reduced = ((n % q) + q) % q;
  const ChristoffelKind kind = is_christoffel(greedy(sys, reduced));
  std::vector<std::string> tags;
  if (w == m_word(sys)) tags.push_back("standard");
  if (kind != ChristoffelKind::none) tags.push_back(to_string(kind));
  if (tags.empty()) tags.push_back("conjugate");
  const std::optional<Rational> s = slope(w);
  const std::string slope_text = s ? to_string(*s) : "infinity";
  if (o.format == "json") {
    out << json{{"system", to_string(sys)},   {"digits", digits_json(*digits)},
                {"value", n.str()},           {"word", w.str()},
                {"tags", tags},               {"christoffel", to_string(kind)},
                {"Slope", to_string(b_density(w))}, {"slope", slope_text}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << w << " (" << tag_list(tags) << ", Slope " << to_string(b_density(w)) << ", slope " << slope_text << ")\n";
  out << "digits " << to_string(*digits) << " (" << to_string(classify(*digits)) << "), N=" << n << "\n";
  return kExitOk;
}

void print_border(const std::string& method, const BorderResult& r, bool christoffel, const Options& o,
                  std::ostream& out, json& j) {
  if (o.format == "json") {
    json entry = {{"border", r.border ? json(r.border->str()) : json(nullptr)}, {"period", r.period},
                  {"christoffel", christoffel}};
    if (r.structure) entry["structure"] = to_string(*r.structure);
    if (!r.reductions.empty()) entry["reductions"] = r.reductions;
    j[method] = entry;
    return;
  }
  if (o.method == "all") out << method << ": ";
  if (r.border) {
    out << *r.border << " (period " << r.period << ")\n";
  } else if (christoffel) {
    out << "NONE (Christoffel)\n";
  } else {
    out << "NONE (period " << r.period << ")\n";
  }
  if (r.structure) out << "  structure: " << to_string(*r.structure) << "\n";
  for (const auto& red : r.reductions) out << "  reduction: " << red << "\n";
}

int cmd_border(const Options& o, std::ostream& out) {
  const OstrowskiSystem sys = parse_system(o.alphas);
  const Integer n = parse_integer(o.n);
  const Integer q = sys.denominator(static_cast<int>(sys.size()));
  if (n < 0 || n > q - 1) throw std::out_of_range("N must lie in [0, " + Integer(q - 1).str() + "]");
  const DigitString ds = greedy(sys, n);
  const bool christoffel = is_christoffel(ds) != ChristoffelKind::none;
  const BinaryWord w = h_word(sys, n);

  std::vector<std::pair<std::string, BorderResult>> results;
  if (o.method == "theorem" || o.method == "all") results.emplace_back("theorem", longest_border_theorem(ds));
  if (o.method == "closed" || o.method == "all") results.emplace_back("closed", longest_border_closed(sys, n));
  if (o.method == "oracle" || o.method == "all") results.emplace_back("oracle", longest_border_bruteforce(w));

  json j = {{"system", to_string(sys)}, {"n", n.str()}, {"word", w.str()}};
  for (const auto& [method, r] : results) print_border(method, r, christoffel, o, out, j);
  bool agree = true;
  for (const auto& [method, r] : results) agree = agree && r.border == results.front().second.border;
  if (o.method == "all") {
    if (o.format == "json") {
      j["agreement"] = agree;
    } else {
      out << "agreement: " << (agree ? "yes" : "NO") << "\n";
    }
  }
  if (o.format == "json") out << j.dump(2) << "\n";
  return agree ? kExitOk : kExitVerificationFailed;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const OstrowskiSystem sys = parse_system(o.alphas);
  if (o.kind == "tree") {
    const TreeEmbedding tree = tree_embedding(sys);
    if (o.format == "dot") out << export_dot(tree);
    else if (o.format == "json") out << export_json(tree);
    else out << export_text(tree);
    return kExitOk;
  }
  const CompactGraph g = compact_graph(sys);
  if (o.kind == "automaton") {
    const Automaton aut = expand_to_automaton(g);
    if (o.format == "dot") out << export_dot(aut);
    else if (o.format == "json") out << export_json(aut);
    else out << export_text(aut);
    return kExitOk;
  }
  const EdgeLabels labels = o.kind == "sturmian" ? EdgeLabels::lengths : EdgeLabels::words;
  if (o.format == "dot") out << export_dot(g, labels);
  else if (o.format == "json") out << export_json(g);
  else out << export_text(g, labels);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions options;
  options.max_m = o.max_m;
  options.max_a = parse_integer(o.max_a);
  options.threads = o.threads;
  if (options.max_m < 1 || options.max_a < 1) throw std::domain_error("verification bounds must be at least 1");
  const VerifyReport report = run_verification(options);
  if (o.format == "json") {
    json j = {{"systems", report.systems}, {"checks", json::array()}, {"result", report.ok() ? "PASS" : "FAIL"}};
    for (const auto& t : report.tallies) j["checks"].push_back({{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}});
    if (report.first_failure) {
      j["counterexample"] = {{"check", report.first_failure->check}, {"system", report.first_failure->system},
                             {"detail", report.first_failure->detail}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << format_report(report);
  }
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugates of Christoffel words, Ostrowski numeration and borders", "christoffel"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"text", "json"});

  auto* ostrowski = app.add_subcommand("ostrowski", "Ostrowski representations of N");
  ostrowski->add_option("--alphas", o.alphas, "partial quotients a1,...,am")->required();
  ostrowski->add_option("--n", o.n, "the represented integer N")->required();
  ostrowski->add_option("--mode", o.mode, "greedy, lazy or all")->check(CLI::IsMember({"greedy", "lazy", "all"}));
  ostrowski->add_option("--format", o.format, "text or json")->check(formats);

  auto* word = app.add_subcommand("word", "The conjugate V_m = C^N(M_m)");
  word->add_option("--alphas", o.alphas, "partial quotients a1,...,am")->required();
  auto* word_n = word->add_option("--n", o.n, "rotation N in [0, q_m - 1]");
  auto* word_digits = word->add_option("--digits", o.digits, "digits d1,...,dm (any integers)");
  word_n->excludes(word_digits);
  word->add_option("--format", o.format, "text or json")->check(formats);

  auto* border = app.add_subcommand("border", "Longest border of C^N(M_m)");
  border->add_option("--alphas", o.alphas, "partial quotients a1,...,am")->required();
  border->add_option("--n", o.n, "rotation N in [0, q_m - 1]")->required();
  border->add_option("--method", o.method, "theorem, closed, oracle or all")
      ->check(CLI::IsMember({"theorem", "closed", "oracle", "all"}));
  border->add_option("--format", o.format, "text or json")->check(formats);

  auto* graph = app.add_subcommand("graph", "Compact graph, Sturmian graph, automaton or tree embedding");
  graph->add_option("--alphas", o.alphas, "partial quotients a1,...,am (m >= 2)")->required();
  graph->add_option("--kind", o.kind, "compact, sturmian, automaton or tree")
      ->check(CLI::IsMember({"compact", "sturmian", "automaton", "tree"}));
  graph->add_option("--format", o.format, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));

  auto* verify = app.add_subcommand("verify", "Exhaustive property sweep over small systems");
  verify->add_option("--max-m", o.max_m, "largest number of partial quotients");
  verify->add_option("--max-a", o.max_a, "largest partial quotient");
  verify->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  verify->add_option("--format", o.format, "text or json")->check(formats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitDomainError;
  }

  try {
    if (*ostrowski) return cmd_ostrowski(o, out);
    if (*word) {
      if (o.n.empty() && o.digits.empty()) throw std::invalid_argument("word needs --n or --digits");
      return cmd_word(o, out);
    }
    if (*border) return cmd_border(o, out);
    if (*graph) return cmd_graph(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitDomainError;
}

}  // namespace christoffel::cli
