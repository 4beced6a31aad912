#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "remixed/identities.hpp"
#include "remixed/process.hpp"
#include "remixed/recurrence.hpp"
#include "remixed/serialize.hpp"
#include "remixed/symmetrize.hpp"
#include "remixed/trees.hpp"

using nlohmann::json;
using namespace remixed;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExactLawBound = 6;

std::string to_latex(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& a = p.coeff(k);
    if (a == 0) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = (a == 1 && k > 0);
    if (!unit) os << rat_to_string(a);
    if (k == 1) os << "q";
    else if (k > 1) os << "q^{" << k << "}";
  }
  return os.str();
}

std::string render_poly(const QPoly& p, const std::string& format) {
  if (format == "plain") return p.to_string();
  if (format == "latex") return to_latex(p);
  if (format == "json") return qpoly_to_json(p).dump();
  throw std::invalid_argument("unknown format: " + format);
}

QPoly run_engine(const std::string& engine, const Composition& c, const Word& word) {
  if (engine == "recurrence") return remixed::remixed(c);
  if (engine == "process") return remixed_via_process(c);
  if (engine == "postnikov") return remixed_via_postnikov(word);
  if (engine == "bilabeled") return remixed_via_bilabeled(c);
  if (engine == "product") return product_formula(c);
  if (engine == "qds") return remixed_via_qds(c);
  throw std::invalid_argument("unknown engine: " + engine);
}

int cmd_compute(const std::string& c_str, const std::string& engine,
                const std::string& word_str, const std::string& format) {
  Composition c = parse_composition(c_str);
  if (!is_in_wr(c)) throw std::invalid_argument("c is not a weak composition in W_r");
  int r = static_cast<int>(c.size());
  Word word = word_str.empty() ? canonical_word(c) : parse_word(word_str);
  if (content(word, r) != c)
    throw std::invalid_argument("word content does not match c");

  if (engine != "all") {
    std::cout << render_poly(run_engine(engine, c, word), format) << "\n";
    return 0;
  }

  std::vector<std::string> engines = {"recurrence", "process", "postnikov"};
  if (r <= kMaxBilabeledEnum) engines.push_back("bilabeled");
  if (ebr_decompose(c)) engines.push_back("product");
  if (r <= kQdsOracleBound) engines.push_back("qds");

  std::vector<QPoly> values;
  for (const auto& e : engines) values.push_back(run_engine(e, c, word));
  bool agree = true;
  for (const auto& v : values)
    if (v != values.front()) agree = false;

  if (format == "json") {
    json out;
    for (size_t i = 0; i < engines.size(); ++i)
      out["engines"][engines[i]] = qpoly_to_json(values[i]);
    out["agree"] = agree;
    std::cout << out.dump() << "\n";
  } else {
    for (size_t i = 0; i < engines.size(); ++i)
      std::cout << engines[i] << ": " << render_poly(values[i], format) << "\n";
    std::cout << (agree ? "all engines agree" : "ENGINE DISAGREEMENT") << "\n";
  }
  return agree ? 0 : kExitFailure;
}

std::string comp_str(const Composition& c) {
  std::ostringstream os;
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

int cmd_table(int r, const std::string& format) {
  if (r < 1 || r > 7) throw std::invalid_argument("table: r must be in [1, 7]");
  struct Row {
    Composition c;
    QPoly a;
  };
  std::vector<Row> rows;
  for (const auto& c : all_compositions(r)) rows.push_back({c, remixed::remixed(c)});

  if (format == "json") {
    json out = json::array();
    for (const auto& row : rows)
      out.push_back(json{{"c", row.c},
                         {"poly", qpoly_to_json(row.a)},
                         {"valuation", valuation_of(row.c)},
                         {"degree", degree_of(row.c)},
                         {"psu_center", rat_to_string(psu_center_of(row.c))},
                         {"at_one", rat_to_string(row.a.eval_at(1))}});
    std::cout << out.dump() << "\n";
    return 0;
  }

  const char* sep = format == "csv" ? "," : (format == "latex" ? " & " : "  ");
  const char* eol = format == "latex" ? " \\\\\n" : "\n";
  if (format == "csv") std::cout << "c,poly,valuation,degree,psu_center,at_one\n";
  for (const auto& row : rows) {
    std::string poly = format == "latex" ? to_latex(row.a) : row.a.to_string();
    std::string c_col = format == "plain" ? "(" + comp_str(row.c) + ")" : comp_str(row.c);
    if (format == "csv") c_col = "\"" + c_col + "\"";
    std::cout << c_col << sep << poly << sep << valuation_of(row.c) << sep
              << degree_of(row.c) << sep << rat_to_string(psu_center_of(row.c)) << sep
              << rat_to_string(row.a.eval_at(1)) << eol;
  }
  return 0;
}

int cmd_verify(int r, const std::string& suite, bool as_json) {
  std::vector<std::string> selection;
  std::stringstream ss(suite);
  std::string item;
  while (std::getline(ss, item, ',')) selection.push_back(item);
  auto results = run_suite(r, selection);
  bool all_pass = true;
  json report = json::array();
  for (const auto& res : results) {
    all_pass = all_pass && res.pass;
    if (as_json) {
      report.push_back(check_to_json(res));
    } else {
      std::cout << res.name << ": " << (res.pass ? "pass" : "FAIL");
      if (!res.pass && !res.witness.empty()) std::cout << " (" << res.witness << ")";
      std::cout << "\n";
    }
  }
  if (as_json) std::cout << report.dump() << "\n";
  return all_pass ? 0 : kExitFailure;
}

int cmd_simulate(const std::string& c_str, const std::string& q_str, long samples,
                 uint64_t seed, long max_steps) {
  Composition c = parse_composition(c_str);
  if (!is_in_wr(c)) throw std::invalid_argument("c is not a weak composition in W_r");
  Rat q = rat_from_string(q_str);
  if (q < 0) throw std::invalid_argument("q must be nonnegative");
  if (samples <= 0) throw std::invalid_argument("samples must be positive");
  SimulationReport rep = simulate(c, q, samples, seed, max_steps);
  if (static_cast<int>(c.size()) <= kExactLawBound) {
    StableDistribution law = klyachko_expand(c);
    std::cout << simulation_to_json(rep, &law).dump() << "\n";
  } else {
    std::cout << simulation_to_json(rep).dump() << "\n";
  }
  return 0;
}

int cmd_trees(const std::string& kind, const std::string& c_str,
              const std::string& word_str, const std::string& format) {
  if (format != "json" && format != "dot")
    throw std::invalid_argument("trees: format must be json or dot");
  if (kind == "postnikov") {
    Word word;
    if (!word_str.empty()) word = parse_word(word_str);
    else if (!c_str.empty()) word = canonical_word(parse_composition(c_str));
    else throw std::invalid_argument("trees: postnikov needs --word or --c");
    auto trees = enumerate_postnikov(word);
    if (format == "json") {
      json out = json::array();
      for (const auto& t : trees) out.push_back(postnikov_tree_to_json(t));
      std::cout << out.dump() << "\n";
    } else {
      for (size_t i = 0; i < trees.size(); ++i)
        std::cout << postnikov_to_dot(trees[i], "T" + std::to_string(i));
    }
    return 0;
  }
  if (kind == "bilabeled") {
    if (c_str.empty()) throw std::invalid_argument("trees: bilabeled needs --c");
    Composition c = parse_composition(c_str);
    auto trees = enumerate_bilabeled(c);
    if (format == "json") {
      json out = json::array();
      for (const auto& t : trees)
        out.push_back(json{{"u", t.u}, {"inv", perm_stats(t.u).inv},
                           {"tree", bilabeled_to_json(t)}});
      std::cout << out.dump() << "\n";
    } else {
      for (size_t i = 0; i < trees.size(); ++i)
        std::cout << bilabeled_to_dot(trees[i], "T" + std::to_string(i));
    }
    return 0;
  }
  throw std::invalid_argument("trees: kind must be postnikov or bilabeled");
}

int cmd_qhit(const std::string& lambda_str, const std::string& format) {
  std::vector<int> lambda = parse_composition(lambda_str);
  QHitResult res = qhit_from_partition(lambda);
  int r = static_cast<int>(lambda.size());
  bool gf_ok = check_qhit_gf(lambda);
  if (format == "json") {
    json hits = json::array();
    for (int j = 0; j <= r; ++j)
      if (!res.hits[j].is_zero())
        hits.push_back(json{{"j", j}, {"poly", qpoly_to_json(res.hits[j])}});
    std::cout << json{{"a", res.a}, {"beta", res.beta}, {"hits", hits},
                      {"gf_check", gf_ok}}.dump()
              << "\n";
  } else {
    std::cout << "a = " << res.a << "\n";
    std::cout << "beta = (" << comp_str(res.beta) << ")\n";
    for (int j = 0; j <= r; ++j)
      if (!res.hits[j].is_zero())
        std::cout << "H_" << j << " = " << res.hits[j].to_string() << "\n";
    std::cout << "gf_check: " << (gf_ok ? "pass" : "FAIL") << "\n";
  }
  return gf_ok ? 0 : kExitFailure;
}

int cmd_qvolume(const std::string& lambda_str, const std::string& mu_str,
                const std::string& at_q, const std::string& format) {
  if (lambda_str.empty() == mu_str.empty())
    throw std::invalid_argument("qvolume: give exactly one of --lambda, --mu");

  std::vector<Rat> vals;
  QPoly v;
  bool cross_checked = false;
  if (!lambda_str.empty()) {
    std::stringstream ss(lambda_str);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(rat_from_string(item));
    if (vals.size() < 2) throw std::invalid_argument("qvolume: lambda needs >= 2 entries");
    std::vector<Rat> mu;
    for (size_t i = 0; i + 1 < vals.size(); ++i) mu.push_back(vals[i] - vals[i + 1]);
    for (const Rat& m : mu)
      if (m < 0) throw std::invalid_argument("qvolume: lambda must be weakly decreasing");
    v = qvolume_expansion(mu);
    int r = static_cast<int>(mu.size());
    if (r <= kQdsOracleBound) {
      if (qvolume_direct(vals) != v) {
        std::cerr << "route disagreement between expansion and direct qDS\n";
        return kExitFailure;
      }
      cross_checked = true;
    }
  } else {
    std::stringstream ss(mu_str);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(rat_from_string(item));
    for (const Rat& m : vals)
      if (m < 0) throw std::invalid_argument("qvolume: mu entries must be nonnegative");
    v = qvolume_expansion(vals);
  }

  if (!at_q.empty()) {
    Rat value = v.eval_at(rat_from_string(at_q));
    if (format == "json")
      std::cout << json{{"value", rat_to_string(value)},
                        {"cross_checked", cross_checked}}.dump()
                << "\n";
    else
      std::cout << rat_to_string(value) << "\n";
    return 0;
  }
  if (format == "json")
    std::cout << json{{"poly", qpoly_to_json(v)}, {"cross_checked", cross_checked}}.dump()
              << "\n";
  else
    std::cout << render_poly(v, format) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation and verification of remixed Eulerian numbers"};
  app.require_subcommand(1);

  std::string c_str, word_str, engine = "recurrence", format = "plain";
  std::string suite = "all", q_str = "1", lambda_str, mu_str, at_q, kind;
  int r = 0;
  long samples = 1000, max_steps = 1000000;
  uint64_t seed = 0;
  bool as_json = false;

  auto* compute = app.add_subcommand("compute", "Compute A_c(q) with one or all engines");
  compute->add_option("--c", c_str, "weak composition, e.g. 0,2,0,2")->required();
  compute->add_option("--engine", engine,
                      "recurrence|process|postnikov|bilabeled|product|qds|all");
  compute->add_option("--word", word_str, "word overriding the canonical one (postnikov)");
  compute->add_option("--format", format, "plain|json|latex");

  auto* table = app.add_subcommand("table", "Tabulate A_c(q) over all of W_r");
  table->add_option("--r", r, "rank (1..7)")->required();
  table->add_option("--format", format, "plain|csv|json|latex");

  auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
  verify->add_option("--r", r, "rank")->required();
  verify->add_option("--suite", suite, "comma-separated check names, or 'all'");
  verify->add_flag("--json", as_json, "emit a JSON report");

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte-Carlo stabilization process");
  simulate_cmd->add_option("--c", c_str, "weak composition")->required();
  simulate_cmd->add_option("--q", q_str, "bias, exact rational or decimal");
  simulate_cmd->add_option("--samples", samples, "number of runs");
  simulate_cmd->add_option("--seed", seed, "RNG seed");
  simulate_cmd->add_option("--max-steps", max_steps, "per-sample step cap");

  auto* trees_cmd = app.add_subcommand("trees", "Enumerate weighted trees");
  trees_cmd->add_option("--kind", kind, "postnikov|bilabeled")->required();
  trees_cmd->add_option("--c", c_str, "content composition");
  trees_cmd->add_option("--word", word_str, "explicit word (postnikov)");
  trees_cmd->add_option("--format", format, "json|dot");

  auto* qhit_cmd = app.add_subcommand("qhit", "q-hit numbers of a partition");
  qhit_cmd->add_option("--lambda", lambda_str, "partition, e.g. 5,5,3,3,3,0")->required();
  qhit_cmd->add_option("--format", format, "plain|json");

  auto* qvolume_cmd = app.add_subcommand("qvolume", "q-volume polynomial V^q");
  qvolume_cmd->add_option("--lambda", lambda_str, "weakly decreasing rationals");
  qvolume_cmd->add_option("--mu", mu_str, "nonnegative differences");
  qvolume_cmd->add_option("--at-q", at_q, "evaluate at this q");
  qvolume_cmd->add_option("--format", format, "plain|json|latex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(c_str, engine, word_str, format);
    if (table->parsed()) return cmd_table(r, format);
    if (verify->parsed()) return cmd_verify(r, suite, as_json);
    if (simulate_cmd->parsed()) return cmd_simulate(c_str, q_str, samples, seed, max_steps);
    if (trees_cmd->parsed()) {
      if (format == "plain") format = "json";
      return cmd_trees(kind, c_str, word_str, format);
    }
    if (qhit_cmd->parsed()) return cmd_qhit(lambda_str, format);
    if (qvolume_cmd->parsed()) return cmd_qvolume(lambda_str, mu_str, at_q, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
