#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flatperm/errors.hpp"
#include "flatperm/genfun.hpp"
#include "flatperm/json_io.hpp"
#include "flatperm/permcore.hpp"
#include "flatperm/recurrence.hpp"
#include "flatperm/verify.hpp"

namespace {

using namespace flatperm;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kRecurrenceNMax = 30;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = -1;
  int k = -1;
  int r = -1;
  int rmax = 5;
  int order = -1;
  int limit = kDefaultEnumerationLimit;
  std::string prefix;
  std::string format = "json";
  std::string out;
  std::string source = "auto";
  std::string suite = "all";
  bool parallel = false;
};

/// A command's result: JSON always, CSV rows when the result is a scalar table.
struct Output {
  json document;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int exit_code = 0;
  std::string text;  // preformatted report, printed instead of JSON when set
};

EnumerationOptions enumeration(const RunConfig& cfg) { return {cfg.limit, cfg.parallel}; }

int require(int value, const char* flag) {
  if (value < 0) throw UsageError(std::string("missing or negative ") + flag);
  return value;
}

std::vector<int> parse_prefix(const std::string& text) {
  std::vector<int> letters;
  if (text.empty()) return letters;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      letters.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad --prefix entry '" + item + "'");
    }
  }
  return letters;
}

std::vector<std::vector<std::string>> table_rows(const OccurrenceTable& t) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [r, c] : t.counts) rows.push_back({std::to_string(r), c.get_str()});
  return rows;
}

/// Recurrence route for a distribution: no prefix, or prefix {1, k}.
OccurrenceTable distribution_by_recurrence(int n, const std::vector<int>& prefix) {
  if (n > kRecurrenceNMax) throw LimitExceeded("recurrence route supports n <= " + std::to_string(kRecurrenceNMax));
  QPoly g;
  if (prefix.empty() || prefix == std::vector<int>{1}) {
    g = recurrence::g_poly(n);
  } else if (prefix.size() == 2 && prefix[0] == 1 && prefix[1] >= 2) {
    if (n < 2) throw std::invalid_argument("prefix longer than n");
    g = prefix[1] <= n ? recurrence::g1k_poly(n, prefix[1]) : QPoly{};
  } else {
    throw UsageError("recurrence route only handles prefixes of the form 1 or 1,k");
  }
  OccurrenceTable t{n, prefix, {}};
  for (int r = 0; r <= g.degree(); ++r) {
    if (g.coeff(r) != 0) t.counts[r] = g.coeff(r);
  }
  return t;
}

Output cmd_distribution(const RunConfig& cfg) {
  const int n = require(cfg.n, "--n");
  const std::vector<int> prefix = parse_prefix(cfg.prefix);
  std::string source = cfg.source;
  if (source == "auto") source = n <= cfg.limit ? "oracle" : "recurrence";

  OccurrenceTable table;
  if (source == "oracle") {
    table = distribution(n, prefix, enumeration(cfg));
  } else if (source == "recurrence") {
    table = distribution_by_recurrence(n, prefix);
  } else if (source == "both") {
    table = distribution(n, prefix, enumeration(cfg));
    if (table.counts != distribution_by_recurrence(n, prefix).counts) {
      throw IdentityViolation("enumeration and recurrence disagree at n=" + std::to_string(n));
    }
  } else {
    throw UsageError("--source must be auto, oracle, recurrence or both");
  }

  Output out;
  out.document = table_to_json(table);
  out.document["command"] = "distribution";
  out.document["source"] = source;
  out.csv_header = {"r", "count"};
  out.csv_rows = table_rows(table);
  return out;
}

Output cmd_gpoly(const RunConfig& cfg) {
  const int n = require(cfg.n, "--n");
  if (n > kRecurrenceNMax) throw LimitExceeded("gpoly supports n <= " + std::to_string(kRecurrenceNMax));
  const recurrence::GTable table(n);
  Output out;
  out.document = {{"command", "gpoly"}, {"n", n}, {"g", poly_to_json(table.g(n), 'q')}};
  json by_k = json::object();
  for (int k = 2; k <= n; ++k) {
    if (cfg.k >= 0 && k != cfg.k) continue;
    by_k[std::to_string(k)] = poly_to_json(table.g1k(n, k), 'q');
  }
  if (cfg.k >= 0 && (cfg.k < 2 || cfg.k > n)) throw UsageError("--k must lie in 2..n");
  out.document["g1k"] = by_k;
  return out;
}

genfun::Pipeline make_pipeline(const RunConfig& cfg, int r) {
  if (r > genfun::kDefaultRLimit) {
    throw LimitExceeded("r must be at most " + std::to_string(genfun::kDefaultRLimit));
  }
  const int order = cfg.order >= 0 ? cfg.order : genfun::default_order(r);
  if (order < genfun::default_order(r)) {
    throw UsageError("--order must be at least 4r+10 = " + std::to_string(genfun::default_order(r)));
  }
  return genfun::Pipeline(order, genfun::kDefaultRLimit);
}

Output cmd_ctable(const RunConfig& cfg) {
  const int r = require(cfg.r, "--r");
  if (r < 1) throw UsageError("--r must be at least 1");
  auto pipeline = make_pipeline(cfg, r);
  Output out;
  out.document = ctable_to_json(pipeline.c_table(r));
  out.document["command"] = "ctable";
  return out;
}

Output cmd_rational(const RunConfig& cfg) {
  const int r = require(cfg.r, "--r");
  auto pipeline = make_pipeline(cfg, r);
  Output out;
  out.document = rational_gf_to_json(pipeline.rational_gf(r));
  out.document["command"] = "rational";
  return out;
}

Output cmd_witness(const RunConfig& cfg) {
  Output out;
  if (cfg.n >= 0 && cfg.r >= 0) throw UsageError("give either --n or --r, not both");
  if (cfg.n >= 0) {
    if (cfg.n < 1) throw UsageError("--n must be at least 1");
    const Permutation p = max_pattern_perm(cfg.n);
    const long count = count_13_2(p);
    out.document = {{"command", "witness"}, {"n", cfg.n}, {"permutation", p.letters()},
                    {"occurrences", count}, {"maximum", max_occurrences(cfg.n)}};
    out.csv_header = {"n", "permutation", "occurrences"};
    out.csv_rows = {{std::to_string(cfg.n), to_string(p), std::to_string(count)}};
    return out;
  }
  const int r = require(cfg.r, "--r");
  if (r < 1) throw UsageError("--r must be at least 1");
  out.document = {{"command", "witness"}, {"r", r}, {"min_length", min_length_for(r)}};
  json witnesses = json::array();
  out.csv_header = {"i", "permutation", "occurrences"};
  if (r >= 4) {
    for (int i = 0; i <= r; ++i) {
      const Permutation w = appendix_c_witness(r, i);
      const long count = count_13_2(w);
      witnesses.push_back({{"i", i}, {"permutation", w.letters()}, {"occurrences", count}});
      out.csv_rows.push_back({std::to_string(i), to_string(w), std::to_string(count)});
    }
  }
  out.document["witnesses"] = witnesses;
  return out;
}

Output cmd_average(const RunConfig& cfg) {
  const int n = require(cfg.n, "--n");
  if (n < 1 || n > kRecurrenceNMax) throw UsageError("--n must lie in 1..30");
  const Rational avg = recurrence::average_occurrences(n);
  Output out;
  out.document = {{"command", "average"}, {"n", n}, {"average", to_string(avg)}};
  out.csv_header = {"n", "average"};
  out.csv_rows = {{std::to_string(n), to_string(avg)}};
  return out;
}

Output cmd_avoiders(const RunConfig& cfg) {
  const int n = require(cfg.n, "--n");
  if (n < 1 || n > kRecurrenceNMax) throw UsageError("--n must lie in 1..30");
  const Integer count = recurrence::avoider_count(n);
  Output out;
  out.document = {{"command", "avoiders"}, {"n", n}, {"count", count.get_str()}};
  if (n <= cfg.limit) {
    const Integer oracle = distribution(n, {}, enumeration(cfg)).at(0);
    if (oracle != count) throw IdentityViolation("enumeration disagrees with the q=0 recurrence");
    out.document["oracle_count"] = oracle.get_str();
  }
  out.csv_header = {"n", "count"};
  out.csv_rows = {{std::to_string(n), count.get_str()}};
  return out;
}

Output cmd_verify(const RunConfig& cfg) {
  const auto suite = verify::parse_suite(cfg.suite);
  if (!suite) throw UsageError("--suite must be all, sec2, sec3 or appendices");
  if (cfg.rmax < 1 || cfg.rmax > genfun::kDefaultRLimit) throw UsageError("--rmax must lie in 1..8");
  verify::Options options;
  options.rmax = cfg.rmax;
  options.oracle_n = std::min(options.oracle_n, cfg.limit);
  options.enumeration = enumeration(cfg);
  const auto checks = verify::run(*suite, options);

  Output out;
  json items = json::array();
  std::ostringstream text;
  int failed = 0;
  for (const auto& c : checks) {
    items.push_back({{"claim", c.claim}, {"passed", c.passed}, {"detail", c.detail}});
    text << (c.passed ? "PASS  " : "FAIL  ") << c.claim;
    if (!c.detail.empty()) text << "  [" << c.detail << "]";
    text << '\n';
    if (!c.passed) ++failed;
  }
  text << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " checks passed\n";
  out.document = {{"command", "verify"}, {"suite", cfg.suite}, {"checks", items}, {"failed", failed}};
  out.text = text.str();
  out.exit_code = failed == 0 ? 0 : kExitFailure;
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += cells[i];
  }
  return line + '\n';
}

std::string render(const Output& out, const RunConfig& cfg) {
  if (cfg.format == "csv") {
    if (out.csv_header.empty()) throw UsageError("csv output is only available for scalar tables");
    std::string s = csv_line(out.csv_header);
    for (const auto& row : out.csv_rows) s += csv_line(row);
    return s;
  }
  if (!out.text.empty() && cfg.out.empty()) return out.text;
  return out.document.dump(2) + '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distribution of the vincular pattern 13-2 over flattened permutations"};
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("--n", cfg.n, "Permutation length");
  app.add_option("--k", cfg.k, "Second letter for gpoly (default: all)");
  app.add_option("--r", cfg.r, "Number of occurrences");
  app.add_option("--rmax", cfg.rmax, "Largest r checked by verify")->capture_default_str();
  app.add_option("--prefix", cfg.prefix, "Required start of the flattening, comma separated");
  app.add_option("--order", cfg.order, "Truncation order of x-series (default 4r+10)");
  app.add_option("--limit", cfg.limit, "Largest n enumerated by brute force")
      ->check(CLI::Range(1, kMaxEnumerationLimit))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_option("--source", cfg.source, "distribution route: auto, oracle, recurrence, both")->capture_default_str();
  app.add_option("--suite", cfg.suite, "verify suite: all, sec2, sec3, appendices")->capture_default_str();
  app.add_flag("--parallel", cfg.parallel, "Enumerate in parallel, one task per first cycle letter");

  using Command = Output (*)(const RunConfig&);
  const std::vector<std::tuple<const char*, const char*, Command>> commands = {
      {"distribution", "Occurrence counts r -> #permutations", cmd_distribution},
      {"gpoly", "g_n(q) and g_n(1k)(q)", cmd_gpoly},
      {"ctable", "Polynomials c_{r,l}(x) of the numerator expansion", cmd_ctable},
      {"rational", "Rational generating function of G_r(x,v)", cmd_rational},
      {"witness", "Extremal permutation (--n) or witnesses of length r+2 (--r)", cmd_witness},
      {"average", "Exact mean number of occurrences", cmd_average},
      {"avoiders", "Number of flattenings avoiding the pattern", cmd_avoiders},
      {"verify", "Run identity checks and report each claim", cmd_verify},
  };
  Command selected = nullptr;
  for (const auto& [name, help, fn] : commands) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->callback([&selected, fn = fn]() { selected = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const Output out = selected(cfg);
    const std::string rendered = render(out, cfg);
    if (cfg.out.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream file(cfg.out);
      if (!file) throw UsageError("cannot open " + cfg.out);
      file << rendered;
      if (!out.text.empty()) std::cerr << out.text;
    }
    return out.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IdentityViolation& e) {
    std::cerr << "identity violated: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
