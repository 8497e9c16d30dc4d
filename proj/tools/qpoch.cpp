// qpoch: command-line front end for the q-series toolkit.
//
// Exit status: 0 success, 1 check failure, 2 usage error, 3 resource budget
// exceeded.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpoch/classify.hpp"
#include "qpoch/closed_form.hpp"
#include "qpoch/errors.hpp"
#include "qpoch/f_series.hpp"
#include "qpoch/pentagonal.hpp"
#include "qpoch/serialize.hpp"
#include "verify.hpp"

namespace {

using namespace qpoch;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
  std::size_t order = 0;
  bool order_given = false;
  std::size_t workers = 1;
  std::size_t budget_order = ResourceBudget{}.max_order;
  std::size_t budget_enum = OracleBudget{}.signed_sum_max_n;
  std::string format = "tsv";
  std::string out_path;

  SweepOptions sweep() const {
    SweepOptions s;
    s.workers = workers;
    s.budget.max_order = budget_order;
    return s;
  }
  OracleBudget oracle() const { return OracleBudget{budget_enum, budget_enum}; }
  bool json() const { return format == "json"; }
};

std::size_t parse_size(const std::string& text, const char* what) {
  std::size_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError(std::string(what) + ": expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

std::string render(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

// ---- expand ---------------------------------------------------------------

std::string cmd_expand(const std::vector<std::string>& tokens, const RunConfig& cfg) {
  if (tokens.empty()) {
    throw UsageError("expand: missing target (pnt | poch m | q2inf | q3inf | f k)");
  }
  const std::string& target = tokens[0];
  std::size_t params = 0;
  if (target == "poch" || target == "f") {
    params = 1;
  } else if (target != "pnt" && target != "q2inf" && target != "q3inf") {
    throw UsageError("expand: unknown target '" + target + "'");
  }
  if (tokens.size() < 1 + params || tokens.size() > 2 + params) {
    throw UsageError("expand " + target + ": wrong number of arguments");
  }
  const std::size_t param = params ? parse_size(tokens[1], "expand") : 0;

  std::size_t order = cfg.order;
  if (tokens.size() == 2 + params) {
    order = parse_size(tokens.back(), "expand order");
  } else if (!cfg.order_given) {
    throw UsageError("expand " + target + ": missing order N");
  }
  if (order > cfg.budget_order) {
    throw ResourceError("expand: order " + std::to_string(order) + " exceeds --budget-order " +
                            std::to_string(cfg.budget_order),
                        (order + 1) * sizeof(Coefficient));
  }

  TruncSeries s(0);
  std::vector<std::string> args{target};
  if (target == "pnt") {
    s = pnt_series(order);
  } else if (target == "poch") {
    s = pochhammer(1, 1, param, order);
  } else if (target == "q2inf") {
    s = pochhammer(2, 1, kInfinite, order);
  } else if (target == "q3inf") {
    s = pochhammer(3, 1, kInfinite, order);
  } else {
    if (param == 0) {
      throw UsageError("expand f: k must be positive");
    }
    s = F_direct(param, kInfinite, order);
  }
  if (params) {
    args.push_back(std::to_string(param));
  }
  args.push_back(std::to_string(order));

  const OutputMeta meta{"expand", args};
  return cfg.json() ? render(series_json(meta, s)) : series_tsv(meta, s);
}

// ---- coeff ----------------------------------------------------------------

std::string cmd_coeff(const std::string& target, const std::string& index_text,
                      const RunConfig& cfg) {
  if (target != "a" && target != "b") {
    throw UsageError("coeff: target must be 'a' or 'b', got '" + target + "'");
  }
  const BigIndex index = BigIndex::from_decimal(index_text);
  const CoeffAnswer answer = target == "a" ? a_coeff(index) : b_coeff(index);
  const OutputMeta meta{"coeff", {target, index.to_string()}};
  return cfg.json() ? render(coeff_json(meta, target[0], index, answer))
                    : coeff_tsv(meta, target[0], index, answer);
}

// ---- table ----------------------------------------------------------------

std::string cmd_table(const std::string& kind, const std::string& limit_text,
                      const RunConfig& cfg) {
  const std::size_t limit = parse_size(limit_text, "table limit");
  if (limit == 0) {
    throw UsageError("table: limit must be positive");
  }
  HTable table;
  if (kind == "S") {
    table = build_s_table(limit, cfg.sweep());
  } else if (kind == "Shat") {
    table = build_shat_table(limit, cfg.sweep());
  } else {
    throw UsageError("table: kind must be 'S' or 'Shat', got '" + kind + "'");
  }
  const OutputMeta meta{"table", {kind, std::to_string(limit)}};
  return cfg.json() ? render(table_json(meta, table)) : table_tsv(meta, table);
}

// ---- verify / scan --------------------------------------------------------

std::string render_suite(const OutputMeta& meta, const tools::SuiteResult& suite,
                         const RunConfig& cfg) {
  if (cfg.json()) {
    nlohmann::json data = nlohmann::json::array();
    for (const auto& c : suite.checks) {
      data.push_back({{"check", c.name}, {"status", tools::to_string(c.status)}, {"detail", c.detail}});
    }
    nlohmann::json doc{{"meta", {{"command", meta.command},
                                 {"args", meta.args},
                                 {"version", version_string()},
                                 {"all_pass", suite.all_pass()}}},
                       {"data", std::move(data)}};
    if (!suite.report.empty()) {
      doc["report"] = suite.report;
    }
    return render(doc);
  }
  std::ostringstream os;
  os << tsv_header(meta);
  for (const auto& c : suite.checks) {
    os << tools::to_string(c.status) << '\t' << c.name << '\t' << c.detail << '\n';
  }
  os << suite.report;
  return os.str();
}

std::string cmd_verify(const std::vector<std::string>& tokens, const RunConfig& cfg, bool& ok) {
  if (tokens.empty() || tokens.size() > 2) {
    throw UsageError("verify: expected one suite (identities | oracle | corrections | windows | conjecture)");
  }
  const std::string& suite = tokens[0];
  tools::VerifyConfig vc{cfg.oracle(), cfg.sweep()};
  std::vector<std::string> args{suite};
  tools::SuiteResult result;
  if (tokens.size() == 2 && suite != "conjecture") {
    throw UsageError("verify " + suite + ": takes no further arguments");
  }
  if (suite == "identities") {
    result = tools::verify_identities(vc);
  } else if (suite == "oracle") {
    result = tools::verify_oracle(vc);
  } else if (suite == "corrections") {
    result = tools::verify_corrections(vc);
  } else if (suite == "windows") {
    result = tools::verify_windows(vc);
  } else if (suite == "conjecture") {
    const std::size_t h = tokens.size() == 2 ? parse_size(tokens[1], "verify conjecture") : 5;
    if (h == 0) {
      throw UsageError("verify conjecture: H must be positive");
    }
    args.push_back(std::to_string(h));
    result = tools::verify_conjecture(h, vc);
  } else {
    throw UsageError("verify: unknown suite '" + suite + "'");
  }
  ok = result.all_pass();
  return render_suite(OutputMeta{"verify", args}, result, cfg);
}

std::string cmd_scan(const std::string& h_text, const RunConfig& cfg) {
  const std::size_t h = parse_size(h_text, "scan H");
  if (h == 0) {
    throw UsageError("scan: H must be positive");
  }
  const ConjectureReport report = conjecture_scan(h, cfg.sweep());
  const OutputMeta meta{"scan", {std::to_string(h)}};
  if (cfg.json()) {
    nlohmann::json doc = table_json(meta, report.table);
    doc["report"] = report.to_text();
    return render(doc);
  }
  return tsv_header(meta) + report.to_text();
}

void emit(const std::string& text, const RunConfig& cfg) {
  if (cfg.out_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    throw UsageError("cannot open '" + cfg.out_path + "' for writing");
  }
  file << text;
  if (!file.flush()) {
    throw UsageError("write to '" + cfg.out_path + "' failed");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series expansions, closed-form coefficients and classification tables"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", version_string());

  RunConfig cfg;
  app.add_option("--order", cfg.order, "Truncation order N")->check(CLI::NonNegativeNumber);
  app.add_option("--workers", cfg.workers, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--budget-order", cfg.budget_order, "Largest series degree allowed")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-enum", cfg.budget_enum, "Largest n for partition enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");

  std::vector<std::string> expand_args;
  auto* expand = app.add_subcommand("expand", "Expand pnt N | poch m N | q2inf N | q3inf N | f k N");
  expand->add_option("target", expand_args, "Target and its arguments")->required();

  std::string coeff_target;
  std::string coeff_index;
  auto* coeff_cmd = app.add_subcommand("coeff", "Closed-form coefficient: a|b INDEX");
  coeff_cmd->add_option("target", coeff_target, "a or b")->required();
  coeff_cmd->add_option("index", coeff_index, "Non-negative decimal index")->required();

  std::string table_kind;
  std::string table_limit;
  auto* table = app.add_subcommand("table", "Classification table: S|Shat LIMIT");
  table->add_option("kind", table_kind, "S or Shat")->required();
  table->add_option("limit", table_limit, "h_max for S, k_max for Shat")->required();

  std::vector<std::string> verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Run a check suite: identities|oracle|corrections|windows|conjecture [H]");
  verify->add_option("suite", verify_args, "Suite name")->required();

  std::string scan_h;
  auto* scan = app.add_subcommand("scan", "Empirical scan of S_1..S_H");
  scan->add_option("H", scan_h, "Largest h")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.order_given = app.count("--order") > 0;

  try {
    bool ok = true;
    std::string text;
    if (*expand) {
      text = cmd_expand(expand_args, cfg);
    } else if (*coeff_cmd) {
      text = cmd_coeff(coeff_target, coeff_index, cfg);
    } else if (*table) {
      text = cmd_table(table_kind, table_limit, cfg);
    } else if (*verify) {
      text = cmd_verify(verify_args, cfg, ok);
    } else if (*scan) {
      text = cmd_scan(scan_h, cfg);
    }
    emit(text, cfg);
    return ok ? kExitOk : kExitCheckFailed;
  } catch (const UsageError& e) {
    std::cerr << "qpoch: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "qpoch: resource budget exceeded: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "qpoch: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}
