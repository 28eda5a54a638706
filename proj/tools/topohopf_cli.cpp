#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "topohopf/enumerate.hpp"
#include "topohopf/errors.hpp"
#include "topohopf/exact_linalg.hpp"
#include "topohopf/json_io.hpp"
#include "topohopf/ops.hpp"
#include "topohopf/pairing.hpp"
#include "topohopf/suites.hpp"
#include "topohopf/tables.hpp"
#include "topohopf/text_format.hpp"

using namespace topohopf;
using Json = nlohmann::ordered_json;

namespace {

enum class Format { Text, Json, Csv };

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int enum_topologies(std::size_t n, Format fmt) {
  const auto ts = enumerate_topologies(n);
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& t : ts) arr.push_back({{"key", t.key()}, {"notation", math_label(t)}});
    std::cout << Json{{"n", n}, {"count", ts.size()}, {"topologies", arr}}.dump() << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "key,notation\n";
    for (const auto& t : ts) std::cout << t.key() << "," << csv_cell(math_label(t)) << "\n";
  } else {
    for (const auto& t : ts) std::cout << t.key() << "  " << math_label(t) << "\n";
    std::cout << ts.size() << " topologies\n";
  }
  return kOk;
}

int enum_words(std::size_t n, Format fmt) {
  const auto ws = enumerate_packed_words(n);
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& w : ws) arr.push_back(label_key(w));
    std::cout << Json{{"n", n}, {"count", ws.size()}, {"words", arr}}.dump() << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "word\n";
    for (const auto& w : ws) std::cout << csv_cell(label_key(w)) << "\n";
  } else {
    for (const auto& w : ws) std::cout << math_label(w) << "\n";
    std::cout << ws.size() << " packed words\n";
  }
  return kOk;
}

int run_operation(const std::string& name, const std::vector<std::string>& args, bool math, Format fmt) {
  const OpResult r = run_op(name, args);
  if (fmt == Format::Json) {
    std::cout << r.json.dump() << "\n";
  } else if (fmt == Format::Csv) {
    if (r.json.is_object() && r.json.contains("terms")) {
      const bool pair = !r.json["terms"].empty() && r.json["terms"][0].contains("basis_left");
      std::cout << (pair ? "basis_left,basis_right,coeff\n" : "basis,coeff\n");
      for (const auto& t : r.json["terms"]) {
        if (pair) {
          std::cout << csv_cell(t["basis_left"]) << "," << csv_cell(t["basis_right"]);
        } else {
          std::cout << csv_cell(t["basis"]);
        }
        std::cout << "," << csv_cell(t["coeff"]) << "\n";
      }
    } else {
      std::cout << "value\n" << csv_cell(math ? r.math : r.text) << "\n";
    }
  } else {
    std::cout << (math ? r.math : r.text) << "\n";
  }
  return kOk;
}

int list_operations(Format fmt) {
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& op : operations()) arr.push_back({{"name", op.name}, {"params", op.params}, {"summary", op.summary}});
    std::cout << arr.dump() << "\n";
    return kOk;
  }
  for (const auto& op : operations()) {
    std::string params;
    for (const auto& p : op.params) params += " <" + p + ">";
    std::cout << op.name << params << "\n    " << op.summary << "\n";
  }
  return kOk;
}

void print_report_text(const SuiteReport& r) {
  std::cout << "suite " << r.suite << ", degrees " << r.min_degree << ".." << r.max_degree << "\n";
  for (const auto& g : r.groups) {
    std::cout << "  " << (g.passed == g.attempted ? "ok  " : "FAIL") << " " << g.name << ": " << g.passed << "/"
              << g.attempted << "\n";
  }
  std::cout << (r.ok() ? "PASS" : "FAIL") << " " << r.passed << "/" << r.attempted << " checks in " << std::fixed
            << std::setprecision(1) << r.wall_time_ms << " ms\n";
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    std::cout << "first counterexample (" << c.check << ")\n  inputs:   " << c.inputs << "\n  expected: " << c.expected
              << "\n  actual:   " << c.actual << "\n";
  }
}

int verify(const std::string& suite_name, const SuiteOptions& options, Format fmt) {
  std::vector<Suite> suites;
  if (suite_name == "all") {
    suites = all_suites();
  } else if (auto s = suite_from_string(suite_name)) {
    suites.push_back(*s);
  } else {
    throw CLI::ValidationError("--suite", "unknown suite '" + suite_name + "'");
  }
  bool ok = true;
  Json all = Json::array();
  if (fmt == Format::Csv) std::cout << "suite,group,attempted,passed\n";
  for (Suite s : suites) {
    const SuiteReport r = verify_suite(s, options);
    ok = ok && r.ok();
    if (fmt == Format::Json) {
      all.push_back(to_json(r));
    } else if (fmt == Format::Csv) {
      for (const auto& g : r.groups) {
        std::cout << r.suite << "," << csv_cell(g.name) << "," << g.attempted << "," << g.passed << "\n";
      }
    } else {
      print_report_text(r);
    }
  }
  if (fmt == Format::Json) std::cout << (all.size() == 1 ? all[0] : all).dump() << "\n";
  return ok ? kOk : kFailed;
}

int gram(std::size_t n, bool with_rank, Format fmt) {
  const auto& keys = topologies_of_degree(n);
  const IntMatrix g = gram_matrix(n);
  const std::size_t rank = with_rank ? exact_rank(g) : 0;
  if (fmt == Format::Json) {
    Json rows = Json::array();
    for (const auto& row : g) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(v.convert_to<long long>());
      rows.push_back(r);
    }
    Json keys_json = Json::array();
    for (const auto& t : keys) keys_json.push_back(t.key());
    Json out{{"degree", n}, {"basis", keys_json}, {"matrix", rows}};
    if (with_rank) {
      out["rank"] = rank;
      out["kernel_dim"] = keys.size() - rank;
    }
    std::cout << out.dump() << "\n";
    return kOk;
  }
  if (fmt == Format::Csv) {
    std::cout << "basis";
    for (const auto& t : keys) std::cout << "," << t.key();
    std::cout << "\n";
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::cout << keys[i].key();
      for (const auto& v : g[i]) std::cout << "," << v.str();
      std::cout << "\n";
    }
  } else {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::cout << std::left << std::setw(static_cast<int>(n * n + 4)) << keys[i].key();
      for (const auto& v : g[i]) std::cout << " " << std::right << std::setw(3) << v.str();
      std::cout << "\n";
    }
  }
  if (with_rank) std::cout << (fmt == Format::Csv ? "# " : "") << "rank " << rank << ", kernel " << keys.size() - rank << "\n";
  return kOk;
}

int table(const std::string& which, std::size_t max_n, bool slow, Format fmt) {
  const std::size_t cap = which == "fubini" ? kDefaultWordCap : (slow ? 6 : 5);
  if (max_n > cap) {
    throw Error(ErrorKind::CapExceeded, "--max " + std::to_string(max_n) + " exceeds " + std::to_string(cap) +
                                            (which != "fubini" && !slow ? " (use --slow)" : ""));
  }
  Table t;
  if (which == "counts") {
    t = counts_table(max_n);
  } else if (which == "indec") {
    t = indec_table(max_n);
  } else {
    t = fubini_table(max_n);
  }
  if (fmt == Format::Json) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json r = Json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) r[t.columns[c]] = row[c].str();
      rows.push_back(r);
    }
    std::cout << Json{{"table", t.name}, {"rows", rows}}.dump() << "\n";
  } else if (fmt == Format::Csv) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) std::cout << (c ? "," : "") << t.columns[c];
    std::cout << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "," : "") << row[c].str();
      std::cout << "\n";
    }
  } else {
    for (const auto& col : t.columns) std::cout << std::setw(14) << col;
    std::cout << "\n";
    for (const auto& row : t.rows) {
      for (const auto& v : row) std::cout << std::setw(14) << v.str();
      std::cout << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topologies, packed words and their Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  std::size_t n = 0;
  auto* et = app.add_subcommand("enum-topologies", "List the topologies on [n] in key order");
  et->add_option("n", n, "Degree")->required()->check(CLI::Range(std::size_t{0}, kDefaultTopologyCap));
  auto* ew = app.add_subcommand("enum-words", "List the packed words of length n");
  ew->add_option("n", n, "Length")->required()->check(CLI::Range(std::size_t{0}, kDefaultWordCap));

  std::string op_name;
  std::vector<std::string> op_args;
  bool math = false;
  bool list = false;
  auto* op = app.add_subcommand("op", "Evaluate one operation by name");
  op->add_flag("--list", list, "List the operations");
  op->add_flag("--math", math, "Print in the notation of the worked examples");
  op->add_option("name", op_name, "Operation name");
  // Extras are taken verbatim; an option would split "[3|1<2,1<3]" at the comma.
  op->prefix_command();
  op->fallthrough(false);
  op->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::string suite;
  SuiteOptions options;
  bool serial = false;
  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  vf->add_option("--suite", suite, "hopf, ribbon, pairing, gamma, stanley, order, counts or all")->required();
  vf->add_option("--max-degree", options.max_degree, "Largest total degree checked")->capture_default_str();
  vf->add_flag("--slow", options.slow, "Raise the caps");
  vf->add_flag("--serial", serial, "Use the single-threaded reference runner");
  vf->add_option("--seed", options.seed, "Seed for sampled checks")->capture_default_str();
  vf->add_option("--samples", options.samples, "Sampled instances")->capture_default_str();

  bool rank = false;
  auto* gr = app.add_subcommand("gram", "Gram matrix of the pictures pairing");
  gr->add_option("--degree", n, "Degree")->required()->check(CLI::Range(0, 4));
  gr->add_flag("--rank", rank, "Also print the rank");

  std::string which;
  bool table_slow = false;
  auto* tb = app.add_subcommand("table", "Count tables");
  tb->add_option("which", which, "counts, indec or fubini")->required()->check(CLI::IsMember({"counts", "indec", "fubini"}));
  tb->add_option("--max", n, "Largest degree")->required();
  tb->add_flag("--slow", table_slow, "Allow degree 6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  const Format fmt = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  try {
    if (*et) return enum_topologies(n, fmt);
    if (*ew) return enum_words(n, fmt);
    if (*op) {
      if (list) return list_operations(fmt);
      if (op_name.empty()) throw CLI::RequiredError("name");
      op_args = op->remaining();
      return run_operation(op_name, op_args, math, fmt);
    }
    if (*vf) {
      options.parallel = !serial;
      return verify(suite, options, fmt);
    }
    if (*gr) return gram(n, rank, fmt);
    if (*tb) return table(which, n, table_slow, fmt);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
