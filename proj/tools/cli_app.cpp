#include "cli_app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "solvkit/classes.hpp"
#include "solvkit/error.hpp"
#include "solvkit/families.hpp"
#include "solvkit/formulas.hpp"
#include "solvkit/report.hpp"
#include "solvkit/solvability.hpp"
#include "solvkit/solvabilizer.hpp"
#include "solvkit/tables.hpp"

namespace solvkit::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string group;
  std::string method = "rational";
  int jobs = 0;
  bool json_output = false;
  std::string cache_path;
  std::size_t closure_cap = kDefaultClosureCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::size_t naive_cap = kDefaultNaiveCap;
  double timeout_seconds = 0.0;
  // formula
  std::string family;
  std::uint64_t parameter = 0;
  bool distinctness = false;
  std::uint64_t order_bound = 1'000'000;
  // batch
  std::string batch_file;
};

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

SolvOptions solv_options(const RunConfig& cfg) {
  SolvOptions o;
  o.jobs = cfg.jobs;
  if (cfg.jobs == 1) o.execution = Execution::serial;
  o.naive_cap = cfg.naive_cap;
  if (cfg.timeout_seconds > 0)
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(cfg.timeout_seconds));
  return o;
}

std::string cache_path(const RunConfig& cfg) {
  if (!cfg.cache_path.empty()) return cfg.cache_path;
  if (const char* env = std::getenv("SOLVKIT_CACHE")) return env;
  return {};
}

std::string fmt_millis(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << ms << " ms";
  return s.str();
}

struct CountResult {
  std::string spec;
  std::size_t order = 0;
  std::optional<SolvReport> naive;
  std::optional<SolvReport> rational;

  const SolvReport& primary() const { return rational ? *rational : *naive; }
};

CountResult compute_count(const RunConfig& cfg, const std::string& spec_text) {
  const GroupSpec spec = GroupSpec::parse(spec_text);
  const GroupTable g = named_group(spec, cfg.closure_cap);
  const SolvOptions options = solv_options(cfg);
  CountResult result;
  result.spec = spec.to_string();
  result.order = g.order();
  if (cfg.method == "naive" || cfg.method == "both") {
    result.naive = solv_count_naive(g, options);
    result.naive->spec = result.spec;
  }
  if (cfg.method == "rational" || cfg.method == "both") {
    result.rational = solv_count_rational(g, options);
    result.rational->spec = result.spec;
  }
  if (result.naive && result.rational && result.naive->total != result.rational->total)
    throw ConsistencyError("naive count " + std::to_string(result.naive->total) +
                           " differs from rational count " +
                           std::to_string(result.rational->total));

  if (const auto path = cache_path(cfg); !path.empty()) {
    const ResultCache cache(path);
    const std::string method = result.rational ? "rational" : "naive";
    const auto& report = result.primary();
    if (const auto prior = cache.lookup(result.spec, library_version(), method);
        prior && prior->total != report.total)
      throw ConsistencyError("cached total " + std::to_string(prior->total) + " for " +
                             result.spec + " differs from recomputed total " +
                             std::to_string(report.total));
    cache.append({result.spec, result.order, report.total, method, library_version(),
                  utc_timestamp(), report.millis});
  }
  return result;
}

void print_count(const RunConfig& cfg, const CountResult& r, std::ostream& out) {
  if (cfg.json_output) {
    json j;
    if (cfg.method == "both") {
      j = {{"spec", r.spec},
           {"order", r.order},
           {"naive", to_json(*r.naive)},
           {"rational", to_json(*r.rational)},
           {"agree", r.naive->total == r.rational->total}};
    } else {
      j = to_json(r.primary());
    }
    out << j.dump(2) << '\n';
    return;
  }
  const auto& rep = r.primary();
  out << "group        " << r.spec << '\n'
      << "order        " << r.order << '\n'
      << "|Solv(G)|    " << rep.total << '\n'
      << "upper bound  " << rep.upper_bound << '\n';
  if (r.naive) out << "naive        " << r.naive->total << "  (" << fmt_millis(r.naive->millis) << ")\n";
  if (r.rational) {
    out << "rational     " << r.rational->total << "  (" << fmt_millis(r.rational->millis) << ")\n";
    out << "classes      rep  |x|  class  |Sol|  |N(<x>)|  |N(Sol)|  orbit  dedup\n";
    for (std::size_t i = 0; i < r.rational->classes.size(); ++i) {
      const auto& c = r.rational->classes[i];
      out << "             " << std::setw(3) << c.representative << "  " << std::setw(3)
          << c.element_order << "  " << std::setw(5) << c.class_size << "  " << std::setw(5)
          << c.sol_size << "  " << std::setw(8) << c.cyclic_normalizer_order << "  "
          << std::setw(8) << c.normalizer_order << "  " << std::setw(5) << c.orbit << "  "
          << (c.kept() ? std::string("kept")
                       : "merged into " + std::to_string(r.rational->classes[*c.merged_into]
                                                             .representative))
          << '\n';
    }
  }
  if (r.naive && r.rational) out << "methods agree\n";
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  print_count(cfg, compute_count(cfg, cfg.group), out);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const GroupSpec spec = GroupSpec::parse(cfg.group);
  FormulaFamily family;
  try {
    family = formula_family_for(spec);
  } catch (const Unsupported& e) {
    throw Failure(kNotCovered, e.what());
  }
  const std::uint64_t expected = solv_formula(family);
  const GroupTable g = named_group(spec, cfg.closure_cap);
  SolvReport report = solv_count_rational(g, solv_options(cfg));
  report.spec = spec.to_string();
  const bool match = report.total == expected;
  if (cfg.json_output) {
    out << json{{"spec", report.spec},
                {"family", family.tag_string()},
                {"parameter", family.parameter},
                {"formula", expected},
                {"computed", report.total},
                {"match", match},
                {"report", to_json(report)}}
               .dump(2)
        << '\n';
  } else {
    out << report.spec << ": computed " << report.total << (match ? " == " : " != ")
        << "formula " << expected << "  [" << family.tag_string() << ", "
        << family.name() << "]  " << (match ? "match" : "MISMATCH") << '\n';
  }
  return match ? kOk : kMismatch;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out) {
  const GroupSpec spec = GroupSpec::parse(cfg.group);
  std::uint64_t q = 0;
  if (spec.kind == GroupSpec::Kind::psl2) q = spec.param;
  if (spec.kind == GroupSpec::Kind::alternating && spec.param == 5) q = 4;
  if (q == 0)
    throw Failure(kNotCovered, "no table applies: tables cover PSL(2,q) only (spec psl2:q)");
  const auto selection = select_table(q);
  TableReport report;
  if (selection.family) {
    const GroupTable g = named_group(spec, cfg.closure_cap);
    report = verify_table(g, q, {cfg.lattice_cap});
    report.group = spec.to_string();
  } else {
    report.group = spec.to_string();
    report.q = q;
    report.notice = selection.notice;
  }
  if (cfg.json_output)
    out << to_json(report).dump(2) << '\n';
  else
    out << render_table_text(report);
  if (!report.applicable) return kNotCovered;
  return report.all_pass() ? kOk : kMismatch;
}

FormulaFamily family_from_flags(const RunConfig& cfg) {
  const std::string& f = cfg.family;
  const std::uint64_t v = cfg.parameter;
  if (f == "psl2-even") return FormulaFamily::psl2_even(v);
  if (f == "psl2-3odd") return FormulaFamily::psl2_3odd(v);
  if (f == "psl2-prime") return FormulaFamily::psl2_prime(v);
  if (f == "suzuki") return FormulaFamily::suzuki(v);
  if (f == "psl3-3") return FormulaFamily::psl3_3();
  if (f == "psl2-7-special") return FormulaFamily::psl2_7();
  throw ParseError("unknown formula family '" + f + "'", 0);
}

int cmd_formula(const RunConfig& cfg, std::ostream& out) {
  if (cfg.distinctness) {
    const auto report = minimal_simple_distinctness(cfg.order_bound);
    if (cfg.json_output) {
      out << to_json(report).dump(2) << '\n';
    } else {
      out << "minimal simple groups of order <= " << report.order_bound << '\n';
      for (const auto& e : report.entries)
        out << "  " << std::left << std::setw(10) << e.family.name() << std::right
            << "  order " << std::setw(8) << e.group_order << "  |Solv| " << e.solv
            << (e.family.tag == FormulaFamily::Tag::suzuki ? "  (formula only)" : "") << '\n';
      out << "collisions: " << report.collisions.size() << '\n';
      for (const auto& [i, j] : report.collisions)
        out << "  " << report.entries[i].family.name() << " = " << report.entries[j].family.name()
            << '\n';
    }
    return report.collisions.empty() ? kOk : kMismatch;
  }
  FormulaFamily family;
  try {
    family = cfg.family.empty() ? formula_family_for(GroupSpec::parse(cfg.group))
                                : family_from_flags(cfg);
    validate(family);
  } catch (const Unsupported& e) {
    throw Failure(kNotCovered, e.what());
  }
  const std::uint64_t value = solv_formula(family);
  const bool formula_only = family.tag == FormulaFamily::Tag::suzuki;
  if (cfg.json_output) {
    json j = {{"family", family.tag_string()},
              {"parameter", family.parameter},
              {"group", family.name()},
              {"group_order", family_group_order(family)},
              {"solv", value},
              {"formula_only", formula_only}};
    if (family.tag == FormulaFamily::Tag::psl2_prime) j["case_mod_24"] = family.congruence_case();
    out << j.dump(2) << '\n';
  } else {
    out << family.name() << "  [" << family.tag_string();
    if (family.tag == FormulaFamily::Tag::psl2_prime)
      out << ", p = " << family.congruence_case() << " mod 24";
    out << "]  |Solv| = " << value << (formula_only ? "  (formula only; no construction)" : "")
        << '\n';
  }
  return kOk;
}

int cmd_radical(const RunConfig& cfg, std::ostream& out) {
  const GroupSpec spec = GroupSpec::parse(cfg.group);
  const GroupTable g = named_group(spec, cfg.closure_cap);
  const ElementSet r = solvable_radical(g);
  const GroupTable quotient = quotient_group(g, r, cfg.closure_cap);
  const SolvOptions options = solv_options(cfg);
  const auto whole = solv_count_rational(g, options);
  const auto reduced = solv_count_rational(quotient, options);
  const bool equal = whole.total == reduced.total;
  if (!equal)
    throw ConsistencyError("|Solv(G)| = " + std::to_string(whole.total) +
                           " differs from |Solv(G/R(G))| = " + std::to_string(reduced.total));
  if (cfg.json_output) {
    out << json{{"spec", spec.to_string()},
                {"order", g.order()},
                {"radical_order", r.size()},
                {"quotient_order", quotient.order()},
                {"solv", whole.total},
                {"quotient_solv", reduced.total},
                {"equal", equal}}
               .dump(2)
        << '\n';
  } else {
    out << "group            " << spec.to_string() << '\n'
        << "order            " << g.order() << '\n'
        << "|R(G)|           " << r.size() << '\n'
        << "|G/R(G)|         " << quotient.order() << '\n'
        << "|Solv(G)|        " << whole.total << '\n'
        << "|Solv(G/R(G))|   " << reduced.total << '\n';
  }
  return kOk;
}

int code_for(const std::exception& e);

int cmd_batch(const RunConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.batch_file);
  if (!in) throw Failure(kParseError, "cannot read spec list " + cfg.batch_file);
  struct Line {
    std::string spec;
    std::optional<CountResult> result;
    std::string error;
    int code = kOk;
  };
  std::vector<Line> lines;
  std::string text;
  while (std::getline(in, text)) {
    const auto b = text.find_first_not_of(" \t\r");
    if (b == std::string::npos || text[b] == '#') continue;
    const auto e = text.find_last_not_of(" \t\r");
    Line line{text.substr(b, e - b + 1), std::nullopt, {}, kOk};
    try {
      line.result = compute_count(cfg, line.spec);
    } catch (const std::exception& ex) {
      line.error = ex.what();
      line.code = code_for(ex);
    }
    lines.push_back(std::move(line));
  }

  std::size_t failures = 0;
  json entries = json::array();
  for (const auto& line : lines) {
    json j = {{"spec", line.spec}};
    if (line.result) {
      const auto& rep = line.result->primary();
      const bool solvable = rep.total == 1;
      j["order"] = line.result->order;
      j["total"] = rep.total;
      j["upper_bound"] = rep.upper_bound;
      j["solvable"] = solvable;
      if (!solvable) {
        const auto check = check_lower_bound(rep);
        j["lower_bound_holds"] = check.holds;
        j["equals_minimum"] = check.equals_minimum;
        if (!check.holds) ++failures;
      }
    } else {
      ++failures;
      j["error"] = line.error;
      j["exit_code"] = line.code;
    }
    entries.push_back(std::move(j));
  }

  if (cfg.json_output) {
    out << json{{"entries", entries}, {"failures", failures}}.dump(2) << '\n';
  } else {
    for (const auto& j : entries) {
      out << std::left << std::setw(20) << j["spec"].get<std::string>() << std::right;
      if (j.contains("error")) {
        out << "  error: " << j["error"].get<std::string>() << '\n';
        continue;
      }
      out << "  order " << std::setw(6) << j["order"].get<std::size_t>() << "  |Solv| "
          << std::setw(6) << j["total"].get<std::uint64_t>();
      if (j["solvable"].get<bool>()) {
        out << "  solvable";
      } else {
        out << (j["lower_bound_holds"].get<bool>() ? "  >= 32" : "  BELOW 32");
        if (j["equals_minimum"].get<bool>()) out << "  (value 32: noted for inspection)";
      }
      out << '\n';
    }
    out << lines.size() << " groups, " << failures << " failures\n";
  }
  return failures == 0 ? kOk : kMismatch;
}

int code_for(const std::exception& e) {
  if (const auto* f = dynamic_cast<const Failure*>(&e)) return f->code();
  if (dynamic_cast<const ParseError*>(&e)) return kParseError;
  if (dynamic_cast<const InvalidArgument*>(&e)) return kParseError;
  if (dynamic_cast<const CapExceeded*>(&e)) return kLimit;
  if (dynamic_cast<const Timeout*>(&e)) return kLimit;
  if (dynamic_cast<const ConsistencyError*>(&e)) return kConsistency;
  if (dynamic_cast<const Unsupported*>(&e)) return kNotCovered;
  return kMismatch;
}

void add_run_options(CLI::App* sub, RunConfig& cfg, bool group_required) {
  auto* g = sub->add_option("-g,--group", cfg.group, "group spec, e.g. a:5, psl2:8, direct(a:5,c:6)");
  if (group_required) g->required();
  sub->add_option("-j,--jobs", cfg.jobs, "worker threads (0: all available)")->check(CLI::NonNegativeNumber);
  sub->add_flag("--json", cfg.json_output, "emit JSON");
  sub->add_option("--cache", cfg.cache_path, "results cache (JSON lines); default $SOLVKIT_CACHE");
  sub->add_option("--closure-cap", cfg.closure_cap, "maximum group order to enumerate")->check(CLI::PositiveNumber);
  sub->add_option("--lattice-cap", cfg.lattice_cap, "maximum group order for subgroup lattices")->check(CLI::PositiveNumber);
  sub->add_option("--naive-cap", cfg.naive_cap, "maximum group order for the naive method")->check(CLI::PositiveNumber);
  sub->add_option("--timeout", cfg.timeout_seconds, "seconds; checked between work items")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Counts distinct solvabilizers of finite permutation groups", "solvkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());

  auto* count = app.add_subcommand("count", "compute |Solv(G)|");
  add_run_options(count, cfg, true);
  count->add_option("-m,--method", cfg.method, "naive, rational or both")
      ->check(CLI::IsMember({"naive", "rational", "both"}));

  auto* verify = app.add_subcommand("verify", "compare the computed count with its closed form");
  add_run_options(verify, cfg, true);

  auto* tables = app.add_subcommand("tables", "check the solvabilizer table of PSL(2,q)");
  add_run_options(tables, cfg, true);

  auto* formula = app.add_subcommand("formula", "evaluate closed forms for |Solv(G)|");
  add_run_options(formula, cfg, false);
  formula->add_option("--family", cfg.family,
                      "psl2-even, psl2-3odd, psl2-prime, suzuki, psl3-3, psl2-7-special");
  formula->add_option("--param", cfg.parameter, "q (or p for psl2-prime)");
  formula->add_flag("--distinctness", cfg.distinctness,
                    "check all minimal simple groups up to --bound for equal values");
  formula->add_option("--bound", cfg.order_bound, "group order bound for --distinctness");

  auto* radical = app.add_subcommand("radical", "solvable radical and quotient count");
  add_run_options(radical, cfg, true);

  auto* batch = app.add_subcommand("batch", "count every spec listed in a file");
  add_run_options(batch, cfg, false);
  batch->add_option("-f,--file", cfg.batch_file, "file with one spec per line")->required();
  batch->add_option("-m,--method", cfg.method, "naive, rational or both")
      ->check(CLI::IsMember({"naive", "rational", "both"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << library_version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (count->parsed()) return cmd_count(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (tables->parsed()) return cmd_tables(cfg, out);
    if (formula->parsed()) {
      if (!cfg.distinctness && cfg.family.empty() && cfg.group.empty())
        throw Failure(kParseError, "formula needs --group, --family/--param or --distinctness");
      return cmd_formula(cfg, out);
    }
    if (radical->parsed()) return cmd_radical(cfg, out);
    if (batch->parsed()) return cmd_batch(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return code_for(e);
  }
  return kParseError;
}

}  // namespace solvkit::cli
