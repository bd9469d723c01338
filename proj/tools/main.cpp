// mdeg: exact classification of degree triples of tame automorphisms of
// affine 3-space, with the supporting polynomial machinery exposed as
// subcommands. All payloads are deterministic JSON on stdout; diagnostics
// go to stderr. Exit codes: 0 definitive result, 1 usage/input error,
// 2 Unknown / inconclusive.

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "mdeg/pairs.hpp"
#include "mdeg/semigroup.hpp"

namespace {

using mdeg::i64;
using mdeg::io::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

std::array<i64, 3> sorted_with_notice(std::array<i64, 3> triple) {
  auto sorted = triple;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != triple)
    std::cerr << "note: triple reordered to (" << sorted[0] << ", " << sorted[1] << ", "
              << sorted[2] << ")\n";
  return sorted;
}

int verdict_exit(const mdeg::Verdict& verdict) {
  return verdict.status == mdeg::Status::Unknown ? kExitUnknown : kExitOk;
}

void print_verdict(const mdeg::Verdict& verdict, bool as_json) {
  if (as_json) {
    std::cout << mdeg::io::verdict_json(verdict).dump() << "\n";
    return;
  }
  std::cout << "(" << verdict.triple[0] << ", " << verdict.triple[1] << ", "
            << verdict.triple[2] << "): " << mdeg::status_name(verdict.status) << " ["
            << mdeg::rule_name(verdict.rule) << "] " << verdict.note << "\n";
}

unsigned sweep_threads() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("MDEG_THREADS")) {
    unsigned cap = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), cap);
    if (ec == std::errc() && cap >= 1) n = std::min(n, cap);
  }
  return n;
}

int run_sweep(i64 a_max, i64 d_max, const std::string& out_path) {
  const i64 rows = a_max;
  std::vector<std::string> lines(static_cast<std::size_t>(rows * (d_max + 1)));
  std::atomic<i64> next_row{1};
  auto worker = [&] {
    for (i64 a = next_row.fetch_add(1); a <= a_max; a = next_row.fetch_add(1))
      for (i64 d = 0; d <= d_max; ++d)
        lines[static_cast<std::size_t>((a - 1) * (d_max + 1) + d)] =
            mdeg::io::verdict_json(mdeg::classify_ap(a, d)).dump();
  };
  std::vector<std::thread> pool;
  const unsigned nthreads = sweep_threads();
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open output file '" << out_path << "'\n";
      return kExitError;
    }
    out = &file;
  }
  for (const auto& line : lines) *out << line << "\n";
  return kExitOk;
}

bool parse_pair_key(const std::string& text, int& i, int& j) {
  if (text.size() == 3 && text[1] == ',') {
    i = text[0] - '0';
    j = text[2] - '0';
  } else if (text.size() == 2) {
    i = text[0] - '0';
    j = text[1] - '0';
  } else {
    return false;
  }
  if (i > j) std::swap(i, j);
  return (i == 1 && (j == 2 || j == 3)) || (i == 2 && j == 3);
}

int apply_bounds(mdeg::BoundMap& bounds, const std::vector<std::string>& lbs,
                 const std::vector<std::string>& stricts) {
  for (const auto& spec : lbs) {
    const auto eq = spec.find('=');
    int i = 0, j = 0;
    i64 value = 0;
    if (eq == std::string::npos || !parse_pair_key(spec.substr(0, eq), i, j)) {
      std::cerr << "error: --bracket-lb expects PAIR=VAL, e.g. 1,3=9\n";
      return kExitError;
    }
    try {
      value = std::stoll(spec.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "error: --bracket-lb value must be an integer\n";
      return kExitError;
    }
    if (value < 2) {
      std::cerr << "error: bracket lower bound must be >= 2\n";
      return kExitError;
    }
    bounds.for_pair(i, j).value = value;
  }
  for (const auto& spec : stricts) {
    int i = 0, j = 0;
    if (!parse_pair_key(spec, i, j)) {
      std::cerr << "error: --strict expects a pair like 1,3\n";
      return kExitError;
    }
    bounds.for_pair(i, j).strict = true;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multidegree toolkit for tame automorphisms of affine 3-space"};
  app.require_subcommand(1);

  // classify
  std::array<i64, 3> triple{};
  bool as_json = false;
  auto* classify = app.add_subcommand("classify", "classify a degree triple");
  classify->add_option("d1", triple[0], "first degree")->required();
  classify->add_option("d2", triple[1], "second degree")->required();
  classify->add_option("d3", triple[2], "third degree")->required();
  classify->add_flag("--json", as_json, "emit the JSON verdict");

  // classify-ap
  i64 ap_a = 0, ap_d = 0;
  bool ap_json = false;
  auto* classify_ap_cmd =
      app.add_subcommand("classify-ap", "classify the progression (a, a+d, a+2d)");
  classify_ap_cmd->add_option("--a", ap_a, "first degree a >= 1")->required();
  classify_ap_cmd->add_option("--d", ap_d, "common difference d >= 0")->required();
  classify_ap_cmd->add_flag("--json", ap_json, "emit the JSON verdict");

  // sweep
  i64 sweep_a_max = 0, sweep_d_max = 0;
  std::string sweep_out;
  auto* sweep = app.add_subcommand(
      "sweep", "classify every progression on a grid, one JSON verdict per line");
  sweep->add_option("--a-max", sweep_a_max, "largest a")->required();
  sweep->add_option("--d-max", sweep_d_max, "largest d (d starts at 0)")->required();
  sweep->add_option("--out", sweep_out, "output file (default: stdout)");

  // build
  std::array<i64, 3> build_triple{};
  std::string build_out;
  auto* build = app.add_subcommand("build", "construct a tame map with the given multidegree");
  build->add_option("d1", build_triple[0], "first degree")->required();
  build->add_option("d2", build_triple[1], "second degree")->required();
  build->add_option("d3", build_triple[2], "third degree")->required();
  build->add_option("-o,--out", build_out, "output file (default: stdout)");

  // bracket
  std::string bracket_f, bracket_g;
  int bracket_vars = 3;
  auto* bracket_cmd =
      app.add_subcommand("bracket", "Poisson bracket minors and degree of two polynomials");
  bracket_cmd->add_option("-f", bracket_f, "first polynomial")->required();
  bracket_cmd->add_option("-g", bracket_g, "second polynomial")->required();
  bracket_cmd->add_option("--vars", bracket_vars, "ambient variable count (default 3)");

  // su-bound
  i64 su_deg_f = 0, su_deg_g = 0, su_deg_y = 0, su_bracket = 2;
  auto* su = app.add_subcommand("su-bound", "degree lower bound for G(f, g)");
  su->add_option("--deg-f", su_deg_f, "deg f (defines p)")->required();
  su->add_option("--deg-g", su_deg_g, "deg g")->required();
  su->add_option("--deg-y", su_deg_y, "deg_y G")->required();
  su->add_option("--bracket", su_bracket, "deg [f,g] (exact or lower bound, >= 2)")
      ->required();

  // exclude
  std::array<i64, 3> excl_triple{};
  std::vector<std::string> excl_lbs, excl_stricts;
  auto* exclude = app.add_subcommand(
      "exclude", "per-position elementary-reduction exclusion for a degree triple");
  exclude->add_option("d1", excl_triple[0], "first degree")->required();
  exclude->add_option("d2", excl_triple[1], "second degree")->required();
  exclude->add_option("d3", excl_triple[2], "third degree")->required();
  exclude->add_option("--bracket-lb", excl_lbs,
                      "per-pair bracket lower bound, PAIR=VAL (e.g. 1,3=9)");
  exclude->add_option("--strict", excl_stricts, "treat the pair's bound as strict (e.g. 1,3)");

  // type3
  std::array<i64, 3> t3_triple{};
  auto* type3 = app.add_subcommand("type3", "search for a type-III degree shape");
  type3->add_option("d1", t3_triple[0], "first degree")->required();
  type3->add_option("d2", t3_triple[1], "second degree")->required();
  type3->add_option("d3", t3_triple[2], "third degree")->required();

  // reduce
  std::string reduce_file;
  int reduce_position = 0;
  i64 reduce_max_deg = -1;
  auto* reduce = app.add_subcommand(
      "reduce", "search for an elementary reduction of a map read from a JSON file");
  reduce->add_option("-F,--file", reduce_file, "PolyMap JSON file")->required();
  reduce->add_option("--position", reduce_position, "component to reduce (1..3)")->required();
  reduce->add_option("--max-deg", reduce_max_deg, "support degree budget for g");

  // lemma31
  i64 lem_a_max = 0, lem_d_max = 0;
  auto* lemma31 = app.add_subcommand(
      "lemma31", "sweep the membership equivalence a|2d <=> a|d or a+2d representable");
  lemma31->add_option("--a-max", lem_a_max, "largest a")->required();
  lemma31->add_option("--d-max", lem_d_max, "largest d (d starts at 0)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (*classify) {
      const auto sorted = sorted_with_notice(triple);
      const auto verdict = mdeg::classify_triple(sorted[0], sorted[1], sorted[2]);
      print_verdict(verdict, as_json);
      return verdict_exit(verdict);
    }
    if (*classify_ap_cmd) {
      const auto verdict = mdeg::classify_ap(ap_a, ap_d);
      print_verdict(verdict, ap_json);
      return verdict_exit(verdict);
    }
    if (*sweep) {
      if (sweep_a_max < 1 || sweep_d_max < 0) {
        std::cerr << "error: sweep needs --a-max >= 1 and --d-max >= 0\n";
        return kExitError;
      }
      return run_sweep(sweep_a_max, sweep_d_max, sweep_out);
    }
    if (*build) {
      const auto sorted = sorted_with_notice(build_triple);
      const auto witness = mdeg::build_witness(sorted[0], sorted[1], sorted[2]);
      json doc;
      if (witness) {
        doc = mdeg::io::polymap_json(*witness);
      } else {
        doc = json{{"supported", false},
                   {"reason", "third degree is not a nonnegative combination of the "
                              "first two"}};
      }
      if (!build_out.empty()) {
        std::ofstream file(build_out);
        if (!file) {
          std::cerr << "error: cannot open output file '" << build_out << "'\n";
          return kExitError;
        }
        file << doc.dump(2) << "\n";
      } else {
        std::cout << doc.dump() << "\n";
      }
      return witness ? kExitOk : kExitUnknown;
    }
    if (*bracket_cmd) {
      const auto f = mdeg::Polynomial::parse(bracket_f, bracket_vars);
      const auto g = mdeg::Polynomial::parse(bracket_g, bracket_vars);
      const auto value = mdeg::bracket(f, g);
      std::cout << mdeg::io::bracket_json(value, bracket_vars).dump() << "\n";
      return kExitOk;
    }
    if (*su) {
      const auto query = mdeg::SUQuery::make(su_deg_f, su_deg_g, su_deg_y, su_bracket);
      const json doc{{"deg_f", query.deg_f}, {"deg_g", query.deg_g},
                     {"deg_y", su_deg_y},   {"bracket", query.bracket_deg},
                     {"p", query.p},        {"q", query.q},
                     {"r", query.r},        {"bound", mdeg::su_lower_bound(query)}};
      std::cout << doc.dump() << "\n";
      return kExitOk;
    }
    if (*exclude) {
      const auto sorted = sorted_with_notice(excl_triple);
      mdeg::BoundMap bounds;
      if (const int rc = apply_bounds(bounds, excl_lbs, excl_stricts); rc != kExitOk)
        return rc;
      const auto summary = mdeg::exclude_all(sorted, bounds);
      std::cout << mdeg::io::exclusion_summary_json(summary).dump() << "\n";
      return summary.all_excluded ? kExitOk : kExitUnknown;
    }
    if (*type3) {
      const auto sorted = sorted_with_notice(t3_triple);
      const auto witness = mdeg::type_iii_possible(sorted);
      std::cout << mdeg::io::type3_json(sorted, witness).dump() << "\n";
      return kExitOk;
    }
    if (*reduce) {
      std::ifstream file(reduce_file);
      if (!file) {
        std::cerr << "error: cannot read '" << reduce_file << "'\n";
        return kExitError;
      }
      json doc = json::parse(file);
      const auto map = mdeg::io::polymap_from_json(doc);
      std::optional<i64> budget;
      if (reduce_max_deg >= 0) budget = reduce_max_deg;
      const auto found = mdeg::reduction_search(map, reduce_position, budget);
      json out;
      out["position"] = reduce_position;
      out["target_degree"] =
          mdeg::io::degree_json(map.components[reduce_position - 1].total_degree());
      if (found) {
        out["found"] = true;
        out["g"] = found->g.str();
        out["residual_degree"] = mdeg::io::degree_json(found->residual_degree);
      } else {
        out["found"] = false;
        out["g"] = nullptr;
        out["residual_degree"] = nullptr;
        out["note"] = "no solution within the support budget; not a proof of nonexistence";
      }
      std::cout << out.dump() << "\n";
      return found ? kExitOk : kExitUnknown;
    }
    if (*lemma31) {
      if (lem_a_max < 1 || lem_d_max < 0) {
        std::cerr << "error: lemma31 needs --a-max >= 1 and --d-max >= 0\n";
        return kExitError;
      }
      json counterexamples = json::array();
      i64 checked = 0;
      for (i64 a = 1; a <= lem_a_max; ++a) {
        for (i64 d = 0; d <= lem_d_max; ++d) {
          ++checked;
          if (!mdeg::lemma31_check(a, d).equal) counterexamples.push_back({a, d});
        }
      }
      const json doc{{"a_max", lem_a_max},
                     {"d_max", lem_d_max},
                     {"checked", checked},
                     {"all_equal", counterexamples.empty()},
                     {"counterexamples", counterexamples}};
      std::cout << doc.dump() << "\n";
      return kExitOk;
    }
  } catch (const mdeg::ParseError& e) {
    std::cerr << "error: " << e.what() << " at position " << e.position << "\n";
    return kExitError;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
