// ulis: exact enumeration of pattern-avoiding permutations and involutions
// with a unique longest increasing subsequence, the structural bijections
// behind those counts, generating-function tooling, and a uniform plane-tree
// sampler. Every run is fully determined by its flags (plus the pinned RNG),
// so repeated runs are byte-identical.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulis/bijections.hpp"
#include "ulis/enumerate.hpp"
#include "ulis/formats.hpp"
#include "ulis/sampler.hpp"
#include "ulis/series.hpp"
#include "ulis/tree_count.hpp"
#include "ulis/verify.hpp"

namespace {

using nlohmann::json;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

ulis::Permutation pattern_from_flag(const std::string& s) {
  if (s != "123" && s != "132" && s != "231" && s != "321") {
    throw std::invalid_argument("unknown pattern \"" + s + "\" (supported: 123, 132, 231, 321)");
  }
  std::vector<int> v;
  for (char c : s) v.push_back(c - '0');
  return ulis::Permutation(std::move(v));
}

std::string format_double(double x, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, x);
  return buf;
}

// keeps trailing zeros, so the digit count is what it says
std::string format_significant(double x, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.*g", significant, x);
  std::string s = buf;
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string format_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

ulis::Integer ballot_count(int n) {
  if (n <= 24) return ulis::count_bidirectional_ballot(n);
  return ulis::count_bidirectional_ballot_pruned(n);
}

struct CountConfig {
  std::string pattern;
  std::string object_class = "perm";
  std::string method = "brute";
  int max_n = -1;
  std::string format = "table";
  std::string out;
  int threads = 1;
  int ceiling = ulis::kAvoiderCeiling;
};

int run_count(const CountConfig& cfg) {
  ulis::CountTable table;
  const bool is_ballot = cfg.object_class == "ballot";
  if (is_ballot) {
    if (!cfg.pattern.empty()) throw std::invalid_argument("ballot counts take no --pattern");
    if (cfg.method != "brute") throw std::invalid_argument("ballot counts support --method brute only");
    if (cfg.max_n < 1 || cfg.max_n > 28) {
      throw std::invalid_argument("ballot counts need --max-n in 1..28");
    }
    table.object_class = ulis::ObjectClass::ballot;
    table.method = ulis::CountMethod::brute;
    for (int n = 1; n <= cfg.max_n; ++n) table.rows.emplace_back(n, ballot_count(n));
  } else {
    if (cfg.max_n < 0) throw std::invalid_argument("--max-n must be nonnegative");
    const ulis::Permutation q = pattern_from_flag(cfg.pattern);
    table.pattern = q;
    if (cfg.object_class == "perm") {
      table.object_class = ulis::ObjectClass::permutations;
      if (cfg.method == "brute") {
        table.method = ulis::CountMethod::brute;
        for (int n = 0; n <= cfg.max_n; ++n) {
          table.rows.emplace_back(n, ulis::count_ulis_avoiders(q, n, cfg.threads, cfg.ceiling));
        }
      } else if (cfg.method == "series") {
        if (cfg.pattern != "231") {
          throw std::invalid_argument("--method series applies to --pattern 231 only");
        }
        table.method = ulis::CountMethod::series;
        const ulis::PowerSeries u = ulis::solve_u231(cfg.max_n);
        for (int n = 0; n <= cfg.max_n; ++n) {
          table.rows.emplace_back(n, ulis::integer_coefficient(u, n));
        }
      } else if (cfg.method == "tree-dp") {
        if (cfg.pattern != "132") {
          throw std::invalid_argument("--method tree-dp applies to --pattern 132 only");
        }
        table.method = ulis::CountMethod::tree_dp;
        const ulis::TreeCountDp dp(cfg.max_n + 1);
        for (int n = 0; n <= cfg.max_n; ++n) {
          table.rows.emplace_back(n, dp.unique_deepest_leaf_trees(n + 1));
        }
      } else {
        throw std::invalid_argument("unknown --method \"" + cfg.method + "\"");
      }
    } else if (cfg.object_class == "inv" || cfg.object_class == "perm-all" ||
               cfg.object_class == "inv-all") {
      if (cfg.method != "brute") {
        throw std::invalid_argument("--class " + cfg.object_class + " supports --method brute only");
      }
      table.method = ulis::CountMethod::brute;
      if (cfg.object_class == "inv") {
        table.object_class = ulis::ObjectClass::involutions;
        for (int n = 1; n <= cfg.max_n; ++n) {
          table.rows.emplace_back(n, ulis::count_ulis_involutions(q, n, cfg.threads, cfg.ceiling));
        }
      } else if (cfg.object_class == "perm-all") {
        table.object_class = ulis::ObjectClass::avoiders_total;
        for (int n = 0; n <= cfg.max_n; ++n) {
          table.rows.emplace_back(n, ulis::count_avoiders(q, n, cfg.threads, cfg.ceiling));
        }
      } else {
        table.object_class = ulis::ObjectClass::involution_avoiders_total;
        for (int n = 1; n <= cfg.max_n; ++n) {
          table.rows.emplace_back(n, ulis::count_involution_avoiders(q, n, cfg.threads, cfg.ceiling));
        }
      }
    } else {
      throw std::invalid_argument("unknown --class \"" + cfg.object_class +
                                  "\" (perm, inv, ballot, perm-all, inv-all)");
    }
  }

  std::string text;
  if (cfg.format == "table") {
    text = ulis::render_table(table);
  } else if (cfg.format == "csv") {
    text = ulis::render_csv(table);
  } else if (cfg.format == "bfile") {
    text = ulis::render_bfile(table);
  } else if (cfg.format == "json") {
    json config{{"command", "count"},
                {"class", ulis::to_string(table.object_class)},
                {"method", cfg.method},
                {"max_n", cfg.max_n},
                {"format", cfg.format},
                {"threads", cfg.threads},
                {"ceiling", cfg.ceiling}};
    if (table.pattern) config["pattern"] = ulis::to_string(*table.pattern);
    text = ulis::render_json(table, config);
  } else {
    throw std::invalid_argument("unknown --format \"" + cfg.format + "\"");
  }
  write_output(text, cfg.out);
  return 0;
}

struct SeriesConfig {
  std::string pattern;
  int terms = -1;
  std::string format = "table";
  std::string out;
};

int run_series(const SeriesConfig& cfg) {
  if (cfg.pattern != "231") {
    throw std::invalid_argument("series coefficients are available for --pattern 231 only");
  }
  if (cfg.terms < 1 || cfg.terms > 200) {
    throw std::invalid_argument("--terms must be in 1..200");
  }
  const ulis::PowerSeries u = ulis::solve_u231(cfg.terms - 1);
  ulis::CountTable table;
  table.pattern = pattern_from_flag(cfg.pattern);
  table.object_class = ulis::ObjectClass::permutations;
  table.method = ulis::CountMethod::series;
  for (int n = 0; n < cfg.terms; ++n) table.rows.emplace_back(n, ulis::integer_coefficient(u, n));

  std::string text;
  if (cfg.format == "table") {
    text = ulis::render_table(table);
  } else if (cfg.format == "csv") {
    text = ulis::render_csv(table);
  } else if (cfg.format == "bfile") {
    text = ulis::render_bfile(table);
  } else if (cfg.format == "json") {
    const json config{{"command", "series"},
                      {"pattern", cfg.pattern},
                      {"terms", cfg.terms},
                      {"format", cfg.format}};
    text = ulis::render_json(table, config);
  } else {
    throw std::invalid_argument("unknown --format \"" + cfg.format + "\"");
  }
  write_output(text, cfg.out);
  return 0;
}

struct SingularityConfig {
  double tol = 1e-12;
  std::string format = "table";
  std::string out;
};

int run_singularity(const SingularityConfig& cfg) {
  if (!(cfg.tol > 0) || cfg.tol > 0.1) throw std::invalid_argument("--tol must be in (0, 0.1]");
  // radicand of the 231 generating function: 1 - 4z + 2z^2 + z^4 on (0, 1/2)
  const std::vector<ulis::Rational> poly{1, -4, 2, 0, 1};
  const double root = ulis::find_real_root(poly, 0.0, 0.5, cfg.tol);
  const std::string root_text = format_significant(root, 12);
  const std::string reciprocal_text = format_significant(1.0 / root, 12);
  std::string text;
  if (cfg.format == "table") {
    text = "root        " + root_text + "\nreciprocal  " + reciprocal_text + "\n";
  } else if (cfg.format == "json") {
    const json doc{{"config", {{"command", "singularity"}, {"tol", format_double(cfg.tol, 6)}}},
                   {"root", root_text},
                   {"reciprocal", reciprocal_text}};
    text = doc.dump(2) + "\n";
  } else {
    throw std::invalid_argument("unknown --format \"" + cfg.format + "\"");
  }
  write_output(text, cfg.out);
  return 0;
}

struct RatiosConfig {
  int max_n = 30;
  std::string format = "table";
  std::string out;
};

int run_ratios(const RatiosConfig& cfg) {
  if (cfg.max_n < 1 || cfg.max_n > 200) throw std::invalid_argument("--max-n must be in 1..200");
  const auto rows = ulis::ratio_report(cfg.max_n);
  const auto note_for = [](const ulis::RatioRow& row) {
    std::string note;
    if (!row.decreased) note = "not-decreasing";
    if (!row.at_least_half) note += note.empty() ? "below-half" : ";below-half";
    return note;
  };
  std::string text;
  if (cfg.format == "table") {
    text = "     n  ratio                 value              note\n";
    for (const auto& row : rows) {
      char head[32];
      std::snprintf(head, sizeof head, "%6d  ", row.n);
      std::string ratio = row.ratio.str();
      ratio.resize(std::max<std::size_t>(ratio.size(), 20), ' ');
      std::string value = format_double(ulis::to_double(row.ratio), 15);
      value.resize(std::max<std::size_t>(value.size(), 17), ' ');
      text += head + ratio + "  " + value + "  " + note_for(row) + "\n";
    }
  } else if (cfg.format == "csv") {
    text = "n,ratio,value,note\n";
    for (const auto& row : rows) {
      text += std::to_string(row.n) + "," + row.ratio.str() + "," +
              format_double(ulis::to_double(row.ratio), 15) + "," + note_for(row) + "\n";
    }
  } else if (cfg.format == "json") {
    json doc;
    doc["config"] = {{"command", "ratios"}, {"max_n", cfg.max_n}, {"format", cfg.format}};
    doc["rows"] = json::array();
    for (const auto& row : rows) {
      doc["rows"].push_back({{"n", row.n},
                             {"ratio", row.ratio.str()},
                             {"value", format_double(ulis::to_double(row.ratio), 15)},
                             {"note", note_for(row)}});
    }
    text = doc.dump(2) + "\n";
  } else {
    throw std::invalid_argument("unknown --format \"" + cfg.format + "\"");
  }
  write_output(text, cfg.out);
  return 0;
}

struct SampleConfig {
  int n = -1;
  std::int64_t trials = -1;
  std::optional<std::uint64_t> seed;
  int kmax = 8;
  int workers = 1;
  std::string format = "table";
  std::string out;
};

int run_sample(const SampleConfig& cfg) {
  if (cfg.format != "table" && cfg.format != "json") {
    throw std::invalid_argument("unknown --format \"" + cfg.format + "\" (table, json)");
  }
  std::uint64_t seed = 0;
  bool auto_seeded = false;
  if (cfg.seed) {
    seed = *cfg.seed;
  } else if (cfg.format == "json") {
    throw std::invalid_argument("--seed is required with --format json (scripted mode)");
  } else {
    seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
    auto_seeded = true;
  }
  const ulis::SampleReport report = ulis::estimate_ank(cfg.n, cfg.kmax, cfg.trials, seed, cfg.workers);

  std::string text;
  if (cfg.format == "json") {
    json doc;
    doc["config"] = {{"command", "sample"}, {"n", report.n},     {"trials", report.trials},
                     {"seed", report.seed}, {"kmax", report.k_max}, {"workers", report.workers}};
    doc["substreams"] = json::array();
    for (int w = 0; w < report.workers; ++w) {
      doc["substreams"].push_back(
          {{"worker", w},
           {"seed", report.workers == 1 ? report.seed : ulis::Rng::substream_seed(report.seed, w)},
           {"trials", report.worker_trials[static_cast<std::size_t>(w)]}});
    }
    doc["rows"] = json::array();
    for (int k = 1; k <= report.k_max; ++k) {
      doc["rows"].push_back({{"k", k},
                             {"count", report.counts[static_cast<std::size_t>(k - 1)]},
                             {"estimate", format_fixed(report.estimate(k), 6)},
                             {"stderr", format_fixed(report.standard_error(k), 6)}});
    }
    doc["overflow"] = {{"count", report.overflow},
                       {"estimate", format_fixed(report.overflow_estimate(), 6)}};
    text = doc.dump(2) + "\n";
  } else {
    text = "plane trees on " + std::to_string(report.n) + " vertices, " +
           std::to_string(report.trials) + " trials, seed " + std::to_string(report.seed) +
           (auto_seeded ? " (auto)" : "") + ", workers " + std::to_string(report.workers) + "\n";
    text += "     k     count  estimate  stderr\n";
    for (int k = 1; k <= report.k_max; ++k) {
      char line[96];
      std::snprintf(line, sizeof line, "%6d  %8lld  %.6f  %.6f\n", k,
                    static_cast<long long>(report.counts[static_cast<std::size_t>(k - 1)]),
                    report.estimate(k), report.standard_error(k));
      text += line;
    }
    char line[96];
    std::snprintf(line, sizeof line, "  >%3d  %8lld  %.6f\n", report.k_max,
                  static_cast<long long>(report.overflow), report.overflow_estimate());
    text += line;
  }
  write_output(text, cfg.out);
  return 0;
}

struct VerifyConfig {
  std::string suite;
  int max_n = -1;  // suite-specific default when negative
  int order = 40;
  int brute_n = 11;
  std::int64_t trials = 100000;
  std::uint64_t seed = 20240901;
};

int run_verify(const VerifyConfig& cfg) {
  std::vector<ulis::CheckResult> results;
  if (cfg.suite == "bijections") {
    results = ulis::verify_bijections(cfg.max_n < 0 ? 8 : cfg.max_n);
  } else if (cfg.suite == "series") {
    results = ulis::verify_series(cfg.order, cfg.brute_n);
  } else if (cfg.suite == "oeis") {
    results = ulis::verify_oeis(cfg.max_n < 0 ? 9 : cfg.max_n);
  } else if (cfg.suite == "rs") {
    results = ulis::verify_rs(cfg.max_n < 0 ? 8 : cfg.max_n);
  } else if (cfg.suite == "ballot") {
    results = ulis::verify_ballot(cfg.max_n < 0 ? 12 : cfg.max_n);
  } else if (cfg.suite == "sampler") {
    results = ulis::verify_sampler(cfg.trials, cfg.seed);
  } else {
    throw std::invalid_argument("unknown --suite \"" + cfg.suite +
                                "\" (bijections, series, oeis, rs, ballot, sampler)");
  }
  int failed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      std::cout << "ok   " << r.name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << r.name;
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
  }
  std::cout << "suite " << cfg.suite << ": " << (results.size() - failed) << "/" << results.size()
            << " checks passed\n";
  return failed == 0 ? 0 : 2;
}

struct BijectionConfig {
  std::string map;
  std::string perm;
};

int run_bijection(const BijectionConfig& cfg) {
  const ulis::Permutation p = ulis::parse_permutation(cfg.perm);
  std::string text;
  if (cfg.map == "psi") {
    text = ulis::to_parentheses(ulis::to_plane_tree(p)) + "\n";
  } else if (cfg.map == "phi") {
    text = ulis::to_dyck_path(p).to_string() + "\n";
  } else if (cfg.map == "f") {
    text = ulis::to_string(ulis::claesson_kitaev(p)) + "\n";
  } else if (cfg.map == "rs") {
    const auto [P, Q] = ulis::rs_pair(p);
    text = "P:\n" + P.to_string() + "Q:\n" + Q.to_string();
  } else {
    throw std::invalid_argument("unknown bijection \"" + cfg.map + "\" (psi, phi, f, rs)");
  }
  write_output(text, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of pattern-avoiding permutations with a unique longest "
               "increasing subsequence"};
  app.require_subcommand(1);

  CountConfig count_cfg;
  auto* count = app.add_subcommand("count", "count objects by length");
  count->add_option("--pattern", count_cfg.pattern, "pattern: 123, 132, 231 or 321");
  count->add_option("--class", count_cfg.object_class,
                    "perm (default), inv, ballot, perm-all or inv-all");
  count->add_option("--method", count_cfg.method, "brute (default), series or tree-dp");
  count->add_option("--max-n", count_cfg.max_n, "largest length to count")->required();
  count->add_option("--format", count_cfg.format, "table (default), csv, json or bfile");
  count->add_option("--out", count_cfg.out, "write to file instead of stdout");
  count->add_option("--threads", count_cfg.threads, "worker threads for brute counting")
      ->check(CLI::Range(1, 64));
  count->add_option("--ceiling", count_cfg.ceiling, "guard for brute streams (default 14)");

  SeriesConfig series_cfg;
  auto* series = app.add_subcommand("series", "generating-function coefficients");
  series->add_option("--pattern", series_cfg.pattern, "pattern (231)")->required();
  series->add_option("--terms", series_cfg.terms, "number of coefficients")->required();
  series->add_option("--format", series_cfg.format, "table (default), csv, json or bfile");
  series->add_option("--out", series_cfg.out, "write to file instead of stdout");

  SingularityConfig sing_cfg;
  auto* sing = app.add_subcommand("singularity", "dominant singularity of the 231 series");
  sing->add_option("--tol", sing_cfg.tol, "bisection bracket width (default 1e-12)");
  sing->add_option("--format", sing_cfg.format, "table (default) or json");
  sing->add_option("--out", sing_cfg.out, "write to file instead of stdout");

  RatiosConfig ratios_cfg;
  auto* ratios = app.add_subcommand("ratios", "u_n(132)/C_n by the tree dp");
  ratios->add_option("--max-n", ratios_cfg.max_n, "largest length (default 30)");
  ratios->add_option("--format", ratios_cfg.format, "table (default), csv or json");
  ratios->add_option("--out", ratios_cfg.out, "write to file instead of stdout");

  SampleConfig sample_cfg;
  auto* sample = app.add_subcommand("sample", "deepest-leaf distribution of random plane trees");
  sample->add_option("--n", sample_cfg.n, "tree size in vertices")->required();
  sample->add_option("--trials", sample_cfg.trials, "number of samples")->required();
  std::uint64_t seed_value = 0;
  auto* seed_opt = sample->add_option("--seed", seed_value, "64-bit seed (required for json)");
  sample->add_option("--kmax", sample_cfg.kmax, "report buckets 1..kmax (default 8)")
      ->check(CLI::Range(1, 64));
  sample->add_option("--workers", sample_cfg.workers, "substream count (default 1)")
      ->check(CLI::Range(1, 64));
  sample->add_option("--format", sample_cfg.format, "table (default) or json");
  sample->add_option("--out", sample_cfg.out, "write to file instead of stdout");

  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", verify_cfg.suite,
                     "bijections, series, oeis, rs, ballot or sampler")->required();
  verify->add_option("--max-n", verify_cfg.max_n, "exhaustive bound (suite-specific default)");
  verify->add_option("--order", verify_cfg.order, "series truncation order (default 40)");
  verify->add_option("--brute-n", verify_cfg.brute_n, "brute 321 prefix length (default 11)");
  verify->add_option("--trials", verify_cfg.trials, "sampler trials (default 100000)");
  verify->add_option("--seed", verify_cfg.seed, "sampler seed (default 20240901)");

  BijectionConfig bij_cfg;
  auto* bijection = app.add_subcommand("bijection", "apply psi, phi, f or rs to a permutation");
  bijection->add_option("map", bij_cfg.map, "psi, phi, f or rs")->required();
  bijection->add_option("--perm", bij_cfg.perm, "one-line notation, e.g. 3,5,1,2,4")
      ->required()
      ->expected(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*count) return run_count(count_cfg);
    if (*series) return run_series(series_cfg);
    if (*sing) return run_singularity(sing_cfg);
    if (*ratios) return run_ratios(ratios_cfg);
    if (*sample) {
      if (seed_opt->count() > 0) sample_cfg.seed = seed_value;
      return run_sample(sample_cfg);
    }
    if (*verify) return run_verify(verify_cfg);
    if (*bijection) return run_bijection(bij_cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
