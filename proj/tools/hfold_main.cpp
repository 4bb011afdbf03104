// Command-line driver. Exit codes: 0 success (and all checks passed),
// 1 verification failures, 2 usage or parse errors, 3 arithmetic guard
// (overflow / work-size cap). Text output is human-oriented; json mode is
// the stable contract.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfold/hfold.hpp"

namespace {

struct Range {
  int64_t lo;
  int64_t hi;
};

Range parse_range(const std::string& text) {
  const size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int64_t v = hfold::detail::parse_int64_token(hfold::detail::trim(text));
      return {v, v};
    }
    Range r{hfold::detail::parse_int64_token(hfold::detail::trim(text.substr(0, dots))),
            hfold::detail::parse_int64_token(hfold::detail::trim(text.substr(dots + 2)))};
    if (r.lo > r.hi) throw hfold::ParseError("empty range '" + text + "'");
    return r;
  } catch (const hfold::Overflow&) {
    throw hfold::ParseError("range bound out of 64-bit range in '" + text + "'");
  }
}

hfold::IntSet load_set(const std::string& literal, const std::string& path) {
  if (!literal.empty() && !path.empty())
    throw hfold::ParseError("give either --set or --set-file, not both");
  if (!literal.empty()) return hfold::parse_set_literal(literal);
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw hfold::ParseError("cannot open set file '" + path + "'");
    return hfold::read_set_lines(in);
  }
  throw hfold::ParseError("one of --set or --set-file is required");
}

int env_default_jobs() {
  const char* env = std::getenv("SUMSET_JOBS");
  if (!env || !*env) return 0;
  const int64_t v = hfold::detail::parse_int64_token(hfold::detail::trim(env));
  if (v < 1) throw hfold::ParseError("SUMSET_JOBS must be a positive integer");
  return static_cast<int>(v);
}

bool is_family_check(hfold::CheckId id) {
  using hfold::CheckId;
  return id == CheckId::Prop1 || id == CheckId::Prop2 || id == CheckId::Prop3 ||
         id == CheckId::Prop4 || id == CheckId::Lemma2 || id == CheckId::Lemma3;
}

int64_t auto_max_diameter(hfold::CheckId id, int64_t k) {
  // One- and two-hole classification can stop at diameter k+1; claims about
  // arbitrary sets are swept out to 2k+2.
  if (id == hfold::CheckId::Theorem1 || id == hfold::CheckId::Theorem2) return k + 1;
  return 2 * k + 2;
}

struct VerifyArgs {
  std::string theorem;
  std::string k_range;
  std::string h_range;
  std::string max_diameter = "auto";
  std::string out_path;
  std::string summary_path;
  int jobs = 0;
  bool dedup_reflection = false;
  std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
  const hfold::CheckId id = hfold::check_id_from_string(args.theorem);
  const Range kr = parse_range(args.k_range);
  const Range hr = parse_range(args.h_range);
  const int jobs = args.jobs > 0 ? args.jobs : env_default_jobs();
  const bool want_records = !args.out_path.empty();

  std::vector<hfold::SweepReport> reports;
  if (is_family_check(id)) {
    reports.push_back(hfold::family_sweep(hr.hi, kr.hi, {args.theorem}));
  } else {
    for (int64_t k = kr.lo; k <= kr.hi; ++k) {
      hfold::EnumSpec spec;
      spec.k = k;
      spec.max_diameter = args.max_diameter == "auto"
                              ? auto_max_diameter(id, k)
                              : hfold::detail::parse_int64_token(args.max_diameter);
      for (int64_t h = hr.lo; h <= hr.hi; ++h) spec.h_values.push_back(h);
      spec.checks = {args.theorem};
      spec.dedup_reflection = args.dedup_reflection;
      spec.collect_records = want_records;
      reports.push_back(hfold::run_sweep(spec, jobs));
    }
  }

  int64_t total_sets = 0;
  int64_t failure_count = 0;
  for (const hfold::SweepReport& r : reports) {
    total_sets += r.total_sets;
    failure_count += static_cast<int64_t>(r.failures.size());
  }

  if (!args.out_path.empty()) {
    std::ofstream out(args.out_path);
    if (!out) throw hfold::ParseError("cannot open report path '" + args.out_path + "'");
    std::vector<hfold::VerificationRecord> all;
    for (hfold::SweepReport& r : reports)
      for (hfold::VerificationRecord& rec : r.records) all.push_back(std::move(rec));
    hfold::write_report(out, std::move(all));
  }

  hfold::json summary;
  if (reports.size() == 1) {
    summary = hfold::summary_json(reports.front());
  } else {
    summary["sweeps"] = hfold::json::array();
    for (const hfold::SweepReport& r : reports) summary["sweeps"].push_back(hfold::summary_json(r));
    summary["total_sets"] = total_sets;
    summary["failure_count"] = failure_count;
  }
  if (!args.summary_path.empty()) {
    std::ofstream out(args.summary_path);
    if (!out) throw hfold::ParseError("cannot open summary path '" + args.summary_path + "'");
    out << summary.dump(2) << '\n';
  }

  if (args.format == "json") {
    std::cout << summary.dump(2) << '\n';
  } else {
    for (const hfold::SweepReport& r : reports) {
      if (r.spec.mode == hfold::EnumSpec::Mode::Sets)
        std::cout << "k=" << r.spec.k << " max_diameter=" << r.spec.max_diameter;
      else
        std::cout << "families up to k=" << r.spec.k;
      std::cout << ": sets=" << r.total_sets << " failures=" << r.failures.size() << '\n';
      for (const auto& [h, gaps] : r.achievable_gaps) {
        if (gaps.empty()) continue;
        std::cout << "  h=" << h << " unattained:";
        for (int64_t v : gaps) std::cout << ' ' << v;
        std::cout << '\n';
      }
      for (size_t t = 0; t < r.failures.size() && t < 5; ++t)
        std::cout << "  FAIL " << hfold::json_of(r.failures[t]).dump() << '\n';
    }
    std::cout << (failure_count ? "FAIL" : "OK") << ": " << total_sets << " sets, "
              << failure_count << " failures\n";
  }
  return failure_count ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact h-fold sumset toolkit"};
  app.require_subcommand(1);
  // The fold count is spelled --h, so the help flag stays long-only.
  app.set_help_flag("--help", "print help and exit");
  auto add_subcommand = [&](const char* name, const char* description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->set_help_flag("--help", "print help and exit");
    return sub;
  };

  std::string set_literal, set_file, format = "text";
  int64_t h_value = 0, k_value = 0, card_value = 0;

  auto add_set_options = [&](CLI::App* sub) {
    sub->add_option("--set", set_literal, "set literal, e.g. \"0, 2, 3, 5\"");
    sub->add_option("--set-file", set_file, "file with one integer per line");
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* cmd_sumset = add_subcommand("sumset", "compute hA and |hA|");
  add_set_options(cmd_sumset);
  cmd_sumset->add_option("--h", h_value, "fold count")->required();

  CLI::App* cmd_normalize = add_subcommand("normalize", "affine normal form");
  add_set_options(cmd_normalize);

  CLI::App* cmd_inverse =
      add_subcommand("inverse", "classify a cardinality back to structures");
  cmd_inverse->add_option("--h", h_value, "fold count")->required();
  cmd_inverse->add_option("--k", k_value, "set size")->required();
  cmd_inverse->add_option("--card", card_value, "observed |hA|")->required();
  cmd_inverse->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_classify =
      add_subcommand("classify", "end-to-end consistency check of one set");
  add_set_options(cmd_classify);
  cmd_classify->add_option("--h", h_value, "fold count")->required();

  VerifyArgs verify_args;
  CLI::App* cmd_verify = add_subcommand("verify", "exhaustive sweep of one check");
  cmd_verify->add_option("--theorem", verify_args.theorem, "check id to sweep")->required();
  cmd_verify->add_option("--k", verify_args.k_range, "set size or range, e.g. 5..9")->required();
  cmd_verify->add_option("--h", verify_args.h_range, "fold count or range, e.g. 2..4")
      ->required();
  cmd_verify->add_option("--max-diameter", verify_args.max_diameter,
                         "diameter cap or 'auto'");
  cmd_verify->add_option("--jobs", verify_args.jobs, "worker count (default: SUMSET_JOBS or all cores)");
  cmd_verify->add_option("--out", verify_args.out_path, "write the full report (JSON lines)");
  cmd_verify->add_option("--summary", verify_args.summary_path, "write the summary object");
  cmd_verify->add_flag("--dedup-reflection", verify_args.dedup_reflection,
                       "visit only the lexicographic representative of each reflection pair");
  cmd_verify->add_option("--format", verify_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cmd_sumset) {
      const hfold::IntSet a = load_set(set_literal, set_file);
      const hfold::SumsetResult r = hfold::h_fold(a, h_value);
      if (format == "json") {
        hfold::json out;
        out["set"] = hfold::json_of(r.source);
        out["h"] = r.h;
        out["elements"] = hfold::json_of(r.elements);
        out["cardinality"] = r.cardinality;
        std::cout << out.dump() << '\n';
      } else {
        std::cout << "hA = " << hfold::to_string(r.elements) << '\n'
                  << "|hA| = " << r.cardinality << '\n';
      }
    } else if (*cmd_normalize) {
      const hfold::IntSet a = load_set(set_literal, set_file);
      const hfold::NormalizedSet n = hfold::normalize(a);
      if (format == "json") {
        hfold::json out;
        out["set"] = hfold::json_of(a);
        out["normal"] = hfold::json_of(n.normal);
        out["base"] = n.base;
        out["dilation"] = n.dilation;
        std::cout << out.dump() << '\n';
      } else {
        std::cout << "normal form = " << hfold::to_string(n.normal) << '\n'
                  << "base = " << n.base << '\n'
                  << "dilation = " << n.dilation << '\n';
      }
    } else if (*cmd_inverse) {
      const hfold::InversePrediction p =
          hfold::classify_by_cardinality(h_value, k_value, card_value);
      if (format == "json")
        std::cout << hfold::json_of(p).dump() << '\n';
      else
        std::cout << hfold::to_string(p) << '\n';
    } else if (*cmd_classify) {
      const hfold::IntSet a = load_set(set_literal, set_file);
      const hfold::VerificationRecord rec = hfold::consistency_check(a, h_value);
      if (format == "json") {
        std::cout << hfold::json_of(rec).dump() << '\n';
      } else {
        std::cout << "normal form = " << hfold::to_string(rec.set) << '\n'
                  << "|hA| = " << rec.cardinality << " (h = " << rec.h << ")\n"
                  << "structure = " << hfold::to_string(rec.structure) << '\n';
        if (rec.predicted) std::cout << "predicted = " << *rec.predicted << '\n';
        for (const auto& [name, outcome] : rec.checks)
          std::cout << name << ": " << hfold::to_string(outcome) << '\n';
        for (const std::string& c : rec.caveats) std::cout << "caveat: " << c << '\n';
      }
      if (rec.failed()) return 1;
    } else if (*cmd_verify) {
      return run_verify(verify_args);
    }
  } catch (const hfold::ArithmeticGuard& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const hfold::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
