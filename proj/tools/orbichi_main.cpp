// Batch front door: runs identity verifications and standalone
// computations from JSON configs, with exact-rational output.
//
// Exit codes: 0 pass, 1 identity mismatch, 2 usage/config error,
// 3 resource cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "orbichi/orbichi.hpp"

namespace {

using namespace orbichi;

struct CliOptions {
  std::string config_path;
  std::string json_path;
  std::optional<int> truncation;
  std::optional<int> threads;
  std::optional<std::int64_t> cap_order;
  std::optional<std::int64_t> cap_nodes;
};

RunConfig load_config(const CliOptions& opt) {
  if (opt.config_path.empty()) throw InvalidInput("--config is required");
  Caps base = default_caps();
  base.threads = static_cast<int>(std::thread::hardware_concurrency());
  if (base.threads < 1) base.threads = 1;
  RunConfig cfg = load_run_config(opt.config_path, base);
  if (opt.threads) cfg.caps.threads = *opt.threads;
  if (opt.cap_order) cfg.caps.order = *opt.cap_order;
  if (opt.cap_nodes) cfg.caps.search_nodes = *opt.cap_nodes;
  if (opt.truncation) {
    cfg.truncation = *opt.truncation;
    if (cfg.truncation < 1 || cfg.truncation > cfg.caps.truncation_max)
      throw InvalidInput("truncation must be in [1, " +
                         std::to_string(cfg.caps.truncation_max) + "]");
  }
  return cfg;
}

void write_json(const CliOptions& opt, const json& j) {
  if (opt.json_path.empty()) return;
  std::ofstream out(opt.json_path);
  if (!out) throw InvalidInput("cannot write '" + opt.json_path + "'");
  out << j.dump(2) << "\n";
}

void print_series_line(const std::string& name, const std::vector<Rational>& v) {
  std::cout << name << ":";
  for (const auto& c : v) std::cout << " " << rational_to_string(c);
  std::cout << "\n";
}

void print_terms(const std::vector<SectorTerm>& terms) {
  std::cout << "  rep | class size | chi_fixed | |Aut| | value\n";
  for (const auto& t : terms) {
    std::cout << "  [";
    for (std::size_t i = 0; i < t.rep_images.size(); ++i)
      std::cout << (i ? "," : "") << t.rep_images[i];
    std::cout << "] | " << t.class_size << " | " << t.chi_fixed << " | "
              << t.automorphism_order << " | " << rational_to_string(t.value)
              << "\n";
  }
}

int run_verify(const CliOptions& opt, const std::string& tag_string) {
  TheoremTag tag = theorem_tag_from_string(tag_string);
  RunConfig cfg = load_config(opt);
  VerificationReport rep =
      verify(tag, cfg.invariant, cfg.gamma, cfg.space, cfg.truncation, cfg.caps);
  std::cout << "theorem: " << rep.theorem << "  T=" << rep.truncation << "\n";
  print_series_line("lhs", rep.lhs);
  print_series_line("rhs", rep.rhs);
  std::cout << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";
  if (rep.mismatch)
    std::cout << "first mismatch at q^" << rep.mismatch->index << ": lhs="
              << rational_to_string(rep.mismatch->lhs)
              << " rhs=" << rational_to_string(rep.mismatch->rhs) << "\n";
  std::cout << "stats: homs=" << rep.stats.homs << " classes=" << rep.stats.classes
            << " wall_ms=" << rep.wall_ms << "\n";
  write_json(opt, report_to_json(rep));
  return rep.pass ? 0 : 1;
}

int run_compute(const CliOptions& opt, const std::string& what) {
  RunConfig cfg = load_config(opt);
  json out;
  out["command"] = what;
  if (what == "extension" || what == "sectors") {
    ExtensionResult r =
        gamma_extension(cfg.invariant, cfg.gamma, cfg.space, cfg.caps);
    if (what == "extension") {
      std::cout << invariant_name(cfg.invariant)
                << " extension value: " << rational_to_string(r.value) << "\n";
    }
    print_terms(r.terms);
    out["value"] = rational_to_string(r.value);
    out["terms"] = terms_to_json(r.terms);
  } else if (what == "lhs") {
    RationalSeries s =
        lhs_series(cfg.invariant, cfg.gamma, cfg.space, cfg.truncation, cfg.caps);
    std::vector<Rational> coeffs;
    for (int i = 0; i <= s.truncation(); ++i) coeffs.push_back(s.coeff(i));
    print_series_line("lhs", coeffs);
    out["coefficients"] = s.coeff_strings();
  } else if (what == "rhs") {
    RationalSeries s = [&] {
      if (cfg.abstract) {
        return cfg.invariant == Invariant::Euler
                   ? rhs_euler_product_abstract(*cfg.abstract, cfg.truncation)
                   : rhs_es_exp_abstract(*cfg.abstract, cfg.truncation);
      }
      return cfg.invariant == Invariant::Euler
                 ? rhs_euler_product(cfg.gamma, cfg.space, cfg.truncation,
                                     cfg.caps)
                 : rhs_es_exp(cfg.gamma, cfg.space, cfg.truncation, cfg.caps);
    }();
    std::vector<Rational> coeffs;
    for (int i = 0; i <= s.truncation(); ++i) coeffs.push_back(s.coeff(i));
    print_series_line("rhs", coeffs);
    out["coefficients"] = s.coeff_strings();
  } else if (what == "subgroup-counts") {
    std::cout << "index-n subgroup counts, n = 1.." << cfg.truncation << ":";
    json counts = json::array();
    for (int n = 1; n <= cfg.truncation; ++n) {
      Integer c = count_index_n_subgroups(cfg.gamma, n, cfg.caps);
      std::cout << " " << c;
      counts.push_back(c.str());
    }
    std::cout << "\n";
    out["counts"] = std::move(counts);
  } else if (what == "group-info") {
    const FiniteGroup& g = cfg.group.group;
    auto classes = conjugacy_classes(g);
    std::cout << cfg.group.description << ": order " << g.order() << ", "
              << classes.size() << " conjugacy classes\n";
    out["order"] = g.order();
    out["conjugacy_classes"] = classes.size();
    out["description"] = cfg.group.description;
  } else {
    throw InvalidInput("unknown compute target '" + what + "'");
  }
  write_json(opt, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sector-extension computations for finite quotient "
               "orbifolds and their wreath symmetric products"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string verify_tag, compute_what;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opt.config_path, "JSON run configuration");
    cmd->add_option("--json", opt.json_path, "write a JSON report here");
    cmd->add_option("--truncation", opt.truncation, "series truncation");
    cmd->add_option("--threads", opt.threads, "worker threads");
    cmd->add_option("--cap-order", opt.cap_order, "group order cap");
    cmd->add_option("--cap-nodes", opt.cap_nodes, "search node cap");
  };

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check one generating-function identity");
  verify_cmd->add_option("tag", verify_tag,
                         "thm-euler | thm-es | thm-product | thm-dm | "
                         "thm-gammaset | macdonald")
      ->required();
  add_common(verify_cmd);

  CLI::App* compute_cmd =
      app.add_subcommand("compute", "compute one quantity and print it");
  compute_cmd->add_option("what", compute_what,
                          "extension | lhs | rhs | subgroup-counts | "
                          "group-info | sectors")
      ->required();
  add_common(compute_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(opt, verify_tag);
    return run_compute(opt, compute_what);
  } catch (const orbichi::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const orbichi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
