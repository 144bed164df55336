// Command-line driver for the variational helium ground-state study in
// Hylleraas coordinates. Exit codes: 0 success, 1 computational failure,
// 2 usage error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyll/output.hpp"

namespace {

hyll::BasisTerm parse_exclusion(const std::string& text) {
  std::vector<int> parts;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.empty()) throw CLI::ValidationError("--exclude", "expected l,m,n,q");
      parts.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (parts.size() != 4) throw CLI::ValidationError("--exclude", "expected l,m,n,q");
  hyll::BasisTerm t{parts[0], parts[1], parts[2], parts[3]};
  if (!t.valid())
    throw CLI::ValidationError("--exclude",
                               "invalid term (need l,m >= 0, even n >= 0, q in {0,1})");
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational helium ground state in Hylleraas coordinates"};

  int omega_max = 0;
  std::string digits = "auto";
  std::string k_text = "2";
  std::string z_text = "2";
  std::string mode = "exact";
  std::string threads = "auto";
  std::string checkpoint_dir;
  bool resume = false;
  std::string output = "table";
  std::vector<std::string> exclude_texts;
  bool auto_prune = false;

  app.add_option("--omega-max", omega_max, "Highest order to sweep (l+m+n <= omega)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--digits", digits, "Working decimal digits (>= 30) or 'auto'")
      ->capture_default_str();
  app.add_option("--k", k_text, "Exponential scale parameter (rational)")
      ->capture_default_str();
  app.add_option("--Z", z_text, "Nuclear charge (rational)")->capture_default_str();
  app.add_option("--mode", mode, "Pencil entry storage: exact | floating")
      ->check(CLI::IsMember({"exact", "floating"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Assembly worker threads or 'auto'")
      ->capture_default_str();
  app.add_option("--checkpoint-dir", checkpoint_dir, "Directory for pencil checkpoints");
  app.add_flag("--resume", resume, "Resume from the newest matching checkpoint");
  app.add_option("--output", output, "Output format: table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--exclude", exclude_texts, "Exclude a basis term 'l,m,n,q' (repeatable)");
  app.add_flag("--auto-prune", auto_prune,
               "Drop terms whose pivot makes the overlap non-positive definite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  hyll::RunConfig config;
  config.omega_max = omega_max;
  try {
    if (digits != "auto") {
      const int d = std::stoi(digits);
      if (d < 30) {
        std::cerr << "usage error: --digits must be at least 30\n";
        return 2;
      }
      config.precision.fixed_digits = d;
    }
    config.k = hyll::rational_from_string(k_text);
    config.Z = hyll::rational_from_string(z_text);
    if (config.k <= 0 || config.Z < 0) {
      std::cerr << "usage error: --k must be positive and --Z nonnegative\n";
      return 2;
    }
    config.mode = mode == "exact" ? hyll::AssemblyMode::exact : hyll::AssemblyMode::floating;
    config.threads = threads == "auto" ? 0 : std::stoi(threads);
    if (threads != "auto" && config.threads < 1) {
      std::cerr << "usage error: --threads must be positive or 'auto'\n";
      return 2;
    }
    if (!checkpoint_dir.empty()) config.checkpoint_dir = checkpoint_dir;
    config.resume = resume;
    config.auto_prune = auto_prune;
    for (const std::string& text : exclude_texts)
      config.exclusions.push_back(parse_exclusion(text));
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (config.resume && !config.checkpoint_dir) {
    std::cerr << "usage error: --resume requires --checkpoint-dir\n";
    return 2;
  }

  const hyll::OutputKind kind = output == "table"  ? hyll::OutputKind::table
                                : output == "csv" ? hyll::OutputKind::csv
                                                  : hyll::OutputKind::json;
  return hyll::run(config, kind, std::cout, std::cerr);
}
