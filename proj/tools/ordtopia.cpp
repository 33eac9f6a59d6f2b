#include "ordtopia/error.hpp"
#include "ordtopia/json_io.hpp"
#include "ordtopia/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kUsageError = 2;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "ordtopia: cannot write " << out_path << '\n';
    return kUsageError;
  }
  f << text;
  return 0;
}

std::string render(const std::vector<ordtopia::CheckReport>& checks, const std::string& format) {
  if (format == "text") return ordtopia::render_text(checks);
  return ordtopia::report_document(checks).dump(2) + "\n";
}

ordtopia::Json read_document(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ordtopia::Error(ordtopia::Errc::invalid_argument, "cannot read " + path);
  try {
    return ordtopia::Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ordtopia::Error(ordtopia::Errc::parse_error, path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite order-topology and welfare-criterion verification"};
  app.require_subcommand(1);
  app.fallthrough();

  ordtopia::RunConfig cfg;
  std::string format = "json";
  std::string out_path;
  auto* seed_opt = app.add_option("--seed", cfg.seed, "RNG seed (falls back to ORDTOPIA_SEED, then 0)");
  app.add_option("--trials", cfg.trials, "Random trials for randomized suites")->check(CLI::PositiveNumber);
  app.add_option("--max-carrier", cfg.max_carrier, "Largest carrier for exhaustive suites")->check(CLI::Range(0, 5));
  app.add_option("--p", cfg.p, "Exponent of the l_p metric (> 1)");
  app.add_option("--q", cfg.q, "Exponent of the d_q metric (in (0,1))");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write the report to this path");

  std::string target;
  std::vector<std::string> paths;
  auto* repro = app.add_subcommand("repro", "Reproduce a worked example");
  repro->add_option("example", target, "Example id")->required()->check(CLI::IsMember(ordtopia::repro_examples()));
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", target, "Suite id")->required()->check(CLI::IsMember(ordtopia::verify_suites()));
  auto* merge = app.add_subcommand("merge", "Merge JSON reports");
  merge->add_option("paths", paths, "Report files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (seed_opt->count() == 0) {
    if (const char* env = std::getenv("ORDTOPIA_SEED"); env && *env) {
      std::istringstream is(env);
      if (!(is >> cfg.seed) || !is.eof()) {
        std::cerr << "ordtopia: ORDTOPIA_SEED must be an unsigned integer\n";
        return kUsageError;
      }
    }
  }

  try {
    std::vector<ordtopia::CheckReport> checks;
    if (*merge) {
      std::vector<ordtopia::Json> docs;
      for (const auto& p : paths) docs.push_back(read_document(p));
      checks = ordtopia::checks_from_document(ordtopia::merge_documents(docs));
    } else if (*repro) {
      checks = ordtopia::run_repro(target, cfg);
    } else {
      checks = ordtopia::run_verify(target, cfg);
    }
    if (const int rc = emit(render(checks, format), out_path); rc != 0) return rc;
    return ordtopia::any_failed(checks) ? 1 : 0;
  } catch (const ordtopia::Error& e) {
    std::cerr << "ordtopia: " << ordtopia::errc_name(e.code()) << ": " << e.what() << '\n';
    return kUsageError;
  }
}
