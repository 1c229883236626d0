// Verification CLI. All computation lives behind the shared library's C
// interface; this binary only parses flags, forwards a JSON config, and
// prints the rendered report.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "hankelff/hankelff.h"

namespace {

struct Flags {
  std::string command;
  uint32_t p = 2;
  uint32_t e = 1;
  std::string modulus;  // comma-separated coefficients, low to high
  std::string n, h;     // value or a..b
  int l = -1, m = -1, r = -1, rho = -1, pi = -1;
  std::string format = "json";
  std::string cache_dir;
  int jobs = 1;
  uint64_t budget = 10000000;
  uint64_t seed = 0;
  uint64_t sample = 0;
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string build_config(const Flags& fl) {
  std::string j = "{";
  j += "\"command\":\"" + json_escape(fl.command) + "\"";
  j += ",\"p\":" + std::to_string(fl.p);
  j += ",\"e\":" + std::to_string(fl.e);
  if (!fl.modulus.empty()) {
    j += ",\"modulus\":[";
    std::string item;
    bool first = true;
    for (size_t i = 0; i <= fl.modulus.size(); ++i) {
      if (i == fl.modulus.size() || fl.modulus[i] == ',') {
        if (!item.empty()) {
          if (!first) j += ",";
          j += item;
          first = false;
          item.clear();
        }
      } else {
        item += fl.modulus[i];
      }
    }
    j += "]";
  }
  if (!fl.n.empty()) j += ",\"n\":\"" + json_escape(fl.n) + "\"";
  if (!fl.h.empty()) j += ",\"h\":\"" + json_escape(fl.h) + "\"";
  if (fl.l >= 0) j += ",\"l\":" + std::to_string(fl.l);
  if (fl.m >= 0) j += ",\"m\":" + std::to_string(fl.m);
  if (fl.r >= 0) j += ",\"r\":" + std::to_string(fl.r);
  if (fl.rho >= 0) j += ",\"rho\":" + std::to_string(fl.rho);
  if (fl.pi >= 0) j += ",\"pi\":" + std::to_string(fl.pi);
  j += ",\"format\":\"" + json_escape(fl.format) + "\"";
  if (!fl.cache_dir.empty()) j += ",\"cache_dir\":\"" + json_escape(fl.cache_dir) + "\"";
  j += ",\"jobs\":" + std::to_string(fl.jobs);
  j += ",\"budget\":" + std::to_string(fl.budget);
  j += ",\"seed\":" + std::to_string(fl.seed);
  j += ",\"sample\":" + std::to_string(fl.sample);
  j += "}";
  return j;
}

void add_common(CLI::App* cmd, Flags& fl) {
  cmd->set_help_flag("--help", "print help");
  cmd->add_option("--p", fl.p, "field characteristic (prime)");
  cmd->add_option("--e", fl.e, "extension degree");
  cmd->add_option("--modulus", fl.modulus,
                  "defining polynomial coefficients, low to high, comma-separated");
  cmd->add_option("--n", fl.n, "sequence degree parameter, value or a..b");
  cmd->add_option("--h", fl.h, "zero-prefix / interval parameter, value or a..b");
  cmd->add_option("--l", fl.l, "row count filter");
  cmd->add_option("--m", fl.m, "column count filter");
  cmd->add_option("--r", fl.r, "rank filter");
  cmd->add_option("--rho", fl.rho, "rho filter");
  cmd->add_option("--pi", fl.pi, "pi filter");
  cmd->add_option("--format", fl.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--cache-dir", fl.cache_dir, "census cache directory");
  cmd->add_option("--jobs", fl.jobs, "worker count")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", fl.budget, "enumeration budget")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", fl.seed, "seed for sampled sweeps");
  cmd->add_option("--sample", fl.sample, "sample size (0 = exhaustive)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification harness for Hankel-matrix and divisor-variance identities"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // keep -h free: --h is a parameter

  Flags fl;
  const char* names[] = {"variance", "census", "kernel", "euclid", "expsum", "all"};
  const char* descs[] = {
      "interval variance of the divisor function: brute force vs closed form",
      "sequence and matrix counts by (rank, rho, pi) vs closed forms",
      "kernel structure: predicted spans vs elimination at every shape",
      "Euclidean-algorithm correspondence along remainder-chain truncations",
      "exact cyclotomic exponential-sum cancellation and product values",
      "every suite at small default ranges",
  };
  for (size_t i = 0; i < 6; ++i) add_common(app.add_subcommand(names[i], descs[i]), fl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad flag
  }

  fl.command = app.get_subcommands().front()->get_name();

  char* report = nullptr;
  int exit_status = 0;
  int rc = hankelff_run_json(build_config(fl).c_str(), &report, &exit_status);
  if (rc != HANKELFF_OK) {
    std::fprintf(stderr, "hankelff: %s: %s\n", hankelff_strerror(rc),
                 hankelff_last_error_message());
    return 2;
  }
  std::fputs(report, stdout);
  hankelff_string_free(report);
  return exit_status;
}
