#pragma once

#include <optional>
#include <string>

#include "hankelff/report.hpp"

namespace hankelff {

struct Range {
  int lo = 0, hi = 0;  // inclusive
};

/// Verification-harness configuration; mirrors the CLI flags one to one.
struct RunConfig {
  std::string command;  // variance | census | kernel | euclid | expsum | all
  uint32_t p = 2;
  uint32_t e = 1;
  std::vector<uint32_t> modulus;
  std::optional<Range> n;
  std::optional<Range> h;
  std::optional<int> l, m, r, rho, pi;
  std::string format = "json";  // json | csv
  std::string cache_dir;
  int jobs = 1;
  uint64_t budget = 10'000'000;
  uint64_t seed = 0;
  uint64_t sample = 0;  // 0 = exhaustive sweeps

  static RunConfig from_json(const std::string& text);
  Json to_json() const;
};

struct RunResult {
  std::string document;  // rendered in the configured format, newline-terminated
  int exit_code = 0;     // 0 clean, 1 mismatch, 2 budget exceeded
};

RunResult run(const RunConfig& cfg);

}  // namespace hankelff
