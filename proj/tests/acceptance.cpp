// Acceptance suite: every verification the library makes about its closed
// forms, run at the full documented ranges, one pass/fail line per criterion.
// Exact equality throughout; there are no tolerances to tune.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hankelff/census.hpp"
#include "hankelff/cyclosum.hpp"
#include "hankelff/divisor.hpp"
#include "hankelff/hankel.hpp"
#include "hankelff/runner.hpp"

using namespace hankelff;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, name, detail.c_str());
  if (!ok) ++g_failures;
}

std::vector<uint32_t> decode(uint64_t idx, uint64_t q, int len) {
  std::vector<uint32_t> a(static_cast<size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    a[size_t(i)] = uint32_t(idx % q);
    idx /= q;
  }
  return a;
}

template <class Fn>
void for_all_seqs(const Field& f, int n, Fn fn) {
  uint64_t total = 1;
  for (int i = 0; i <= n; ++i) total *= f.q();
  for (uint64_t idx = 0; idx < total; ++idx) fn(SymbolSeq{f, decode(idx, f.q(), n + 1)});
}

// 1. interval variance: brute force equals the closed form exactly
void criterion_variance() {
  long long checked = 0, mismatches = 0;
  auto sweep = [&](uint32_t p, int nmax) {
    Field f = Field::make(p);
    for (int n = 4; n <= nmax; ++n) {
      auto table = divisor_table(f, n, 100'000'000);
      for (int h = 0; h <= n; ++h) {
        VarianceReport rep = variance_report_from_table(table, f, n, h);
        ++checked;
        if (!rep.match || !rep.mean_ok) ++mismatches;
      }
    }
  };
  sweep(2, 8);
  sweep(3, 8);
  sweep(5, 7);
  report(1, "divisor variance, p in {2,3} n<=8 and p=5 n<=7, all h", mismatches == 0,
         std::to_string(checked) + " triples, " + std::to_string(mismatches) + " mismatches");
}

// 2. censuses against every closed form, including the rectangular counts
void criterion_census() {
  long long records = 0, mismatches = 0;
  auto sweep = [&](const Field& f, int nmax) {
    for (int n = 0; n <= nmax; ++n)
      for (int h = 0; h <= n + 1; ++h) {
        CensusReport rep = census_reconcile({f, n, h, 100'000'000, 2, true});
        if (!rep.total_ok) ++mismatches;
        for (const auto& r : rep.records) {
          ++records;
          if (!r.match) ++mismatches;
        }
        for (const auto& r : rep.rank_records) {
          ++records;
          if (!r.match) ++mismatches;
        }
        for (const auto& r : rep.shape_records) {
          ++records;
          if (!r.match) ++mismatches;
        }
      }
  };
  sweep(Field::make(2), 10);
  sweep(Field::make(3), 7);
  sweep(Field::make(2, 2), 6);
  sweep(Field::make(5), 6);
  report(2, "census counts for q in {2,3,4,5}, class/rank/shape forms", mismatches == 0,
         std::to_string(records) + " records, " + std::to_string(mismatches) + " mismatches");
}

// 3. kernel structure: predicted spans equal elimination at every shape
void criterion_kernel() {
  long long sequences = 0, mismatches = 0;
  for (uint32_t p : {2u, 3u}) {
    Field f = Field::make(p);
    for (int n = 0; n <= 7; ++n)
      for_all_seqs(f, n, [&](const SymbolSeq& s) {
        ++sequences;
        mismatches += kernel_structure_check(s).mismatches;
      });
  }
  for (const Field& f : {Field::make(2, 2), Field::make(5)}) {
    std::mt19937_64 rng(2024);
    for (int n = 2; n <= 9; ++n)
      for (int i = 0; i < 1000; ++i) {
        std::vector<uint32_t> a(size_t(n) + 1);
        for (auto& x : a) x = uint32_t(rng() % f.q());
        ++sequences;
        mismatches += kernel_structure_check(SymbolSeq{f, a}).mismatches;
      }
  }
  report(3, "kernel spans, q in {2,3} exhaustive n<=7 plus sampled q in {4,5} n<=9",
         mismatches == 0,
         std::to_string(sequences) + " sequences, " + std::to_string(mismatches) + " mismatches");
}

// 4. converse construction round-trips every coprime pair with deg a2 < deg a1
void criterion_converse() {
  long long pairs = 0, failures = 0;
  for (uint32_t p : {2u, 3u}) {
    Field f = Field::make(p);
    for (int d1 = 2; d1 <= 4; ++d1)
      for (const Poly& a1 : monic_enumerate(f, d1))
        for (int d2 = 0; d2 < d1; ++d2)
          for (const Poly& a2 : monic_enumerate(f, d2)) {
            if (poly_gcd_monic(a1, a2).degree() != 0) continue;
            Poly a2red = poly_monic(poly_mod(a2, a1));
            for (int n = 2 * d1 - 2; n <= 2 * d1 + 1; ++n) {
              ++pairs;
              ConverseResult res = seq_from_charpolys(a1, a2, n);
              bool ok = res.seqs.size() == f.q() - 1;
              for (const SymbolSeq& s : res.seqs) {
                RhoPiProfile prof = rho_pi_profile(s);
                CharPair back = char_polys(s);
                ok = ok && prof.rank == d1 && prof.rho == d1 && prof.pi == 0;
                ok = ok && back.a2 == a2red;
                // when both characteristic degrees equal d1 (n at the lower
                // bound), the first polynomial is itself only determined
                // modulo scalar multiples of the second
                if (n == 2 * d1 - 2)
                  ok = ok && second_charpoly_equivalent(back.a1, a1, a2red, 0);
                else
                  ok = ok && back.a1 == a1;
              }
              if (!ok) ++failures;
            }
          }
  }
  report(4, "converse round-trip, coprime pairs deg a1<=4 over F_2 and F_3", failures == 0,
         std::to_string(pairs) + " (pair, n) cases, " + std::to_string(failures) + " failures");
}

// 5. one-symbol extensions partition as claimed, pair updates at span level
void criterion_extension() {
  long long sequences = 0, failures = 0;
  for (uint32_t p : {2u, 3u}) {
    Field f = Field::make(p);
    for (int n = 0; n <= 6; ++n)
      for_all_seqs(f, n, [&](const SymbolSeq& s) {
        ++sequences;
        if (!extension_claims_check(s).ok) ++failures;
      });
  }
  report(5, "extension partition and pair-update claims, q in {2,3} n<=6", failures == 0,
         std::to_string(sequences) + " sequences, " + std::to_string(failures) + " failures");
}

// 6. exponential sums: exact cancellation and product values, plus the
//    closing summation identity
void criterion_expsum() {
  long long checks = 0, failures = 0;
  for (uint32_t p : {2u, 3u}) {
    Field f = Field::make(p);
    for (int n = 1; n <= 6; ++n) {
      uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= p;
      for (uint64_t idx = 0; idx < total; ++idx) {
        ExpsumCheck chk = expsum_lemma_check(SymbolSeq{f, decode(idx, p, n)}, 100'000'000);
        ++checks;
        if (!chk.ok) ++failures;
      }
    }
    for (int n = 4; n <= 6; ++n)
      for (int h = 0; h <= n; ++h) {
        ++checks;
        if (!summation_identity_check(f, n, h, 100'000'000).match) ++failures;
      }
  }
  report(6, "exponential-sum lemma (exhaustive prefixes, p in {2,3} n<=6) + closing identity",
         failures == 0,
         std::to_string(checks) + " checks, " + std::to_string(failures) + " failures");
}

// 7. Euclidean correspondence: every asserted chain level and the
//    leading-zeros law; the final chain step is ledgered, not asserted
void criterion_euclid() {
  long long applicable = 0, failures = 0, final_steps = 0, final_profile_mismatch = 0,
            final_span_match = 0;
  for (uint32_t p : {2u, 3u}) {
    Field f = Field::make(p);
    for (int n = 0; n <= 7; ++n)
      for_all_seqs(f, n, [&](const SymbolSeq& s) {
        EuclidReport rep = euclid_correspondence_check(s);
        if (!rep.applicable) {
          if (rep.truncation_checked && !rep.truncation_match) ++failures;
          return;
        }
        ++applicable;
        if (!rep.all_asserted_match()) ++failures;
        for (const auto& lv : rep.levels)
          if (lv.final_level) {
            ++final_steps;
            if (!lv.profile_match) ++final_profile_mismatch;
            if (lv.kernel_span_match) ++final_span_match;
          }
      });
  }
  std::string detail = std::to_string(applicable) + " quasi-regular sequences, " +
                       std::to_string(failures) + " failures; final-step ledger: " +
                       std::to_string(final_profile_mismatch) + "/" +
                       std::to_string(final_steps) + " label mismatches, " +
                       std::to_string(final_span_match) + " kernel matches";
  report(7, "Euclid correspondence levels and leading zeros, q in {2,3} n<=7", failures == 0,
         detail);
}

// 8. rerunning any suite with a different worker count is byte-identical
std::string run_cli(const std::string& cli, const std::string& args, int* exit_code) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  *exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

void criterion_determinism(const std::string& cli) {
  bool ok = true;
  std::string detail;
  const char* cases[] = {
      "census --p 3 --e 1 --n 0..5",
      "variance --p 2 --n 4..6",
      "kernel --p 2 --e 2 --n 3..5 --sample 120 --seed 9",
      "euclid --p 3 --e 1 --n 2..5",
      "expsum --p 2 --n 2..4 --format csv",
  };
  for (const char* c : cases) {
    int rc1 = 0, rc2 = 0;
    std::string a = run_cli(cli, std::string(c) + " --jobs 1", &rc1);
    std::string b = run_cli(cli, std::string(c) + " --jobs 4", &rc2);
    if (a.empty() || a != b || rc1 != rc2 || rc1 != 0) {
      ok = false;
      detail = std::string("first divergence: ") + c;
      break;
    }
  }
  if (detail.empty()) detail = "five suites, jobs 1 vs 4, byte-compared";
  report(8, "reports byte-identical across worker counts", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  criterion_variance();
  criterion_census();
  criterion_kernel();
  criterion_converse();
  criterion_extension();
  criterion_expsum();
  criterion_euclid();
  if (argc > 1)
    criterion_determinism(argv[1]);
  else
    report(8, "reports byte-identical across worker counts", false, "CLI path not supplied");
  std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
