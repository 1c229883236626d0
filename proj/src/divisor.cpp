#include "hankelff/divisor.hpp"

#include <thread>

namespace hankelff {

namespace {

void require_prime_field(const Field& f) {
  if (f.e() != 1)
    fail(Errc::extension_field_unsupported, "divisor statistics are defined over prime fields");
}

uint64_t upow(uint64_t b, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

BigInt bigpow(uint64_t b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::vector<uint64_t> divisor_table(const Field& f, int n, uint64_t budget) {
  require_prime_field(f);
  if (n < 0) fail(Errc::invalid_argument, "degree must be >= 0");
  const uint64_t p = f.p();
  uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= p;
    if (size > budget) fail(Errc::budget_exceeded, "p^n exceeds the enumeration budget");
  }
  std::vector<uint64_t> table(size, 0);
  std::vector<std::vector<Poly>> by_degree(size_t(n) + 1);
  for (int d = 0; d <= n; ++d) by_degree[size_t(d)] = monic_enumerate(f, d);
  for (int l = 0; l <= n; ++l)
    for (const Poly& e : by_degree[size_t(l)])
      for (const Poly& g : by_degree[size_t(n - l)])
        ++table[monic_index(poly_mul(e, g))];
  return table;
}

uint64_t interval_sum(const std::vector<uint64_t>& table, const Field& f, int n,
                      const Poly& center, int h) {
  require_prime_field(f);
  if (center.degree() != n || !center.is_monic())
    fail(Errc::degree_mismatch, "interval center must be monic of the table degree");
  if (h < 0 || h > n) fail(Errc::invalid_argument, "interval parameter must satisfy 0 <= h <= n");
  uint64_t width = upow(f.p(), h);
  uint64_t base = (monic_index(center) / width) * width;
  uint64_t sum = 0;
  for (uint64_t i = 0; i < width; ++i) sum += table[base + i];
  return sum;
}

std::vector<uint64_t> interval_class_sums(const std::vector<uint64_t>& table, uint64_t p,
                                          int n, int h) {
  if (h < 0 || h > n) fail(Errc::invalid_argument, "interval parameter must satisfy 0 <= h <= n");
  uint64_t width = upow(p, h);
  uint64_t classes = upow(p, n - h);
  std::vector<uint64_t> sums(classes, 0);
  for (uint64_t c = 0; c < classes; ++c) {
    uint64_t s = 0;
    for (uint64_t i = 0; i < width; ++i) s += table[c * width + i];
    sums[c] = s;
  }
  return sums;
}

BigRat variance_formula(uint64_t p, int n, int h) {
  if (n < 0 || h < 0 || h > n) fail(Errc::invalid_argument, "variance requires 0 <= h <= n");
  if (h >= n / 2) return BigRat(0);
  BigInt num = BigInt(p - 1) * (n - 2 * h - 1) * (n - 2 * h) * (n - 2 * h + 1);
  BigInt den = 6;
  if (h >= 1)
    num *= bigpow(p, h - 1);
  else
    den *= p;
  return BigRat(num, den);
}

namespace {

BigInt centered_square_sum(const std::vector<uint64_t>& sums, uint64_t lo, uint64_t hi,
                           uint64_t mean) {
  BigInt acc = 0;
  for (uint64_t c = lo; c < hi; ++c) {
    BigInt d = BigInt(sums[c]) - BigInt(mean);
    acc += d * d;
  }
  return acc;
}

BigInt parallel_centered_sum(const std::vector<uint64_t>& sums, uint64_t mean, int jobs) {
  uint64_t count = sums.size();
  if (jobs <= 1 || count < 2 * uint64_t(jobs))
    return centered_square_sum(sums, 0, count, mean);
  std::vector<BigInt> parts(static_cast<size_t>(jobs));
  std::vector<std::thread> threads;
  uint64_t chunk = count / uint64_t(jobs), rem = count % uint64_t(jobs), lo = 0;
  for (int j = 0; j < jobs; ++j) {
    uint64_t hi = lo + chunk + (uint64_t(j) < rem ? 1 : 0);
    threads.emplace_back(
        [&sums, &parts, j, lo, hi, mean] { parts[size_t(j)] = centered_square_sum(sums, lo, hi, mean); });
    lo = hi;
  }
  for (auto& t : threads) t.join();
  BigInt acc = 0;
  for (auto& part : parts) acc += part;
  return acc;
}

}  // namespace

BigRat variance_bruteforce(const Field& f, int n, int h, uint64_t budget, int jobs) {
  auto table = divisor_table(f, n, budget);
  auto sums = interval_class_sums(table, f.p(), n, h);
  uint64_t mean = upow(f.p(), h) * uint64_t(n + 1);
  BigInt acc = parallel_centered_sum(sums, mean, jobs);
  return BigRat(acc, bigpow(f.p(), n - h));
}

VarianceReport variance_report(const Field& f, int n, int h, uint64_t budget, int jobs) {
  return variance_report_from_table(divisor_table(f, n, budget), f, n, h, jobs);
}

VarianceReport variance_report_from_table(const std::vector<uint64_t>& table, const Field& f,
                                          int n, int h, int jobs) {
  VarianceReport rep;
  rep.p = f.p();
  rep.n = n;
  rep.h = h;
  rep.informational = (n < 4);
  auto sums = interval_class_sums(table, f.p(), n, h);
  uint64_t mean = upow(f.p(), h) * uint64_t(n + 1);
  BigInt acc = parallel_centered_sum(sums, mean, jobs);
  rep.brute = BigRat(acc, bigpow(f.p(), n - h));
  rep.formula = variance_formula(f.p(), n, h);
  rep.match = (rep.brute == rep.formula);
  BigInt total = 0;
  for (uint64_t s : sums) total += s;
  rep.mean_observed = BigRat(total * bigpow(f.p(), h), bigpow(f.p(), n));
  rep.mean_expected = BigRat(BigInt(mean));
  rep.mean_ok = (rep.mean_observed == rep.mean_expected);
  return rep;
}

SummationIdentity summation_identity_check(const Field& f, int n, int h, uint64_t budget) {
  auto table = divisor_table(f, n, budget);
  auto sums = interval_class_sums(table, f.p(), n, h);
  SummationIdentity out;
  BigInt lhs = 0;
  for (uint64_t s : sums) lhs += BigInt(s) * BigInt(s);
  lhs *= bigpow(f.p(), h);
  out.lhs = lhs;
  const int n1 = (n + 2) / 2;
  BigInt mid = 0;
  for (int r = h + 1; r <= n1 - 1; ++r) mid += BigInt(n + 1 - 2 * r) * (n + 1 - 2 * r);
  out.rhs = BigInt(f.p() - 1) * bigpow(f.p(), h + n - 1) * mid +
            bigpow(f.p(), 2 * h + n) * BigInt(n + 1) * BigInt(n + 1);
  out.match = (out.lhs == out.rhs);
  return out;
}

}  // namespace hankelff
