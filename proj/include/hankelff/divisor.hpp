#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "hankelff/fpoly.hpp"

namespace hankelff {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// d(B) for every monic B of degree n over a prime field, indexed by
/// monic_index; computed by convolving monic factor pairs, (n+1)p^n products.
std::vector<uint64_t> divisor_table(const Field& f, int n, uint64_t budget);

/// sum of d over the interval of radius-h tails around a monic center of
/// degree n; the interval has exactly p^h members.
uint64_t interval_sum(const std::vector<uint64_t>& table, const Field& f, int n,
                      const Poly& center, int h);

/// interval sums per translation class; class c covers the monic polynomials
/// with index in [c*p^h, (c+1)*p^h).
std::vector<uint64_t> interval_class_sums(const std::vector<uint64_t>& table, uint64_t p,
                                          int n, int h);

/// (p-1) p^{h-1} (n-2h-1)(n-2h)(n-2h+1)/6 below the cutoff h = floor(n/2),
/// zero from the cutoff on; exact rational (h = 0 carries a 1/p factor).
BigRat variance_formula(uint64_t p, int n, int h);

/// mean-square of the interval sums around their mean p^h(n+1), by full
/// enumeration; one sum per translation class, weighted by the class size.
BigRat variance_bruteforce(const Field& f, int n, int h, uint64_t budget, int jobs = 1);

struct VarianceReport {
  uint64_t p = 0;
  int n = 0, h = 0;
  BigRat brute, formula;
  bool match = false;
  BigRat mean_observed, mean_expected;
  bool mean_ok = false;
  bool informational = false;  // n < 4: outside the theorem's stated range
};

VarianceReport variance_report(const Field& f, int n, int h, uint64_t budget, int jobs = 1);
VarianceReport variance_report_from_table(const std::vector<uint64_t>& table, const Field& f,
                                          int n, int h, int jobs = 1);

/// sum_{A} (interval sum)^2 against its closed form
/// (p-1) p^{h+n-1} sum_{r=h+1}^{n1-1} (n+1-2r)^2 + p^{2h+n} (n+1)^2.
struct SummationIdentity {
  BigInt lhs, rhs;
  bool match = false;
};

SummationIdentity summation_identity_check(const Field& f, int n, int h, uint64_t budget);

}  // namespace hankelff
