#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hankelff/hankel.hpp"

namespace hankelff {

/// Exact element of Z[zeta_p], p prime, in the power basis
/// {1, zeta, ..., zeta^{p-2}}; zeta^{p-1} rewrites to -(1 + ... + zeta^{p-2}),
/// so an element is zero iff every coordinate is zero.
struct CycInt {
  uint32_t p = 2;
  std::vector<long long> c;  // length p - 1

  static CycInt zero(uint32_t p);
  static CycInt from_integer(uint32_t p, long long v);
  static CycInt root_power(uint32_t p, long long k);  // zeta^{k mod p}

  bool is_zero() const;
  std::optional<long long> as_integer() const;  // engaged iff rational
  CycInt galois(uint32_t k) const;              // zeta -> zeta^k, gcd(k, p) = 1

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator*(const CycInt& o) const;
  bool operator==(const CycInt& o) const { return p == o.p && c == o.c; }
};

/// sum over monic-coefficient vectors e, f of zeta^{sign * e^T H_{l+1,m+1} f}
/// for one split l + m = n of the sequence degree.
CycInt inner_hankel_sum_shape(const SymbolSeq& s, int l, int m, int sign, uint64_t budget);

/// the full sum over all splits l + m = n.
CycInt inner_hankel_sum(const SymbolSeq& s, int sign, uint64_t budget);

/// Exponential-sum evaluation for a fixed length-n prefix over all one-symbol
/// completions. Non-quasi-regular prefixes (and the full-rank odd-length
/// case) must cancel every per-shape sum exactly; quasi-regular prefixes of
/// rank r must sum the two-sided products to p^{2n-2r+1} (n+1-2r)^2.
struct ExpsumCheck {
  int claim = 0;  // 1 = exact cancellation, 2 = product value
  bool ok = false;
  int checked_shapes = 0;
  long long predicted = 0;  // claim 2
  CycInt computed;          // claim 2
  std::string detail;
};

ExpsumCheck expsum_lemma_check(const SymbolSeq& prefix, uint64_t budget);

}  // namespace hankelff
