#include "hankelff/cyclosum.hpp"

#include <sstream>

namespace hankelff {

namespace {

bool small_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_same_p(const CycInt& a, const CycInt& b) {
  if (a.p != b.p) fail(Errc::field_mismatch, "cyclotomic integers over different primes");
}

uint64_t upow(uint64_t b, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

CycInt CycInt::zero(uint32_t p) {
  if (!small_prime(p)) fail(Errc::not_prime, "cyclotomic order must be prime");
  CycInt z;
  z.p = p;
  z.c.assign(p - 1, 0);
  return z;
}

CycInt CycInt::from_integer(uint32_t p, long long v) {
  CycInt z = zero(p);
  z.c[0] = v;
  return z;
}

CycInt CycInt::root_power(uint32_t p, long long k) {
  CycInt z = zero(p);
  long long r = k % p;
  if (r < 0) r += p;
  if (r < p - 1) {
    z.c[size_t(r)] = 1;
  } else {
    for (auto& ci : z.c) ci = -1;
  }
  return z;
}

bool CycInt::is_zero() const {
  for (long long v : c)
    if (v != 0) return false;
  return true;
}

std::optional<long long> CycInt::as_integer() const {
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  return c[0];
}

CycInt CycInt::galois(uint32_t k) const {
  if (k % p == 0) fail(Errc::invalid_argument, "automorphism exponent must be coprime to p");
  // work over exponents 0..p-1, then reduce the top power
  std::vector<long long> ext(p, 0);
  for (size_t i = 0; i < c.size(); ++i) ext[size_t(uint64_t(i) * k % p)] += c[i];
  CycInt out = zero(p);
  for (size_t i = 0; i + 1 < p; ++i) out.c[i] = ext[i] - ext[p - 1];
  return out;
}

CycInt CycInt::operator+(const CycInt& o) const {
  require_same_p(*this, o);
  CycInt out = *this;
  for (size_t i = 0; i < c.size(); ++i) out.c[i] += o.c[i];
  return out;
}

CycInt CycInt::operator-(const CycInt& o) const {
  require_same_p(*this, o);
  CycInt out = *this;
  for (size_t i = 0; i < c.size(); ++i) out.c[i] -= o.c[i];
  return out;
}

CycInt CycInt::operator*(const CycInt& o) const {
  require_same_p(*this, o);
  std::vector<long long> prod(2 * p - 3 + 1, 0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (size_t j = 0; j < o.c.size(); ++j) prod[i + j] += c[i] * o.c[j];
  }
  // fold exponents >= p via zeta^p = 1, then remove zeta^{p-1}
  std::vector<long long> ext(p, 0);
  for (size_t k = 0; k < prod.size(); ++k) ext[k % p] += prod[k];
  CycInt out = zero(p);
  for (size_t i = 0; i + 1 < p; ++i) out.c[i] = ext[i] - ext[p - 1];
  return out;
}

CycInt inner_hankel_sum_shape(const SymbolSeq& s, int l, int m, int sign, uint64_t budget) {
  const Field& f = s.field;
  if (f.e() != 1) fail(Errc::extension_field_unsupported, "exponential sums need a prime field");
  if (sign != 1 && sign != -1) fail(Errc::invalid_argument, "sign must be +1 or -1");
  const int n = s.n();
  if (l < 0 || m < 0 || l + m != n) fail(Errc::shape_mismatch, "splits must satisfy l + m = n");
  const uint32_t p = f.p();
  uint64_t work = upow(p, m) * uint64_t(l + 1) * uint64_t(m + 1);
  if (work > budget) fail(Errc::budget_exceeded, "exponential sum exceeds the budget");

  // e^T H f with e monic reduces to p^l * zeta^{sign * w_l} whenever the first
  // l entries of w = H_{l+1,m+1} f vanish, and to zero otherwise
  std::vector<long long> count(p, 0);
  std::vector<uint32_t> fvec(size_t(m) + 1, 0);
  fvec[size_t(m)] = 1;
  uint64_t total = upow(p, m);
  const long long weight = (long long)upow(p, l);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t r = idx;
    for (int i = 0; i < m; ++i) {
      fvec[size_t(i)] = uint32_t(r % p);
      r /= p;
    }
    bool head_zero = true;
    for (int row = 0; row < l && head_zero; ++row) {
      uint32_t acc = 0;
      for (int col = 0; col <= m; ++col) acc = f.add(acc, f.mul(s.a[size_t(row + col)], fvec[size_t(col)]));
      head_zero = (acc == 0);
    }
    if (!head_zero) continue;
    uint32_t acc = 0;
    for (int col = 0; col <= m; ++col) acc = f.add(acc, f.mul(s.a[size_t(l + col)], fvec[size_t(col)]));
    long long expo = sign > 0 ? acc : (p - acc) % p;
    count[size_t(expo)] += weight;
  }
  CycInt out = CycInt::zero(p);
  for (uint32_t k = 0; k + 1 < p; ++k) out.c[k] = count[k] - count[p - 1];
  return out;
}

CycInt inner_hankel_sum(const SymbolSeq& s, int sign, uint64_t budget) {
  const int n = s.n();
  CycInt acc = CycInt::zero(s.field.p());
  for (int l = 0; l <= n; ++l) acc = acc + inner_hankel_sum_shape(s, l, n - l, sign, budget);
  return acc;
}

ExpsumCheck expsum_lemma_check(const SymbolSeq& prefix, uint64_t budget) {
  const Field& f = prefix.field;
  if (f.e() != 1) fail(Errc::extension_field_unsupported, "exponential sums need a prime field");
  const uint32_t p = f.p();
  const int n = prefix.n() + 1;  // degree parameter of the completed sequences
  const int n1 = (n + 2) / 2;
  RhoPiProfile prof = rho_pi_profile(prefix);

  ExpsumCheck chk;
  // the full-rank odd-length case is the quasi-regular class of rank n1;
  // a labeling with rho = 0 at that rank is empty and never arises here
  const bool full_rank_odd = (n % 2 == 1) && prof.quasi_regular && prof.rank == n1;
  if (prof.pi >= 1 || full_rank_odd) {
    chk.claim = 1;
    chk.ok = true;
    if (full_rank_odd) chk.detail = "full-rank odd-length prefix";
    for (uint32_t next = 0; next < p && chk.ok; ++next) {
      SymbolSeq s = prefix.extended(next);
      for (int l = 0; l <= n && chk.ok; ++l) {
        CycInt v = inner_hankel_sum_shape(s, l, n - l, -1, budget);
        ++chk.checked_shapes;
        if (!v.is_zero()) {
          chk.ok = false;
          std::ostringstream os;
          os << "nonzero inner sum at split l=" << l << ", next=" << next;
          chk.detail = os.str();
        }
      }
    }
    return chk;
  }

  chk.claim = 2;
  const int r = prof.rank;
  CycInt acc = CycInt::zero(p);
  for (uint32_t next = 0; next < p; ++next) {
    SymbolSeq s = prefix.extended(next);
    CycInt minus = inner_hankel_sum(s, -1, budget);
    CycInt plus = inner_hankel_sum(s, +1, budget);
    acc = acc + minus * plus;
    chk.checked_shapes += 2 * (n + 1);
  }
  chk.computed = acc;
  chk.predicted = (long long)upow(p, 2 * n - 2 * r + 1) * (long long)(n + 1 - 2 * r) *
                  (long long)(n + 1 - 2 * r);
  chk.ok = (acc == CycInt::from_integer(p, chk.predicted));
  if (!chk.ok) chk.detail = "two-sided product sum disagrees with the closed form";
  return chk;
}

}  // namespace hankelff
