#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hankelff/ffield.hpp"

namespace hankelff {

/// degree of the zero polynomial; ordered below every attainable degree
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Polynomial over F_q, coefficient i belongs to T^i, trailing zeros trimmed.
/// The coefficient order mirrors the vector identification used throughout:
/// vector entry i <-> coefficient of T^i.
struct Poly {
  Field field;
  std::vector<uint32_t> c;

  static Poly zero(const Field& f) { return Poly{f, {}}; }
  static Poly one(const Field& f) { return Poly{f, {1}}; }
  static Poly from_coeffs(const Field& f, std::vector<uint32_t> coeffs);

  int degree() const { return c.empty() ? kNegInfDegree : int(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  uint32_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
  uint32_t lead() const { return c.empty() ? 0 : c.back(); }

  bool operator==(const Poly& o) const { return field.same(o.field) && c == o.c; }
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, uint32_t s);
Poly poly_shift(const Poly& a, int k);  // multiply by T^k
Poly poly_monic(const Poly& a);         // scale so the leading coefficient is 1

/// a = q*b + r with degree(r) < degree(b)
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
bool poly_divides(const Poly& d, const Poly& a);

/// Full remainder sequence of the Euclidean algorithm.
/// polys = [a, b, r_1, ..., gcd]; quotients[i] is the quotient of the step
/// producing polys[i+2]; degrees mirrors polys. Intermediate entries are the
/// exact remainders, so polys[i] = quotients[i]*polys[i+1] + polys[i+2] holds
/// verbatim except at the final entry, which is unit-normalized to monic
/// (coprime inputs always end in the constant 1).
struct EuclidChain {
  std::vector<Poly> polys;
  std::vector<Poly> quotients;
  std::vector<int> degrees;

  const Poly& gcd() const { return polys.back(); }
  bool coprime() const { return gcd().degree() == 0; }
};

EuclidChain euclid_chain(const Poly& a, const Poly& b);
Poly poly_gcd_monic(const Poly& a, const Poly& b);

/// All q^deg monic polynomials of the given degree, ordered by ascending
/// coefficient index sum_i code(c_i) * q^i.
std::vector<Poly> monic_enumerate(const Field& f, int deg);
uint64_t monic_count(const Field& f, int deg);
Poly monic_from_index(const Field& f, int deg, uint64_t idx);
uint64_t monic_index(const Poly& a);

std::string poly_to_string(const Poly& a);  // for diagnostics

}  // namespace hankelff
