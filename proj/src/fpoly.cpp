#include "hankelff/fpoly.hpp"

#include <sstream>

namespace hankelff {

namespace {

void trim(std::vector<uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same(const Field& a, const Field& b) {
  if (!a.same(b)) fail(Errc::field_mismatch, "polynomials belong to different fields");
}

}  // namespace

Poly Poly::from_coeffs(const Field& f, std::vector<uint32_t> coeffs) {
  for (uint32_t v : coeffs)
    if (v >= f.q()) fail(Errc::invalid_argument, "coefficient code out of range");
  trim(coeffs);
  return Poly{f, std::move(coeffs)};
}

Poly poly_add(const Poly& a, const Poly& b) {
  require_same(a.field, b.field);
  std::vector<uint32_t> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.field.add(a.coeff(i), b.coeff(i));
  trim(c);
  return Poly{a.field, std::move(c)};
}

Poly poly_sub(const Poly& a, const Poly& b) {
  require_same(a.field, b.field);
  std::vector<uint32_t> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.field.sub(a.coeff(i), b.coeff(i));
  trim(c);
  return Poly{a.field, std::move(c)};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  require_same(a.field, b.field);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field);
  std::vector<uint32_t> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = a.field.add(c[i + j], a.field.mul(a.c[i], b.c[j]));
  }
  return Poly{a.field, std::move(c)};
}

Poly poly_scale(const Poly& a, uint32_t s) {
  if (s == 0) return Poly::zero(a.field);
  std::vector<uint32_t> c(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.field.mul(a.c[i], s);
  return Poly{a.field, std::move(c)};
}

Poly poly_shift(const Poly& a, int k) {
  if (a.is_zero() || k == 0) return k >= 0 ? a : a;
  if (k < 0) fail(Errc::invalid_argument, "negative shift");
  std::vector<uint32_t> c(a.c.size() + size_t(k), 0);
  for (size_t i = 0; i < a.c.size(); ++i) c[i + size_t(k)] = a.c[i];
  return Poly{a.field, std::move(c)};
}

Poly poly_monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return poly_scale(a, a.field.inv(a.lead()));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  require_same(a.field, b.field);
  if (b.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly::zero(a.field), a};
  const Field& f = a.field;
  std::vector<uint32_t> r = a.c;
  std::vector<uint32_t> q(a.c.size() - b.c.size() + 1, 0);
  uint32_t lead_inv = f.inv(b.lead());
  for (size_t k = q.size(); k-- > 0;) {
    uint32_t c = f.mul(r[k + b.c.size() - 1], lead_inv);
    if (c == 0) continue;
    q[k] = c;
    for (size_t i = 0; i < b.c.size(); ++i)
      r[k + i] = f.sub(r[k + i], f.mul(c, b.c[i]));
  }
  trim(r);
  trim(q);
  return {Poly{f, std::move(q)}, Poly{f, std::move(r)}};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

bool poly_divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return poly_mod(a, d).is_zero();
}

EuclidChain euclid_chain(const Poly& a, const Poly& b) {
  require_same(a.field, b.field);
  if (a.is_zero()) fail(Errc::invalid_argument, "chain head must be nonzero");
  if (!b.is_zero() && b.degree() >= a.degree())
    fail(Errc::invalid_argument, "chain requires degree(b) < degree(a)");
  EuclidChain ch;
  ch.polys.push_back(a);
  if (!b.is_zero()) {
    ch.polys.push_back(b);
    while (true) {
      const Poly& prev = ch.polys[ch.polys.size() - 2];
      const Poly& cur = ch.polys.back();
      auto [q, r] = poly_divmod(prev, cur);
      ch.quotients.push_back(q);
      if (r.is_zero()) break;
      ch.polys.push_back(r);
    }
  }
  ch.polys.back() = poly_monic(ch.polys.back());
  for (const Poly& p : ch.polys) ch.degrees.push_back(p.degree());
  return ch;
}

Poly poly_gcd_monic(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly::zero(a.field);
  if (a.is_zero()) return poly_monic(b);
  if (b.is_zero()) return poly_monic(a);
  if (a.degree() >= b.degree()) {
    if (b.degree() < a.degree()) return euclid_chain(a, b).gcd();
    return euclid_chain(a, poly_mod(b, a)).gcd();
  }
  return poly_gcd_monic(b, a);
}

uint64_t monic_count(const Field& f, int deg) {
  if (deg < 0) fail(Errc::invalid_argument, "degree must be >= 0");
  uint64_t n = 1;
  for (int i = 0; i < deg; ++i) n *= f.q();
  return n;
}

Poly monic_from_index(const Field& f, int deg, uint64_t idx) {
  std::vector<uint32_t> c(size_t(deg) + 1, 0);
  c[size_t(deg)] = 1;
  for (int i = 0; i < deg; ++i) {
    c[size_t(i)] = uint32_t(idx % f.q());
    idx /= f.q();
  }
  return Poly{f, std::move(c)};
}

uint64_t monic_index(const Poly& a) {
  if (!a.is_monic()) fail(Errc::invalid_argument, "index of a non-monic polynomial");
  uint64_t idx = 0;
  for (size_t i = a.c.size() - 1; i-- > 0;) idx = idx * a.field.q() + a.c[i];
  return idx;
}

std::vector<Poly> monic_enumerate(const Field& f, int deg) {
  uint64_t n = monic_count(f, deg);
  std::vector<Poly> out;
  out.reserve(n);
  for (uint64_t i = 0; i < n; ++i) out.push_back(monic_from_index(f, deg, i));
  return out;
}

std::string poly_to_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || a.c[i] != 1) os << a.c[i];
    if (i >= 1) {
      if (a.c[i] != 1) os << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace hankelff
