#include "hankelff/ffield.hpp"

#include <algorithm>
#include <sstream>

namespace hankelff {

namespace {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, low to high, trailing zeros
// trimmed. Local helpers for modulus validation only.
using PVec = std::vector<uint32_t>;

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmod(PVec a, const PVec& m, uint32_t p) {
  // m monic
  while (a.size() >= m.size()) {
    uint32_t c = a.back();
    size_t shift = a.size() - m.size();
    if (c != 0) {
      for (size_t i = 0; i < m.size(); ++i) {
        uint64_t v = a[shift + i] + uint64_t(p) * p - uint64_t(c) * m[i] % p;
        a[shift + i] = uint32_t(v % p);
      }
    }
    a.pop_back();
    ptrim(a);
    if (a.size() < m.size()) break;
  }
  ptrim(a);
  return a;
}

bool modulus_irreducible(const PVec& m, uint32_t p) {
  // exhaustive factor search: adequate at the supported field sizes
  size_t e = m.size() - 1;
  for (size_t d = 1; 2 * d <= e; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      PVec cand(d + 1, 0);
      cand[d] = 1;
      uint64_t t = idx;
      for (size_t i = 0; i < d; ++i) {
        cand[i] = uint32_t(t % p);
        t /= p;
      }
      if (pmod(m, cand, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

struct Field::Impl {
  uint32_t p = 0;
  uint32_t e = 1;
  uint64_t q = 0;
  std::vector<uint32_t> modulus;  // length e+1 when e > 1, else empty

  // tables are built for every supported field size; mul/add are q*q,
  // indexed a*q+b
  std::vector<uint32_t> add_t, mul_t, neg_t, inv_t;

  std::vector<uint32_t> decode(uint32_t code) const {
    std::vector<uint32_t> r(e);
    for (uint32_t i = 0; i < e; ++i) {
      r[i] = code % p;
      code /= p;
    }
    return r;
  }

  uint32_t encode(const std::vector<uint32_t>& r) const {
    uint32_t c = 0;
    for (uint32_t i = e; i-- > 0;) c = c * p + r[i];
    return c;
  }

  uint32_t raw_add(uint32_t a, uint32_t b) const {
    auto ra = decode(a), rb = decode(b);
    for (uint32_t i = 0; i < e; ++i) ra[i] = (ra[i] + rb[i]) % p;
    return encode(ra);
  }

  uint32_t raw_mul(uint32_t a, uint32_t b) const {
    auto ra = decode(a), rb = decode(b);
    std::vector<uint32_t> prod(2 * e - 1, 0);
    for (uint32_t i = 0; i < e; ++i)
      for (uint32_t j = 0; j < e; ++j)
        prod[i + j] = uint32_t((prod[i + j] + uint64_t(ra[i]) * rb[j]) % p);
    if (e > 1) {
      for (size_t k = prod.size(); k-- > e;) {
        uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (uint32_t i = 0; i < e; ++i) {
          uint64_t v = prod[k - e + i] + uint64_t(p) * p - uint64_t(c) * modulus[i] % p;
          prod[k - e + i] = uint32_t(v % p);
        }
      }
    }
    prod.resize(e);
    return encode(prod);
  }

  void build_tables() {
    add_t.resize(q * q);
    mul_t.resize(q * q);
    neg_t.resize(q);
    inv_t.assign(q, 0);
    for (uint64_t a = 0; a < q; ++a)
      for (uint64_t b = 0; b < q; ++b) {
        add_t[a * q + b] = raw_add(uint32_t(a), uint32_t(b));
        uint32_t m = raw_mul(uint32_t(a), uint32_t(b));
        mul_t[a * q + b] = m;
        if (m == 1) inv_t[a] = uint32_t(b);
      }
    for (uint64_t a = 0; a < q; ++a)
      for (uint64_t b = 0; b < q; ++b)
        if (add_t[a * q + b] == 0) neg_t[a] = uint32_t(b);
  }
};

Field Field::make(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus) {
  if (p < 2) fail(Errc::not_prime, "characteristic must be at least 2");
  if (!is_prime(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  if (e < 1) fail(Errc::invalid_argument, "extension degree must be >= 1");

  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (q > (uint64_t(1) << 20) / p)
      fail(Errc::bound_violation, "field order p^e too large for exact table arithmetic");
    q *= p;
  }
  if (q > 4096) fail(Errc::bound_violation, "field order p^e too large for exact table arithmetic");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = q;

  if (e == 1) {
    if (!modulus.empty()) fail(Errc::degree_mismatch, "prime field takes no modulus");
  } else if (!modulus.empty()) {
    PVec m = modulus;
    ptrim(m);
    if (m.size() != size_t(e) + 1)
      fail(Errc::degree_mismatch, "modulus degree must equal the extension degree");
    for (uint32_t c : m)
      if (c >= p) fail(Errc::invalid_argument, "modulus coefficient out of range");
    if (m.back() != 1) fail(Errc::not_irreducible, "modulus must be monic");
    if (!modulus_irreducible(m, p)) fail(Errc::not_irreducible, "modulus is reducible over F_p");
    impl->modulus = m;
  } else {
    // smallest monic irreducible of degree e, by ascending coefficient code
    uint64_t count = 1;
    for (uint32_t i = 0; i < e; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      PVec cand(e + 1, 0);
      cand[e] = 1;
      uint64_t t = idx;
      for (uint32_t i = 0; i < e; ++i) {
        cand[i] = uint32_t(t % p);
        t /= p;
      }
      if (modulus_irreducible(cand, p)) {
        impl->modulus = cand;
        break;
      }
    }
    if (impl->modulus.empty()) fail(Errc::internal, "no irreducible modulus found");
  }

  impl->build_tables();
  return Field(std::move(impl));
}

uint32_t Field::p() const { return impl_->p; }
uint32_t Field::e() const { return impl_->e; }
uint64_t Field::q() const { return impl_->q; }
const std::vector<uint32_t>& Field::modulus() const { return impl_->modulus; }

uint32_t Field::add(uint32_t a, uint32_t b) const { return impl_->add_t[uint64_t(a) * impl_->q + b]; }
uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
uint32_t Field::mul(uint32_t a, uint32_t b) const { return impl_->mul_t[uint64_t(a) * impl_->q + b]; }
uint32_t Field::neg(uint32_t a) const { return impl_->neg_t[a]; }

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
  return impl_->inv_t[a];
}

uint32_t Field::pow(uint32_t a, uint64_t k) const {
  uint32_t r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::vector<uint32_t> Field::repr(uint32_t code) const {
  if (code >= impl_->q) fail(Errc::invalid_argument, "element code out of range");
  return impl_->decode(code);
}

uint32_t Field::code(const std::vector<uint32_t>& r) const {
  if (r.size() != impl_->e) fail(Errc::invalid_argument, "representation length must equal e");
  for (uint32_t c : r)
    if (c >= impl_->p) fail(Errc::invalid_argument, "representation entry out of range");
  return impl_->encode(r);
}

std::vector<uint32_t> Field::enumerate() const {
  std::vector<uint32_t> v(impl_->q);
  for (uint64_t i = 0; i < impl_->q; ++i) v[i] = uint32_t(i);
  return v;
}

bool Field::same(const Field& other) const {
  if (impl_ == other.impl_) return true;
  if (!impl_ || !other.impl_) return false;
  return impl_->p == other.impl_->p && impl_->e == other.impl_->e &&
         impl_->modulus == other.impl_->modulus;
}

namespace {
void require_same(const Field& a, const Field& b) {
  if (!a.same(b)) fail(Errc::field_mismatch, "elements belong to different fields");
}
}  // namespace

Element Element::operator+(const Element& o) const {
  require_same(field, o.field);
  return Element{field, field.add(code, o.code)};
}

Element Element::operator-(const Element& o) const {
  require_same(field, o.field);
  return Element{field, field.sub(code, o.code)};
}

Element Element::operator*(const Element& o) const {
  require_same(field, o.field);
  return Element{field, field.mul(code, o.code)};
}

Element Element::inverse() const { return Element{field, field.inv(code)}; }

std::vector<Element> field_enumerate(const Field& f) {
  std::vector<Element> out;
  out.reserve(f.q());
  for (uint32_t c : f.enumerate()) out.push_back(Element{f, c});
  return out;
}

}  // namespace hankelff
