#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hankelff/error.hpp"

namespace hankelff {

/// Finite field F_{p^e}, all arithmetic exact.
///
/// Elements are canonical residue codes in [0, q). For the coefficient tuple
/// (r_0, ..., r_{e-1}) of the residue modulo the defining polynomial,
/// code = sum_i r_i * p^i. Enumeration order is ascending code, so 0 comes
/// first and code 1 is the multiplicative identity. Equality of elements is
/// equality of codes.
class Field {
 public:
  /// default-constructed fields are empty placeholders; assign from make()
  /// before use
  Field() = default;

  /// p prime, e >= 1. For e > 1 a monic irreducible modulus of degree e may be
  /// given low-to-high (length e+1 with leading 1); when absent the
  /// lexicographically smallest monic irreducible is selected, so GF(q) is
  /// identical across runs and machines.
  static Field make(uint32_t p, uint32_t e = 1, const std::vector<uint32_t>& modulus = {});

  uint32_t p() const;
  uint32_t e() const;
  uint64_t q() const;
  const std::vector<uint32_t>& modulus() const;  // empty when e == 1

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t k) const;

  std::vector<uint32_t> repr(uint32_t code) const;  // length e, entries in [0, p)
  uint32_t code(const std::vector<uint32_t>& repr) const;

  std::vector<uint32_t> enumerate() const;  // all q codes exactly once, ascending

  bool same(const Field& other) const;  // equal (p, e, modulus)

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Element with its field attached; mixing fields raises FieldMismatch.
struct Element {
  Field field;
  uint32_t code;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element inverse() const;
  bool operator==(const Element& o) const { return field.same(o.field) && code == o.code; }
};

inline Element make_element(const Field& f, uint32_t code) {
  if (code >= f.q()) fail(Errc::invalid_argument, "element code out of range");
  return Element{f, code};
}

std::vector<Element> field_enumerate(const Field& f);

}  // namespace hankelff
