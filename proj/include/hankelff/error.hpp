#pragma once

#include <stdexcept>
#include <string>

namespace hankelff {

enum class Errc {
  invalid_argument = 1,
  not_prime,
  not_irreducible,
  degree_mismatch,
  field_mismatch,
  division_by_zero,
  shape_mismatch,
  not_coprime,
  bound_violation,
  budget_exceeded,
  not_applicable,
  io_error,
  schema_mismatch,
  extension_field_unsupported,
  bad_config,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hankelff
