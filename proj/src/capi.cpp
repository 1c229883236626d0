#include "hankelff/hankelff.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "hankelff/report.hpp"
#include "hankelff/runner.hpp"

using namespace hankelff;

namespace {

thread_local std::string g_last_error;

int errc_to_code(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return HANKELFF_ERR_INVALID_ARGUMENT;
    case Errc::not_prime: return HANKELFF_ERR_NOT_PRIME;
    case Errc::not_irreducible: return HANKELFF_ERR_NOT_IRREDUCIBLE;
    case Errc::degree_mismatch: return HANKELFF_ERR_DEGREE_MISMATCH;
    case Errc::field_mismatch: return HANKELFF_ERR_FIELD_MISMATCH;
    case Errc::division_by_zero: return HANKELFF_ERR_DIVISION_BY_ZERO;
    case Errc::shape_mismatch: return HANKELFF_ERR_SHAPE_MISMATCH;
    case Errc::not_coprime: return HANKELFF_ERR_NOT_COPRIME;
    case Errc::bound_violation: return HANKELFF_ERR_BOUND_VIOLATION;
    case Errc::budget_exceeded: return HANKELFF_ERR_BUDGET_EXCEEDED;
    case Errc::not_applicable: return HANKELFF_ERR_NOT_APPLICABLE;
    case Errc::io_error: return HANKELFF_ERR_IO;
    case Errc::schema_mismatch: return HANKELFF_ERR_SCHEMA_MISMATCH;
    case Errc::extension_field_unsupported: return HANKELFF_ERR_EXTENSION_FIELD_UNSUPPORTED;
    case Errc::bad_config: return HANKELFF_ERR_BAD_CONFIG;
    case Errc::internal: return HANKELFF_ERR_INTERNAL;
  }
  return HANKELFF_ERR_INTERNAL;
}

template <class Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return HANKELFF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return errc_to_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HANKELFF_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HANKELFF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SymbolSeq make_seq(const Field& f, const uint32_t* seq, size_t len) {
  if (!seq || len == 0) fail(Errc::invalid_argument, "sequence must be non-empty");
  return SymbolSeq::make(f, std::vector<uint32_t>(seq, seq + len));
}

Json euclid_report_json(const Field& f, const EuclidReport& rep) {
  Json j;
  j["applicable"] = rep.applicable;
  if (!rep.applicable) {
    j["reason"] = rep.reason;
    j["truncation_checked"] = rep.truncation_checked;
    if (rep.truncation_checked) j["truncation_match"] = rep.truncation_match;
    return j;
  }
  Json chain = Json::array();
  for (const Poly& p : rep.chain) chain.push_back(poly_to_json(p));
  j["chain"] = std::move(chain);
  Json levels = Json::array();
  for (const auto& lv : rep.levels) {
    Json lj;
    lj["level"] = lv.level;
    lj["final"] = lv.final_level;
    lj["claimed"] = profile_to_json(lv.claimed);
    lj["observed"] = profile_to_json(lv.observed);
    lj["profile_match"] = lv.profile_match;
    lj["pair_match"] = lv.pair_match;
    lj["kernel_span_match"] = lv.kernel_span_match;
    levels.push_back(std::move(lj));
  }
  j["levels"] = std::move(levels);
  j["claimed_leading_zeros"] = rep.claimed_leading_zeros;
  j["observed_leading_zeros"] = rep.observed_leading_zeros;
  j["leading_zeros_match"] = rep.leading_zeros_match;
  (void)f;
  return j;
}

}  // namespace

struct hankelff_field {
  Field field;
};

extern "C" {

const char* hankelff_version(void) { return "0.1.0"; }

const char* hankelff_strerror(int code) {
  switch (code) {
    case HANKELFF_OK: return "ok";
    case HANKELFF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HANKELFF_ERR_NOT_PRIME: return "characteristic is not prime";
    case HANKELFF_ERR_NOT_IRREDUCIBLE: return "modulus is not irreducible";
    case HANKELFF_ERR_DEGREE_MISMATCH: return "degree mismatch";
    case HANKELFF_ERR_FIELD_MISMATCH: return "field mismatch";
    case HANKELFF_ERR_DIVISION_BY_ZERO: return "division by zero";
    case HANKELFF_ERR_SHAPE_MISMATCH: return "shape mismatch";
    case HANKELFF_ERR_NOT_COPRIME: return "polynomials are not coprime";
    case HANKELFF_ERR_BOUND_VIOLATION: return "parameter bound violated";
    case HANKELFF_ERR_BUDGET_EXCEEDED: return "enumeration budget exceeded";
    case HANKELFF_ERR_NOT_APPLICABLE: return "check not applicable";
    case HANKELFF_ERR_IO: return "i/o error";
    case HANKELFF_ERR_SCHEMA_MISMATCH: return "cache schema mismatch";
    case HANKELFF_ERR_EXTENSION_FIELD_UNSUPPORTED: return "extension fields unsupported here";
    case HANKELFF_ERR_BAD_CONFIG: return "bad configuration";
    case HANKELFF_ERR_INTERNAL: return "internal error";
    case HANKELFF_ERR_NOMEM: return "out of memory";
  }
  return "unknown error";
}

const char* hankelff_last_error_message(void) { return g_last_error.c_str(); }

void hankelff_string_free(char* s) { std::free(s); }

int hankelff_field_new(uint32_t p, uint32_t e, const uint32_t* modulus, size_t modulus_len,
                       hankelff_field** out) {
  if (!out) return HANKELFF_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    std::vector<uint32_t> mod;
    if (modulus && modulus_len) mod.assign(modulus, modulus + modulus_len);
    *out = new hankelff_field{Field::make(p, e, mod)};
  });
}

void hankelff_field_free(hankelff_field* f) { delete f; }

uint64_t hankelff_field_order(const hankelff_field* f) { return f ? f->field.q() : 0; }

int hankelff_field_json(const hankelff_field* f, char** json_out) {
  if (!f || !json_out) return HANKELFF_ERR_INVALID_ARGUMENT;
  return guarded([&] { *json_out = dup_string(field_to_json(f->field).dump()); });
}

int hankelff_elem_add(const hankelff_field* f, uint32_t a, uint32_t b, uint32_t* out) {
  if (!f || !out) return HANKELFF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = (make_element(f->field, a) + make_element(f->field, b)).code;
  });
}

int hankelff_elem_sub(const hankelff_field* f, uint32_t a, uint32_t b, uint32_t* out) {
  if (!f || !out) return HANKELFF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = (make_element(f->field, a) - make_element(f->field, b)).code;
  });
}

int hankelff_elem_mul(const hankelff_field* f, uint32_t a, uint32_t b, uint32_t* out) {
  if (!f || !out) return HANKELFF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = (make_element(f->field, a) * make_element(f->field, b)).code;
  });
}

int hankelff_elem_inv(const hankelff_field* f, uint32_t a, uint32_t* out) {
  if (!f || !out) return HANKELFF_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = make_element(f->field, a).inverse().code; });
}

int hankelff_rank(const hankelff_field* f, const uint32_t* seq, size_t len, uint32_t l,
                  uint32_t m, uint32_t* rank_out) {
  if (!f || !rank_out) return HANKELFF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *rank_out = uint32_t(hankel_rank(make_seq(f->field, seq, len), int(l), int(m)));
  });
}

int hankelff_profile_json(const hankelff_field* f, const uint32_t* seq, size_t len,
                          char** json_out) {
  if (!f || !json_out) return HANKELFF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    SymbolSeq s = make_seq(f->field, seq, len);
    Json j;
    j["profile"] = profile_to_json(rho_pi_profile(s));
    j["char_polys"] = charpair_to_json(char_polys(s));
    *json_out = dup_string(j.dump());
  });
}

int hankelff_kernel_json(const hankelff_field* f, const uint32_t* seq, size_t len, uint32_t l,
                         uint32_t m, char** json_out) {
  if (!f || !json_out) return HANKELFF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    SymbolSeq s = make_seq(f->field, seq, len);
    Json arr = Json::array();
    for (const Poly& p : hankel_kernel_basis(s, int(l), int(m))) arr.push_back(poly_to_json(p));
    Json j;
    j["basis"] = std::move(arr);
    *json_out = dup_string(j.dump());
  });
}

int hankelff_euclid_json(const hankelff_field* f, const uint32_t* seq, size_t len,
                         char** json_out) {
  if (!f || !json_out) return HANKELFF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    SymbolSeq s = make_seq(f->field, seq, len);
    *json_out = dup_string(euclid_report_json(f->field, euclid_correspondence_check(s)).dump());
  });
}

int hankelff_run_json(const char* config_json, char** report_out, int* exit_status_out) {
  if (!config_json || !report_out || !exit_status_out) return HANKELFF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    RunConfig cfg = RunConfig::from_json(config_json);
    RunResult res = hankelff::run(cfg);
    *report_out = dup_string(res.document);
    *exit_status_out = res.exit_code;
  });
}

}  // extern "C"
