#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "hankelff/hankelff.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hankelff_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("field lifecycle and arithmetic") {
  hankelff_field* f = nullptr;
  REQUIRE(hankelff_field_new(5, 1, nullptr, 0, &f) == HANKELFF_OK);
  REQUIRE(f != nullptr);
  CHECK(hankelff_field_order(f) == 5);

  uint32_t out = 0;
  CHECK(hankelff_elem_mul(f, 3, 4, &out) == HANKELFF_OK);
  CHECK(out == 2);
  CHECK(hankelff_elem_inv(f, 2, &out) == HANKELFF_OK);
  CHECK(out == 3);
  CHECK(hankelff_elem_inv(f, 0, &out) == HANKELFF_ERR_DIVISION_BY_ZERO);
  CHECK(hankelff_elem_add(f, 9, 1, &out) == HANKELFF_ERR_INVALID_ARGUMENT);

  char* json = nullptr;
  REQUIRE(hankelff_field_json(f, &json) == HANKELFF_OK);
  CHECK(take(json).find("\"p\":5") != std::string::npos);
  hankelff_field_free(f);
}

TEST_CASE("construction errors map to codes") {
  hankelff_field* f = nullptr;
  CHECK(hankelff_field_new(4, 1, nullptr, 0, &f) == HANKELFF_ERR_NOT_PRIME);
  CHECK(f == nullptr);
  uint32_t sq[] = {1, 0, 1};  // (x+1)^2 over F_2
  CHECK(hankelff_field_new(2, 2, sq, 3, &f) == HANKELFF_ERR_NOT_IRREDUCIBLE);
  CHECK(std::strlen(hankelff_last_error_message()) > 0);
  CHECK(std::string(hankelff_strerror(HANKELFF_ERR_NOT_PRIME)) == "characteristic is not prime");
}

TEST_CASE("sequence analysis surface") {
  hankelff_field* f = nullptr;
  REQUIRE(hankelff_field_new(2, 1, nullptr, 0, &f) == HANKELFF_OK);
  uint32_t seq[] = {1, 0, 1, 0, 1};

  uint32_t rank = 99;
  CHECK(hankelff_rank(f, seq, 5, 3, 3, &rank) == HANKELFF_OK);
  CHECK(rank == 2);

  char* prof = nullptr;
  REQUIRE(hankelff_profile_json(f, seq, 5, &prof) == HANKELFF_OK);
  std::string pj = take(prof);
  CHECK(pj.find("\"rank\":2") != std::string::npos);
  CHECK(pj.find("\"rho\":2") != std::string::npos);
  CHECK(pj.find("\"pi\":0") != std::string::npos);
  CHECK(pj.find("\"coeffs\":[1,0,1]") != std::string::npos);

  char* ker = nullptr;
  REQUIRE(hankelff_kernel_json(f, seq, 5, 2, 4, &ker) == HANKELFF_OK);
  CHECK(take(ker).find("\"basis\"") != std::string::npos);

  char* euc = nullptr;
  REQUIRE(hankelff_euclid_json(f, seq, 5, &euc) == HANKELFF_OK);
  std::string ej = take(euc);
  CHECK(ej.find("\"applicable\":true") != std::string::npos);
  CHECK(ej.find("\"leading_zeros_match\":true") != std::string::npos);

  CHECK(hankelff_rank(f, seq, 5, 9, 9, &rank) == HANKELFF_ERR_SHAPE_MISMATCH);
  hankelff_field_free(f);
}

TEST_CASE("run surface") {
  char* report = nullptr;
  int status = -1;
  REQUIRE(hankelff_run_json(R"({"command":"variance","p":2,"n":4})", &report, &status) ==
          HANKELFF_OK);
  std::string doc = take(report);
  CHECK(status == 0);
  CHECK(doc.find("\"schema\": \"hankelff/v1\"") != std::string::npos);
  CHECK(doc.find("\"match\": true") != std::string::npos);

  CHECK(hankelff_run_json(R"({"command":"bogus"})", &report, &status) ==
        HANKELFF_ERR_BAD_CONFIG);
  CHECK(hankelff_run_json("{]", &report, &status) == HANKELFF_ERR_BAD_CONFIG);
  CHECK(hankelff_run_json(nullptr, &report, &status) == HANKELFF_ERR_INVALID_ARGUMENT);
}
