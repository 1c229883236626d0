#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hankelff/hankel.hpp"

namespace hankelff {

using BigInt = boost::multiprecision::cpp_int;

struct CensusQuery {
  Field field;
  int n = 0;
  int h = 0;  // leading entries forced to zero, 0 <= h <= n+1
  uint64_t budget = 10'000'000;
  int jobs = 1;
  bool with_shapes = false;  // also tally rank per rectangular shape
};

/// Exhaustive tallies over all q^{n-h+1} sequences with the zero prefix, keyed
/// by (rank, rho, pi); enumeration is lexicographic with a_h most significant.
struct CensusTally {
  std::map<std::tuple<int, int, int>, BigInt> by_key;
  std::map<std::tuple<int, int, int>, std::vector<std::vector<uint32_t>>> witnesses;  // <= 10 each
  std::map<std::pair<int, int>, BigInt> by_shape_rank;  // (l, rank), m = n+2-l
  BigInt total = 0;
};

CensusTally census_enumerate(const CensusQuery& q);

/// Closed-form counting results; covered == false marks an empty class for
/// parameters outside the admissible bounds (the count is then 0).
struct FormulaValue {
  BigInt value = 0;
  bool covered = true;
};

FormulaValue formula_L_rho_pi(uint64_t q, int n, int h, int rho, int pi);
BigInt formula_L_r(uint64_t q, int n, int h, int r);
BigInt formula_H(uint64_t q, int l, int m, int h, int r);

struct CensusRecord {
  int r = 0, rho = 0, pi = 0;
  BigInt brute = 0;
  BigInt formula = 0;
  bool covered = true;
  bool match = false;
};

struct RankRecord {
  int r = 0;
  BigInt brute = 0, formula = 0;
  bool match = false;
};

struct ShapeRecord {
  int l = 0, m = 0, r = 0;
  BigInt brute = 0, formula = 0;
  bool match = false;
};

struct CensusReport {
  int n = 0, h = 0;
  std::vector<CensusRecord> records;       // per (r, rho, pi)
  std::vector<RankRecord> rank_records;    // per rank
  std::vector<ShapeRecord> shape_records;  // per (l, m, rank) when requested
  BigInt total = 0;
  bool total_ok = false;  // total == q^{n-h+1}
  bool all_match = false;
  std::vector<std::pair<std::tuple<int, int, int>, std::vector<std::vector<uint32_t>>>>
      mismatch_witnesses;  // offending keys with up to 10 sequences each
};

CensusReport census_reconcile(const CensusQuery& q);

/// Census cache files, schema "hankelff-census/v1"; the key is
/// (p, e, modulus, n, h).
enum class CacheStatus { hit, miss, stale, corrupt };

struct CacheLookup {
  CacheStatus status = CacheStatus::miss;
  std::vector<CensusRecord> records;
};

std::string census_cache_filename(const Field& f, int n, int h);
CacheLookup census_cache_load(const std::string& path, const Field& f, int n, int h);
void census_cache_store(const std::string& path, const Field& f, int n, int h,
                        const std::vector<CensusRecord>& records);

}  // namespace hankelff
