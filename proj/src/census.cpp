#include "hankelff/census.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <thread>

namespace hankelff {

namespace {

BigInt bigpow(uint64_t base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

constexpr size_t kWitnessCap = 10;

CensusTally enumerate_range(const CensusQuery& q, uint64_t lo, uint64_t hi) {
  const Field& f = q.field;
  const int n = q.n, h = q.h;
  const int free = n + 1 - h;
  CensusTally t;
  std::vector<uint32_t> a(size_t(n) + 1, 0);
  for (uint64_t idx = lo; idx < hi; ++idx) {
    uint64_t rem = idx;
    for (int pos = n; pos >= h; --pos) {
      a[size_t(pos)] = uint32_t(rem % f.q());
      rem /= f.q();
    }
    SymbolSeq s{f, a};
    RhoPiProfile prof = rho_pi_profile(s);
    auto key = std::make_tuple(prof.rank, prof.rho, prof.pi);
    t.by_key[key] += 1;
    auto& wit = t.witnesses[key];
    if (wit.size() < kWitnessCap) wit.push_back(a);
    if (q.with_shapes)
      for (int l = 1; l <= n + 1; ++l)
        t.by_shape_rank[{l, hankel_rank(s, l, n + 2 - l)}] += 1;
    t.total += 1;
  }
  (void)free;
  return t;
}

void merge_tally(CensusTally& into, CensusTally&& part) {
  for (auto& [k, v] : part.by_key) into.by_key[k] += v;
  for (auto& [k, w] : part.witnesses) {
    auto& dst = into.witnesses[k];
    for (auto& seq : w) {
      if (dst.size() >= kWitnessCap) break;
      dst.push_back(std::move(seq));
    }
  }
  for (auto& [k, v] : part.by_shape_rank) into.by_shape_rank[k] += v;
  into.total += part.total;
}

}  // namespace

CensusTally census_enumerate(const CensusQuery& q) {
  const int n = q.n, h = q.h;
  if (n < 0 || h < 0 || h > n + 1) fail(Errc::invalid_argument, "census requires 0 <= h <= n+1");
  const int free = n + 1 - h;
  BigInt space = bigpow(q.field.q(), free);
  if (space > q.budget)
    fail(Errc::budget_exceeded, "census space q^" + std::to_string(free) +
                                    " exceeds the enumeration budget");
  uint64_t count = space.convert_to<uint64_t>();

  int jobs = std::max(1, q.jobs);
  if (uint64_t(jobs) > count) jobs = int(std::max<uint64_t>(1, count));
  if (jobs == 1) return enumerate_range(q, 0, count);

  // contiguous chunks merged in order: tallies are additive, so the result is
  // identical for every partitioning
  std::vector<CensusTally> parts(static_cast<size_t>(jobs));
  std::vector<std::thread> threads;
  uint64_t chunk = count / uint64_t(jobs), rem = count % uint64_t(jobs);
  uint64_t lo = 0;
  for (int j = 0; j < jobs; ++j) {
    uint64_t hi = lo + chunk + (uint64_t(j) < rem ? 1 : 0);
    threads.emplace_back([&q, &parts, j, lo, hi] { parts[size_t(j)] = enumerate_range(q, lo, hi); });
    lo = hi;
  }
  for (auto& th : threads) th.join();
  CensusTally t;
  for (auto& part : parts) merge_tally(t, std::move(part));
  return t;
}

FormulaValue formula_L_rho_pi(uint64_t q, int n, int h, int rho, int pi) {
  if (n < 0 || h < 0 || h > n + 1 || rho < 0 || pi < 0)
    fail(Errc::invalid_argument, "invalid census-class parameters");
  const int n1 = (n + 2) / 2;
  const int r = rho + pi;
  FormulaValue out;

  if (rho == 0) {
    const int rcap = (n % 2 == 0) ? n1 - 1 : n1;
    if (r > rcap || r > n - h + 1) {
      out.covered = false;
      return out;
    }
    out.value = (r == 0) ? BigInt(1) : BigInt(q - 1) * bigpow(q, r - 1);
    return out;
  }
  if (rho >= 1 && rho <= n1 - 1) {
    const int pcap = (n % 2 == 0) ? n1 - rho - 1 : n1 - rho;
    if (pi > pcap || rho < h + 1) {
      out.covered = false;
      return out;
    }
    out.value = (pi == 0) ? BigInt(q - 1) * bigpow(q, 2 * rho - h - 1)
                          : BigInt(q - 1) * (q - 1) * bigpow(q, 2 * rho + pi - h - 2);
    return out;
  }
  if (rho == n1) {
    if (pi != 0 || h + 1 > n1) {
      out.covered = false;
      return out;
    }
    out.value = BigInt(q - 1) * bigpow(q, n - h);
    return out;
  }
  out.covered = false;
  return out;
}

BigInt formula_L_r(uint64_t q, int n, int h, int r) {
  if (n < 0 || h < 0 || h > n + 1 || r < 0)
    fail(Errc::invalid_argument, "invalid census parameters");
  const int n1 = (n + 2) / 2;
  if (r == 0) return 1;
  if (r > n1) return 0;
  if (r <= std::min(h, n - h + 1)) return BigInt(q - 1) * bigpow(q, r - 1);
  if (h + 1 <= r && r <= n1 - 1) return BigInt(q * q - 1) * bigpow(q, 2 * r - h - 2);
  if (r == n1 && h + 1 <= n1) return bigpow(q, n - h + 1) - bigpow(q, 2 * n1 - h - 2);
  return 0;
}

BigInt formula_H(uint64_t q, int l, int m, int h, int r) {
  if (l < 1 || m < 1 || h < 0 || h > l + m - 1 || r < 0)
    fail(Errc::invalid_argument, "invalid rectangular census parameters");
  const int n = l + m - 2;
  const int mn = std::min(l, m);
  if (r > mn) return 0;
  if (r < mn) return formula_L_r(q, n, h, r);
  // full-rank branch
  if (mn - 1 <= std::min(h, n - h + 1)) return bigpow(q, l + m - h - 1) - bigpow(q, mn - 1);
  if (mn - 1 >= h + 1) return bigpow(q, l + m - h - 1) - bigpow(q, 2 * mn - h - 2);
  return 0;
}

CensusReport census_reconcile(const CensusQuery& q) {
  CensusTally tally = census_enumerate(q);
  const uint64_t qq = q.field.q();
  const int n = q.n, h = q.h, n1 = (n + 2) / 2;

  CensusReport rep;
  rep.n = n;
  rep.h = h;
  rep.total = tally.total;
  rep.total_ok = (tally.total == bigpow(qq, n + 1 - h));
  rep.all_match = rep.total_ok;

  for (int rho = 0; rho <= n1; ++rho)
    for (int pi = 0; rho + pi <= n1; ++pi) {
      auto key = std::make_tuple(rho + pi, rho, pi);
      BigInt brute = 0;
      if (auto it = tally.by_key.find(key); it != tally.by_key.end()) brute = it->second;
      FormulaValue fv = formula_L_rho_pi(qq, n, h, rho, pi);
      if (brute == 0 && fv.value == 0) continue;  // vacuous class
      CensusRecord rec;
      rec.r = rho + pi;
      rec.rho = rho;
      rec.pi = pi;
      rec.brute = brute;
      rec.formula = fv.value;
      rec.covered = fv.covered;
      rec.match = (brute == fv.value);
      if (!rec.match) {
        rep.all_match = false;
        auto wit = tally.witnesses.find(key);
        rep.mismatch_witnesses.push_back(
            {key, wit == tally.witnesses.end() ? std::vector<std::vector<uint32_t>>{}
                                               : wit->second});
      }
      rep.records.push_back(std::move(rec));
    }

  for (int r = 0; r <= n1; ++r) {
    BigInt brute = 0;
    for (auto& [key, v] : tally.by_key)
      if (std::get<0>(key) == r) brute += v;
    RankRecord rec;
    rec.r = r;
    rec.brute = brute;
    rec.formula = formula_L_r(qq, n, h, r);
    rec.match = (rec.brute == rec.formula);
    if (rec.brute == 0 && rec.formula == 0) continue;
    if (!rec.match) rep.all_match = false;
    rep.rank_records.push_back(std::move(rec));
  }

  if (q.with_shapes) {
    for (int l = 1; l <= n + 1; ++l) {
      int m = n + 2 - l;
      for (int r = 0; r <= std::min(l, m); ++r) {
        BigInt brute = 0;
        if (auto it = tally.by_shape_rank.find({l, r}); it != tally.by_shape_rank.end())
          brute = it->second;
        ShapeRecord rec;
        rec.l = l;
        rec.m = m;
        rec.r = r;
        rec.brute = brute;
        rec.formula = formula_H(qq, l, m, h, r);
        rec.match = (rec.brute == rec.formula);
        if (rec.brute == 0 && rec.formula == 0) continue;
        if (!rec.match) rep.all_match = false;
        rep.shape_records.push_back(std::move(rec));
      }
    }
  }
  return rep;
}

namespace {

constexpr const char* kCensusSchema = "hankelff-census/v1";

nlohmann::json field_params_json(const Field& f) {
  nlohmann::json j;
  j["p"] = f.p();
  j["e"] = f.e();
  j["modulus"] = f.modulus();
  return j;
}

}  // namespace

std::string census_cache_filename(const Field& f, int n, int h) {
  std::string mod = "none";
  if (!f.modulus().empty()) {
    mod.clear();
    for (size_t i = 0; i < f.modulus().size(); ++i) {
      if (i) mod += "_";
      mod += std::to_string(f.modulus()[i]);
    }
  }
  return "census-p" + std::to_string(f.p()) + "-e" + std::to_string(f.e()) + "-m" + mod +
         "-n" + std::to_string(n) + "-h" + std::to_string(h) + ".json";
}

CacheLookup census_cache_load(const std::string& path, const Field& f, int n, int h) {
  CacheLookup out;
  std::ifstream in(path);
  if (!in) {
    out.status = CacheStatus::miss;
    return out;
  }
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("schema") || !j.contains("records")) {
    out.status = CacheStatus::corrupt;
    return out;
  }
  if (j["schema"] != kCensusSchema) {
    out.status = CacheStatus::stale;
    return out;
  }
  if (j["field"] != field_params_json(f) || j["n"] != n || j["h"] != h) {
    out.status = CacheStatus::corrupt;  // wrong key content under this filename
    return out;
  }
  try {
    for (const auto& rj : j["records"]) {
      CensusRecord rec;
      rec.r = rj.at("r").get<int>();
      rec.rho = rj.at("rho").get<int>();
      rec.pi = rj.at("pi").get<int>();
      rec.brute = BigInt(rj.at("brute").get<std::string>());
      rec.formula = BigInt(rj.at("formula").get<std::string>());
      rec.match = rj.at("match").get<bool>();
      rec.covered = rj.value("covered", true);
      out.records.push_back(std::move(rec));
    }
  } catch (const std::exception&) {
    out.status = CacheStatus::corrupt;
    out.records.clear();
    return out;
  }
  out.status = CacheStatus::hit;
  return out;
}

void census_cache_store(const std::string& path, const Field& f, int n, int h,
                        const std::vector<CensusRecord>& records) {
  std::filesystem::path p(path);
  if (p.has_parent_path() && !std::filesystem::is_directory(p.parent_path()))
    fail(Errc::io_error, "cache directory does not exist: " + p.parent_path().string());
  nlohmann::json j;
  j["schema"] = kCensusSchema;
  j["field"] = field_params_json(f);
  j["n"] = n;
  j["h"] = h;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& rec : records) {
    nlohmann::json rj;
    rj["r"] = rec.r;
    rj["rho"] = rec.rho;
    rj["pi"] = rec.pi;
    rj["brute"] = rec.brute.str();
    rj["formula"] = rec.formula.str();
    rj["match"] = rec.match;
    rj["covered"] = rec.covered;
    rows.push_back(std::move(rj));
  }
  j["records"] = std::move(rows);
  std::ofstream outf(path);
  if (!outf) fail(Errc::io_error, "cannot write cache file: " + path);
  outf << j.dump(2) << "\n";
  if (!outf) fail(Errc::io_error, "failed writing cache file: " + path);
}

}  // namespace hankelff
