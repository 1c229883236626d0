#include "hankelff/runner.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <random>
#include <thread>

namespace hankelff {

namespace {

Range parse_range(const Json& v, const char* name) {
  if (v.is_number_integer()) {
    int x = v.get<int>();
    return Range{x, x};
  }
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    auto pos = s.find("..");
    try {
      if (pos == std::string::npos) {
        int x = std::stoi(s);
        return Range{x, x};
      }
      Range r{std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
      if (r.lo > r.hi) fail(Errc::bad_config, std::string(name) + ": empty range");
      return r;
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::bad_config, std::string(name) + ": expected an integer or a..b");
    }
  }
  fail(Errc::bad_config, std::string(name) + ": expected an integer or a..b");
}

std::string range_str(const Range& r) {
  return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

template <class R, class Fn>
std::vector<R> parallel_map(size_t count, int jobs, Fn fn) {
  std::vector<R> out(count);
  jobs = std::max(1, std::min<int>(jobs, int(std::max<size_t>(1, count))));
  if (jobs == 1) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<size_t> next{0};
  std::vector<std::thread> threads;
  for (int j = 0; j < jobs; ++j)
    threads.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          out[i] = fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : threads) t.join();
  // rethrow the lowest-index failure so behavior matches a sequential run
  for (size_t i = 0; i < count; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
  return out;
}

std::vector<uint32_t> decode_seq(uint64_t idx, uint64_t q, int len) {
  std::vector<uint32_t> a(static_cast<size_t>(len));
  for (int pos = len - 1; pos >= 0; --pos) {
    a[size_t(pos)] = uint32_t(idx % q);
    idx /= q;
  }
  return a;
}

std::vector<std::vector<uint32_t>> sample_seqs(const Field& f, int len, uint64_t count,
                                               uint64_t seed, uint64_t salt) {
  // mt19937_64 is bit-identical everywhere; modular draw keeps reports
  // reproducible across standard libraries
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + salt + 1);
  std::vector<std::vector<uint32_t>> out;
  out.reserve(count);
  for (uint64_t i = 0; i < count; ++i) {
    std::vector<uint32_t> a(static_cast<size_t>(len));
    for (auto& x : a) x = uint32_t(rng() % f.q());
    out.push_back(std::move(a));
  }
  return out;
}

uint64_t pow_checked(uint64_t base, int e, uint64_t cap) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

struct Envelope {
  Json rows = Json::array();
  Json informational = Json::array();
  Json failures = Json::array();
  bool budget_hit = false;

  void budget_failure(const Error& e, const std::string& where) {
    Json j;
    j["kind"] = "budget-exceeded";
    j["where"] = where;
    j["message"] = e.what();
    failures.push_back(std::move(j));
    budget_hit = true;
  }
};

Range clamp_range(std::optional<Range> r, int lo, int hi, bool* any) {
  Range out = r ? *r : Range{lo, hi};
  out.lo = std::max(out.lo, lo);
  out.hi = std::min(out.hi, hi);
  *any = out.lo <= out.hi;
  return out;
}

// ---- variance ---------------------------------------------------------

void run_variance(const RunConfig& cfg, Envelope& env) {
  if (cfg.e != 1)
    fail(Errc::extension_field_unsupported, "variance is defined over prime fields; use --e 1");
  Field f = Field::make(cfg.p, 1);
  Range nr = cfg.n ? *cfg.n : Range{4, 6};
  for (int n = nr.lo; n <= nr.hi; ++n) {
    if (n < 0) continue;
    bool any = false;
    Range hr = clamp_range(cfg.h, 0, n, &any);
    if (!any) continue;
    std::vector<uint64_t> table;
    try {
      table = divisor_table(f, n, cfg.budget);
    } catch (const Error& e) {
      if (e.code() == Errc::budget_exceeded) {
        env.budget_failure(e, "variance n=" + std::to_string(n));
        continue;
      }
      throw;
    }
    for (int h = hr.lo; h <= hr.hi; ++h) {
      VarianceReport rep = variance_report_from_table(table, f, n, h, cfg.jobs);
      Json row;
      row["p"] = cfg.p;
      row["n"] = n;
      row["h"] = h;
      row["brute"] = rat_str(rep.brute);
      row["formula"] = rat_str(rep.formula);
      row["match"] = rep.match;
      if (rep.informational) {
        row["kind"] = "variance-small-n";
        env.informational.push_back(row);
        continue;
      }
      env.rows.push_back(row);
      if (!rep.match) {
        row["kind"] = "variance-mismatch";
        env.failures.push_back(row);
      }
      if (!rep.mean_ok) {
        Json mj;
        mj["kind"] = "mean-mismatch";
        mj["n"] = n;
        mj["h"] = h;
        mj["observed"] = rat_str(rep.mean_observed);
        mj["expected"] = rat_str(rep.mean_expected);
        env.failures.push_back(std::move(mj));
      }
    }
  }
}

// ---- census ------------------------------------------------------------

void run_census(const RunConfig& cfg, Envelope& env) {
  Field f = Field::make(cfg.p, cfg.e, cfg.modulus);
  const bool shapes = cfg.l.has_value() || cfg.m.has_value();
  if (!cfg.cache_dir.empty() && !std::filesystem::is_directory(cfg.cache_dir))
    fail(Errc::io_error, "cache directory does not exist: " + cfg.cache_dir);

  Range nr = cfg.n ? *cfg.n : Range{0, 6};
  for (int n = std::max(0, nr.lo); n <= nr.hi; ++n) {
    bool any = false;
    Range hr = clamp_range(cfg.h, 0, n + 1, &any);
    if (!any) continue;
    for (int h = hr.lo; h <= hr.hi; ++h) {
      std::vector<CensusRecord> records;
      std::vector<RankRecord> rank_records;
      std::vector<ShapeRecord> shape_records;
      std::vector<std::pair<std::tuple<int, int, int>, std::vector<std::vector<uint32_t>>>>
          witnesses;
      bool from_cache = false;
      std::string cache_path;
      if (!cfg.cache_dir.empty())
        cache_path = (std::filesystem::path(cfg.cache_dir) / census_cache_filename(f, n, h)).string();

      if (!shapes && !cache_path.empty()) {
        CacheLookup lk = census_cache_load(cache_path, f, n, h);
        if (lk.status == CacheStatus::hit) {
          records = std::move(lk.records);
          from_cache = true;
          Json ev;
          ev["kind"] = "cache";
          ev["event"] = "hit";
          ev["path"] = cache_path;
          env.informational.push_back(std::move(ev));
        } else if (lk.status != CacheStatus::miss) {
          Json ev;
          ev["kind"] = "cache";
          ev["event"] = lk.status == CacheStatus::stale ? "stale-recompute" : "corrupt-recompute";
          ev["path"] = cache_path;
          env.informational.push_back(std::move(ev));
        }
      }

      if (!from_cache) {
        CensusQuery q{f, n, h, cfg.budget, cfg.jobs, shapes};
        CensusReport rep;
        try {
          rep = census_reconcile(q);
        } catch (const Error& e) {
          if (e.code() == Errc::budget_exceeded) {
            env.budget_failure(e, "census n=" + std::to_string(n) + " h=" + std::to_string(h));
            continue;
          }
          throw;
        }
        records = std::move(rep.records);
        rank_records = std::move(rep.rank_records);
        shape_records = std::move(rep.shape_records);
        witnesses = std::move(rep.mismatch_witnesses);
        if (!rep.total_ok) {
          Json tj;
          tj["kind"] = "mass-mismatch";
          tj["n"] = n;
          tj["h"] = h;
          tj["total"] = int_str(rep.total);
          env.failures.push_back(std::move(tj));
        }
        if (!cache_path.empty()) census_cache_store(cache_path, f, n, h, records);
      } else {
        // rank tallies derive from the cached class records
        std::map<int, BigInt> by_r;
        for (const auto& rec : records) by_r[rec.r] += rec.brute;
        for (auto& [r, brute] : by_r) {
          RankRecord rr;
          rr.r = r;
          rr.brute = brute;
          rr.formula = formula_L_r(f.q(), n, h, r);
          rr.match = (rr.brute == rr.formula);
          rank_records.push_back(std::move(rr));
        }
      }

      for (const auto& rec : records) {
        if (cfg.r && rec.r != *cfg.r) continue;
        if (cfg.rho && rec.rho != *cfg.rho) continue;
        if (cfg.pi && rec.pi != *cfg.pi) continue;
        Json row;
        row["kind"] = "class";
        row["n"] = n;
        row["h"] = h;
        row["r"] = rec.r;
        row["rho"] = rec.rho;
        row["pi"] = rec.pi;
        row["brute"] = int_str(rec.brute);
        row["formula"] = int_str(rec.formula);
        row["match"] = rec.match;
        env.rows.push_back(row);
        if (!rec.match) {
          row["kind"] = "census-mismatch";
          for (const auto& [key, wits] : witnesses)
            if (std::get<0>(key) == rec.r && std::get<1>(key) == rec.rho &&
                std::get<2>(key) == rec.pi) {
              Json wj = Json::array();
              for (const auto& w : wits) wj.push_back(seq_to_json(SymbolSeq{f, w}));
              row["witnesses"] = std::move(wj);
            }
          env.failures.push_back(std::move(row));
        }
      }
      for (const auto& rec : rank_records) {
        if (cfg.r && rec.r != *cfg.r) continue;
        Json row;
        row["kind"] = "rank";
        row["n"] = n;
        row["h"] = h;
        row["r"] = rec.r;
        row["brute"] = int_str(rec.brute);
        row["formula"] = int_str(rec.formula);
        row["match"] = rec.match;
        env.rows.push_back(row);
        if (!rec.match) {
          row["kind"] = "census-rank-mismatch";
          env.failures.push_back(std::move(row));
        }
      }
      for (const auto& rec : shape_records) {
        if (cfg.l && rec.l != *cfg.l) continue;
        if (cfg.m && rec.m != *cfg.m) continue;
        if (cfg.r && rec.r != *cfg.r) continue;
        Json row;
        row["kind"] = "shape";
        row["n"] = n;
        row["h"] = h;
        row["l"] = rec.l;
        row["m"] = rec.m;
        row["r"] = rec.r;
        row["brute"] = int_str(rec.brute);
        row["formula"] = int_str(rec.formula);
        row["match"] = rec.match;
        env.rows.push_back(row);
        if (!rec.match) {
          row["kind"] = "census-shape-mismatch";
          env.failures.push_back(std::move(row));
        }
      }
    }
  }
}

// ---- sequence sweeps ----------------------------------------------------

std::vector<std::vector<uint32_t>> sweep_items(const Field& f, int len, const RunConfig& cfg,
                                               uint64_t salt, std::string* mode) {
  if (cfg.sample > 0) {
    *mode = "sampled";
    return sample_seqs(f, len, cfg.sample, cfg.seed, salt);
  }
  uint64_t space = pow_checked(f.q(), len, cfg.budget);
  if (space > cfg.budget)
    fail(Errc::budget_exceeded,
         "exhaustive sweep of q^" + std::to_string(len) + " sequences exceeds the budget");
  *mode = "exhaustive";
  std::vector<std::vector<uint32_t>> out;
  out.reserve(space);
  for (uint64_t i = 0; i < space; ++i) out.push_back(decode_seq(i, f.q(), len));
  return out;
}

void run_kernel(const RunConfig& cfg, Envelope& env) {
  Field f = Field::make(cfg.p, cfg.e, cfg.modulus);
  Range nr = cfg.n ? *cfg.n : Range{0, 7};
  for (int n = std::max(0, nr.lo); n <= nr.hi; ++n) {
    std::string mode;
    std::vector<std::vector<uint32_t>> items;
    try {
      items = sweep_items(f, n + 1, cfg, uint64_t(n) * 2 + 1, &mode);
    } catch (const Error& e) {
      if (e.code() == Errc::budget_exceeded) {
        env.budget_failure(e, "kernel n=" + std::to_string(n));
        continue;
      }
      throw;
    }
    auto checks = parallel_map<KernelStructureCheck>(items.size(), cfg.jobs, [&](size_t i) {
      return kernel_structure_check(SymbolSeq{f, items[i]});
    });
    long long shapes = 0, mismatches = 0;
    for (size_t i = 0; i < checks.size(); ++i) {
      shapes += checks[i].shapes_checked;
      mismatches += checks[i].mismatches;
      if (checks[i].mismatches > 0 && env.failures.size() < 20) {
        Json fj;
        fj["kind"] = "kernel-mismatch";
        fj["n"] = n;
        fj["sequence"] = seq_to_json(SymbolSeq{f, items[i]});
        fj["shapes"] = checks[i].mismatch_shapes;
        env.failures.push_back(std::move(fj));
      }
    }
    Json row;
    row["kind"] = "kernel";
    row["q"] = f.q();
    row["n"] = n;
    row["mode"] = mode;
    row["sequences"] = items.size();
    row["shapes"] = shapes;
    row["mismatches"] = mismatches;
    row["match"] = (mismatches == 0);
    env.rows.push_back(std::move(row));
  }
}

void run_euclid(const RunConfig& cfg, Envelope& env) {
  Field f = Field::make(cfg.p, cfg.e, cfg.modulus);
  Range nr = cfg.n ? *cfg.n : Range{2, 7};
  for (int n = std::max(0, nr.lo); n <= nr.hi; ++n) {
    std::string mode;
    std::vector<std::vector<uint32_t>> items;
    try {
      items = sweep_items(f, n + 1, cfg, uint64_t(n) * 2 + 2, &mode);
    } catch (const Error& e) {
      if (e.code() == Errc::budget_exceeded) {
        env.budget_failure(e, "euclid n=" + std::to_string(n));
        continue;
      }
      throw;
    }
    auto reports = parallel_map<EuclidReport>(items.size(), cfg.jobs, [&](size_t i) {
      return euclid_correspondence_check(SymbolSeq{f, items[i]});
    });

    long long applicable = 0, case1_levels = 0, lz_checks = 0, truncations = 0, failures = 0;
    long long case23 = 0, case23_profile_mismatch = 0, case23_span_match = 0;
    Json examples = Json::array();
    for (size_t i = 0; i < reports.size(); ++i) {
      const EuclidReport& rep = reports[i];
      if (!rep.applicable) {
        if (rep.truncation_checked) {
          ++truncations;
          if (!rep.truncation_match) {
            ++failures;
            if (env.failures.size() < 20) {
              Json fj;
              fj["kind"] = "euclid-truncation-mismatch";
              fj["n"] = n;
              fj["sequence"] = seq_to_json(SymbolSeq{f, items[i]});
              env.failures.push_back(std::move(fj));
            }
          }
        }
        continue;
      }
      ++applicable;
      for (const auto& lv : rep.levels) {
        if (lv.final_level) {
          ++case23;
          if (!lv.profile_match) ++case23_profile_mismatch;
          if (lv.kernel_span_match) ++case23_span_match;
          if (!lv.profile_match && examples.size() < 3) {
            Json ex;
            ex["level"] = lv.level;
            ex["sequence"] = seq_to_json(SymbolSeq{f, items[i]});
            ex["claimed"] = profile_to_json(lv.claimed);
            ex["observed"] = profile_to_json(lv.observed);
            ex["kernel_span_match"] = lv.kernel_span_match;
            examples.push_back(std::move(ex));
          }
          continue;
        }
        ++case1_levels;
        if (!(lv.profile_match && lv.pair_match && lv.kernel_span_match)) {
          ++failures;
          if (env.failures.size() < 20) {
            Json fj;
            fj["kind"] = "euclid-level-mismatch";
            fj["n"] = n;
            fj["level"] = lv.level;
            fj["sequence"] = seq_to_json(SymbolSeq{f, items[i]});
            fj["claimed"] = profile_to_json(lv.claimed);
            fj["observed"] = profile_to_json(lv.observed);
            env.failures.push_back(std::move(fj));
          }
        }
      }
      ++lz_checks;
      if (!rep.leading_zeros_match) {
        ++failures;
        if (env.failures.size() < 20) {
          Json fj;
          fj["kind"] = "euclid-leading-zeros-mismatch";
          fj["n"] = n;
          fj["sequence"] = seq_to_json(SymbolSeq{f, items[i]});
          fj["claimed"] = rep.claimed_leading_zeros;
          fj["observed"] = rep.observed_leading_zeros;
          env.failures.push_back(std::move(fj));
        }
      }
    }

    Json row;
    row["kind"] = "euclid";
    row["q"] = f.q();
    row["n"] = n;
    row["mode"] = mode;
    row["sequences"] = items.size();
    row["applicable"] = applicable;
    row["case1_levels"] = case1_levels;
    row["leading_zero_checks"] = lz_checks;
    row["truncation_checks"] = truncations;
    row["failures"] = failures;
    row["match"] = (failures == 0);
    env.rows.push_back(std::move(row));

    if (case23 > 0) {
      Json ij;
      ij["kind"] = "euclid-final-step";
      ij["q"] = f.q();
      ij["n"] = n;
      ij["count"] = case23;
      ij["profile_mismatches"] = case23_profile_mismatch;
      ij["kernel_span_matches"] = case23_span_match;
      ij["examples"] = std::move(examples);
      env.informational.push_back(std::move(ij));
    }
  }
}

void run_expsum(const RunConfig& cfg, Envelope& env) {
  if (cfg.e != 1)
    fail(Errc::extension_field_unsupported, "exponential sums are defined over prime fields");
  Field f = Field::make(cfg.p, 1);
  Range nr = cfg.n ? *cfg.n : Range{2, 5};
  for (int n = std::max(1, nr.lo); n <= nr.hi; ++n) {
    std::string mode;
    std::vector<std::vector<uint32_t>> items;
    try {
      items = sweep_items(f, n, cfg, uint64_t(n) * 2 + 3, &mode);  // prefixes of length n
    } catch (const Error& e) {
      if (e.code() == Errc::budget_exceeded) {
        env.budget_failure(e, "expsum n=" + std::to_string(n));
        continue;
      }
      throw;
    }
    bool budget_hit = false;
    std::vector<ExpsumCheck> checks;
    try {
      checks = parallel_map<ExpsumCheck>(items.size(), cfg.jobs, [&](size_t i) {
        return expsum_lemma_check(SymbolSeq{f, items[i]}, cfg.budget);
      });
    } catch (const Error& e) {
      if (e.code() == Errc::budget_exceeded) {
        env.budget_failure(e, "expsum n=" + std::to_string(n));
        budget_hit = true;
      } else {
        throw;
      }
    }
    if (budget_hit) continue;
    long long claim1 = 0, claim2 = 0, failures = 0;
    for (size_t i = 0; i < checks.size(); ++i) {
      (checks[i].claim == 1 ? claim1 : claim2) += 1;
      if (!checks[i].ok) {
        ++failures;
        if (env.failures.size() < 20) {
          Json fj;
          fj["kind"] = "expsum-mismatch";
          fj["n"] = n;
          fj["claim"] = checks[i].claim;
          fj["prefix"] = seq_to_json(SymbolSeq{f, items[i]});
          fj["detail"] = checks[i].detail;
          env.failures.push_back(std::move(fj));
        }
      }
    }
    Json row;
    row["kind"] = "expsum-lemma";
    row["p"] = cfg.p;
    row["n"] = n;
    row["mode"] = mode;
    row["prefixes"] = items.size();
    row["claim1"] = claim1;
    row["claim2"] = claim2;
    row["failures"] = failures;
    row["match"] = (failures == 0);
    env.rows.push_back(std::move(row));

    bool any = false;
    Range hr = clamp_range(cfg.h, 0, n, &any);
    if (!any) continue;
    try {
      for (int h = hr.lo; h <= hr.hi; ++h) {
        SummationIdentity si = summation_identity_check(f, n, h, cfg.budget);
        Json srow;
        srow["kind"] = "summation";
        srow["p"] = cfg.p;
        srow["n"] = n;
        srow["h"] = h;
        srow["lhs"] = int_str(si.lhs);
        srow["rhs"] = int_str(si.rhs);
        srow["match"] = si.match;
        env.rows.push_back(srow);
        if (!si.match) {
          srow["kind"] = "summation-mismatch";
          env.failures.push_back(std::move(srow));
        }
      }
    } catch (const Error& e) {
      if (e.code() == Errc::budget_exceeded)
        env.budget_failure(e, "summation n=" + std::to_string(n));
      else
        throw;
    }
  }
}

}  // namespace

RunConfig RunConfig::from_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) fail(Errc::bad_config, "config is not a JSON object");
  RunConfig cfg;
  if (!j.contains("command") || !j["command"].is_string())
    fail(Errc::bad_config, "config requires a command");
  cfg.command = j["command"].get<std::string>();
  if (j.contains("p") && !j["p"].is_null()) cfg.p = j["p"].get<uint32_t>();
  if (j.contains("e") && !j["e"].is_null()) cfg.e = j["e"].get<uint32_t>();
  if (j.contains("modulus") && !j["modulus"].is_null())
    cfg.modulus = j["modulus"].get<std::vector<uint32_t>>();
  if (j.contains("n") && !j["n"].is_null()) cfg.n = parse_range(j["n"], "n");
  if (j.contains("h") && !j["h"].is_null()) cfg.h = parse_range(j["h"], "h");
  for (const char* k : {"l", "m", "r", "rho", "pi"}) {
    if (j.contains(k) && !j[k].is_null()) {
      int v = j[k].get<int>();
      if (std::string(k) == "l") cfg.l = v;
      if (std::string(k) == "m") cfg.m = v;
      if (std::string(k) == "r") cfg.r = v;
      if (std::string(k) == "rho") cfg.rho = v;
      if (std::string(k) == "pi") cfg.pi = v;
    }
  }
  if (j.contains("format") && !j["format"].is_null()) cfg.format = j["format"].get<std::string>();
  if (j.contains("cache_dir") && !j["cache_dir"].is_null())
    cfg.cache_dir = j["cache_dir"].get<std::string>();
  if (j.contains("jobs") && !j["jobs"].is_null()) cfg.jobs = j["jobs"].get<int>();
  if (j.contains("budget") && !j["budget"].is_null()) cfg.budget = j["budget"].get<uint64_t>();
  if (j.contains("seed") && !j["seed"].is_null()) cfg.seed = j["seed"].get<uint64_t>();
  if (j.contains("sample") && !j["sample"].is_null()) cfg.sample = j["sample"].get<uint64_t>();
  return cfg;
}

Json RunConfig::to_json() const {
  Json j;
  j["command"] = command;
  j["p"] = p;
  j["e"] = e;
  j["modulus"] = modulus;
  if (n) j["n"] = range_str(*n);
  if (h) j["h"] = range_str(*h);
  if (l) j["l"] = *l;
  if (m) j["m"] = *m;
  if (r) j["r"] = *r;
  if (rho) j["rho"] = *rho;
  if (pi) j["pi"] = *pi;
  j["format"] = format;
  if (!cache_dir.empty()) j["cache_dir"] = cache_dir;
  // the worker count never changes any result, so it is not echoed: reports
  // must be byte-identical under --jobs variation
  j["budget"] = budget;
  j["seed"] = seed;
  j["sample"] = sample;
  return j;
}

RunResult run(const RunConfig& cfg) {
  if (cfg.jobs < 1) fail(Errc::bad_config, "jobs must be >= 1");
  if (cfg.budget < 1) fail(Errc::bad_config, "budget must be >= 1");
  if (cfg.format != "json" && cfg.format != "csv")
    fail(Errc::bad_config, "format must be json or csv");

  Envelope env;
  auto dispatch = [&](const RunConfig& c) {
    if (c.command == "variance")
      run_variance(c, env);
    else if (c.command == "census")
      run_census(c, env);
    else if (c.command == "kernel")
      run_kernel(c, env);
    else if (c.command == "euclid")
      run_euclid(c, env);
    else if (c.command == "expsum")
      run_expsum(c, env);
    else
      fail(Errc::bad_config, "unknown command: " + c.command);
  };

  if (cfg.command == "all") {
    auto sub = [&](const char* cmd, Range n) {
      RunConfig c = cfg;
      c.command = cmd;
      if (!cfg.n) c.n = n;
      dispatch(c);
    };
    sub("variance", Range{4, 5});
    sub("census", Range{0, 4});
    sub("kernel", Range{0, 5});
    sub("euclid", Range{2, 5});
    sub("expsum", Range{2, 4});
  } else {
    dispatch(cfg);
  }

  Json doc;
  doc["schema"] = "hankelff/v1";
  doc["command"] = cfg.command;
  doc["params"] = cfg.to_json();
  doc["rows"] = std::move(env.rows);
  doc["informational"] = std::move(env.informational);
  doc["failures"] = std::move(env.failures);

  RunResult res;
  res.exit_code = env.budget_hit ? 2 : (doc["failures"].empty() ? 0 : 1);
  res.document = cfg.format == "csv" ? envelope_to_csv(doc) : doc.dump(2) + "\n";
  return res;
}

}  // namespace hankelff
