#include "hankelff/hankel.hpp"

#include <algorithm>
#include <sstream>

namespace hankelff {

namespace {

std::vector<uint32_t> poly_to_vec(const Poly& p, size_t len) {
  if (p.c.size() > len) fail(Errc::invalid_argument, "polynomial does not fit the vector length");
  std::vector<uint32_t> v(len, 0);
  std::copy(p.c.begin(), p.c.end(), v.begin());
  return v;
}

Poly vec_to_poly(const Field& f, const std::vector<uint32_t>& v) {
  return Poly::from_coeffs(f, v);
}

int leading_zero_count(const std::vector<uint32_t>& a) {
  int h = 0;
  while (h < int(a.size()) && a[size_t(h)] == 0) ++h;
  return h;
}

}  // namespace

SymbolSeq SymbolSeq::make(const Field& f, std::vector<uint32_t> entries) {
  if (entries.empty()) fail(Errc::invalid_argument, "sequence must have length >= 1");
  for (uint32_t v : entries)
    if (v >= f.q()) fail(Errc::invalid_argument, "sequence entry out of range");
  return SymbolSeq{f, std::move(entries)};
}

SymbolSeq SymbolSeq::prefix(int upto_index) const {
  if (upto_index < 0 || upto_index > n()) fail(Errc::invalid_argument, "prefix out of range");
  return SymbolSeq{field, std::vector<uint32_t>(a.begin(), a.begin() + upto_index + 1)};
}

SymbolSeq SymbolSeq::extended(uint32_t next) const {
  if (next >= field.q()) fail(Errc::invalid_argument, "sequence entry out of range");
  std::vector<uint32_t> b = a;
  b.push_back(next);
  return SymbolSeq{field, std::move(b)};
}

Mat hankel_matrix(const SymbolSeq& s, int l, int m) {
  if (l < 1 || m < 1 || l + m - 2 > s.n())
    fail(Errc::shape_mismatch, "invalid Hankel shape for this sequence");
  Mat h(static_cast<size_t>(l), static_cast<size_t>(m));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < m; ++j) h.at(size_t(i), size_t(j)) = s.a[size_t(i + j)];
  return h;
}

int hankel_rank(const SymbolSeq& s, int l, int m) {
  return int(mat_rank(s.field, hankel_matrix(s, l, m)));
}

std::vector<Poly> hankel_kernel_basis(const SymbolSeq& s, int l, int m) {
  auto vecs = kernel_basis(s.field, hankel_matrix(s, l, m));
  std::vector<Poly> out;
  out.reserve(vecs.size());
  for (auto& v : vecs) out.push_back(vec_to_poly(s.field, v));
  return out;
}

RhoPiProfile rho_pi_profile(const SymbolSeq& s) {
  const int n1 = s.n1(), n2 = s.n2();
  RhoPiProfile prof;
  for (int l = 1; l <= n1; ++l)
    if (mat_det(s.field, hankel_matrix(s, l, l)) != 0) prof.rho = l;
  prof.rank = int(mat_rank(s.field, hankel_matrix(s, n1, n2)));
  prof.pi = prof.rank - prof.rho;
  prof.c1 = prof.rank;
  prof.c2 = s.n() + 2 - prof.rank;
  prof.quasi_regular = (prof.pi == 0);
  return prof;
}

RhoPiForm rho_pi_form(const SymbolSeq& s, int l, int m) {
  if (l + m - 2 != s.n()) fail(Errc::shape_mismatch, "form requires l + m - 2 = n");
  const Field& f = s.field;
  RhoPiProfile prof = rho_pi_profile(s);
  RhoPiForm form;
  form.rho = prof.rho;
  form.pi_observed = prof.pi;
  if (prof.rho == 0 || prof.rho == s.n1() || l <= prof.rho) {
    form.degenerate = true;
    form.alpha_prime = s.a;
    return form;
  }
  const int rho = prof.rho;
  Mat corner = hankel_matrix(s, rho, rho);
  std::vector<uint32_t> rhs(s.a.begin() + rho, s.a.begin() + 2 * rho);
  auto x = solve_square(f, corner, rhs);
  if (!x) fail(Errc::internal, "leading minor certified invertible but solve failed");
  form.x = *x;

  // row operations R_i -= sum_j x_j R_{i-rho+j}, applied from the bottom row
  // upward so each subtraction reads unmodified rows
  Mat h = hankel_matrix(s, l, m);
  for (int i = l; i >= rho + 1; --i)
    for (int j = 0; j < rho; ++j) {
      uint32_t xj = form.x[size_t(j)];
      if (xj == 0) continue;
      for (int col = 0; col < m; ++col)
        h.at(size_t(i - 1), size_t(col)) =
            f.sub(h.at(size_t(i - 1), size_t(col)),
                  f.mul(xj, s.a[size_t(i - rho + j - 1 + col)]));
    }

  form.alpha_prime.assign(s.a.begin(), s.a.begin() + rho + m - 1);
  form.beta.assign(size_t(s.n() - rho + 1), 0);
  std::vector<bool> seen(form.beta.size(), false);
  for (int i = rho; i < l; ++i)
    for (int col = 0; col < m; ++col) {
      size_t pos = size_t(i + col - rho);  // skew-diagonal index minus rho
      uint32_t val = h.at(size_t(i), size_t(col));
      if (!seen[pos]) {
        form.beta[pos] = val;
        seen[pos] = true;
      } else if (form.beta[pos] != val) {
        fail(Errc::internal, "reduced tail is not skew-constant");
      }
    }

  int first_nonzero = -1;
  for (size_t i = 0; i < form.beta.size(); ++i)
    if (form.beta[i] != 0) {
      first_nonzero = int(i) + rho;
      break;
    }
  form.pi_observed = first_nonzero < 0 ? 0 : s.n() + 1 - first_nonzero;
  return form;
}

CharPair char_polys(const SymbolSeq& s) {
  const Field& f = s.field;
  const int n = s.n();
  RhoPiProfile prof = rho_pi_profile(s);
  const int r = prof.rank, c1 = prof.c1, c2 = prof.c2;

  if (r == 0) return CharPair{Poly::one(f), Poly::zero(f)};

  if (n == 0) {
    // single invertible entry; the degree-1 generator never meets a valid
    // shape, so the smallest monic of degree 1 is the canonical choice
    return CharPair{Poly::from_coeffs(f, {0, 1}), Poly::one(f)};
  }

  if (r == 1) {
    auto basis = hankel_kernel_basis(s, n, 2);
    if (basis.size() != 1) fail(Errc::internal, "rank-1 kernel is not one-dimensional");
    Poly a1 = poly_monic(basis[0]);
    Poly a2 = prof.rho == 1 ? Poly::one(f) : poly_shift(Poly::one(f), n + 1);
    return CharPair{a1, a2};
  }

  if (c1 == c2) {
    // near-square full rank with n even: both generators appear together
    auto basis = hankel_kernel_basis(s, c1 - 1, c2 + 1);
    if (basis.size() != 2) fail(Errc::internal, "expected a two-dimensional kernel");
    Poly lo = basis[0], hi = basis[1];
    if (lo.degree() > hi.degree()) std::swap(lo, hi);
    if (hi.degree() != c1) fail(Errc::internal, "no kernel generator of full degree");
    return CharPair{poly_monic(hi), poly_monic(lo)};
  }

  auto basis1 = hankel_kernel_basis(s, n + 1 - c1, c1 + 1);
  if (basis1.size() != 1) fail(Errc::internal, "first generator shape is not one-dimensional");
  Poly a1 = poly_monic(basis1[0]);
  if (a1.degree() != prof.rho) fail(Errc::internal, "first generator degree != rho");

  auto basis2 = hankel_kernel_basis(s, r - 1, c2 + 1);
  std::vector<std::vector<uint32_t>> a1_span;
  for (int j = 0; j + c1 <= c2; ++j)
    a1_span.push_back(poly_to_vec(poly_shift(a1, j), size_t(c2) + 1));
  Poly a2 = Poly::zero(f);
  for (const Poly& cand : basis2)
    if (!in_span(f, poly_to_vec(cand, size_t(c2) + 1), a1_span)) {
      a2 = cand;
      break;
    }
  if (a2.is_zero()) fail(Errc::internal, "no second generator outside the a1 span");

  if (prof.quasi_regular) {
    a2 = poly_monic(poly_mod(a2, a1));
  } else {
    if (a2.degree() != c2) fail(Errc::internal, "second generator degree != c2");
    a2 = poly_monic(a2);
    // unique representative: clear the coefficients reachable by adding
    // multiples of a1 with degree <= c2 - c1
    for (int k = c2 - c1; k >= 0; --k) {
      uint32_t c = a2.coeff(size_t(prof.rho + k));
      if (c != 0) a2 = poly_sub(a2, poly_scale(poly_shift(a1, k), c));
    }
  }
  return CharPair{a1, a2};
}

std::vector<std::vector<uint32_t>> KernelDescription::span_basis() const {
  std::vector<std::vector<uint32_t>> out;
  if (regime == Regime::trivial) return out;
  for (int j = 0; j + c1 + 1 <= m; ++j)
    out.push_back(poly_to_vec(poly_shift(pair.a1, j), size_t(m)));
  if (regime == Regime::double_generator)
    for (int j = 0; j + c2 + 1 <= m; ++j)
      out.push_back(poly_to_vec(poly_shift(pair.a2, j), size_t(m)));
  return out;
}

KernelDescription kernel_predict(const SymbolSeq& s, int l, int m) {
  if (l + m - 2 != s.n() || l < 1 || m < 1)
    fail(Errc::shape_mismatch, "prediction requires l + m - 2 = n");
  RhoPiProfile prof = rho_pi_profile(s);
  KernelDescription d;
  d.c1 = prof.c1;
  d.c2 = prof.c2;
  d.pair = char_polys(s);
  d.m = m;
  if (m <= d.c1) {
    d.regime = KernelDescription::Regime::trivial;
    d.predicted_dim = 0;
  } else if (m <= d.c2) {
    d.regime = KernelDescription::Regime::single_generator;
    d.predicted_dim = m - d.c1;
  } else {
    d.regime = KernelDescription::Regime::double_generator;
    d.predicted_dim = 2 * m - s.n() - 2;
  }
  return d;
}

ConverseResult seq_from_charpolys(const Poly& a1, const Poly& a2, int n) {
  const Field& f = a1.field;
  if (!a1.field.same(a2.field)) fail(Errc::field_mismatch, "characteristic pair fields differ");
  if (a1.is_zero()) fail(Errc::invalid_argument, "first characteristic polynomial must be nonzero");
  if (n < 0) fail(Errc::invalid_argument, "sequence degree parameter must be >= 0");

  Poly a1m = poly_monic(a1);
  const int rho1 = a1m.degree();

  if (a2.is_zero()) {
    if (rho1 != 0) fail(Errc::not_coprime, "gcd(a1, 0) = a1 is not a unit");
    ConverseResult res;
    res.seqs.push_back(SymbolSeq{f, std::vector<uint32_t>(size_t(n) + 1, 0)});
    res.canonical_index = 0;
    res.target = rho_pi_profile(res.seqs[0]);
    return res;
  }

  Poly a2m = poly_monic(a2);
  if (poly_gcd_monic(a1m, a2m).degree() != 0)
    fail(Errc::not_coprime, "characteristic polynomials must be coprime");

  const int D = a2m.degree();
  const int n1 = (n + 2) / 2;
  std::vector<Poly> gens;
  RhoPiProfile target;

  const bool non_quasi = (D >= rho1 + 2) && (n + 2 - D - rho1 >= 1);
  if (non_quasi) {
    const int r = n + 2 - D;
    const int pi1 = r - rho1;
    const int pi_cap = (n % 2 == 0) ? n1 - rho1 - 1 : n1 - rho1;
    if (r > n1 || pi1 > pi_cap)
      fail(Errc::bound_violation,
           "no sequence of this length admits the requested characteristic pair "
           "(pi = " + std::to_string(pi1) + " exceeds its bound)");
    target = RhoPiProfile{r, rho1, pi1, r, n + 2 - r, false};
    for (int j = 0; j <= n - r; ++j) gens.push_back(poly_shift(a1m, j));
    for (int j = 0; j <= n - D; ++j) gens.push_back(poly_shift(a2m, j));
  } else {
    const int r = rho1;
    if (r == 0)
      fail(Errc::bound_violation, "a constant first characteristic polynomial pairs only with 0");
    if (r == 1) {
      if (n < 1) fail(Errc::bound_violation, "n must be at least deg(a1)");
    } else if (n < std::max(r, D) + r - 2) {
      fail(Errc::bound_violation, "n below the admissible range for this pair");
    }
    if (r > n1) fail(Errc::bound_violation, "deg(a1) exceeds the attainable rank");
    target = RhoPiProfile{r, r, 0, r, n + 2 - r, true};
    Poly a2r = poly_monic(poly_mod(a2m, a1m));
    for (int j = 0; j <= n - r; ++j) gens.push_back(poly_shift(a1m, j));
    if (r >= 2)
      for (int j = 0; j <= r - 2; ++j) gens.push_back(poly_shift(a2r, j));
  }

  Mat sys(gens.size(), size_t(n) + 1);
  for (size_t i = 0; i < gens.size(); ++i) {
    auto v = poly_to_vec(gens[i], size_t(n) + 1);
    for (size_t j = 0; j <= size_t(n); ++j) sys.at(i, j) = v[j];
  }
  auto basis = kernel_basis(f, sys);
  if (basis.size() != 1)
    fail(Errc::internal, "orthogonality system has solution dimension " +
                             std::to_string(basis.size()) + ", expected 1");

  std::vector<uint32_t> v = basis[0];
  size_t firstnz = 0;
  while (firstnz < v.size() && v[firstnz] == 0) ++firstnz;
  if (firstnz == v.size()) fail(Errc::internal, "orthogonality solution is zero");
  uint32_t scale = f.inv(v[firstnz]);
  for (auto& c : v) c = f.mul(c, scale);

  ConverseResult res;
  res.target = target;
  for (uint32_t u = 1; u < f.q(); ++u) {
    std::vector<uint32_t> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = f.mul(v[i], u);
    res.seqs.push_back(SymbolSeq{f, std::move(w)});
  }
  res.canonical_index = 0;
  return res;
}

std::pair<RhoPiProfile, CharPair> extend_profile(const SymbolSeq& s, uint32_t next) {
  SymbolSeq ext = s.extended(next);
  return {rho_pi_profile(ext), char_polys(ext)};
}

bool second_charpoly_equivalent(const Poly& cand, const Poly& reference, const Poly& a1,
                                int cap) {
  const Field& f = cand.field;
  for (uint32_t u = 1; u < f.q(); ++u) {
    Poly d = poly_sub(cand, poly_scale(reference, u));
    if (d.is_zero()) return true;
    if (a1.is_zero()) continue;
    if (cap < 0) continue;
    if (d.degree() - a1.degree() > cap) continue;
    if (poly_divides(a1, d)) return true;
  }
  return false;
}

namespace {

bool claimed_kernel_span_matches(const SymbolSeq& trunc, const RhoPiProfile& claimed,
                                 const Poly& ca1, const Poly& ca2) {
  const int nn = trunc.n();
  const int m = nn + 1;
  std::vector<std::vector<uint32_t>> claimed_span;
  for (int j = 0; j + claimed.c1 + 1 <= m; ++j)
    claimed_span.push_back(poly_to_vec(poly_shift(ca1, j), size_t(m)));
  for (int j = 0; j + claimed.c2 + 1 <= m; ++j)
    claimed_span.push_back(poly_to_vec(poly_shift(ca2, j), size_t(m)));
  auto actual = hankel_kernel_basis(trunc, 1, m);
  std::vector<std::vector<uint32_t>> actual_vecs;
  for (const Poly& p : actual) actual_vecs.push_back(poly_to_vec(p, size_t(m)));
  return span_equal(trunc.field, claimed_span, actual_vecs, size_t(m));
}

EuclidLevelCheck check_level(const SymbolSeq& trunc, int level, bool final_level,
                             RhoPiProfile claimed, const Poly& ca1, const Poly& ca2) {
  EuclidLevelCheck lc;
  lc.level = level;
  lc.prefix_degree = trunc.n();
  lc.final_level = final_level;
  lc.claimed = claimed;
  lc.claimed_a1 = poly_monic(ca1);
  lc.claimed_a2 = poly_monic(ca2);
  lc.observed = rho_pi_profile(trunc);
  lc.observed_pair = char_polys(trunc);
  lc.profile_match = (lc.observed == claimed);
  bool a1_ok = (lc.observed_pair.a1 == lc.claimed_a1);
  bool a2_ok = second_charpoly_equivalent(lc.claimed_a2, lc.observed_pair.a2,
                                          lc.observed_pair.a1,
                                          lc.observed.c2 - lc.observed.c1);
  lc.pair_match = a1_ok && a2_ok;
  lc.kernel_span_match = claimed_kernel_span_matches(trunc, claimed, ca1, ca2);
  return lc;
}

}  // namespace

bool EuclidReport::all_asserted_match() const {
  if (!applicable) return !truncation_checked || truncation_match;
  for (const auto& lv : levels)
    if (!lv.final_level && !(lv.profile_match && lv.pair_match && lv.kernel_span_match))
      return false;
  return leading_zeros_match;
}

EuclidReport euclid_correspondence_check(const SymbolSeq& s) {
  EuclidReport rep;
  RhoPiProfile prof = rho_pi_profile(s);
  if (prof.pi != 0 || prof.rank < 2) {
    rep.applicable = false;
    rep.reason = prof.pi != 0 ? "sequence is not quasi-regular" : "rank below 2";
    if (prof.pi >= 1) {
      // the quasi-regular truncation keeps the first characteristic polynomial
      SymbolSeq trunc = s.prefix(s.n() - prof.pi);
      RhoPiProfile tprof = rho_pi_profile(trunc);
      CharPair pair = char_polys(s);
      CharPair tpair = char_polys(trunc);
      bool ok = (tprof.rank == prof.rho && tprof.rho == prof.rho && tprof.pi == 0);
      ok = ok && (tpair.a1 == pair.a1);
      if (prof.rho >= 2)
        ok = ok && second_charpoly_equivalent(pair.a2, tpair.a2, tpair.a1,
                                              tprof.c2 - tprof.c1);
      rep.truncation_checked = true;
      rep.truncation_match = ok;
    }
    return rep;
  }

  rep.applicable = true;
  CharPair pair = char_polys(s);
  EuclidChain chain = euclid_chain(pair.a1, pair.a2);
  rep.chain = chain.polys;
  if (!chain.coprime()) fail(Errc::internal, "characteristic pair of a nonzero sequence not coprime");

  const auto& P = chain.polys;
  const auto& d = chain.degrees;
  size_t t = 0;
  while (t + 1 < P.size() && d[t + 1] >= 2) ++t;  // deg P_t >= 2 > deg P_{t+1}

  rep.levels.push_back(check_level(s, 1, false, prof, P[0], P[1]));
  for (size_t i = 1; i <= t; ++i) {
    SymbolSeq trunc = s.prefix(d[i - 1] + d[i] - 2);
    RhoPiProfile claimed{d[i], d[i], 0, d[i], trunc.n() + 2 - d[i], true};
    rep.levels.push_back(check_level(trunc, int(i) + 1, false, claimed, P[i], P[i + 1]));
  }
  {
    SymbolSeq trunc = s.prefix(d[t]);
    RhoPiProfile claimed;
    if (d[t + 1] == 1)
      claimed = RhoPiProfile{2, 1, 1, 2, trunc.n(), false};
    else
      claimed = RhoPiProfile{2, 0, 2, 2, trunc.n(), false};
    rep.levels.push_back(check_level(trunc, int(t) + 2, true, claimed, P[t + 1], P[t]));
  }

  rep.claimed_leading_zeros = d[P.size() - 2] - 1;
  rep.observed_leading_zeros = leading_zero_count(s.a);
  rep.leading_zeros_match = (rep.claimed_leading_zeros == rep.observed_leading_zeros);
  return rep;
}

KernelStructureCheck kernel_structure_check(const SymbolSeq& s) {
  KernelStructureCheck chk;
  const int n = s.n();
  RhoPiProfile prof = rho_pi_profile(s);
  CharPair pair = char_polys(s);
  for (int m = 1; m <= n + 1; ++m) {
    int l = n + 2 - m;
    auto actual = hankel_kernel_basis(s, l, m);
    KernelDescription d;
    d.c1 = prof.c1;
    d.c2 = prof.c2;
    d.pair = pair;
    d.m = m;
    if (m <= d.c1) {
      d.regime = KernelDescription::Regime::trivial;
      d.predicted_dim = 0;
    } else if (m <= d.c2) {
      d.regime = KernelDescription::Regime::single_generator;
      d.predicted_dim = m - d.c1;
    } else {
      d.regime = KernelDescription::Regime::double_generator;
      d.predicted_dim = 2 * m - n - 2;
    }
    std::vector<std::vector<uint32_t>> actual_vecs;
    for (const Poly& p : actual) actual_vecs.push_back(poly_to_vec(p, size_t(m)));
    bool ok = int(actual.size()) == d.predicted_dim &&
              span_equal(s.field, d.span_basis(), actual_vecs, size_t(m));
    ++chk.shapes_checked;
    if (!ok) {
      ++chk.mismatches;
      chk.mismatch_shapes.push_back(m);
    }
  }
  return chk;
}

namespace {

// resolves the scalar in an update law of the form base + beta * step by
// direct search; returns q when no scalar matches
uint32_t find_scalar(const Field& f, const Poly& base, const Poly& step, const Poly& target,
                     bool unit_only) {
  for (uint32_t b = unit_only ? 1 : 0; b < f.q(); ++b)
    if (poly_add(base, poly_scale(step, b)) == target) return b;
  return uint32_t(f.q());
}

uint32_t find_scalar_in_class(const Field& f, const Poly& base, const Poly& step,
                              const Poly& reference, const Poly& a1, int cap, bool unit_only) {
  for (uint32_t b = unit_only ? 1 : 0; b < f.q(); ++b)
    if (second_charpoly_equivalent(poly_add(base, poly_scale(step, b)), reference, a1, cap))
      return b;
  return uint32_t(f.q());
}

}  // namespace

ExtensionCheck extension_claims_check(const SymbolSeq& s) {
  const Field& f = s.field;
  const int n = s.n(), n1 = s.n1();
  const uint32_t q = uint32_t(f.q());
  RhoPiProfile prof = rho_pi_profile(s);
  CharPair pair = char_polys(s);
  ExtensionCheck chk;
  auto fail_with = [&](const std::string& msg, uint32_t next) {
    chk.ok = false;
    if (chk.detail.empty()) {
      std::ostringstream os;
      os << msg << " at next=" << next << " for sequence of length " << s.a.size();
      chk.detail = os.str();
    }
  };

  std::vector<uint32_t> used_beta;
  auto beta_fresh = [&](uint32_t b) {
    if (std::find(used_beta.begin(), used_beta.end(), b) != used_beta.end()) return false;
    used_beta.push_back(b);
    return true;
  };

  for (uint32_t next = 0; next < q; ++next) {
    auto [eprof, epair] = extend_profile(s, next);
    const int ec1 = eprof.c1, ec2 = eprof.c2;

    if (prof.quasi_regular && prof.rank <= n1 - 1) {
      // one extension keeps the class, the others raise rho's complement
      if (eprof.rank == prof.rank && eprof.rho == prof.rho && eprof.pi == 0) {
        ++chk.stay_count;
        if (!(epair.a1 == pair.a1 && epair.a2 == pair.a2))
          fail_with("stay case must keep the characteristic pair", next);
      } else if (eprof.rank == prof.rank + 1 && eprof.rho == prof.rho && eprof.pi == 1) {
        ++chk.move_count;
        if (!(epair.a1 == pair.a1)) fail_with("first characteristic polynomial must persist", next);
        if (!pair.a2.is_zero()) {
          uint32_t b = find_scalar_in_class(f, poly_shift(pair.a1, prof.c2 - prof.c1), pair.a2,
                                            epair.a2, epair.a1, ec2 - ec1, true);
          if (b == q) fail_with("no unit beta matches the second-polynomial update", next);
          else if (!beta_fresh(b)) fail_with("beta correspondence is not one-to-one", next);
        }
      } else {
        fail_with("extension left the two admissible classes", next);
      }
    } else if (prof.pi >= 1 && prof.rank <= n1 - 1) {
      if (!(eprof.rank == prof.rank + 1 && eprof.rho == prof.rho && eprof.pi == prof.pi + 1)) {
        fail_with("extension must deepen the non-quasi-regular class", next);
      } else {
        ++chk.move_count;
        if (!(epair.a1 == pair.a1)) fail_with("first characteristic polynomial must persist", next);
        uint32_t b = find_scalar_in_class(f, pair.a2, poly_shift(pair.a1, prof.c2 - prof.c1),
                                          epair.a2, epair.a1, ec2 - ec1, false);
        if (b == q) fail_with("no beta matches the second-polynomial update", next);
        else if (!beta_fresh(b)) fail_with("beta correspondence is not one-to-one", next);
      }
    } else if (prof.rank == n1 && prof.quasi_regular && n % 2 == 0) {
      if (!(eprof.rank == n1 && eprof.rho == n1 && eprof.pi == 0)) {
        fail_with("full-rank even-length extension must keep its class", next);
      } else {
        ++chk.stay_count;
        uint32_t b = find_scalar(f, pair.a1, pair.a2, epair.a1, false);
        if (b == q) fail_with("no beta matches the first-polynomial update", next);
        else if (!beta_fresh(b)) fail_with("beta correspondence is not one-to-one", next);
        if (!(epair.a2 == pair.a2)) fail_with("second characteristic polynomial must persist", next);
      }
    } else if (prof.rank == n1 && prof.quasi_regular && n % 2 == 1) {
      if (eprof.rank == n1 && eprof.rho == n1 && eprof.pi == 0) {
        ++chk.stay_count;
        if (!(epair.a1 == pair.a1 && epair.a2 == pair.a2))
          fail_with("stay case must keep the characteristic pair", next);
      } else if (eprof.rank == n1 + 1 && eprof.rho == n1 + 1 && eprof.pi == 0) {
        ++chk.move_count;
        if (!(epair.a2 == pair.a1)) fail_with("old first polynomial must become the second", next);
        // claimed a1' = beta*a2 + T*a1 is one spanning choice of the extended kernel
        auto kernel = hankel_kernel_basis(s.extended(next), eprof.c1 - 1, eprof.c2 + 1);
        std::vector<std::vector<uint32_t>> kv;
        for (const Poly& p : kernel) kv.push_back(poly_to_vec(p, size_t(eprof.c2) + 1));
        uint32_t matched = q;
        for (uint32_t b = 1; b < q && matched == q; ++b) {
          Poly cand = poly_add(poly_scale(pair.a2, b), poly_shift(pair.a1, 1));
          if (cand.degree() == eprof.c1 &&
              in_span(f, poly_to_vec(cand, size_t(eprof.c2) + 1), kv))
            matched = b;
        }
        if (matched == q) fail_with("no unit beta yields a spanning first polynomial", next);
        else if (!beta_fresh(matched)) fail_with("beta correspondence is not one-to-one", next);
      } else {
        fail_with("extension left the two admissible classes", next);
      }
    } else {  // rank == n1, pi >= 1, n odd
      if (!(eprof.rank == n1 + 1 && eprof.rho == n1 + 1 && eprof.pi == 0)) {
        fail_with("extension must complete to full quasi-regular rank", next);
      } else {
        ++chk.move_count;
        if (!(epair.a2 == pair.a1)) fail_with("old first polynomial must become the second", next);
        auto kernel = hankel_kernel_basis(s.extended(next), eprof.c1 - 1, eprof.c2 + 1);
        std::vector<std::vector<uint32_t>> kv;
        for (const Poly& p : kernel) kv.push_back(poly_to_vec(p, size_t(eprof.c2) + 1));
        uint32_t matched = q;
        for (uint32_t b = 0; b < q && matched == q; ++b) {
          Poly cand = poly_add(poly_scale(poly_shift(pair.a1, 1), b), pair.a2);
          if (cand.degree() == eprof.c1 &&
              in_span(f, poly_to_vec(cand, size_t(eprof.c2) + 1), kv))
            matched = b;
        }
        if (matched == q) fail_with("no beta yields a spanning first polynomial", next);
        else if (!beta_fresh(matched)) fail_with("beta correspondence is not one-to-one", next);
      }
    }
  }

  // partition counts per claim
  bool counts_ok = true;
  if (prof.quasi_regular && prof.rank <= n1 - 1)
    counts_ok = (chk.stay_count == 1 && chk.move_count == int(q) - 1);
  else if (prof.pi >= 1 && prof.rank <= n1 - 1)
    counts_ok = (chk.move_count == int(q));
  else if (prof.rank == n1 && prof.quasi_regular && n % 2 == 0)
    counts_ok = (chk.stay_count == int(q));
  else if (prof.rank == n1 && prof.quasi_regular)
    counts_ok = (chk.stay_count == 1 && chk.move_count == int(q) - 1);
  else
    counts_ok = (chk.move_count == int(q));
  if (!counts_ok) {
    chk.ok = false;
    if (chk.detail.empty()) chk.detail = "partition counts disagree with the extension claims";
  }
  return chk;
}

}  // namespace hankelff
