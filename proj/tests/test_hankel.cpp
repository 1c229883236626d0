#include <doctest.h>

#include <functional>
#include <set>

#include "hankelff/hankel.hpp"

using namespace hankelff;

namespace {

Poly P(const Field& f, std::vector<uint32_t> c) { return Poly::from_coeffs(f, std::move(c)); }
SymbolSeq S(const Field& f, std::vector<uint32_t> a) { return SymbolSeq::make(f, std::move(a)); }

std::vector<uint32_t> decode(uint64_t idx, uint64_t q, int len) {
  std::vector<uint32_t> a(static_cast<size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    a[size_t(i)] = uint32_t(idx % q);
    idx /= q;
  }
  return a;
}

template <class Fn>
void for_all_seqs(const Field& f, int n, Fn fn) {
  uint64_t total = 1;
  for (int i = 0; i <= n; ++i) total *= f.q();
  for (uint64_t idx = 0; idx < total; ++idx) fn(S(f, decode(idx, f.q(), n + 1)));
}

// rank as log_q of the row-space size, independent of elimination
int brute_rank(const Field& f, const SymbolSeq& s, int l, int m) {
  Mat h = hankel_matrix(s, l, m);
  std::set<std::vector<uint32_t>> space;
  uint64_t combos = 1;
  for (int i = 0; i < l; ++i) combos *= f.q();
  for (uint64_t idx = 0; idx < combos; ++idx) {
    auto coef = decode(idx, f.q(), l);
    std::vector<uint32_t> v(size_t(m), 0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < m; ++j)
        v[size_t(j)] = f.add(v[size_t(j)], f.mul(coef[size_t(i)], h.at(size_t(i), size_t(j))));
    space.insert(std::move(v));
  }
  int r = 0;
  uint64_t sz = space.size();
  while (sz > 1) {
    sz /= f.q();
    ++r;
  }
  return r;
}

// kernel as the explicit solution set, independent of elimination
std::set<std::vector<uint32_t>> brute_kernel(const Field& f, const SymbolSeq& s, int l, int m) {
  Mat h = hankel_matrix(s, l, m);
  std::set<std::vector<uint32_t>> out;
  uint64_t total = 1;
  for (int i = 0; i < m; ++i) total *= f.q();
  for (uint64_t idx = 0; idx < total; ++idx) {
    auto v = decode(idx, f.q(), m);
    bool ok = true;
    for (int i = 0; i < l && ok; ++i) {
      uint32_t acc = 0;
      for (int j = 0; j < m; ++j) acc = f.add(acc, f.mul(h.at(size_t(i), size_t(j)), v[size_t(j)]));
      ok = (acc == 0);
    }
    if (ok) out.insert(v);
  }
  return out;
}

std::set<std::vector<uint32_t>> span_of(const Field& f,
                                        const std::vector<std::vector<uint32_t>>& basis,
                                        size_t dim) {
  std::set<std::vector<uint32_t>> out;
  uint64_t combos = 1;
  for (size_t i = 0; i < basis.size(); ++i) combos *= f.q();
  for (uint64_t idx = 0; idx < combos; ++idx) {
    auto coef = decode(idx, f.q(), int(basis.size()));
    std::vector<uint32_t> v(dim, 0);
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < dim; ++j)
        v[j] = f.add(v[j], f.mul(coef[i], basis[i][j]));
    out.insert(std::move(v));
  }
  return out;
}

std::vector<uint32_t> to_vec(const Poly& p, size_t len) {
  std::vector<uint32_t> v(len, 0);
  for (size_t i = 0; i < p.c.size(); ++i) v[i] = p.c[i];
  return v;
}

}  // namespace

TEST_CASE("rank examples") {
  Field f2 = Field::make(2);
  CHECK(hankel_rank(S(f2, {0, 0, 0}), 2, 2) == 0);
  CHECK(hankel_rank(S(f2, {1, 0, 1}), 2, 2) == 2);
  CHECK(hankel_rank(S(f2, {1, 0, 1, 0, 1}), 3, 3) == 2);
}

TEST_CASE("rank agrees with the row-space oracle") {
  for (const Field& f : {Field::make(2), Field::make(3)}) {
    for (int n = 0; n <= (f.q() == 2 ? 4 : 3); ++n)
      for_all_seqs(f, n, [&](const SymbolSeq& s) {
        for (int m = 1; m <= n + 1; ++m) {
          int l = n + 2 - m;
          CHECK(hankel_rank(s, l, m) == brute_rank(f, s, l, m));
        }
      });
  }
}

TEST_CASE("kernel basis examples") {
  Field f2 = Field::make(2);
  auto basis = hankel_kernel_basis(S(f2, {1, 0, 1}), 1, 3);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == P(f2, {0, 1}));      // T
  CHECK(basis[1] == P(f2, {1, 0, 1}));   // T^2 + 1
  CHECK(hankel_kernel_basis(S(f2, {1, 0, 1}), 2, 2).empty());
  auto b2 = hankel_kernel_basis(S(f2, {0, 0, 1}), 2, 2);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0] == Poly::one(f2));
}

TEST_CASE("kernel basis spans the full solution set") {
  Field f2 = Field::make(2);
  for (int n = 1; n <= 4; ++n)
    for_all_seqs(f2, n, [&](const SymbolSeq& s) {
      for (int m = 1; m <= n + 1; ++m) {
        int l = n + 2 - m;
        auto basis = hankel_kernel_basis(s, l, m);
        std::vector<std::vector<uint32_t>> vecs;
        for (const Poly& p : basis) vecs.push_back(to_vec(p, size_t(m)));
        CHECK(span_of(f2, vecs, size_t(m)) == brute_kernel(f2, s, l, m));
      }
    });
}

TEST_CASE("profile examples") {
  Field f2 = Field::make(2);
  RhoPiProfile z = rho_pi_profile(S(f2, {0, 0, 0, 0}));
  CHECK(z.rank == 0);
  CHECK(z.rho == 0);
  CHECK(z.pi == 0);
  RhoPiProfile p1 = rho_pi_profile(S(f2, {0, 0, 1}));
  CHECK(p1.rank == 1);
  CHECK(p1.rho == 0);
  CHECK(p1.pi == 1);
  RhoPiProfile p2 = rho_pi_profile(S(f2, {1, 0, 1, 0, 1}));
  CHECK(p2.rank == 2);
  CHECK(p2.rho == 2);
  CHECK(p2.pi == 0);
  CHECK(p2.c1 == 2);
  CHECK(p2.c2 == 4);
}

TEST_CASE("rectangular rank follows min(l, m, rank)") {
  for (const Field& f : {Field::make(2), Field::make(3)}) {
    for (int n = 0; n <= (f.q() == 2 ? 6 : 5); ++n)
      for_all_seqs(f, n, [&](const SymbolSeq& s) {
        int r = rho_pi_profile(s).rank;
        for (int m = 1; m <= n + 1; ++m)
          CHECK(hankel_rank(s, n + 2 - m, m) == std::min(std::min(n + 2 - m, m), r));
      });
  }
}

TEST_CASE("reduced-form examples") {
  Field f2 = Field::make(2);
  RhoPiForm f1 = rho_pi_form(S(f2, {1, 1, 1, 1, 1}), 3, 3);
  CHECK(!f1.degenerate);
  CHECK(f1.x == std::vector<uint32_t>{1});
  CHECK(f1.beta == std::vector<uint32_t>{0, 0, 0, 0});
  CHECK(f1.pi_observed == 0);

  RhoPiForm f2f = rho_pi_form(S(f2, {1, 0, 0, 0, 1}), 3, 3);
  CHECK(f2f.x == std::vector<uint32_t>{0});
  CHECK(f2f.beta == std::vector<uint32_t>{0, 0, 0, 1});
  CHECK(f2f.pi_observed == 1);

  CHECK(rho_pi_form(S(f2, {0, 0, 1}), 2, 2).degenerate);
  CHECK_THROWS_AS((void)rho_pi_form(S(f2, {1, 0, 1}), 2, 3), Error);
}

TEST_CASE("reduced-form tail is shape independent and matches the profile") {
  for (const Field& f : {Field::make(2), Field::make(3)}) {
    for (int n = 2; n <= (f.q() == 2 ? 6 : 4); ++n)
      for_all_seqs(f, n, [&](const SymbolSeq& s) {
        RhoPiProfile prof = rho_pi_profile(s);
        if (prof.rho < 1 || prof.rho >= s.n1()) return;
        for (int l = prof.rho + 2; l <= n + 1; ++l) {
          RhoPiForm a = rho_pi_form(s, l, n + 2 - l);
          RhoPiForm b = rho_pi_form(s, l - 1, n + 3 - l);
          CHECK(a.beta == b.beta);
          CHECK(a.pi_observed == prof.pi);
          // zero pattern: everything below the last pi entries vanishes
          for (size_t i = 0; i < a.beta.size(); ++i) {
            int skew = int(i) + prof.rho;
            if (skew < n + 1 - prof.pi) CHECK(a.beta[i] == 0);
            if (prof.pi >= 1 && skew == n + 1 - prof.pi) CHECK(a.beta[i] != 0);
          }
        }
      });
  }
}

TEST_CASE("kernel shift property") {
  for (const Field& f : {Field::make(2), Field::make(3)}) {
    for (int n = 1; n <= (f.q() == 2 ? 5 : 4); ++n)
      for_all_seqs(f, n, [&](const SymbolSeq& s) {
        for (int m = 1; m <= n; ++m) {
          int l = n + 2 - m;
          auto ker = brute_kernel(f, s, l, m);
          auto wide = brute_kernel(f, s, l - 1, m + 1);
          for (const auto& v : ker) {
            std::vector<uint32_t> right(v);
            right.push_back(0);
            std::vector<uint32_t> left(v.size() + 1, 0);
            std::copy(v.begin(), v.end(), left.begin() + 1);
            CHECK(wide.count(right) == 1);
            CHECK(wide.count(left) == 1);
          }
        }
      });
  }
}

TEST_CASE("characteristic pair examples") {
  Field f2 = Field::make(2);
  CharPair z = char_polys(S(f2, {0, 0, 0, 0}));
  CHECK(z.a1 == Poly::one(f2));
  CHECK(z.a2.is_zero());

  CharPair t = char_polys(S(f2, {0, 0, 1}));
  CHECK(t.a1 == Poly::one(f2));
  CHECK(t.a2 == P(f2, {0, 0, 0, 1}));  // T^{n+1}

  CharPair m = char_polys(S(f2, {1, 0, 1, 0, 1}));
  CHECK(m.a1 == P(f2, {1, 0, 1}));
  CHECK(m.a2 == P(f2, {0, 1}));
}

TEST_CASE("characteristic pairs are coprime with the stated degrees") {
  for (const Field& f : {Field::make(2), Field::make(3)}) {
    for (int n = 0; n <= (f.q() == 2 ? 6 : 5); ++n)
      for_all_seqs(f, n, [&](const SymbolSeq& s) {
        RhoPiProfile prof = rho_pi_profile(s);
        CharPair cp = char_polys(s);
        if (prof.rank == 0) {
          CHECK(cp.a2.is_zero());
          return;
        }
        CHECK(cp.a1.degree() == prof.rho);
        CHECK(cp.a1.is_monic());
        CHECK(poly_gcd_monic(cp.a1, cp.a2).degree() == 0);
        CHECK(cp.a2.degree() <= prof.c2);
        if (prof.pi >= 1 && prof.rank >= 2) CHECK(cp.a2.degree() == prof.c2);
      });
  }
}

TEST_CASE("kernel prediction examples") {
  Field f2 = Field::make(2);
  SymbolSeq s = S(f2, {1, 0, 1, 0, 1});
  KernelDescription d1 = kernel_predict(s, 4, 2);
  CHECK(d1.regime == KernelDescription::Regime::trivial);
  CHECK(d1.predicted_dim == 0);
  KernelDescription d2 = kernel_predict(s, 2, 4);
  CHECK(d2.regime == KernelDescription::Regime::single_generator);
  CHECK(d2.predicted_dim == 2);
  auto basis = d2.span_basis();
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == std::vector<uint32_t>{1, 0, 1, 0});
  CHECK(basis[1] == std::vector<uint32_t>{0, 1, 0, 1});
  KernelDescription d3 = kernel_predict(s, 1, 5);
  CHECK(d3.regime == KernelDescription::Regime::double_generator);
  CHECK(d3.predicted_dim == 4);
}

TEST_CASE("kernel structure matches elimination everywhere (small sweep)") {
  for (const Field& f : {Field::make(2), Field::make(3)}) {
    for (int n = 0; n <= (f.q() == 2 ? 6 : 4); ++n)
      for_all_seqs(f, n, [&](const SymbolSeq& s) {
        KernelStructureCheck chk = kernel_structure_check(s);
        CHECK(chk.mismatches == 0);
      });
  }
}

TEST_CASE("converse construction examples") {
  Field f2 = Field::make(2);
  ConverseResult res = seq_from_charpolys(P(f2, {1, 0, 1}), P(f2, {0, 1}), 4);
  REQUIRE(res.seqs.size() == 1);  // q - 1
  CHECK(res.seqs[0].a == std::vector<uint32_t>{1, 0, 1, 0, 1});

  ConverseResult z = seq_from_charpolys(Poly::one(f2), Poly::zero(f2), 3);
  REQUIRE(z.seqs.size() == 1);
  CHECK(z.seqs[0].a == std::vector<uint32_t>{0, 0, 0, 0});

  Poly sq = poly_mul(P(f2, {1, 1}), P(f2, {1, 1}));
  Poly pr = poly_mul(P(f2, {1, 1}), P(f2, {0, 1}));
  CHECK_THROWS_AS((void)seq_from_charpolys(sq, pr, 6), Error);
}

TEST_CASE("round-trip through the converse construction") {
  for (const Field& f : {Field::make(2), Field::make(3)}) {
    for (int n = 0; n <= (f.q() == 2 ? 6 : 5); ++n)
      for_all_seqs(f, n, [&](const SymbolSeq& s) {
        RhoPiProfile prof = rho_pi_profile(s);
        if (prof.pi != 0) return;
        CharPair cp = char_polys(s);
        if (s.n() == 0) return;  // no kernel-bearing shape exists at this length
        ConverseResult res = seq_from_charpolys(cp.a1, cp.a2, s.n());
        CHECK(res.seqs.size() == (prof.rank == 0 ? 1 : f.q() - 1));
        bool found = false;
        for (const SymbolSeq& cand : res.seqs) {
          CHECK(rho_pi_profile(cand) == prof);
          CharPair back = char_polys(cand);
          CHECK(back.a1 == cp.a1);
          CHECK(back.a2 == cp.a2);
          if (cand.a == s.a) found = true;
        }
        CHECK(found);
      });
  }
}

TEST_CASE("converse construction for a non-quasi-regular target") {
  Field f2 = Field::make(2);
  Poly a1 = P(f2, {0, 0, 1});           // T^2
  Poly a2 = P(f2, {1, 1, 0, 0, 1});     // T^4 + T + 1, coprime to T^2
  // second characteristic degree 4 forces n = 5 when pi = 1
  ConverseResult res = seq_from_charpolys(a1, a2, 5);
  REQUIRE(res.seqs.size() == 1);
  CHECK(res.seqs[0].a == std::vector<uint32_t>{1, 1, 0, 0, 0, 1});
  RhoPiProfile prof = rho_pi_profile(res.seqs[0]);
  CHECK(prof.rank == 3);
  CHECK(prof.rho == 2);
  CHECK(prof.pi == 1);
  CharPair back = char_polys(res.seqs[0]);
  CHECK(back.a1 == a1);
  CHECK(back.a2.degree() == 4);
  CHECK(second_charpoly_equivalent(a2, back.a2, back.a1, prof.c2 - prof.c1));
}

TEST_CASE("converse construction rejects the boundary pi value") {
  // at n = 2 deg(a2) - 2 the requested class collides with the parity bound
  // on pi for sequences of even degree parameter; solving the orthogonality
  // system there lands in the full-rank class with the pair swapped instead
  Field f2 = Field::make(2);
  Poly a1 = P(f2, {0, 0, 1});
  Poly a2 = P(f2, {1, 1, 0, 0, 1});
  CHECK_THROWS_AS((void)seq_from_charpolys(a1, a2, 6), Error);

  SymbolSeq swapped = S(f2, {1, 1, 0, 0, 0, 1, 0});  // the direct solution at n = 6
  RhoPiProfile prof = rho_pi_profile(swapped);
  CHECK(prof.rank == 4);
  CHECK(prof.rho == 4);
  CHECK(prof.pi == 0);
  CharPair cp = char_polys(swapped);
  CHECK(cp.a1 == a2);
  CHECK(cp.a2 == a1);
}

TEST_CASE("extension examples") {
  Field f2 = Field::make(2);
  auto [p1, c1] = extend_profile(S(f2, {1, 1, 1, 1}), 1);
  CHECK(p1 == RhoPiProfile{1, 1, 0, 0, 0, true});
  auto [p2, c2] = extend_profile(S(f2, {1, 1, 1, 1}), 0);
  CHECK(p2 == RhoPiProfile{2, 1, 1, 0, 0, false});
  auto [p3, c3] = extend_profile(S(f2, {0, 0, 1}), 0);
  CHECK(p3 == RhoPiProfile{2, 0, 2, 0, 0, false});
  auto [p4, c4] = extend_profile(S(f2, {0, 0, 1}), 1);
  CHECK(p4 == RhoPiProfile{2, 0, 2, 0, 0, false});
  auto [p5, c5] = extend_profile(S(f2, {1, 0, 1}), 0);
  CHECK(p5 == RhoPiProfile{2, 2, 0, 0, 0, true});
  auto [p6, c6] = extend_profile(S(f2, {1, 0, 1}), 1);
  CHECK(p6 == RhoPiProfile{2, 2, 0, 0, 0, true});
}

TEST_CASE("extension claims hold exhaustively (small sweep)") {
  for (const Field& f : {Field::make(2), Field::make(3)}) {
    for (int n = 0; n <= (f.q() == 2 ? 5 : 4); ++n)
      for_all_seqs(f, n, [&](const SymbolSeq& s) {
        ExtensionCheck chk = extension_claims_check(s);
        CHECK(chk.ok);
        if (!chk.ok) MESSAGE(chk.detail);
      });
  }
}

TEST_CASE("euclid correspondence worked example") {
  Field f2 = Field::make(2);
  EuclidReport rep = euclid_correspondence_check(S(f2, {1, 0, 1, 0, 1}));
  REQUIRE(rep.applicable);
  REQUIRE(rep.chain.size() == 3);
  CHECK(rep.chain[0] == P(f2, {1, 0, 1}));
  CHECK(rep.chain[1] == P(f2, {0, 1}));
  CHECK(rep.chain[2] == Poly::one(f2));
  CHECK(rep.claimed_leading_zeros == 0);
  CHECK(rep.observed_leading_zeros == 0);
  CHECK(rep.leading_zeros_match);
  REQUIRE(rep.levels.size() == 2);
  CHECK(!rep.levels[0].final_level);
  CHECK(rep.levels[0].profile_match);
  CHECK(rep.levels[0].pair_match);
  CHECK(rep.levels[0].kernel_span_match);
  // the final chain step claims (2,1,1) but the truncation (1,0,1) is
  // full-rank quasi-regular; the kernel itself still matches the description
  const EuclidLevelCheck& fin = rep.levels[1];
  CHECK(fin.final_level);
  CHECK(fin.claimed.rank == 2);
  CHECK(fin.claimed.rho == 1);
  CHECK(fin.claimed.pi == 1);
  CHECK(fin.observed.rho == 2);
  CHECK(fin.observed.pi == 0);
  CHECK(!fin.profile_match);
  CHECK(fin.kernel_span_match);
  CHECK(rep.all_asserted_match());
}

TEST_CASE("euclid correspondence truncation claim for pi >= 1") {
  Field f2 = Field::make(2);
  EuclidReport rep = euclid_correspondence_check(S(f2, {0, 0, 1}));
  CHECK(!rep.applicable);
  CHECK(rep.truncation_checked);
  CHECK(rep.truncation_match);
}

TEST_CASE("second characteristic polynomial equivalence") {
  Field f3 = Field::make(3);
  Poly a1 = P(f3, {1, 0, 1});
  Poly a2 = P(f3, {0, 1});
  CHECK(second_charpoly_equivalent(poly_add(a2, a1), a2, a1, 0));
  CHECK(second_charpoly_equivalent(poly_scale(a2, 2), a2, a1, 0));
  CHECK(!second_charpoly_equivalent(poly_add(a2, poly_shift(a1, 1)), a2, a1, 0));
  CHECK(second_charpoly_equivalent(poly_add(a2, poly_shift(a1, 1)), a2, a1, 1));
}
