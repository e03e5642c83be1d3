#include "doctest.h"

#include "test_util.hpp"

#include "detrep/constructions.hpp"

using namespace detrep;
using namespace testutil;

namespace {

PolyQ var(int n, int k) { return PolyQ::variable(n, k); }

// repjan(4), typed in from the published matrix
UniformRep repjan4_literal() {
  UniformRep r(2, 4, 9);
  for (int i = 0; i < 4; ++i) {
    r.M0[i][i] = aff(0, {-1, 0});
    r.M0[i][i + 1] = aff(1, {0, 0});
  }
  for (int k = 0; k <= 4; ++k) {
    int row = 4 + k;
    for (int j = 0; j + k <= 4; ++j) r.add(ex(j, k), row, j, aff(1, {0, 0}));
    if (k < 4) r.M0[row][5 + k] = aff(0, {0, -1});
    if (k > 0) r.M0[row][4 + k] = aff(1, {0, 0});
  }
  return r;
}

// minunif(4), typed in; `printed` keeps the sign of entry (4,4) exactly as printed
UniformRep minunif4_literal(bool printed) {
  UniformRep r(2, 4, 7);
  r.M0[0][0] = aff(0, {-1, 0});
  r.M0[0][1] = aff(1, {0, 0});
  r.M0[1][1] = aff(0, {-1, 0});
  r.M0[1][2] = aff(1, {0, 0});
  r.M0[2][2] = aff(0, {-1, 0});
  r.M0[2][3] = aff(-1, {0, 0});
  long s = printed ? 1 : -1;
  r.add(ex(0, 0), 3, 0, aff(1, {0, 0}));
  r.add(ex(1, 0), 3, 1, aff(1, {0, 0}));
  r.add(ex(2, 0), 3, 2, aff(1, {0, 0}));
  r.add(ex(3, 0), 3, 3, aff(s, {0, 0}));
  r.add(ex(4, 0), 3, 3, aff(0, {s, 0}));
  r.M0[3][4] = aff(0, {0, -1});
  r.add(ex(0, 1), 4, 0, aff(1, {0, 0}));
  r.add(ex(1, 1), 4, 1, aff(1, {0, 0}));
  r.add(ex(2, 1), 4, 2, aff(1, {0, 0}));
  r.add(ex(3, 1), 4, 2, aff(0, {1, 0}));
  r.M0[4][4] = aff(1, {0, 0});
  r.M0[4][5] = aff(0, {0, -1});
  r.add(ex(0, 2), 5, 0, aff(1, {0, 0}));
  r.add(ex(0, 3), 5, 0, aff(0, {0, 1}));
  r.add(ex(1, 2), 5, 1, aff(1, {0, 0}));
  r.add(ex(2, 2), 5, 1, aff(0, {1, 0}));
  r.M0[5][5] = aff(1, {0, 0});
  r.M0[5][6] = aff(0, {0, -1});
  r.add(ex(1, 3), 6, 0, aff(0, {1, 0}));
  r.add(ex(0, 4), 6, 0, aff(0, {0, 1}));
  r.M0[6][6] = aff(1, {0, 0});
  return r;
}

bool same_matrix(const AffineMatrixQ& a, const AffineMatrixQ& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

PolyMatrix poly_matrix(const std::vector<std::vector<PolyQ>>& rows) { return rows; }

}  // namespace

TEST_CASE("symbolic_det examples") {
  PolyQ one = PolyQ::constant(2, Rational(1)), zero(2);
  CHECK(symbolic_det(poly_matrix({{one, zero, zero}, {zero, one, zero}, {zero, zero, one}})) == one);
  CHECK(symbolic_det(poly_matrix({{-var(2, 0), one}, {-var(2, 1), zero}})) == var(2, 1));
  UniformRep r = repjan4_literal();
  PolyMatrix m0 = symbolic_matrix(r);
  for (auto& row : m0)
    for (auto& e : row) {
      // drop the c-variables: keep only terms free of them
      PolyQ keep(e.nvars());
      for (const auto& [a, c] : e.terms())
        if (std::all_of(a.begin() + 2, a.end(), [](int v) { return v == 0; })) keep.add_term(a, c);
      e = keep;
    }
  CHECK(symbolic_det(m0).is_zero());
  PolyMatrix big(14, std::vector<PolyQ>(14, one));
  CHECK_THROWS_AS(symbolic_det(big), CapExceeded);
}

TEST_CASE("symbolic_det agrees with cofactor expansion and evaluation") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> co(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int N = 1 + trial % 6, nv = 2;
    PolyMatrix m(N, std::vector<PolyQ>(N, PolyQ(nv)));
    for (auto& row : m)
      for (auto& e : row) {
        if (rng() % 4 == 0) continue;  // keep some zeros so pivoting is exercised
        e.add_term({0, 0}, Rational(co(rng)));
        e.add_term({1, 0}, Rational(co(rng)));
        e.add_term({0, 1}, Rational(co(rng)));
      }
    PolyQ a = symbolic_det(m), b = cofactor_det(m);
    CHECK(a == b);
    for (int k = 0; k < 10; ++k) {
      std::vector<Rational> pt{frac(co(rng), 1 + rng() % 3), frac(co(rng), 1 + rng() % 3)};
      MatrixQ v(N, std::vector<Rational>(N));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) v[i][j] = m[i][j].eval(pt);
      CHECK(a.eval(pt) == det(v));
    }
  }
}

TEST_CASE("binary quadric fixture verifies, corrupted copy fails with a witness") {
  UniformRep good = rep_from_json(read_json_file(fixture("quadric.json")));
  auto rg = verify(good);
  CHECK(rg.pass);
  CHECK(rg.mode == VerifyMode::Symbolic);
  CHECK_FALSE(rg.witness_x.has_value());

  UniformRep bad = rep_from_json(read_json_file(fixture("quadric_corrupt.json")));
  auto rb = verify(bad);
  CHECK_FALSE(rb.pass);
  REQUIRE(rb.witness_x.has_value());
  REQUIRE(rb.witness_c.has_value());
  CHECK(eval_det(bad, *rb.witness_x, *rb.witness_c) != poly_from(2, 2, *rb.witness_c).eval(*rb.witness_x));

  VerifyOptions ro;
  ro.mode = VerifyMode::Randomized;
  auto rr = verify(bad, ro);
  CHECK_FALSE(rr.pass);
  REQUIRE(rr.witness_x.has_value());
}

TEST_CASE("specialize") {
  UniformRep q = rep_from_json(read_json_file(fixture("quadric.json")));
  std::vector<Rational> pt{frac(3, 2), frac(-7, 3)};
  CHECK(det_at(specialize(q, PolyQ::constant(2, Rational(1))), pt) == 1);
  PolyQ xx = var(2, 0) * var(2, 0);
  auto m = specialize(q, xx);
  CHECK(m[2][1] == aff(0, {1, 0}));
  CHECK(det_at(m, pt) == xx.eval(pt));
  CHECK_THROWS_AS(specialize(q, xx * var(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(specialize(q, PolyQ::constant(3, Rational(1))), std::invalid_argument);

  // repjan(4) literal with random rational coefficients: the determinant, as a polynomial in x, is p
  std::mt19937_64 rng(3);
  UniformRep r = repjan4_literal();
  for (int trial = 0; trial < 3; ++trial) {
    PolyQ p(2);
    for (const auto& e : enumerate_Fd(2, 4)) p.add_term(e, frac(static_cast<long>(rng() % 19) - 9, 1 + rng() % 5));
    auto s = specialize(r, p);
    PolyMatrix pm(9, std::vector<PolyQ>(9));
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) pm[i][j] = s[i][j].to_poly();
    CHECK(symbolic_det(pm) == p);
  }
}

TEST_CASE("repjan(4) literal verifies and coincides with repjan(4)") {
  UniformRep r = repjan4_literal();
  CHECK(verify(r).pass);
  UniformRep j = repjan(4);
  REQUIRE(j.N == 9);
  CHECK(same_matrix(j.M0, r.M0));
  for (const auto& e : enumerate_Fd(2, 4)) CHECK(same_matrix(j.dense(e), r.dense(e)));
  CHECK(j.dense(ex(0, 0))[4][0] == aff(1, {0, 0}));
  CHECK(j.dense(ex(0, 4))[8][0] == aff(1, {0, 0}));
}

TEST_CASE("minunif(4) literal: printed sign defect and the corrected matrix") {
  // the printed matrix misses p by -2 x^3 (c30 + c40 x); reference values from tests/oracles/derive.py
  UniformRep printed = minunif4_literal(true);
  CHECK_FALSE(verify(printed).pass);
  std::vector<Rational> x{Rational(2), Rational(5)};
  std::mt19937_64 rng(9);
  auto c = random_ints(15, rng);
  Rational c30 = c[graded_index(ex(3, 0), 4)], c40 = c[graded_index(ex(4, 0), 4)];
  CHECK(eval_det(printed, x, c) == poly_from(2, 4, c).eval(x) - 2 * 8 * (c30 + c40 * 2));

  UniformRep fixed = minunif4_literal(false);
  auto rep = verify(fixed);
  CHECK(rep.pass);
  CHECK(rep.mode == VerifyMode::Symbolic);
  CHECK(det_M0_vanishes(fixed));
}

TEST_CASE("randomized verification") {
  UniformRep r = minunif(5);
  VerifyOptions o;
  o.mode = VerifyMode::Randomized;
  o.seed = 42;
  auto a = verify(r, o), b = verify(r, o);
  CHECK(a.pass);
  CHECK(a.trials == 20);
  CHECK(a.failure_bound == b.failure_bound);
  CHECK(a.failure_bound >= 0.0);
  CHECK(a.failure_bound <= 1.0);
  // symbolic pass implies randomized pass
  for (int d = 1; d <= 4; ++d) {
    UniformRep m = minunif(d);
    CHECK(verify(m).pass);
    CHECK(verify(m, o).pass);
  }
}

TEST_CASE("rank profile of M0") {
  auto p = rank_profile_M0(repjan4_literal(), 20, 5);
  CHECK(p.min_rank == 8);
  CHECK(p.max_rank == 8);
  UniformRep q = rep_from_json(read_json_file(fixture("quadric.json")));
  auto pq = rank_profile_M0(q, 20, 6);
  CHECK(pq.min_rank == 2);
  CHECK(pq.max_rank == 2);
  UniformRep broken = repjan4_literal();
  for (int i = 0; i < 9; ++i) broken.M0[i][0] = broken.M0[i][1] = aff(0, {0, 0});
  CHECK(rank_profile_M0(broken, 20, 7).max_rank <= 7);
}

TEST_CASE("minor span") {
  UniformRep q = rep_from_json(read_json_file(fixture("quadric.json")));
  auto a = minor_span_check(q);
  CHECK(a.pass);
  CHECK(a.dim_V == 3);
  // dim V = 9 for minunif(3), frozen from tests/oracles/derive.py
  auto b = minor_span_check(minunif(3));
  CHECK(b.pass);
  CHECK(b.dim_V == 9);
  UniformRep z(2, 1, 2);
  CHECK_FALSE(minor_span_check(z).pass);
  CHECK_THROWS_AS(minor_span_check(minunif(8)), CapExceeded);
}

TEST_CASE("det(M0) vanishes on emitted representations") {
  for (int d = 1; d <= 5; ++d) {
    CHECK(det_M0_vanishes(repjan(d)));
    CHECK(det_M0_vanishes(minunif(d)));
  }
  UniformRep bad(1, 1, 1);
  bad.M0[0][0] = aff(1, {0});
  CHECK_FALSE(det_M0_vanishes(bad));
}
