#include "detrep/matpoly.hpp"

#include "detrep/constructions.hpp"

#include <random>

namespace detrep {

MatrixQ MatrixPoly::eval(const std::vector<Rational>& x) const {
  MatrixQ r(k, std::vector<Rational>(k, Rational(0)));
  for (const auto& [alpha, c] : C) {
    Rational m = 1;
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < alpha[i]; ++e) m *= x[i];
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) r[a][b] += m * c[a][b];
  }
  return r;
}

MatrixPoly MatrixPoly::random(int n, int d, int k, std::uint64_t seed, int range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> u(-range, range);
  MatrixPoly P{n, d, k, {}};
  for (const auto& alpha : enumerate_Fd(n, d)) {
    MatrixQ c(k, std::vector<Rational>(k));
    for (auto& row : c)
      for (auto& v : row) v = u(rng);
    P.C[alpha] = c;
  }
  return P;
}

Lift lift(const UniformRep& rep, const MatrixPoly& P) {
  if (rep.n != P.n || rep.d != P.d) throw std::invalid_argument("representation and matrix polynomial disagree on (n, d)");
  int k = P.k, N = rep.N;
  Lift L;
  L.N = N;
  L.k = k;
  L.warranted = rep.lift_warranted;
  L.M = zero_affine_matrix(N * k, N * k, rep.n);
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s)
      if (!rep.M0[r][s].is_zero())
        for (int a = 0; a < k; ++a) L.M[r * k + a][s * k + a] += rep.M0[r][s];
  for (const auto& [alpha, cells] : rep.Malpha) {
    auto it = P.C.find(alpha);
    if (it == P.C.end()) continue;
    const MatrixQ& c = it->second;
    for (const auto& cell : cells)
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if (sgn(c[a][b]) != 0) L.M[cell.i * k + a][cell.j * k + b] += c[a][b] * cell.f;
  }
  return L;
}

Rational lift_det(const Lift& L, const std::vector<Rational>& x) {
  std::size_t D = L.M.size();
  MatrixQ m(D, std::vector<Rational>(D));
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) m[i][j] = L.M[i][j].eval(x);
  return det(std::move(m));
}

bool lift_identity(const UniformRep& rep, const MatrixPoly& P) {
  Lift L = lift(rep, P);
  // both determinants have degree <= N k in each variable
  int D = rep.N * P.k;
  int n = rep.n;
  std::vector<int> idx(n, 0);
  std::vector<Rational> x(n);
  while (true) {
    for (int i = 0; i < n; ++i) x[i] = idx[i];
    if (lift_det(L, x) != det(P.eval(x))) return false;
    int i = 0;
    while (i < n && ++idx[i] > D) idx[i++] = 0;
    if (i == n) break;
  }
  return true;
}

UniformRep pad_noncommuting(const UniformRep& rep, const Exponent& a, const Exponent& b) {
  int n = rep.n, N = rep.N;
  UniformRep r(n, rep.d, N + 4);
  r.method = rep.method + "+skew4";
  r.lift_warranted = false;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r.M0[i][j] = rep.M0[i][j];
  for (const auto& [alpha, cells] : rep.Malpha)
    for (const auto& c : cells) r.add(alpha, c.i, c.j, c.f);
  auto one = [&](int s) { return AffineQ::constant(n, Rational(s)); };
  int o = N;
  r.add(a, o + 0, o + 1, one(1));
  r.add(b, o + 0, o + 2, one(1));
  r.M0[o + 0][o + 3] = one(1);
  r.add(a, o + 1, o + 0, one(-1));
  r.M0[o + 1][o + 2] = one(1);
  r.add(b, o + 2, o + 0, one(-1));
  r.M0[o + 2][o + 1] = one(-1);
  r.M0[o + 3][o + 0] = one(-1);
  r.M0[o + 3][o + 3] = one(1);
  return r;
}

namespace {

PolyMatrix poly_multiply(const PolyMatrix& a, const PolyMatrix& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  int nv = a[0][0].nvars();
  PolyMatrix r(n, std::vector<PolyQ>(m, PolyQ(nv)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

PolyMatrix poly_identity(int N, int nv) {
  PolyMatrix r(N, std::vector<PolyQ>(N, PolyQ(nv)));
  for (int i = 0; i < N; ++i) r[i][i] = PolyQ::constant(nv, Rational(1));
  return r;
}

}  // namespace

WitnessReport witness_check(const UniformRep& rep) {
  bool jan = rep.method == "repjan", uni = rep.method == "minunif";
  if (rep.n != 2 || !(jan || uni)) throw Inapplicable("witness_check supports the repjan and minunif families only");
  WitnessReport w;
  int d = rep.d, N = rep.N;
  PolyMatrix M = symbolic_matrix(rep);
  int nv = M[0][0].nvars();
  // V block columns [0, m), W block rows [r0, r0 + m)
  int m = jan ? d + 1 : d, r0 = jan ? d : d - 1;
  if (d == 0) m = 0;
  PolyMatrix Z = poly_identity(N, nv), Q = poly_identity(N, nv);
  PolyQ x = PolyQ::variable(nv, 0), y = PolyQ::variable(nv, 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) Z[i][j] = Z[i - 1][j] * x;
  for (int a = m - 1; a >= 0; --a)
    for (int b = a + 1; b < m; ++b) Q[r0 + a][r0 + b] = Q[r0 + a + 1][r0 + b] * y;
  w.det_q_one = symbolic_det(Q, N) == PolyQ::constant(nv, Rational(1));
  w.det_z_one = symbolic_det(Z, N) == PolyQ::constant(nv, Rational(1));
  PolyMatrix T = poly_multiply(poly_multiply(Q, M), Z);

  // repeatedly peel a row holding a single nonzero among the remaining columns
  std::vector<bool> row_used(N, false), col_used(N, false);
  std::vector<PolyQ> pivots;
  for (int step = 0; step < N; ++step) {
    int pick = -1, pcol = -1;
    for (int r = 0; r < N && pick < 0; ++r) {
      if (row_used[r]) continue;
      int cnt = 0, c0 = -1;
      for (int c = 0; c < N; ++c)
        if (!col_used[c] && !T[r][c].is_zero()) {
          ++cnt;
          c0 = c;
        }
      if (cnt == 1) {
        pick = r;
        pcol = c0;
      }
    }
    if (pick < 0) break;
    row_used[pick] = col_used[pcol] = true;
    w.row_order.push_back(pick);
    w.col_order.push_back(pcol);
    pivots.push_back(T[pick][pcol]);
  }
  w.triangular = static_cast<int>(pivots.size()) == N;
  PolyQ p = generic_poly(2, d), one = PolyQ::constant(nv, Rational(1));
  int count_p = 0;
  bool units = true;
  for (const auto& v : pivots) {
    if (v == p || v == -p)
      ++count_p;
    else if (!(v == one || v == -one))
      units = false;
  }
  w.pass = w.det_q_one && w.det_z_one && w.triangular && units && count_p == 1;
  return w;
}

}  // namespace detrep
