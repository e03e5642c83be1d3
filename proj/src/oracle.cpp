#include "detrep/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace detrep {

namespace {

int y_degree(const PolyC& p) {
  int m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, e[1]);
  return m;
}

// coefficients of p as a polynomial in y (ascending), evaluated at x
std::vector<Complex> y_coeffs(const PolyC& p, Complex x, int deg) {
  std::vector<Complex> a(deg + 1, Complex(0.0, 0.0));
  for (const auto& [e, c] : p.terms()) a[e[1]] += c * std::pow(x, e[0]);
  return a;
}

// sum of |term| feeding each y coefficient; the cancellation scale for trimming
std::vector<double> y_coeff_scales(const PolyC& p, Complex x, int deg) {
  std::vector<double> m(deg + 1, 0.0);
  for (const auto& [e, c] : p.terms()) m[e[1]] += std::abs(c) * std::pow(std::abs(x), e[0]);
  return m;
}

Complex value(const PolyC& p, Complex x, Complex y) {
  Complex s(0.0, 0.0);
  for (const auto& [e, c] : p.terms()) s += c * std::pow(x, e[0]) * std::pow(y, e[1]);
  return s;
}

double scaled_value(const PolyC& p, Complex x, Complex y) {
  double den = 0.0;
  for (const auto& [e, c] : p.terms()) den += std::abs(c) * std::pow(std::abs(x), e[0]) * std::pow(std::abs(y), e[1]);
  double v = std::abs(value(p, x, y));
  return den > 0 ? v / den : v;
}

double residual(const PolyC& p, const PolyC& q, Complex x, Complex y) {
  return std::max(scaled_value(p, x, y), scaled_value(q, x, y));
}

// roots of sum a_k t^k through the companion matrix. A leading coefficient is trimmed when it is
// below 1e-14 of its own scale; without scales the largest |a_k| is used for all of them.
std::vector<Complex> univariate_roots(std::vector<Complex> a, std::vector<double> scale = {}) {
  if (scale.empty()) {
    double big = 0.0;
    for (const auto& v : a) big = std::max(big, std::abs(v));
    scale.assign(a.size(), big);
  }
  while (a.size() > 1 && std::abs(a.back()) <= 1e-14 * scale[a.size() - 1]) a.pop_back();
  int n = static_cast<int>(a.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -a[i] / a[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<Complex> r(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return r;
}

// p(c x - s y, s x + c y)
PolyC rotate_vars(const PolyC& p, double c, double s) {
  PolyC X(2), Y(2);
  X.add_term({1, 0}, c);
  X.add_term({0, 1}, -s);
  Y.add_term({1, 0}, s);
  Y.add_term({0, 1}, c);
  PolyC out(2);
  for (const auto& [e, coef] : p.terms()) {
    PolyC t = PolyC::constant(2, coef);
    for (int k = 0; k < e[0]; ++k) t *= X;
    for (int k = 0; k < e[1]; ++k) t *= Y;
    out += t;
  }
  return out;
}

bool leading_ok(const PolyC& p) {
  int d = p.degree();
  double big = 0.0;
  for (const auto& [e, c] : p.terms()) big = std::max(big, std::abs(c));
  return std::abs(p.coeff({0, d})) > 1e-6 * big;
}

struct Newton {
  PolyC p, q, px, py, qx, qy;
  explicit Newton(const PolyC& p_, const PolyC& q_) : p(p_), q(q_), px(2), py(2), qx(2), qy(2) {
    for (const auto& [e, c] : p.terms()) {
      if (e[0]) px.add_term({e[0] - 1, e[1]}, c * double(e[0]));
      if (e[1]) py.add_term({e[0], e[1] - 1}, c * double(e[1]));
    }
    for (const auto& [e, c] : q.terms()) {
      if (e[0]) qx.add_term({e[0] - 1, e[1]}, c * double(e[0]));
      if (e[1]) qy.add_term({e[0], e[1] - 1}, c * double(e[1]));
    }
  }
  // plain Newton with a residual guard
  void run(Complex& x, Complex& y, int iters) const {
    double res = residual(p, q, x, y);
    for (int it = 0; it < iters; ++it) {
      Complex a = value(px, x, y), b = value(py, x, y), c = value(qx, x, y), d = value(qy, x, y);
      Complex det = a * d - b * c;
      if (std::abs(det) == 0.0) return;
      Complex f = value(p, x, y), g = value(q, x, y);
      Complex nx = x - (d * f - b * g) / det, ny = y - (a * g - c * f) / det;
      double nres = residual(p, q, nx, ny);
      if (!(nres < res) && it > 2) return;
      if (!std::isfinite(nres)) return;
      x = nx;
      y = ny;
      res = nres;
    }
  }
};

// x candidates that yielded no root are counted in `missed`
std::vector<Root> roots_unrotated(const PolyC& p, const PolyC& q, const OracleOptions& opt, int& missed) {
  int d1 = y_degree(p);
  auto res = resultant_coeffs(p, q);
  auto xs = univariate_roots(res);
  missed = 0;
  Newton nt(p, q);
  std::vector<Root> found;
  auto known = [&](Complex x, Complex y) {
    for (const auto& r : found) {
      double s = std::max({1.0, std::abs(x), std::abs(y)});
      if (std::abs(r.x - x) <= opt.dedupe * s && std::abs(r.y - y) <= opt.dedupe * s) return true;
    }
    return false;
  };
  for (Complex x0 : xs) {
    auto ys = univariate_roots(y_coeffs(p, x0, d1), y_coeff_scales(p, x0, d1));
    std::sort(ys.begin(), ys.end(), [&](Complex a, Complex b) { return scaled_value(q, x0, a) < scaled_value(q, x0, b); });
    bool hit = false;
    for (Complex y0 : ys) {
      Complex x = x0, y = y0;
      nt.run(x, y, 30);
      double r = residual(p, q, x, y);
      if (r < opt.tol && !known(x, y)) {
        found.push_back({x, y, r});
        hit = true;
        break;
      }
    }
    if (!hit) ++missed;
  }
  return found;
}

}  // namespace

Eigen::MatrixXcd sylvester_at(const PolyC& p, const PolyC& q, Complex x) {
  int d1 = y_degree(p), d2 = y_degree(q), n = d1 + d2;
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(n, n);
  auto a = y_coeffs(p, x, d1), b = y_coeffs(q, x, d2);
  for (int i = 0; i < d2; ++i)
    for (int k = 0; k <= d1; ++k) S(i, i + k) = a[d1 - k];
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k <= d2; ++k) S(d2 + i, i + k) = b[d2 - k];
  return S;
}

std::vector<Complex> resultant_coeffs(const PolyC& p, const PolyC& q) {
  int K = p.degree() * q.degree() + 1;
  std::vector<Complex> f(K);
  double scale = 0.0;
  for (int k = 0; k < K; ++k) {
    Complex z = std::polar(1.0, 2.0 * M_PI * k / K);
    Eigen::MatrixXcd S = sylvester_at(p, q, z);
    f[k] = S.rows() ? S.partialPivLu().determinant() : Complex(1.0, 0.0);
    double rows = 1.0;
    for (Eigen::Index i = 0; i < S.rows(); ++i) rows *= std::max(S.row(i).norm(), 1e-300);
    scale = std::max(scale, rows);
  }
  double big = 0.0;
  for (const auto& v : f) big = std::max(big, std::abs(v));
  if (big <= 1e-11 * scale) throw OracleError("positive-dimensional solution set (resultant vanishes)");
  // c_j = (1/K) sum_k f_k w^{-jk}
  std::vector<Complex> c(K);
  for (int j = 0; j < K; ++j) {
    Complex s(0.0, 0.0);
    for (int k = 0; k < K; ++k) s += f[k] * std::polar(1.0, -2.0 * M_PI * double(j) * k / K);
    c[j] = s / double(K);
  }
  return c;
}

RootSet oracle_roots(const PolyC& p, const PolyC& q, const OracleOptions& opt) {
  if (p.nvars() != 2 || q.nvars() != 2) throw OracleError("oracle needs bivariate polynomials");
  if (p.is_zero() || q.is_zero()) throw OracleError("zero polynomial input");
  RootSet rs;
  rs.status = "ok";
  if (p.degree() == 0 || q.degree() == 0) return rs;
  std::mt19937_64 rng(opt.seed);
  double c = 1.0, s = 0.0;
  PolyC pp = p, qq = q;
  int rot = 0;
  while (!(leading_ok(pp) && leading_ok(qq))) {
    if (rot++ >= opt.max_rotations) throw OracleError("degenerate leading coefficients persist after rotation");
    double t = std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
    c = std::cos(t);
    s = std::sin(t);
    pp = rotate_vars(p, c, s);
    qq = rotate_vars(q, c, s);
  }
  rs.retries = rot;
  int missed = 0;
  for (auto r : roots_unrotated(pp, qq, opt, missed)) {
    Complex x = c * r.x - s * r.y, y = s * r.x + c * r.y;
    Newton(p, q).run(x, y, 5);
    rs.roots.push_back({x, y, residual(p, q, x, y)});
  }
  if (missed > 0) {
    rs.status = "partial";
    rs.failure = "RootsUnrecovered";
  }
  return rs;
}

double match_roots(const std::vector<Root>& a, const std::vector<Root>& b) {
  const double inf = std::numeric_limits<double>::infinity();
  if (a.size() != b.size()) return inf;
  int n = static_cast<int>(a.size());
  if (n == 0) return 0.0;
  auto dist = [&](int i, int j) {
    double s = std::max({1.0, std::abs(a[i].x), std::abs(a[i].y)});
    return std::max(std::abs(a[i].x - b[j].x), std::abs(a[i].y - b[j].y)) / s;
  };
  // Hungarian algorithm on the distance matrix (1-based potentials)
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = p[j0], j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = dist(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  double worst = 0.0;
  for (int j = 1; j <= n; ++j) worst = std::max(worst, dist(p[j] - 1, j - 1));
  return worst;
}

}  // namespace detrep
