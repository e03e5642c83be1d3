#include "detrep/twopareig.hpp"

#include <Eigen/Eigenvalues>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace detrep {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

template <class Mat>
struct Svd {
  Mat U, V;  // full bases, V not transposed
  VectorXd s;
};

int lapack_gesvd(char ju, char jv, MatrixXd& a, VectorXd& s, MatrixXd& u, MatrixXd& vt) {
  int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  std::vector<double> superb(std::max(1, std::min(m, n)));
  return LAPACKE_dgesvd(LAPACK_COL_MAJOR, ju, jv, m, n, a.data(), std::max(1, m), s.data(), u.data(),
                        std::max(1, m), vt.data(), std::max(1, n), superb.data());
}

int lapack_gesvd(char ju, char jv, MatrixXcd& a, VectorXd& s, MatrixXcd& u, MatrixXcd& vt) {
  int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  std::vector<double> superb(std::max(1, std::min(m, n)));
  return LAPACKE_zgesvd(LAPACK_COL_MAJOR, ju, jv, m, n, a.data(), std::max(1, m), s.data(), u.data(),
                        std::max(1, m), vt.data(), std::max(1, n), superb.data());
}

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixXcld = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;

template <class Mat>
Svd<Mat> svd(Mat a, bool want_u, bool want_v) {
  Svd<Mat> r;
  Eigen::Index m = a.rows(), n = a.cols();
  if constexpr (std::is_same_v<typename Mat::RealScalar, long double>) {
    // no LAPACK for extended precision; Eigen's divide-and-conquer SVD
    if (m == 0 || n == 0) {
      r.s.resize(0);
      r.U = Mat::Identity(m, m);
      r.V = Mat::Identity(n, n);
      return r;
    }
    unsigned flags = (want_u ? Eigen::ComputeFullU : 0) | (want_v ? Eigen::ComputeFullV : 0);
    Eigen::BDCSVD<Mat> dec(a, flags);
    r.s = dec.singularValues().template cast<double>();
    if (want_u) r.U = dec.matrixU();
    if (want_v) r.V = dec.matrixV();
    return r;
  } else {
    r.s.resize(std::min(m, n));
    Mat u(want_u ? m : 1, want_u ? m : 1), vt(want_v ? n : 1, want_v ? n : 1);
    if (m == 0 || n == 0) {
      r.U = Mat::Identity(m, m);
      r.V = Mat::Identity(n, n);
      return r;
    }
    int info = lapack_gesvd(want_u ? 'A' : 'N', want_v ? 'A' : 'N', a, r.s, u, vt);
    if (info != 0) throw std::runtime_error("gesvd failed with info " + std::to_string(info));
    if (want_u) r.U = std::move(u);
    if (want_v) r.V = vt.adjoint();
    return r;
  }
}

// 2-norm estimate by power iteration on A^* A
template <class Mat>
double norm2(const Mat& a) {
  if (a.size() == 0) return 0.0;
  using V = Eigen::Matrix<typename Mat::Scalar, Eigen::Dynamic, 1>;
  V v = V::Ones(a.cols());
  double est = 0.0;
  for (int it = 0; it < 30; ++it) {
    V w = a.adjoint() * (a * v);
    double nw = w.norm();
    if (nw == 0.0) return 0.0;
    double next = std::sqrt(nw / v.norm());
    v = w / static_cast<typename Mat::RealScalar>(nw);
    if (std::abs(next - est) <= 1e-3 * next) return next;
    est = next;
  }
  return est;
}

struct Choice {
  int rank = 0;
  double gap = 0.0, kept = 0.0, dropped = 0.0;
};

// rank with the widest gap among admissible splits of the normalized singular values
Choice decide(const VectorXd& s, double scale, const StaircaseOptions& opt, double floor) {
  int len = static_cast<int>(s.size());
  Choice best;
  best.gap = -1.0;
  for (int r = 0; r <= len; ++r) {
    double next = r < len ? s(r) / scale : 0.0;
    if (next > opt.drop_max) continue;
    double prev = r > 0 ? s(r - 1) / scale : 1.0;
    if (prev < opt.keep_min || (r > 0 && prev <= floor)) break;
    double g = prev / std::max(next, floor);
    if (g > best.gap) best = {r, g, prev, next};
  }
  if (best.gap < 0) best = {len, 0.0, len ? s(len - 1) / scale : 1.0, 0.0};
  return best;
}

template <class Mat>
struct Triple {
  Mat D0, D1, D2;
};

template <class Mat>
Triple<Mat> reduce(Triple<Mat> t, const StaircaseOptions& opt, std::vector<RankDecision>& log) {
  const double eps = static_cast<double>(std::numeric_limits<typename Mat::RealScalar>::epsilon());
  double scale = std::max({norm2(t.D0), norm2(t.D1), norm2(t.D2)});
  double floor = opt.tol > 0 ? opt.tol : eps * std::max<Eigen::Index>(1, t.D0.rows());
  // values dropped so far bound the accumulated error; nothing below them may be kept
  double noise = 0.0;
  if (scale == 0.0) throw StaircaseError(StaircaseError::NoRegularPart, "all Delta matrices vanish", log);
  auto record = [&](const char* stage, const Mat& m, const Choice& c) {
    log.push_back({stage, static_cast<int>(m.rows()), static_cast<int>(m.cols()), c.rank, c.gap, c.kept, c.dropped});
    noise = std::max(noise, c.dropped);
    if (c.gap < opt.gap_ratio)
      throw StaircaseError(StaircaseError::RankDecisionAmbiguous,
                           std::string("ambiguous rank decision at ") + stage, log);
  };
  while (true) {
    Eigen::Index m = t.D0.rows(), n = t.D0.cols();
    if (m == 0 || n == 0) throw StaircaseError(StaircaseError::NoRegularPart, "reduction emptied the pencils", log);
    auto sv = svd(t.D0, true, true);
    Choice c = decide(sv.s, scale, opt, std::max(floor, noise));
    record("D0", t.D0, c);
    int r = c.rank;
    if (r == m && r == n) return t;
    if (r < n) {
      // drop the common column null directions and the rows they map onto
      Mat null = sv.V.rightCols(n - r), keep = sv.V.leftCols(r);
      Mat X(m, 2 * (n - r));
      X << t.D1 * null, t.D2 * null;
      auto sx = svd(X, true, false);
      Choice c2 = decide(sx.s, scale, opt, std::max(floor, noise));
      record("cols", X, c2);
      Mat left = sx.U.rightCols(m - c2.rank);
      t.D0 = left.adjoint() * t.D0 * keep;
      t.D1 = left.adjoint() * t.D1 * keep;
      t.D2 = left.adjoint() * t.D2 * keep;
    } else {
      Mat null = sv.U.rightCols(m - r), keep = sv.U.leftCols(r);
      Mat X(2 * (m - r), n);
      X << null.adjoint() * t.D1, null.adjoint() * t.D2;
      auto sx = svd(X, false, true);
      Choice c2 = decide(sx.s, scale, opt, std::max(floor, noise));
      record("rows", X, c2);
      Mat right = sx.V.rightCols(n - c2.rank);
      t.D0 = keep.adjoint() * t.D0 * right;
      t.D1 = keep.adjoint() * t.D1 * right;
      t.D2 = keep.adjoint() * t.D2 * right;
    }
  }
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

bool is_real(const Eigen::MatrixXcd& m) { return m.imag().cwiseAbs().maxCoeff() == 0.0; }

void fill_matrices(const PolyC& p, Method method, Eigen::MatrixXcd& A0, Eigen::MatrixXcd& A1, Eigen::MatrixXcd& A2) {
  UniformRep rep = construct(2, p.degree(), method);
  auto m = specialize(rep, p);
  int N = rep.N;
  A0.resize(N, N);
  A1.resize(N, N);
  A2.resize(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      A0(i, j) = m[i][j].c;
      A1(i, j) = m[i][j].x[0];
      A2(i, j) = m[i][j].x[1];
    }
}

PolyC derivative(const PolyC& p, int k) {
  PolyC r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Exponent f = e;
    --f[k];
    r.add_term(f, c * double(e[k]));
  }
  return r;
}

Complex eval2(const PolyC& p, Complex x, Complex y) {
  Complex s(0.0, 0.0);
  for (const auto& [e, c] : p.terms()) s += c * std::pow(x, e[0]) * std::pow(y, e[1]);
  return s;
}

}  // namespace

TwoParamProblem to_two_param(const PolyC& p, const PolyC& q, Method method) {
  if (p.nvars() != 2 || q.nvars() != 2) throw InputError("the solver needs bivariate polynomials");
  if (p.is_zero() || q.is_zero()) throw InputError("zero polynomial input");
  if (method != Method::MinUnif && method != Method::RepJan)
    throw InputError("the solver supports the minunif and repjan representations");
  TwoParamProblem tp;
  fill_matrices(p, method, tp.A0, tp.A1, tp.A2);
  fill_matrices(q, method, tp.B0, tp.B1, tp.B2);
  tp.real = is_real(tp.A0) && is_real(tp.A1) && is_real(tp.A2) && is_real(tp.B0) && is_real(tp.B1) && is_real(tp.B2);
  return tp;
}

DeltaTriple build_deltas(const TwoParamProblem& tp) {
  DeltaTriple dt;
  dt.D0 = kron(tp.A1, tp.B2) - kron(tp.A2, tp.B1);
  dt.D1 = kron(tp.A2, tp.B0) - kron(tp.A0, tp.B2);
  dt.D2 = kron(tp.A0, tp.B1) - kron(tp.A1, tp.B0);
  dt.real = tp.real;
  return dt;
}

StaircaseResult staircase(const DeltaTriple& dt, const StaircaseOptions& opt) {
  if (dt.D0.rows() != dt.D0.cols() || dt.D1.rows() != dt.D0.rows() || dt.D2.rows() != dt.D0.rows())
    throw std::invalid_argument("Delta matrices must be square of a common size");
  StaircaseResult res;
  if (opt.extended && dt.real) {
    Triple<MatrixXld> t{dt.D0.real().cast<long double>(), dt.D1.real().cast<long double>(),
                        dt.D2.real().cast<long double>()};
    t = reduce(std::move(t), opt, res.log);
    res.reduced = {t.D0.cast<double>().cast<Complex>(), t.D1.cast<double>().cast<Complex>(),
                   t.D2.cast<double>().cast<Complex>(), true};
  } else if (opt.extended) {
    using CL = std::complex<long double>;
    Triple<MatrixXcld> t{dt.D0.cast<CL>(), dt.D1.cast<CL>(), dt.D2.cast<CL>()};
    t = reduce(std::move(t), opt, res.log);
    auto back = [](const MatrixXcld& m) {
      MatrixXcd r(m.rows(), m.cols());
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          r(i, j) = Complex(static_cast<double>(m(i, j).real()), static_cast<double>(m(i, j).imag()));
      return r;
    };
    res.reduced = {back(t.D0), back(t.D1), back(t.D2), false};
  } else if (dt.real) {
    Triple<MatrixXd> t{dt.D0.real(), dt.D1.real(), dt.D2.real()};
    t = reduce(std::move(t), opt, res.log);
    res.reduced = {t.D0.cast<Complex>(), t.D1.cast<Complex>(), t.D2.cast<Complex>(), true};
  } else {
    Triple<MatrixXcd> t{dt.D0, dt.D1, dt.D2};
    t = reduce(std::move(t), opt, res.log);
    res.reduced = {t.D0, t.D1, t.D2, false};
  }
  return res;
}

RootSet solve_commuting(const DeltaTriple& rt, double commute_tol) {
  RootSet rs;
  Eigen::Index n = rt.size();
  rs.reduced_size = static_cast<int>(n);
  if (n == 0) return rs;
  Eigen::PartialPivLU<MatrixXcd> lu(rt.D0);
  MatrixXcd X = lu.solve(rt.D1), Y = lu.solve(rt.D2);
  double denom = std::max(X.norm() * Y.norm(), std::numeric_limits<double>::min());
  rs.commutator = (X * Y - Y * X).norm() / denom;
  if (!(rs.commutator <= commute_tol)) throw CommuteError("quotient matrices do not commute", rs.commutator);
  // a fixed generic combination separates clusters of equal x (or equal y)
  const Complex gamma(0.5773502691896258, 0.3141592653589793);
  Eigen::ComplexSchur<MatrixXcd> schur(X + gamma * Y);
  const MatrixXcd& U = schur.matrixU();
  MatrixXcd TX = U.adjoint() * X * U, TY = U.adjoint() * Y * U;
  for (Eigen::Index i = 0; i < n; ++i) rs.roots.push_back({TX(i, i), TY(i, i)});
  return rs;
}

std::pair<PolyC, PolyC> rotate_system(const PolyC& p, const PolyC& q, double c, double s) {
  return {Complex(c) * p + Complex(s) * q, Complex(-s) * p + Complex(c) * q};
}

std::pair<PolyC, PolyC> rotate_system(const PolyC& p, const PolyC& q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double t = std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
  return rotate_system(p, q, std::cos(t), std::sin(t));
}

Eigen::Matrix3d random_orthogonal3(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = nd(rng);
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
  return qr.householderQ() * Eigen::Matrix3d::Identity();
}

PolyC projective_transform(const PolyC& p, const Eigen::Matrix3d& Q) {
  int d = p.degree();
  if (p.nvars() != 2) throw std::invalid_argument("projective_transform needs a bivariate polynomial");
  if (p.is_zero()) return p;
  PolyC lin[3] = {PolyC(2), PolyC(2), PolyC(2)};
  for (int i = 0; i < 3; ++i) {
    lin[i].add_term({1, 0}, Q(i, 0));
    lin[i].add_term({0, 1}, Q(i, 1));
    lin[i].add_term({0, 0}, Q(i, 2));
  }
  // powers of each linear form up to d
  std::vector<std::vector<PolyC>> pw(3);
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(PolyC::constant(2, 1.0));
    for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * lin[i]);
  }
  PolyC out(2);
  for (const auto& [e, c] : p.terms()) out += c * (pw[0][e[0]] * pw[1][e[1]] * pw[2][d - e[0] - e[1]]);
  return out;
}

double normalized_residual(const PolyC& p, Complex x, Complex y) {
  double num = 0.0, den = 0.0;
  Complex v(0.0, 0.0);
  double ax = std::abs(x), ay = std::abs(y);
  for (const auto& [e, c] : p.terms()) {
    v += c * std::pow(x, e[0]) * std::pow(y, e[1]);
    den += std::abs(c) * std::pow(ax, e[0]) * std::pow(ay, e[1]);
  }
  num = std::abs(v);
  return den > 0 ? num / den : num;
}

double root_residual(const PolyC& p, const PolyC& q, Complex x, Complex y) {
  return std::max(normalized_residual(p, x, y), normalized_residual(q, x, y));
}

RootSet refine(RootSet rs, const PolyC& p, const PolyC& q, int iters) {
  PolyC px = derivative(p, 0), py = derivative(p, 1), qx = derivative(q, 0), qy = derivative(q, 1);
  for (auto& r : rs.roots) {
    double res = root_residual(p, q, r.x, r.y);
    r.singular_jacobian = false;
    for (int it = 0; it < iters && res > 0.0; ++it) {
      Complex a = eval2(px, r.x, r.y), b = eval2(py, r.x, r.y), c = eval2(qx, r.x, r.y), d = eval2(qy, r.x, r.y);
      Complex det = a * d - b * c;
      // relative to the row norms, so a zero off-diagonal product cannot hide a tiny pivot
      double size = (std::abs(a) + std::abs(b)) * (std::abs(c) + std::abs(d));
      if (size == 0.0 || std::abs(det) <= 1e-13 * size) {
        r.singular_jacobian = true;
        break;
      }
      Complex f = eval2(p, r.x, r.y), g = eval2(q, r.x, r.y);
      Complex nx = r.x - (d * f - b * g) / det, ny = r.y - (a * g - c * f) / det;
      double nres = root_residual(p, q, nx, ny);
      if (!(nres <= res)) break;
      r.x = nx;
      r.y = ny;
      res = nres;
      r.refined = true;
    }
    r.residual = res;
  }
  // multiplicity estimate: size of the cluster each root belongs to
  for (auto& r : rs.roots) {
    r.multiplicity = 0;
    for (const auto& o : rs.roots) {
      double tol = 1e-6 * (1.0 + std::abs(r.x) + std::abs(r.y));
      if (std::abs(o.x - r.x) <= tol && std::abs(o.y - r.y) <= tol) ++r.multiplicity;
    }
  }
  return rs;
}

RootSet solve_system(const PolyC& p, const PolyC& q, const SolveOptions& opt) {
  if (p.nvars() != 2 || q.nvars() != 2) throw InputError("the solver needs bivariate polynomials");
  if (p.is_zero() || q.is_zero()) throw InputError("zero polynomial input");
  int d1 = p.degree(), d2 = q.degree();
  if (std::max(d1, d2) > opt.max_degree)
    throw InputError("degree " + std::to_string(std::max(d1, d2)) + " exceeds the solver cap " +
                     std::to_string(opt.max_degree));
  RootSet best;
  best.status = "failed";
  if (d1 == 0 || d2 == 0) {
    best.status = "ok";
    return best;
  }
  const int expected = d1 * d2;
  auto count_good = [&](const RootSet& r) {
    return static_cast<int>(std::count_if(r.roots.begin(), r.roots.end(),
                                          [&](const Root& x) { return x.residual < opt.accept_residual; }));
  };
  bool have = false;
  std::string last_failure;
  // Q maps the chart of the transformed system back to the original one; identity for plain attempts
  auto attempt_once = [&](const PolyC& pp, const PolyC& qq, const StaircaseOptions& so, const Eigen::Matrix3d* Q,
                          RootSet& rs) {
    try {
      DeltaTriple dt = build_deltas(to_two_param(pp, qq, opt.method));
      StaircaseResult sr = staircase(dt, so);
      rs = solve_commuting(sr.reduced, opt.commute_tol);
      rs.log = std::move(sr.log);
      if (Q) {
        for (auto& r : rs.roots) {
          Eigen::Vector3cd v = Q->cast<Complex>() * Eigen::Vector3cd(r.x, r.y, 1.0);
          r.x = v(0) / v(2);
          r.y = v(1) / v(2);
        }
      }
      rs = refine(std::move(rs), p, q, opt.newton_iters);
      return true;
    } catch (const StaircaseError& e) {
      last_failure = e.kind == StaircaseError::RankDecisionAmbiguous ? "RankDecisionAmbiguous" : "NoRegularPart";
      if (!have) best.log = e.log;
    } catch (const CommuteError&) {
      last_failure = "NonCommutingQuotients";
    }
    return false;
  };
  // rotations first; then projective changes of chart, which move roots near infinity inward.
  // Each attempt runs with the ambiguity guard; an ambiguous reduction is repeated without it
  // and kept only if the roots pass the residual check.
  // a last attempt repeats the plain system in extended precision
  const int total = opt.retries + 1 + opt.projective_retries + (opt.extended_fallback ? 1 : 0);
  for (int attempt = 0; attempt < total; ++attempt) {
    PolyC pp = p, qq = q;
    Eigen::Matrix3d Q;
    bool extended = opt.extended_fallback && attempt == total - 1;
    bool projective = !extended && attempt > opt.retries;
    if (projective) {
      Q = random_orthogonal3(opt.seed * 104729 + attempt);
      pp = projective_transform(p, Q);
      qq = projective_transform(q, Q);
      if (pp.degree() != d1 || qq.degree() != d2) continue;
    } else if (attempt > 0 && !extended) {
      std::tie(pp, qq) = rotate_system(p, q, opt.seed * 7919 + attempt);
    }
    for (int pass = 0; pass < 2; ++pass) {
      StaircaseOptions so = opt.stair;
      so.extended = so.extended || extended;
      if (pass == 1) {
        if (last_failure != "RankDecisionAmbiguous") break;
        so.gap_ratio = 0.0;
      }
      RootSet rs;
      if (!attempt_once(pp, qq, so, projective ? &Q : nullptr, rs)) continue;
      rs.retries = attempt;
      int good = count_good(rs);
      bool complete = rs.reduced_size == expected && good == static_cast<int>(rs.roots.size());
      if (complete) {
        rs.status = "ok";
        return rs;
      }
      last_failure = rs.reduced_size != expected ? "UnexpectedReducedSize" : "ResidualAboveThreshold";
      if (!have || good > count_good(best)) {
        best = std::move(rs);
        have = true;
      }
      break;
    }
  }
  best.retries = total - 1;
  best.failure = last_failure;
  if (have) {
    // keep only roots that passed the residual check
    std::vector<Root> kept;
    for (const auto& r : best.roots)
      if (r.residual < opt.accept_residual) kept.push_back(r);
    best.roots = std::move(kept);
    best.status = best.roots.empty() ? "failed" : "partial";
  }
  return best;
}

}  // namespace detrep
