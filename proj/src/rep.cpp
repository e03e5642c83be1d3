#include "detrep/rep.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <random>
#include <unordered_map>

namespace detrep {

UniformRep::UniformRep(int n_, int d_, int N_) : n(n_), d(d_), N(N_), M0(zero_affine_matrix(N_, N_, n_)) {}

AffineMatrixQ zero_affine_matrix(int rows, int cols, int n) {
  return AffineMatrixQ(rows, std::vector<AffineQ>(cols, AffineQ(n)));
}

void UniformRep::add(const Exponent& alpha, int i, int j, const AffineQ& f) {
  if (static_cast<int>(alpha.size()) != n || total_degree(alpha) > d)
    throw std::invalid_argument("coefficient index outside F_d");
  auto& cells = Malpha[alpha];
  for (auto it = cells.begin(); it != cells.end(); ++it) {
    if (it->i == i && it->j == j) {
      it->f += f;
      if (it->f.is_zero()) cells.erase(it);
      if (cells.empty()) Malpha.erase(alpha);
      return;
    }
  }
  if (f.is_zero()) {
    if (cells.empty()) Malpha.erase(alpha);
    return;
  }
  cells.push_back({i, j, f});
}

AffineMatrixQ UniformRep::dense(const Exponent& alpha) const {
  auto m = zero_affine_matrix(N, N, n);
  auto it = Malpha.find(alpha);
  if (it != Malpha.end())
    for (const auto& c : it->second) m[c.i][c.j] = c.f;
  return m;
}

namespace {

template <class S>
S convert(const Rational& q);
template <>
Rational convert<Rational>(const Rational& q) {
  return q;
}
template <>
Complex convert<Complex>(const Rational& q) {
  return Complex(q.get_d(), 0.0);
}

template <class S>
Affine<S> convert_affine(const AffineQ& a) {
  Affine<S> r(a.nvars());
  r.c = convert<S>(a.c);
  for (int i = 0; i < a.nvars(); ++i) r.x[i] = convert<S>(a.x[i]);
  return r;
}

}  // namespace

template <class S>
AffineMatrix<S> specialize(const UniformRep& rep, const Poly<S>& coeffs) {
  if (coeffs.nvars() != rep.n) throw std::invalid_argument("variable count mismatch");
  if (coeffs.degree() > rep.d) throw std::invalid_argument("polynomial degree exceeds representation degree");
  AffineMatrix<S> m(rep.N, std::vector<Affine<S>>(rep.N, Affine<S>(rep.n)));
  for (int i = 0; i < rep.N; ++i)
    for (int j = 0; j < rep.N; ++j) m[i][j] = convert_affine<S>(rep.M0[i][j]);
  for (const auto& [alpha, cells] : rep.Malpha) {
    S c = coeffs.coeff(alpha);
    if (ScalarOps<S>::is_zero(c)) continue;
    for (const auto& cell : cells) m[cell.i][cell.j] += c * convert_affine<S>(cell.f);
  }
  return m;
}

template AffineMatrix<Rational> specialize(const UniformRep&, const PolyQ&);
template AffineMatrix<Complex> specialize(const UniformRep&, const PolyC&);

PolyQ cofactor_det(const PolyMatrix& m) {
  int N = static_cast<int>(m.size());
  if (N == 0) return PolyQ(0);
  int nv = m[0][0].nvars();
  if (N > 24) throw CapExceeded("cofactor expansion limited to 24 rows");
  // layer k: minors of rows 0..k-1 indexed by their column set
  std::unordered_map<std::uint32_t, PolyQ> layer{{0u, PolyQ::constant(nv, Rational(1))}};
  for (int k = 0; k < N; ++k) {
    std::unordered_map<std::uint32_t, PolyQ> next;
    for (const auto& [mask, minor] : layer) {
      if (minor.is_zero()) continue;
      for (int j = 0; j < N; ++j) {
        if (mask & (1u << j) || m[k][j].is_zero()) continue;
        // sign of row k / column j inside the enlarged column set
        int pos = std::popcount(mask & ((1u << j) - 1u));
        int sign = ((k + pos) % 2) ? -1 : 1;
        PolyQ term = m[k][j] * minor;
        if (sign < 0) term = -term;
        auto [it, fresh] = next.try_emplace(mask | (1u << j), PolyQ(nv));
        it->second += term;
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find((N == 32) ? 0xffffffffu : ((1u << N) - 1u));
  return it == layer.end() ? PolyQ(nv) : it->second;
}

PolyQ symbolic_det(const PolyMatrix& in, int cap) {
  int N = static_cast<int>(in.size());
  if (N > cap) throw CapExceeded("matrix size " + std::to_string(N) + " exceeds symbolic cap " + std::to_string(cap));
  if (N == 0) return PolyQ(0);
  int nv = in[0][0].nvars();
  PolyMatrix a = in;
  PolyQ prev = PolyQ::constant(nv, Rational(1));
  bool negate = false;
  for (int k = 0; k < N; ++k) {
    int piv = -1;
    // prefer the sparsest nonzero pivot to limit growth
    for (int r = k; r < N; ++r)
      if (!a[r][k].is_zero() && (piv < 0 || a[r][k].size() < a[piv][k].size())) piv = r;
    if (piv < 0) return PolyQ(nv);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        PolyQ t = a[k][k] * a[i][j];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) t -= a[i][k] * a[k][j];
        auto q = exact_divide(t, prev);
        if (!q) return cofactor_det(in);
        a[i][j] = std::move(*q);
      }
      a[i][k] = PolyQ(nv);
    }
    prev = a[k][k];
  }
  PolyQ r = a[N - 1][N - 1];
  return negate ? -r : r;
}

PolyMatrix symbolic_matrix(const UniformRep& rep) {
  auto basis = enumerate_Fd(rep.n, rep.d);
  int total = rep.n + static_cast<int>(basis.size());
  PolyMatrix m(rep.N, std::vector<PolyQ>(rep.N, PolyQ(total)));
  for (int i = 0; i < rep.N; ++i)
    for (int j = 0; j < rep.N; ++j) m[i][j] = rep.M0[i][j].to_poly(total);
  for (const auto& [alpha, cells] : rep.Malpha) {
    long long k = graded_index(alpha, rep.d);
    PolyQ c = PolyQ::variable(total, rep.n + static_cast<int>(k));
    for (const auto& cell : cells) m[cell.i][cell.j] += c * cell.f.to_poly(total);
  }
  return m;
}

Rational eval_det(const UniformRep& rep, const std::vector<Rational>& x, const std::vector<Rational>& c) {
  MatrixQ m(rep.N, std::vector<Rational>(rep.N));
  for (int i = 0; i < rep.N; ++i)
    for (int j = 0; j < rep.N; ++j) m[i][j] = rep.M0[i][j].eval(x);
  for (const auto& [alpha, cells] : rep.Malpha) {
    const Rational& ca = c.at(static_cast<std::size_t>(graded_index(alpha, rep.d)));
    if (sgn(ca) == 0) continue;
    for (const auto& cell : cells) m[cell.i][cell.j] += ca * cell.f.eval(x);
  }
  return det(std::move(m));
}

namespace {

Rational generic_value(int n, int d, const std::vector<Rational>& x, const std::vector<Rational>& c) {
  auto basis = enumerate_Fd(n, d);
  Rational s = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Rational t = c[k];
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < basis[k][i]; ++e) t *= x[i];
    s += t;
  }
  return s;
}

}  // namespace

VerificationReport verify(const UniformRep& rep, const VerifyOptions& opt) {
  VerificationReport rpt;
  rpt.mode = opt.mode;
  std::size_t nc = static_cast<std::size_t>(binomial(rep.n + rep.d, rep.n));
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> box(opt.box_lo, opt.box_hi);
  auto sample = [&](std::size_t len) {
    std::vector<Rational> v(len);
    for (auto& e : v) e = box(rng);
    return v;
  };

  if (opt.mode == VerifyMode::Symbolic) {
    PolyQ diff = symbolic_det(symbolic_matrix(rep), opt.cap) - generic_poly(rep.n, rep.d);
    rpt.trials = 0;
    rpt.pass = diff.is_zero();
    if (!rpt.pass) {
      // locate a concrete witness for the nonzero difference
      for (int t = 0; t < 1000; ++t) {
        auto x = sample(rep.n), c = sample(nc);
        std::vector<Rational> all = x;
        all.insert(all.end(), c.begin(), c.end());
        if (sgn(diff.eval(all)) != 0) {
          rpt.witness_x = x;
          rpt.witness_c = c;
          break;
        }
      }
    }
    return rpt;
  }

  rpt.trials = opt.trials;
  rpt.pass = true;
  for (int t = 0; t < opt.trials; ++t) {
    auto x = sample(rep.n), c = sample(nc);
    if (eval_det(rep, x, c) != generic_value(rep.n, rep.d, x, c)) {
      rpt.pass = false;
      rpt.witness_x = x;
      rpt.witness_c = c;
      break;
    }
  }
  // det(M) - p has total degree <= 2N in (x, c)
  double per = std::min(1.0, 2.0 * rep.N / double(opt.box_hi - opt.box_lo + 1));
  rpt.failure_bound = rpt.pass ? std::pow(per, opt.trials) : 0.0;
  return rpt;
}

RankProfile rank_profile_M0(const UniformRep& rep, int points, std::uint64_t seed, double tol_scale) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  RankProfile rp{rep.N, 0};
  for (int t = 0; t < points; ++t) {
    std::vector<double> x(rep.n);
    for (auto& v : x) v = g(rng);
    Eigen::MatrixXd m(rep.N, rep.N);
    for (int i = 0; i < rep.N; ++i)
      for (int j = 0; j < rep.N; ++j) {
        const auto& a = rep.M0[i][j];
        double s = a.c.get_d();
        for (int k = 0; k < rep.n; ++k) s += a.x[k].get_d() * x[k];
        m(i, j) = s;
      }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    double smax = sv.size() ? sv(0) : 0.0;
    double tau = tol_scale > 0 ? tol_scale * smax : std::numeric_limits<double>::epsilon() * rep.N * smax;
    int r = 0;
    for (int k = 0; k < sv.size(); ++k)
      if (sv(k) > tau) ++r;
    rp.min_rank = std::min(rp.min_rank, r);
    rp.max_rank = std::max(rp.max_rank, r);
  }
  return rp;
}

namespace {

PolyMatrix m0_polys(const UniformRep& rep) {
  PolyMatrix m(rep.N, std::vector<PolyQ>(rep.N, PolyQ(rep.n)));
  for (int i = 0; i < rep.N; ++i)
    for (int j = 0; j < rep.N; ++j) m[i][j] = rep.M0[i][j].to_poly();
  return m;
}

}  // namespace

bool det_M0_vanishes(const UniformRep& rep, int cap) {
  if (rep.N <= cap) return symbolic_det(m0_polys(rep), cap).is_zero();
  // above the cap: exact evaluation at random integer points
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> box(-1000, 1000);
  std::vector<Rational> zeros(static_cast<std::size_t>(binomial(rep.n + rep.d, rep.n)), Rational(0));
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> x(rep.n);
    for (auto& v : x) v = box(rng);
    if (eval_det(rep, x, zeros) != 0) return false;
  }
  return true;
}

MinorSpanResult minor_span_check(const UniformRep& rep, int cap) {
  if (rep.N > cap) throw CapExceeded("minor_span_check limited to N <= " + std::to_string(cap));
  MinorSpanResult res;
  int n = rep.n;
  auto m = m0_polys(rep);
  std::vector<PolyQ> minors;
  if (rep.N == 1) {
    minors.push_back(PolyQ::constant(n, Rational(1)));
  } else {
    for (int r = 0; r < rep.N; ++r)
      for (int c = 0; c < rep.N; ++c) {
        PolyMatrix sub;
        for (int i = 0; i < rep.N; ++i) {
          if (i == r) continue;
          std::vector<PolyQ> row;
          for (int j = 0; j < rep.N; ++j)
            if (j != c) row.push_back(m[i][j]);
          sub.push_back(std::move(row));
        }
        PolyQ det = symbolic_det(sub, cap);
        if (!det.is_zero()) minors.push_back(std::move(det));
      }
  }
  std::vector<PolyQ> products;
  for (const auto& mn : minors) {
    products.push_back(mn);
    for (int k = 0; k < n; ++k) products.push_back(PolyQ::variable(n, k) * mn);
  }
  std::map<Exponent, int, GradedLess> index;
  for (const auto& e : enumerate_Fd(n, rep.d)) index.emplace(e, 0);
  for (const auto& p : products)
    for (const auto& [e, c] : p.terms()) index.emplace(e, 0);
  int dim = 0;
  for (auto& [e, k] : index) k = dim++;
  auto vec = [&](const PolyQ& p) {
    std::vector<Rational> v(dim, Rational(0));
    for (const auto& [e, c] : p.terms()) v[index.at(e)] = c;
    return v;
  };
  RowSpace vspace(dim), span(dim);
  for (const auto& mn : minors) vspace.insert(vec(mn));
  res.dim_V = vspace.rank();
  for (const auto& p : products) span.insert(vec(p));
  res.pass = true;
  for (const auto& e : enumerate_Fd(n, rep.d))
    if (!span.contains(vec(PolyQ::monomial(e)))) {
      res.pass = false;
      break;
    }
  return res;
}

}  // namespace detrep
