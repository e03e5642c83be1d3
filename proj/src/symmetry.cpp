#include "detrep/symmetry.hpp"

#include <random>
#include <stdexcept>

namespace detrep {

AffineMap AffineMap::identity(int n) { return {identity_q(n), std::vector<Rational>(n, Rational(0))}; }

AffineMap AffineMap::random(int n, std::uint64_t seed, int range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> u(-range, range);
  AffineMap g;
  g.b.resize(n);
  do {
    g.A.assign(n, std::vector<Rational>(n));
    for (auto& row : g.A)
      for (auto& v : row) v = u(rng);
  } while (det(g.A) == 0);
  for (auto& v : g.b) v = u(rng);
  return g;
}

AffineMap AffineMap::inverse() const {
  if (det(A) == 0) throw std::domain_error("affine map is not invertible");
  AffineMap r;
  r.A = detrep::inverse(A);
  r.b.assign(dim(), Rational(0));
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) r.b[i] -= r.A[i][j] * b[j];
  return r;
}

std::vector<Rational> AffineMap::apply(const std::vector<Rational>& x) const {
  std::vector<Rational> y = b;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) y[i] += A[i][j] * x[j];
  return y;
}

std::vector<AffineQ> AffineMap::forms() const {
  std::vector<AffineQ> f;
  for (int i = 0; i < dim(); ++i) {
    AffineQ a(dim());
    a.c = b[i];
    for (int j = 0; j < dim(); ++j) a.x[j] = A[i][j];
    f.push_back(a);
  }
  return f;
}

AffineMap compose(const AffineMap& g, const AffineMap& h) {
  AffineMap r;
  r.A = multiply(g.A, h.A);
  r.b = g.apply(h.b);
  return r;
}

MatrixQ coeff_action(const AffineMap& g, int n, int d) {
  if (g.dim() != n) throw std::invalid_argument("map dimension mismatch");
  auto ginv = g.inverse().forms();
  auto basis = enumerate_Fd(n, d);
  std::vector<PolyQ> comp;
  for (const auto& f : ginv) comp.push_back(f.to_poly());
  // powers[i][k] = (g^{-1} x)_i ^ k
  std::vector<std::vector<PolyQ>> powers(n);
  for (int i = 0; i < n; ++i) {
    powers[i].push_back(PolyQ::constant(n, Rational(1)));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * comp[i]);
  }
  std::size_t D = basis.size();
  MatrixQ rho(D, std::vector<Rational>(D, Rational(0)));
  for (std::size_t col = 0; col < D; ++col) {
    PolyQ t = PolyQ::constant(n, Rational(1));
    for (int i = 0; i < n; ++i) t *= powers[i][basis[col][i]];
    for (const auto& [e, c] : t.terms()) rho[static_cast<std::size_t>(graded_index(e, d))][col] = c;
  }
  return rho;
}

namespace {

AffineQ substitute(const AffineQ& a, const std::vector<AffineQ>& ginv) {
  AffineQ r = AffineQ::constant(a.nvars(), a.c);
  for (int i = 0; i < a.nvars(); ++i)
    if (sgn(a.x[i]) != 0) r += a.x[i] * ginv[i];
  return r;
}

}  // namespace

UniformRep act(const AffineMap& g, const UniformRep& rep) {
  auto ginv = g.inverse().forms();
  MatrixQ rinv = inverse(coeff_action(g, rep.n, rep.d));
  auto basis = enumerate_Fd(rep.n, rep.d);
  UniformRep out(rep.n, rep.d, rep.N);
  out.method = rep.method;
  out.sizes = rep.sizes;
  out.lift_warranted = rep.lift_warranted;
  for (int i = 0; i < rep.N; ++i)
    for (int j = 0; j < rep.N; ++j) out.M0[i][j] = substitute(rep.M0[i][j], ginv);
  // c_beta <- sum_alpha (rho^{-1})[beta][alpha] c_alpha
  for (const auto& [beta, cells] : rep.Malpha) {
    auto b = static_cast<std::size_t>(graded_index(beta, rep.d));
    for (const auto& cell : cells) {
      AffineQ f = substitute(cell.f, ginv);
      for (std::size_t a = 0; a < basis.size(); ++a) {
        if (sgn(rinv[b][a]) == 0) continue;
        out.add(basis[a], cell.i, cell.j, rinv[b][a] * f);
      }
    }
  }
  return out;
}

}  // namespace detrep
