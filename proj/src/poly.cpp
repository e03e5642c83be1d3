#include "detrep/poly.hpp"

#include <numeric>
#include <sstream>

namespace detrep {

int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool GradedLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Exponent unit_exponent(int n, int k) {
  Exponent e(n, 0);
  e.at(k) = 1;
  return e;
}

namespace {

// all exponents of total degree exactly t, x1-heavy first
void fill_degree(int n, int t, int pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos == n - 1) {
    cur[pos] = t;
    out.push_back(cur);
    return;
  }
  for (int a = t; a >= 0; --a) {
    cur[pos] = a;
    fill_degree(n, t - a, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponent> enumerate_Fd(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("enumerate_Fd needs n >= 1, d >= 0");
  std::vector<Exponent> out;
  out.reserve(static_cast<std::size_t>(binomial(n + d, n)));
  Exponent cur(n, 0);
  for (int t = 0; t <= d; ++t) fill_degree(n, t, 0, cur, out);
  return out;
}

long long graded_index(const Exponent& alpha, int d) {
  int n = static_cast<int>(alpha.size());
  int t = total_degree(alpha);
  if (t > d) return -1;
  long long idx = binomial(n + t - 1, n);  // monomials of degree < t
  // rank within degree t: count exponents of degree t that precede alpha
  int rem = t;
  for (int i = 0; i + 1 < n; ++i) {
    // members with a larger entry at position i come first
    for (int a = rem; a > alpha[i]; --a) idx += binomial(rem - a + (n - i - 2), n - i - 2);
    rem -= alpha[i];
  }
  return idx;
}

PolyC to_complex(const PolyQ& p) {
  PolyC r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, Complex(c.get_d(), 0.0));
  return r;
}

std::optional<PolyQ> exact_divide(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  int n = a.nvars();
  PolyQ rem = a, quot(n);
  auto [eb, cb] = b.leading();
  Exponent shift(n);
  while (!rem.is_zero()) {
    auto [er, cr] = rem.leading();
    for (int i = 0; i < n; ++i) {
      shift[i] = er[i] - eb[i];
      if (shift[i] < 0) return std::nullopt;
    }
    Rational q = cr / cb;
    PolyQ t = PolyQ::monomial(shift, q);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

PolyQ extend_vars(const PolyQ& p, int total) {
  PolyQ r(total);
  for (const auto& [e, c] : p.terms()) {
    Exponent f(total, 0);
    std::copy(e.begin(), e.end(), f.begin());
    r.add_term(f, c);
  }
  return r;
}

PolyQ generic_poly(int n, int d) {
  auto basis = enumerate_Fd(n, d);
  int total = n + static_cast<int>(basis.size());
  PolyQ p(total);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Exponent e(total, 0);
    std::copy(basis[k].begin(), basis[k].end(), e.begin());
    e[n + k] = 1;
    p.add_term(e, Rational(1));
  }
  return p;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const PolyQ& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool printed = false;
    if (a != 1 || total_degree(e) == 0) {
      os << a.get_str();
      printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (printed) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace detrep
