#pragma once

#include <gmpxx.h>

#include <climits>
#include <complex>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace detrep {

using Rational = mpq_class;
using Complex = std::complex<double>;
using Exponent = std::vector<int>;

constexpr int kDegreeNegInf = INT_MIN;

int total_degree(const Exponent& a);

// graded: total degree ascending, then x1-heavy first within a degree
struct GradedLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

std::vector<Exponent> enumerate_Fd(int n, int d);
long long binomial(int n, int k);
Exponent unit_exponent(int n, int k);

// index of alpha within enumerate_Fd(n, d), -1 if |alpha| > d
long long graded_index(const Exponent& alpha, int d);

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool close(const Rational& a, const Rational& b, double, double) { return a == b; }
  static double magnitude(const Rational& a) { return std::abs(a.get_d()); }
};

template <>
struct ScalarOps<Complex> {
  static bool is_zero(const Complex& a) { return a == Complex(0.0, 0.0); }
  static bool close(const Complex& a, const Complex& b, double rel, double abs_tol) {
    double diff = std::abs(a - b);
    return diff <= abs_tol || diff <= rel * std::max(std::abs(a), std::abs(b));
  }
  static double magnitude(const Complex& a) { return std::abs(a); }
};

template <class S>
class Poly {
 public:
  using Terms = std::map<Exponent, S, GradedLess>;

  explicit Poly(int n = 0) : n_(n) {}

  static Poly constant(int n, const S& c) {
    Poly p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
  }
  static Poly monomial(const Exponent& e, const S& c = S(1)) {
    Poly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }
  static Poly variable(int n, int k) { return monomial(unit_exponent(n, k)); }

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    if (terms_.empty()) return kDegreeNegInf;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  S coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(const Exponent& e, const S& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length mismatch");
    for (int v : e)
      if (v < 0) throw std::invalid_argument("negative exponent");
    if (ScalarOps<S>::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (ScalarOps<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, S(-c));
    return *this;
  }
  Poly& operator*=(const S& s) {
    if (ScalarOps<S>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= S(-1); }
  friend Poly operator*(Poly a, const S& s) { return a *= s; }
  friend Poly operator*(const S& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  S eval(const std::vector<S>& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("point length mismatch");
    S sum(0);
    for (const auto& [e, c] : terms_) {
      S t = c;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      sum += t;
    }
    return sum;
  }

  // exact for rationals; relative/absolute tolerance for floats
  bool equals(const Poly& o, double rel = 1e-12, double abs_tol = 0.0) const {
    if (n_ != o.n_) return false;
    double scale = 0.0;
    for (const auto& [e, c] : terms_) scale = std::max(scale, ScalarOps<S>::magnitude(c));
    for (const auto& [e, c] : o.terms_) scale = std::max(scale, ScalarOps<S>::magnitude(c));
    auto agree = [&](const S& a, const S& b) {
      return ScalarOps<S>::close(a, b, rel, abs_tol) ||
             ScalarOps<S>::close(a - b, S(0), 0.0, std::max(abs_tol, rel * scale));
    };
    for (const auto& [e, c] : terms_)
      if (!agree(c, o.coeff(e))) return false;
    for (const auto& [e, c] : o.terms_)
      if (!agree(coeff(e), c)) return false;
    return true;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.equals(b); }
  friend bool operator!=(const Poly& a, const Poly& b) { return !a.equals(b); }

  // leading term in the graded order (last map element)
  std::pair<Exponent, S> leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
  }

 private:
  void check(const Poly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
  }

  int n_;
  Terms terms_;
};

using PolyQ = Poly<Rational>;
using PolyC = Poly<Complex>;

PolyC to_complex(const PolyQ& p);

// exact quotient a/b, nullopt when b does not divide a
std::optional<PolyQ> exact_divide(const PolyQ& a, const PolyQ& b);

// embed a polynomial in n variables into n + extra variables (new ones appended)
PolyQ extend_vars(const PolyQ& p, int total);

// the generic polynomial p_{n,d}: variables x1..xn followed by one c per monomial of F_d
PolyQ generic_poly(int n, int d);

template <class S>
struct Affine {
  S c{0};
  std::vector<S> x;

  Affine() = default;
  explicit Affine(int n) : c(0), x(n, S(0)) {}
  static Affine constant(int n, const S& v) {
    Affine a(n);
    a.c = v;
    return a;
  }
  static Affine variable(int n, int k, const S& coef = S(1)) {
    Affine a(n);
    a.x[k] = coef;
    return a;
  }

  int nvars() const { return static_cast<int>(x.size()); }
  bool is_zero() const {
    if (!ScalarOps<S>::is_zero(c)) return false;
    for (const auto& v : x)
      if (!ScalarOps<S>::is_zero(v)) return false;
    return true;
  }
  S eval(const std::vector<S>& pt) const {
    if (pt.size() != x.size()) throw std::invalid_argument("point length mismatch");
    S s = c;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * pt[i];
    return s;
  }
  Affine& operator+=(const Affine& o) {
    if (o.x.size() != x.size()) throw std::invalid_argument("variable count mismatch");
    c += o.c;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += o.x[i];
    return *this;
  }
  Affine& operator*=(const S& s) {
    c *= s;
    for (auto& v : x) v *= s;
    return *this;
  }
  friend Affine operator+(Affine a, const Affine& b) { return a += b; }
  friend Affine operator*(const S& s, Affine a) { return a *= s; }
  friend bool operator==(const Affine& a, const Affine& b) { return a.c == b.c && a.x == b.x; }

  // as a polynomial in `total` variables, x occupying the first n
  Poly<S> to_poly(int total = -1) const {
    int n = nvars();
    if (total < 0) total = n;
    Poly<S> p(total);
    p.add_term(Exponent(total, 0), c);
    for (int i = 0; i < n; ++i) p.add_term(unit_exponent(total, i), x[i]);
    return p;
  }
};

using AffineQ = Affine<Rational>;
using AffineC = Affine<Complex>;

std::string to_string(const Rational& q);
std::string to_string(const PolyQ& p, const std::vector<std::string>& names = {});

}  // namespace detrep
