#include "detrep/constructions.hpp"

#include <map>
#include <set>

namespace detrep {

const std::vector<Method>& all_methods() {
  static const std::vector<Method> m{Method::Cons1Tree,  Method::Cons1Lattice, Method::Cons2Split,
                                     Method::Cons2Table, Method::Cons2Turan,   Method::Cons2Binary,
                                     Method::RepJan,     Method::MinUnif};
  return m;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Cons1Tree: return "cons1-tree";
    case Method::Cons1Lattice: return "cons1-lattice";
    case Method::Cons2Split: return "cons2-split";
    case Method::Cons2Table: return "cons2-table";
    case Method::Cons2Turan: return "cons2-turan";
    case Method::Cons2Binary: return "cons2-binary";
    case Method::RepJan: return "repjan";
    case Method::MinUnif: return "minunif";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& s) {
  for (Method m : all_methods())
    if (method_name(m) == s) return m;
  return std::nullopt;
}

namespace {

std::string exp_str(const Exponent& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

AffineQ shift_form(int n, int delta, int sign) {
  return delta < 0 ? AffineQ::constant(n, Rational(sign)) : AffineQ::variable(n, delta, Rational(sign));
}

}  // namespace

std::vector<AssignmentEntry> assign(int d, const MonomialSet& V, const MonomialSet& W) {
  if (V.n != W.n) throw std::invalid_argument("variable count mismatch");
  int n = V.n;
  std::vector<AssignmentEntry> out;
  Exponent rest(n);
  for (const auto& a : enumerate_Fd(n, d)) {
    bool done = false;
    for (int delta = -1; delta < n && !done; ++delta) {
      Exponent t = a;
      if (delta >= 0) {
        if (t[delta] == 0) continue;
        --t[delta];
      }
      for (int j = 0; j < V.size() && !done; ++j) {
        bool fits = true;
        for (int k = 0; k < n; ++k) {
          rest[k] = t[k] - V.members[j][k];
          if (rest[k] < 0) fits = false;
        }
        if (!fits) continue;
        int i = W.index_of(rest);
        if (i < 0) continue;
        out.push_back({a, i, j, delta, 1});
        done = true;
      }
    }
    if (!done) throw CoveringError("monomial " + exp_str(a) + " is not covered", a);
  }
  return out;
}

UniformRep constant_rep(int n) {
  UniformRep r(n, 0, 1);
  r.add(Exponent(n, 0), 0, 0, AffineQ::constant(n, Rational(1)));
  r.lift_warranted = true;
  return r;
}

UniformRep cons1(const MonomialSet& V, int d) {
  int n = V.n, m = V.size();
  auto entries = assign(d, V, one_set(n));
  UniformRep r(n, d, m);
  auto mv = build_MV(V);
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j < m; ++j) r.M0[i + 1][j] = mv[i][j];
  // (-1)^{1+j} D_j = x^{V_j}: every shift enters the top row with sign +1
  for (const auto& e : entries) r.add(e.alpha, 0, e.j, shift_form(n, e.delta, 1));
  r.method = "cons1";
  r.sizes["V"] = m;
  return r;
}

UniformRep cons2(const MonomialSet& V, const MonomialSet& W, int d) {
  int n = V.n, m1 = V.size(), m2 = W.size();
  auto entries = assign(d, V, W);
  UniformRep r(n, d, m1 + m2 - 1);
  auto mv = build_MV(V), mw = build_MV(W);
  for (int i = 0; i + 1 < m1; ++i)
    for (int j = 0; j < m1; ++j) r.M0[i][j] = mv[i][j];
  for (int i = 0; i < m2; ++i)
    for (int k = 0; k + 1 < m2; ++k) r.M0[m1 - 1 + i][m1 + k] = mw[k][i];
  int sign = (m1 - 1) % 2 ? -1 : 1;
  for (const auto& e : entries) r.add(e.alpha, m1 - 1 + e.i, e.j, shift_form(n, e.delta, sign));
  r.method = "cons2";
  r.sizes["V"] = m1;
  r.sizes["W"] = m2;
  return r;
}

UniformRep repjan(int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  if (d == 0) return constant_rep(2);
  int N = 2 * d + 1;
  UniformRep r(2, d, N);
  for (int k = 0; k < d; ++k) {
    r.M0[k][k] = AffineQ::variable(2, 0, Rational(-1));
    r.M0[k][k + 1] = AffineQ::constant(2, Rational(1));
    r.M0[d + k][d + 1 + k] = AffineQ::variable(2, 1, Rational(-1));
    r.M0[d + k + 1][d + 1 + k] = AffineQ::constant(2, Rational(1));
  }
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) r.add({j, i}, d + i, j, AffineQ::constant(2, Rational(1)));
  if (d % 2) {
    // (-1)^d through one row: the top row carries no coefficient entries
    for (auto& a : r.M0[0]) a *= Rational(-1);
  }
  r.method = "repjan";
  r.lift_warranted = true;
  return r;
}

UniformRep minunif(int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  if (d == 0) return constant_rep(2);
  std::vector<Exponent> v, w;
  for (int k = 0; k < d; ++k) {
    v.push_back({k, 0});
    w.push_back({0, k});
  }
  auto V = make_connected(2, v), W = make_connected(2, w);
  int m1 = d;
  UniformRep r(2, d, 2 * d - 1);
  auto mv = build_MV(V), mw = build_MV(W);
  for (int i = 0; i + 1 < m1; ++i)
    for (int j = 0; j < m1; ++j) r.M0[i][j] = mv[i][j];
  for (int i = 0; i < d; ++i)
    for (int k = 0; k + 1 < d; ++k) r.M0[m1 - 1 + i][m1 + k] = mw[k][i];
  int sign = (d - 1) % 2 ? -1 : 1;
  for (const auto& alpha : enumerate_Fd(2, d)) {
    int a = alpha[0], b = alpha[1], delta = -1;
    if (a <= d - 1 && b <= d - 1 && a + b <= d - 1) {
    } else if (a >= 1) {
      delta = 0;
      --a;
    } else {
      delta = 1;
      --b;
    }
    r.add(alpha, m1 - 1 + b, a, shift_form(2, delta, sign));
  }
  r.method = "minunif";
  r.lift_warranted = true;
  r.sizes["V"] = d;
  r.sizes["W"] = d;
  return r;
}

UniformRep construct(int n, int d, Method m) {
  if (n < 1 || d < 0) throw Inapplicable("need n >= 1 and d >= 0");
  auto need = [&](bool ok, const std::string& why) {
    if (!ok) throw Inapplicable(method_name(m) + " " + why);
  };
  switch (m) {
    case Method::Cons1Tree:
    case Method::RepJan:
    case Method::MinUnif: need(n == 2, "requires n = 2"); break;
    case Method::Cons1Lattice: need(n >= 2, "requires n >= 2"); break;
    case Method::Cons2Split: need(n % 2 == 0, "requires even n"); break;
    case Method::Cons2Table: need(d == 0 || table_cell(n, d), "has no tabulated sets for this (n, d)"); break;
    case Method::Cons2Turan: need(d == 4 && n >= 4, "requires d = 4 and n >= 4"); break;
    case Method::Cons2Binary: need(n >= 3, "requires n >= 3"); break;
  }
  UniformRep r;
  if (d == 0) {
    r = constant_rep(n);
  } else {
    switch (m) {
      case Method::Cons1Tree: r = cons1(tree_set(d), d); break;
      case Method::Cons1Lattice: r = cons1(lattice_set(n, d), d); break;
      case Method::Cons2Split: {
        auto [V, W] = split_sets(n, d);
        r = cons2(V, W, d);
        break;
      }
      case Method::Cons2Table: {
        auto [V, W] = table_sets(n, d);
        r = cons2(V, W, d);
        break;
      }
      case Method::Cons2Turan: {
        auto [V, W] = turan_sets(n);
        r = cons2(V, W, d);
        break;
      }
      case Method::Cons2Binary: {
        auto [V, W] = binary_sets(n, d);
        r = cons2(V, W, d);
        break;
      }
      case Method::RepJan: r = repjan(d); break;
      case Method::MinUnif: r = minunif(d); break;
    }
  }
  r.method = method_name(m);
  return r;
}

Method best_method(int n, int) { return n == 2 ? Method::MinUnif : Method::Cons2Table; }

int tabulated_size(int n, int d) {
  static const std::map<int, std::vector<int>> rows{
      {2, {3, 5, 7, 9, 11, 13, 15, 17}}, {3, {4, 7, 10, 14, 18, 22, 27, 34}},
      {4, {5, 9, 14, 19, 26, 34, 44}},   {5, {6, 11, 18, 26}},
      {6, {7, 13, 22, 33}},              {7, {8, 15, 27, 39}},
      {8, {9, 17, 32}}};
  auto it = rows.find(n);
  if (it == rows.end() || d < 2 || d - 2 >= static_cast<int>(it->second.size())) return 0;
  return it->second[d - 2];
}

}  // namespace detrep
