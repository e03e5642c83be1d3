#include "detrep/connected.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <cmath>
#include <map>
#include <stdexcept>

namespace detrep {

int MonomialSet::index_of(const Exponent& e) const {
  auto it = std::lower_bound(members.begin(), members.end(), e, GradedLess{});
  if (it == members.end() || *it != e) return -1;
  return static_cast<int>(it - members.begin());
}

ConnectResult check_connected(int n, const std::vector<Exponent>& in) {
  ConnectResult res;
  std::vector<Exponent> members = in;
  for (const auto& e : members)
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent length mismatch");
  std::sort(members.begin(), members.end(), GradedLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || total_degree(members[0]) != 0) {
    res.error = "missing zero";
    return res;
  }
  MonomialSet s;
  s.n = n;
  s.members = std::move(members);
  for (int i = 1; i < s.size(); ++i) {
    Exponent e = s.members[i];
    bool found = false;
    for (int k = 0; k < n && !found; ++k) {
      if (e[k] == 0) continue;
      --e[k];
      int j = s.index_of(e);
      ++e[k];
      if (j >= 0) {
        s.parents.push_back({i, j, k});
        found = true;
      }
    }
    if (!found) {
      res.error = "orphan";
      res.orphan = s.members[i];
      return res;
    }
  }
  res.set = std::move(s);
  return res;
}

MonomialSet make_connected(int n, const std::vector<Exponent>& members) {
  auto r = check_connected(n, members);
  if (!r) {
    std::string msg = "monomial set not connected to 1: " + r.error;
    if (r.orphan) {
      msg += " at (";
      for (std::size_t i = 0; i < r.orphan->size(); ++i) msg += (i ? "," : "") + std::to_string((*r.orphan)[i]);
      msg += ")";
    }
    throw std::invalid_argument(msg);
  }
  return *r.set;
}

MonomialSet one_set(int n) { return make_connected(n, {Exponent(n, 0)}); }

AffineMatrixQ build_MV(const MonomialSet& V) {
  int m = V.size();
  auto M = zero_affine_matrix(m - 1, m, V.n);
  for (const auto& e : V.parents) {
    M[e.child - 1][e.parent] = AffineQ::variable(V.n, e.var, Rational(-1));
    M[e.child - 1][e.child] = AffineQ::constant(V.n, Rational(1));
  }
  return M;
}

MonomialSet tree_set(int d) {
  if (d < 1) return one_set(2);
  std::vector<Exponent> m;
  for (int b = 0; b <= d - 1; ++b) {
    if (b % 2 == 0)
      for (int a = 0; a + b <= d - 1; ++a) m.push_back({a, b});
    else
      m.push_back({0, b});
  }
  return make_connected(2, m);
}

std::vector<std::vector<int>> cartan_A(int r) {
  std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) {
    c[i][i] = 2;
    if (i + 1 < r) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

bool in_root_lattice(const std::vector<int>& v) {
  int r = static_cast<int>(v.size());
  if (r == 0) return true;
  static std::map<int, MatrixQ> cache;
  auto it = cache.find(r);
  if (it == cache.end()) {
    auto c = cartan_A(r);
    MatrixQ q(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) q[i][j] = c[i][j];
    it = cache.emplace(r, inverse(q)).first;
  }
  // v lies in the row lattice iff y C = v has an integral solution; C is symmetric
  for (int i = 0; i < r; ++i) {
    Rational y = 0;
    for (int j = 0; j < r; ++j) y += it->second[i][j] * v[j];
    if (y.get_den() != 1) return false;
  }
  return true;
}

MonomialSet lattice_set(int n, int d) {
  if (n < 2) throw std::invalid_argument("lattice_set needs n >= 2");
  std::vector<Exponent> s;
  for (const auto& a : enumerate_Fd(n, d)) {
    bool axis = std::find(a.begin(), a.end(), 0) != a.end();
    if (axis || in_root_lattice(std::vector<int>(a.begin() + 1, a.end()))) s.push_back(a);
  }
  return make_connected(n, s);
}

std::vector<int> binary_digits_set(int parity, int limit) {
  std::vector<int> out;
  for (int v = 0; v <= limit; ++v) {
    bool ok = true;
    for (int b = 0; (v >> b) != 0; ++b)
      if (((v >> b) & 1) && b % 2 != parity) ok = false;
    if (ok) out.push_back(v);
  }
  return out;
}

namespace {

int two_adic(int v) {
  int l = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++l;
  }
  return l;
}

MonomialSet binary_one(int n, int d, int parity) {
  auto digits = binary_digits_set(parity, d);
  std::set<Exponent, GradedLess> s;
  Exponent cur(n, 0);
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    for (int i = 0; i < n; ++i) cur[i] = digits[idx[i]];
    s.insert(cur);
    int k = 0;
    while (k < n && ++idx[k] == digits.size()) idx[k++] = 0;
    if (k == n) break;
  }
  std::vector<Exponent> base(s.begin(), s.end());
  for (const auto& a : base) {
    if (total_degree(a) == 0) continue;
    int l = 64, j = -1;
    for (int i = 0; i < n; ++i)
      if (a[i] && two_adic(a[i]) < l) {
        l = two_adic(a[i]);
        j = i;
      }
    Exponent b = a;
    for (int k = 1; k < (1 << l); ++k) {
      --b[j];
      s.insert(b);
    }
  }
  return make_connected(n, std::vector<Exponent>(s.begin(), s.end()));
}

}  // namespace

std::pair<MonomialSet, MonomialSet> binary_sets(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("binary_sets needs n >= 1, d >= 0");
  return {binary_one(n, d, 0), binary_one(n, d, 1)};
}

std::pair<MonomialSet, MonomialSet> split_sets(int n, int d) {
  if (n % 2) throw std::invalid_argument("split_sets needs an even variable count");
  int h = n / 2;
  std::vector<Exponent> v, w;
  for (const auto& a : enumerate_Fd(h, d)) {
    Exponent e(n, 0), f(n, 0);
    std::copy(a.begin(), a.end(), e.begin());
    std::copy(a.begin(), a.end(), f.begin() + h);
    v.push_back(e);
    w.push_back(f);
  }
  return {make_connected(n, v), make_connected(n, w)};
}

namespace {

const char* kVarNames = "xyzwuvqs";

// "x2y" -> (2,1,0,...)
Exponent parse_word(const std::string& w, int n) {
  Exponent e(n, 0);
  for (std::size_t i = 0; i < w.size();) {
    const char* p = std::strchr(kVarNames, w[i]);
    if (!p || p - kVarNames >= n) throw std::logic_error("bad table monomial " + w);
    int v = static_cast<int>(p - kVarNames), k = 1;
    ++i;
    if (i < w.size() && std::isdigit(static_cast<unsigned char>(w[i]))) k = w[i++] - '0';
    e[v] += k;
  }
  return e;
}

struct TableRow {
  int n, d;
  const char* v1;
  const char* w1;
};

// sets added to the pure-power bases; three printed rows are corrected (see README)
const TableRow kTable[] = {
    {3, 4, "", ""},
    {3, 5, "", "xy"},
    {3, 6, "", "xy x2y"},
    {3, 7, "", "x2y y2z z2x"},
    {3, 8, "", "x2y y2z z2x x2y2 z2x2"},
    {3, 9, "x3y y3z z3x", "x2y x2z y2z x2y2 x2z2 y2z2"},
    {4, 4, "", "xy"},
    {4, 5, "", "xy zw"},
    {4, 6, "x2y y2z z2w", "xy zw"},
    {4, 7, "x2y y2z z2w w2x xy", "x2z xz2 y2w yw2"},
    {4, 8, "x2y x2y2 z2x x3y y3z z3w w3x", "xy xyz xyw y2z z2w w2x w2y x2z"},
    {5, 4, "", "xy zw"},
    {5, 5, "xy yz zw", "wu xu"},
    {6, 4, "", "xy zw uv"},
    {6, 5, "xy zw uv wy", "yz wu xv xz"},
    {7, 4, "", "xy zw uv xq yq"},
    {7, 5, "xy zw uv wy qu", "yz wu vq xz wx"},
    {8, 4, "", "xy yz xz wu wv uv qs"},
};

std::vector<Exponent> powers(int n, int e) {
  std::vector<Exponent> out{Exponent(n, 0)};
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= e; ++k) {
      Exponent a(n, 0);
      a[i] = k;
      out.push_back(a);
    }
  return out;
}

std::vector<Exponent> with_words(std::vector<Exponent> base, const char* words, int n) {
  std::string s(words), w;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ' ') {
      if (!w.empty()) base.push_back(parse_word(w, n));
      w.clear();
    } else {
      w += s[i];
    }
  }
  return base;
}

}  // namespace

bool table_cell(int n, int d) {
  if (n == 2) return d >= 1;
  if (n >= 1 && (d == 2 || d == 3)) return true;
  for (const auto& r : kTable)
    if (r.n == n && r.d == d) return true;
  return false;
}

std::pair<MonomialSet, MonomialSet> table_sets(int n, int d) {
  if (!table_cell(n, d)) throw std::invalid_argument("(n,d) is not a tabulated cell");
  if (n == 2) {
    std::vector<Exponent> v, w;
    for (int k = 0; k < d; ++k) {
      v.push_back({k, 0});
      w.push_back({0, k});
    }
    return {make_connected(2, v), make_connected(2, w)};
  }
  if (d == 2) return {make_connected(n, powers(n, 1)), one_set(n)};
  if (d == 3) return {make_connected(n, powers(n, 1)), make_connected(n, powers(n, 1))};
  int e = d / 2, f = (d - 1) / 2;  // ceil((d-1)/2), floor((d-1)/2)
  for (const auto& r : kTable)
    if (r.n == n && r.d == d)
      return {make_connected(n, with_words(powers(n, e), r.v1, n)),
              make_connected(n, with_words(powers(n, f), r.w1, n))};
  throw std::logic_error("unreachable");
}

long long turan_number_42(int n) {
  long long m = n / 3;
  return m * n - 3 * m * (m + 1) / 2;
}

std::pair<MonomialSet, MonomialSet> turan_sets(int n) {
  if (n < 4) throw std::invalid_argument("turan_sets needs n >= 4");
  std::vector<Exponent> v = powers(n, 2), w = powers(n, 1);
  int start = 0;
  for (int g = 0; g < 3; ++g) {
    int len = n / 3 + (g < n % 3 ? 1 : 0);
    for (int a = start; a < start + len; ++a)
      for (int b = a + 1; b < start + len; ++b) {
        Exponent e(n, 0);
        e[a] = e[b] = 1;
        w.push_back(e);
      }
    start += len;
  }
  return {make_connected(n, v), make_connected(n, w)};
}

std::optional<Exponent> uncovered(int d, const MonomialSet& V, const MonomialSet& W) {
  int n = V.n;
  std::set<Exponent> wset(W.members.begin(), W.members.end());
  Exponent r(n);
  for (const auto& a : enumerate_Fd(n, d)) {
    bool ok = false;
    for (int k = -1; k < n && !ok; ++k) {
      Exponent t = a;
      if (k >= 0) {
        if (t[k] == 0) continue;
        --t[k];
      }
      for (const auto& b : V.members) {
        bool fits = true;
        for (int i = 0; i < n; ++i) {
          r[i] = t[i] - b[i];
          if (r[i] < 0) fits = false;
        }
        if (fits && wset.count(r)) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) return a;
  }
  return std::nullopt;
}

}  // namespace detrep
