// One line per acceptance criterion. Exit status is the number of failing criteria.

#include "detrep/constructions.hpp"
#include "detrep/io.hpp"
#include "detrep/matpoly.hpp"
#include "detrep/oracle.hpp"
#include "detrep/symmetry.hpp"
#include "detrep/twopareig.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace detrep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// pinned thresholds
constexpr double kQuadricSeconds = 1.0;
constexpr double kTableSeconds = 300.0;
constexpr double kSolveSeconds = 5.0;
constexpr double kMatchTol = 1e-6;
constexpr double kResidualTol = 1e-8;
constexpr double kSmokeRate = 0.95;
constexpr double kDistinctTol = 1e-6;
constexpr int kSolverSystems = 50;

const std::map<std::pair<int, int>, int> kSizeTable = {
    {{2, 2}, 3},  {{2, 3}, 5},  {{2, 4}, 7},  {{2, 5}, 9},  {{2, 6}, 11}, {{2, 7}, 13}, {{2, 8}, 15}, {{2, 9}, 17},
    {{3, 2}, 4},  {{3, 3}, 7},  {{3, 4}, 10}, {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 22}, {{3, 8}, 27}, {{3, 9}, 34},
    {{4, 2}, 5},  {{4, 3}, 9},  {{4, 4}, 14}, {{4, 5}, 19}, {{4, 6}, 26}, {{4, 7}, 34}, {{4, 8}, 44},
    {{5, 2}, 6},  {{5, 3}, 11}, {{5, 4}, 18}, {{5, 5}, 26},
    {{6, 2}, 7},  {{6, 3}, 13}, {{6, 4}, 22}, {{6, 5}, 33},
    {{7, 2}, 8},  {{7, 3}, 15}, {{7, 4}, 27}, {{7, 5}, 39},
    {{8, 2}, 9},  {{8, 3}, 17}, {{8, 4}, 32},
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

// every representation built along the way, for the structural checks
std::vector<UniformRep> g_emitted;

std::string rep_label(const UniformRep& r) {
  return r.method + "(n=" + std::to_string(r.n) + ",d=" + std::to_string(r.d) + ",N=" + std::to_string(r.N) + ")";
}

VerifyOptions randomized(std::uint64_t seed) {
  VerifyOptions o;
  o.mode = VerifyMode::Randomized;
  o.trials = 20;
  o.seed = seed;
  return o;
}

PolyC random_full(int d, std::mt19937_64& rng, bool real) {
  std::normal_distribution<double> g;
  PolyC p(2);
  for (const auto& e : enumerate_Fd(2, d)) p.add_term(e, real ? Complex(g(rng), 0.0) : Complex(g(rng), g(rng)));
  return p;
}

bool distinct(const std::vector<Root>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      double s = std::max({1.0, std::abs(roots[i].x), std::abs(roots[i].y)});
      double dist = std::max(std::abs(roots[i].x - roots[j].x), std::abs(roots[i].y - roots[j].y));
      if (dist / s < kDistinctTol) return false;
    }
  return true;
}

Outcome c1_quadric() {
  Outcome o;
  auto t0 = Clock::now();
  UniformRep r = rep_from_json(read_json_file(std::string(DETREP_FIXTURES) + "/quadric.json"));
  VerificationReport v = verify(r);
  double t = seconds_since(t0);
  g_emitted.push_back(r);
  o.pass = v.pass && v.mode == VerifyMode::Symbolic && r.N == 3 && t < kQuadricSeconds;
  std::ostringstream s;
  s << "symbolic det = p_{2,2}: " << (v.pass ? "yes" : "no") << ", " << t << " s (limit " << kQuadricSeconds << " s)";
  o.detail = s.str();
  return o;
}

Outcome c2_families() {
  Outcome o;
  std::ostringstream s;
  int symbolic = 0, random = 0;
  for (int d = 1; d <= 12; ++d) {
    for (bool jan : {true, false}) {
      UniformRep r = jan ? repjan(d) : minunif(d);
      int want = jan ? 2 * d + 1 : 2 * d - 1;
      if (r.N != want) {
        o.pass = false;
        s << rep_label(r) << " size != " << want << "; ";
      }
      VerificationReport v = verify(r, d <= 6 ? VerifyOptions{} : randomized(100 + d));
      if (!v.pass) {
        o.pass = false;
        s << rep_label(r) << " fails verification; ";
      }
      (d <= 6 ? symbolic : random) += 1;
      g_emitted.push_back(std::move(r));
    }
  }
  const int minunif_row[] = {5, 7, 9, 11, 13, 15, 17, 19, 21, 23};
  std::string row;
  for (int d = 3; d <= 12; ++d) {
    int N = construct(2, d, Method::MinUnif).N;
    row += (d > 3 ? "," : "") + std::to_string(N);
    if (N != minunif_row[d - 3]) o.pass = false;
  }
  s << symbolic << " symbolic + " << random << " randomized verifications, minunif d=3..12 sizes " << row;
  o.detail = s.str();
  return o;
}

Outcome c3_table() {
  Outcome o;
  std::ostringstream s;
  auto t0 = Clock::now();
  int cells = 0;
  for (const auto& [cell, size] : kSizeTable) {
    auto [n, d] = cell;
    UniformRep r = construct(n, d, best_method(n, d));
    bool ok = r.N == size && tabulated_size(n, d) == size && verify(r, randomized(1000 + 16 * n + d)).pass;
    if (!ok) {
      o.pass = false;
      s << "cell (" << n << "," << d << ") " << rep_label(r) << " expected " << size << "; ";
    }
    ++cells;
    g_emitted.push_back(std::move(r));
  }
  double t = seconds_since(t0);
  if (t >= kTableSeconds) o.pass = false;
  s << cells << " cells, e.g. (3,5)->" << construct(3, 5, best_method(3, 5)).N << " (4,6)->" << construct(4, 6, best_method(4, 6)).N
    << " (8,4)->" << construct(8, 4, best_method(8, 4)).N << ", " << t << " s (limit " << kTableSeconds << " s)";
  o.detail = s.str();
  return o;
}

Outcome c4_turan() {
  Outcome o;
  std::ostringstream s;
  for (int n = 4; n <= 12; ++n) {
    long long m = n / 3;
    auto [V, W] = turan_sets(n);
    long long w1 = W.size() - 1 - n;  // W = {1} + F_1 variables + W_1
    if (w1 != m * n - 3 * m * (m + 1) / 2) {
      o.pass = false;
      s << "n=" << n << " |W1|=" << w1 << "; ";
    }
    if (n <= 8 && uncovered(4, V, W).has_value()) {
      o.pass = false;
      s << "n=" << n << " leaves a degree-4 monomial uncovered; ";
    }
  }
  s << "|W1| = mn - 3m(m+1)/2 for n=4..12, exhaustive F_4 coverage for n<=8";
  o.detail = s.str();
  return o;
}

// exact det(M0(x)) at random rational points, for reps beyond the symbolic cap
bool det_M0_zero_sampled(const UniformRep& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> u(-50, 50);
  for (int t = 0; t < 20; ++t) {
    MatrixQ m(r.N, std::vector<Rational>(r.N));
    std::vector<Rational> x(r.n);
    for (auto& v : x) v = Rational(u(rng), 7);
    for (int i = 0; i < r.N; ++i)
      for (int j = 0; j < r.N; ++j) m[i][j] = r.M0[i][j].eval(x);
    if (det(m) != 0) return false;
  }
  return true;
}

Outcome c5_structure() {
  Outcome o;
  std::ostringstream s;
  int symbolic = 0, sampled = 0, spans = 0;
  for (std::size_t k = 0; k < g_emitted.size(); ++k) {
    const UniformRep& r = g_emitted[k];
    bool zero = r.N <= 13 ? det_M0_vanishes(r) : det_M0_zero_sampled(r, 500 + k);
    (r.N <= 13 ? symbolic : sampled) += 1;
    RankProfile rp = rank_profile_M0(r, 20, 700 + k);
    bool span = true;
    if (r.N <= 13) {
      span = minor_span_check(r).pass;
      ++spans;
    }
    if (!zero || rp.min_rank != r.N - 1 || rp.max_rank != r.N - 1 || !span) {
      o.pass = false;
      s << rep_label(r) << (zero ? "" : " det M0 != 0") << " rank " << rp.min_rank << ".." << rp.max_rank
        << (span ? "" : " minor span fails") << "; ";
    }
  }
  s << g_emitted.size() << " reps: det M0 = 0 (" << symbolic << " symbolic, " << sampled
    << " exact at 20 points), rank N-1 at 20 points, minor span on " << spans << " reps with N<=13";
  o.detail = s.str();
  return o;
}

Outcome c6_inequality() {
  Outcome o;
  std::ostringstream s;
  std::vector<UniformRep> reps;
  for (int d = 1; d <= 12; ++d) reps.push_back(cons1(tree_set(d), d));
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d) reps.push_back(cons1(lattice_set(n, d), d));
  for (const UniformRep& r : reps) {
    long long lhs = static_cast<long long>(r.N) * (r.n + 1) - (r.N - 1);
    if (lhs < binomial(r.n + r.d, r.n)) {
      o.pass = false;
      s << rep_label(r) << " violates; ";
    }
    g_emitted.push_back(r);
  }
  UniformRep b = cons1(tree_set(2), 2);
  long long lhs = static_cast<long long>(b.N) * 3 - (b.N - 1);
  long long rhs = binomial(4, 2);
  if (!(b.N == 3 && lhs == 7 && rhs == 6)) o.pass = false;
  s << reps.size() << " cons1 outputs satisfy N(n+1)-(N-1) >= C(n+d,n); boundary N=" << b.N << ": " << lhs << " >= " << rhs;
  o.detail = s.str();
  return o;
}

Outcome c7_solver() {
  Outcome o;
  std::ostringstream s;
  double worst_match = 0.0, worst_res = 0.0, worst_time = 0.0;
  int bad = 0;
  for (int d = 3; d <= 6; ++d)
    for (bool real : {true, false})
      for (int i = 0; i < kSolverSystems; ++i) {
        std::mt19937_64 rng(100000 * d + (real ? 0 : 50000) + i);
        PolyC p = random_full(d, rng, real), q = random_full(d, rng, real);
        auto t0 = Clock::now();
        RootSet r = solve_system(p, q);
        double t = seconds_since(t0);
        RootSet ref = oracle_roots(p, q);
        double m = match_roots(r.roots, ref.roots);
        double res = 0.0;
        for (const auto& root : r.roots) res = std::max(res, root.residual);
        worst_match = std::max(worst_match, m);
        worst_res = std::max(worst_res, res);
        worst_time = std::max(worst_time, t);
        bool ok = static_cast<int>(r.roots.size()) == d * d && res < kResidualTol && m < kMatchTol && t < kSolveSeconds;
        if (!ok) {
          ++bad;
          if (bad <= 5)
            s << "d=" << d << (real ? " real" : " complex") << " #" << i << " roots=" << r.roots.size() << " match=" << m
              << " res=" << res << " t=" << t << "; ";
        }
      }
  if (bad > 0) o.pass = false;
  s << (8 * kSolverSystems - bad) << "/" << 8 * kSolverSystems << " systems d=3..6 ok, worst match " << worst_match
    << ", worst residual " << worst_res << ", worst time " << worst_time << " s";

  // smoke set, degrees 7..15
  int recovered = 0, total = 20;
  std::string misses;
  for (int i = 0; i < total; ++i) {
    int d = 7 + i % 9;
    std::mt19937_64 rng(7000 + i);
    bool real = i % 2 == 0;
    PolyC p = random_full(d, rng, real), q = random_full(d, rng, real);
    RootSet r = solve_system(p, q);
    double res = 0.0;
    for (const auto& root : r.roots) res = std::max(res, root.residual);
    bool full = static_cast<int>(r.roots.size()) == d * d && res < kResidualTol && distinct(r.roots);
    if (full)
      ++recovered;
    else
      misses += " seed " + std::to_string(7000 + i) + " (d=" + std::to_string(d) + ", " + std::to_string(r.roots.size()) + " roots, " + r.status + ")";
  }
  double rate = static_cast<double>(recovered) / total;
  if (rate < kSmokeRate) o.pass = false;
  s << "; smoke d=7..15: " << recovered << "/" << total << " fully recovered (need " << kSmokeRate * 100 << "%)" << misses;
  o.detail = s.str();
  return o;
}

Outcome c8_equivariance() {
  Outcome o;
  std::ostringstream s;
  const std::vector<std::pair<Method, std::pair<int, int>>> families = {
      {Method::Cons1Tree, {2, 4}},  {Method::Cons1Lattice, {3, 3}}, {Method::Cons2Split, {4, 3}},
      {Method::Cons2Table, {3, 4}}, {Method::Cons2Turan, {6, 4}},   {Method::Cons2Binary, {3, 4}},
      {Method::RepJan, {2, 3}},     {Method::MinUnif, {2, 4}}};
  int checks = 0;
  for (const auto& [m, nd] : families) {
    UniformRep r;
    try {
      r = construct(nd.first, nd.second, m);
    } catch (const Inapplicable&) {
      o.pass = false;
      s << method_name(m) << " inapplicable at (" << nd.first << "," << nd.second << "); ";
      continue;
    }
    for (int k = 0; k < 10; ++k) {
      AffineMap g = AffineMap::random(r.n, 31 * k + static_cast<int>(m));
      if (!verify(act(g, r), randomized(900 + k)).pass) {
        o.pass = false;
        s << method_name(m) << " map " << k << " fails; ";
      }
      MatrixQ a = coeff_action(g, r.n, r.d), b = coeff_action(g.inverse(), r.n, r.d);
      if (multiply(a, b) != identity_q(binomial(r.n + r.d, r.n))) {
        o.pass = false;
        s << method_name(m) << " map " << k << " rho(g)rho(g^-1) != I; ";
      }
      ++checks;
    }
  }
  // g(x, y) = (y, x + 1); basis c00, c10, c01, c20, c11, c02
  AffineMap g;
  g.A = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  g.b = {Rational(0), Rational(1)};
  const long want[6][6] = {{1, -1, 0, 1, 0, 0}, {0, 0, 1, 0, -1, 0}, {0, 1, 0, -2, 0, 0},
                           {0, 0, 0, 0, 0, 1},  {0, 0, 0, 0, 1, 0},  {0, 0, 0, 1, 0, 0}};
  MatrixQ rho = coeff_action(g, 2, 2);
  bool literal = rho.size() == 6;
  for (int i = 0; literal && i < 6; ++i)
    for (int j = 0; j < 6; ++j) literal = literal && rho[i][j] == want[i][j];
  if (!literal) o.pass = false;
  s << checks << " (map, family) pairs: det(act(g,rep)) = p and rho(g)rho(g^-1) = I; swap-shift rho literal: "
    << (literal ? "yes" : "no");
  o.detail = s.str();
  return o;
}

Outcome c9_lift() {
  Outcome o;
  std::ostringstream s;
  int pairs = 0;
  for (int d = 1; d <= 5; ++d)
    for (int k = 1; k <= 3; ++k) {
      if (!lift_identity(repjan(d), MatrixPoly::random(2, d, k, 40 * d + k))) {
        o.pass = false;
        s << "repjan(" << d << ") k=" << k << " fails; ";
      }
      ++pairs;
    }
  Exponent a{1, 0}, b{0, 1};
  UniformRep padded = pad_noncommuting(minunif(2), a, b);
  MatrixPoly P = MatrixPoly::random(2, 2, 2, 99);
  Lift L = lift(padded, P);
  bool differ = false;
  std::vector<Rational> where;
  for (int u = -3; u <= 3 && !differ; ++u)
    for (int v = -3; v <= 3 && !differ; ++v) {
      std::vector<Rational> x{Rational(u), Rational(v)};
      if (lift_det(L, x) != det(P.eval(x))) {
        differ = true;
        where = x;
      }
    }
  if (!differ || L.warranted) o.pass = false;
  s << pairs << " (d, k) pairs with det(lift) = det(P) exactly; non-commuting counterexample "
    << (differ ? "detected at x = (" + where[0].get_str() + ", " + where[1].get_str() + ")" : "not detected");
  o.detail = s.str();
  return o;
}

Outcome c10_asymptotics() {
  Outcome o;
  std::ostringstream s;
  // minunif(d)/d -> 2: the gap shrinks monotonically and is small at the top of the range
  double prev_gap = 1e9;
  for (int d = 1; d <= 12; ++d) {
    double gap = std::abs(minunif(d).N / static_cast<double>(d) - 2.0);
    if (gap > prev_gap) o.pass = false;
    prev_gap = gap;
  }
  if (prev_gap > 0.1) o.pass = false;
  s << "minunif(12)/12 = " << minunif(12).N / 12.0;
  for (auto [n, dmax] : {std::pair{2, 12}, std::pair{4, 6}}) {
    double worst = 0.0, prev = 1e9;
    bool nonincreasing = true;
    for (int d = 2; d <= dmax; ++d) {
      double ratio = construct(n, d, Method::Cons2Split).N / std::pow(d, n / 2.0);
      worst = std::max(worst, ratio);
      if (ratio > prev + 1e-12) nonincreasing = false;
      prev = ratio;
    }
    // bounded: the ratio never grows along the range, so its first value bounds the rest
    if (!nonincreasing) o.pass = false;
    s << "; cons2-split n=" << n << " d<=" << dmax << ": max N/d^" << n / 2 << " = " << worst << ", last " << prev
      << (nonincreasing ? " (nonincreasing)" : " (grows)");
  }
  o.detail = s.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"binary quadric", c1_quadric},
      {"explicit families", c2_families},
      {"size table regression", c3_table},
      {"Turan law", c4_turan},
      {"inequality N(n+1)-(N-1) >= C(n+d,n)", c6_inequality},
      {"structural lemmas", c5_structure},
      {"solver correctness", c7_solver},
      {"affine equivariance", c8_equivariance},
      {"matrix-polynomial lift", c9_lift},
      {"asymptotic sanity", c10_asymptotics},
  };
  // criterion 5 consumes every representation built before it, so criterion 6 runs first
  const int number[] = {1, 2, 3, 4, 6, 5, 7, 8, 9, 10};
  std::map<int, std::string> lines;
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, " [%.1f s]", seconds_since(t0));
    std::string line = std::string(out.pass ? "PASS" : "FAIL") + "  " + std::to_string(number[i]) + ". " + criteria[i].first +
                       ": " + out.detail + buf;
    std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    lines[number[i]] = line;
    if (!out.pass) ++failed;
  }
  std::printf("\nsummary (criterion order)\n");
  for (const auto& [k, line] : lines) std::printf("%s\n", line.substr(0, line.find(':')).c_str());
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
