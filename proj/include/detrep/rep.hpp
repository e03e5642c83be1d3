#pragma once

#include "detrep/exact.hpp"
#include "detrep/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace detrep {

template <class S>
using AffineMatrix = std::vector<std::vector<Affine<S>>>;
using AffineMatrixQ = AffineMatrix<Rational>;
using PolyMatrix = std::vector<std::vector<PolyQ>>;

struct Cell {
  int i = 0, j = 0;
  AffineQ f;
};

// M = M0 + sum_alpha c_alpha M_alpha; M_alpha kept as sparse cell lists
struct UniformRep {
  int n = 0, d = 0, N = 0;
  AffineMatrixQ M0;
  std::map<Exponent, std::vector<Cell>, GradedLess> Malpha;
  std::string method;
  std::map<std::string, long long> sizes;  // provenance: set sizes etc.
  bool lift_warranted = false;

  UniformRep() = default;
  UniformRep(int n_, int d_, int N_);

  // accumulates into the cell, dropping it again if it cancels
  void add(const Exponent& alpha, int i, int j, const AffineQ& f);
  AffineMatrixQ dense(const Exponent& alpha) const;
};

AffineMatrixQ zero_affine_matrix(int rows, int cols, int n);

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A0 + sum x_i A_i with the coefficients of a concrete polynomial substituted for c
template <class S>
AffineMatrix<S> specialize(const UniformRep& rep, const Poly<S>& coeffs);

// exact determinant over Q[vars]; Bareiss with a cofactor fallback
PolyQ symbolic_det(const PolyMatrix& m, int cap = 13);
// subset-memoized Laplace expansion, independent of symbolic_det
PolyQ cofactor_det(const PolyMatrix& m);

// M as a polynomial matrix in x1..xn and the c_alpha (graded order), n + dim F_d variables
PolyMatrix symbolic_matrix(const UniformRep& rep);

enum class VerifyMode { Symbolic, Randomized };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Symbolic;
  int trials = 20;
  std::uint64_t seed = 1;
  int box_lo = -10, box_hi = 10;
  int cap = 13;
};

struct VerificationReport {
  VerifyMode mode = VerifyMode::Symbolic;
  bool pass = false;
  std::optional<std::vector<Rational>> witness_x, witness_c;
  int trials = 0;
  double failure_bound = 0.0;  // randomized only
};

VerificationReport verify(const UniformRep& rep, const VerifyOptions& opt = {});

// det(M0 + sum c_alpha M_alpha) at integer/rational x and c
Rational eval_det(const UniformRep& rep, const std::vector<Rational>& x, const std::vector<Rational>& c);

struct RankProfile {
  int min_rank = 0, max_rank = 0;
};
RankProfile rank_profile_M0(const UniformRep& rep, int points, std::uint64_t seed, double tol_scale = -1.0);

struct MinorSpanResult {
  bool pass = false;
  int dim_V = 0;
};
MinorSpanResult minor_span_check(const UniformRep& rep, int cap = 13);

// exact check det(M0) == 0 as a polynomial in x
bool det_M0_vanishes(const UniformRep& rep, int cap = 13);

}  // namespace detrep
