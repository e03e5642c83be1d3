#pragma once

#include "detrep/exact.hpp"
#include "detrep/rep.hpp"

#include <cstdint>
#include <map>

namespace detrep {

struct MatrixPoly {
  int n = 0, d = 0, k = 0;
  std::map<Exponent, MatrixQ, GradedLess> C;

  // P(x) = sum x^alpha C_alpha
  MatrixQ eval(const std::vector<Rational>& x) const;
  static MatrixPoly random(int n, int d, int k, std::uint64_t seed, int range = 5);
};

struct Lift {
  AffineMatrixQ M;  // Nk x Nk
  int N = 0, k = 0;
  bool warranted = false;
};

Lift lift(const UniformRep& rep, const MatrixPoly& P);
Rational lift_det(const Lift& L, const std::vector<Rational>& x);

// det(lift) == det(P) as polynomials: exact comparison on a tensor grid exceeding the degree bound
bool lift_identity(const UniformRep& rep, const MatrixPoly& P);

// diag(rep, N4) with the 4x4 block whose determinant 1 + c_a c_b - c_b c_a needs commuting C's
UniformRep pad_noncommuting(const UniformRep& rep, const Exponent& a, const Exponent& b);

struct WitnessReport {
  bool pass = false;
  bool det_q_one = false, det_z_one = false, triangular = false;
  std::vector<int> row_order, col_order;  // the permutations P_L, P_R
};

// builds Q (y-powers) and Z (x-powers) for the repjan/minunif families; throws Inapplicable otherwise
WitnessReport witness_check(const UniformRep& rep);

}  // namespace detrep
