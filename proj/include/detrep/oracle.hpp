#pragma once

#include "detrep/twopareig.hpp"

#include <cstdint>
#include <stdexcept>

namespace detrep {

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sylvester matrix of p, q as polynomials in y, evaluated at x
Eigen::MatrixXcd sylvester_at(const PolyC& p, const PolyC& q, Complex x);

// coefficients (ascending) of Res_y(p, q)(x), interpolated at d1*d2+1 roots of unity
std::vector<Complex> resultant_coeffs(const PolyC& p, const PolyC& q);

struct OracleOptions {
  double tol = 1e-8;    // residual acceptance
  double dedupe = 1e-6; // relative distance below which two roots coincide
  std::uint64_t seed = 11;
  int max_rotations = 5;
};

RootSet oracle_roots(const PolyC& p, const PolyC& q, const OracleOptions& opt = {});

// optimal bipartite matching; returns the largest matched distance, infinity on count mismatch
double match_roots(const std::vector<Root>& a, const std::vector<Root>& b);

}  // namespace detrep
