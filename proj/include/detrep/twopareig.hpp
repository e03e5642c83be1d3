#pragma once

#include "detrep/constructions.hpp"
#include "detrep/poly.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace detrep {

struct TwoParamProblem {
  Eigen::MatrixXcd A0, A1, A2, B0, B1, B2;
  bool real = false;  // all six matrices real
};

struct DeltaTriple {
  Eigen::MatrixXcd D0, D1, D2;
  bool real = false;
  Eigen::Index size() const { return D0.rows(); }
};

// matrices of A0 + x A1 + y A2 for det = p, from the chosen bivariate family
TwoParamProblem to_two_param(const PolyC& p, const PolyC& q, Method method = Method::MinUnif);
DeltaTriple build_deltas(const TwoParamProblem& tp);

struct RankDecision {
  std::string stage;  // "D0", "cols", "rows"
  int rows = 0, cols = 0, rank = 0;
  double gap = 0.0;           // sigma_{r-1} / sigma_r after normalization
  double kept = 0.0, dropped = 0.0;
};

struct StaircaseOptions {
  double tol = 0.0;          // singular values below tol * scale count as zero; 0 means eps * size
  double gap_ratio = 1e3;    // smallest acceptable gap before the decision is called ambiguous
  double drop_max = 1e-6;    // largest relative singular value that may be discarded
  double keep_min = 1e-13;   // smallest relative singular value that may be kept
  bool extended = false;     // 80-bit long double arithmetic instead of LAPACK doubles
};

struct StaircaseError : std::runtime_error {
  enum Kind { RankDecisionAmbiguous, NoRegularPart } kind;
  std::vector<RankDecision> log;
  StaircaseError(Kind k, const std::string& what, std::vector<RankDecision> l)
      : std::runtime_error(what), kind(k), log(std::move(l)) {}
};

struct StaircaseResult {
  DeltaTriple reduced;
  std::vector<RankDecision> log;
};

StaircaseResult staircase(const DeltaTriple& dt, const StaircaseOptions& opt = {});

struct Root {
  Complex x, y;
  double residual = 0.0;
  int multiplicity = 1;
  bool refined = false;
  bool singular_jacobian = false;
};

struct RootSet {
  std::vector<Root> roots;
  int reduced_size = 0;
  int retries = 0;
  std::string status = "ok";  // ok | partial | failed
  std::string failure;        // machine-readable reason when not ok
  double commutator = 0.0;
  std::vector<RankDecision> log;
};

struct CommuteError : std::runtime_error {
  double commutator;
  CommuteError(const std::string& w, double c) : std::runtime_error(w), commutator(c) {}
};

RootSet solve_commuting(const DeltaTriple& reduced, double commute_tol = 1e-6);

std::pair<PolyC, PolyC> rotate_system(const PolyC& p, const PolyC& q, double c, double s);
std::pair<PolyC, PolyC> rotate_system(const PolyC& p, const PolyC& q, std::uint64_t seed);

// random real orthogonal 3x3 matrix acting on homogeneous coordinates (X, Y, Z)
Eigen::Matrix3d random_orthogonal3(std::uint64_t seed);
// p in the chart x' = (x', y', 1) with (X, Y, Z) = Q (x', y', 1), homogenized at degree deg p
PolyC projective_transform(const PolyC& p, const Eigen::Matrix3d& Q);

double normalized_residual(const PolyC& p, Complex x, Complex y);
double root_residual(const PolyC& p, const PolyC& q, Complex x, Complex y);

RootSet refine(RootSet roots, const PolyC& p, const PolyC& q, int iters = 5);

struct SolveOptions {
  Method method = Method::MinUnif;
  StaircaseOptions stair;
  std::uint64_t seed = 1;
  int retries = 3;
  int projective_retries = 3;  // changes of projective chart after the rotations
  bool extended_fallback = true;
  int max_degree = 20;
  int newton_iters = 5;
  double accept_residual = 1e-8;
  double commute_tol = 1e-6;
};

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

RootSet solve_system(const PolyC& p, const PolyC& q, const SolveOptions& opt = {});

}  // namespace detrep
