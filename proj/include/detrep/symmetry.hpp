#pragma once

#include "detrep/exact.hpp"
#include "detrep/rep.hpp"

#include <cstdint>

namespace detrep {

// x -> A x + b
struct AffineMap {
  MatrixQ A;
  std::vector<Rational> b;

  int dim() const { return static_cast<int>(b.size()); }
  static AffineMap identity(int n);
  static AffineMap random(int n, std::uint64_t seed, int range = 3);

  AffineMap inverse() const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  // components of the map as affine forms in x
  std::vector<AffineQ> forms() const;
};

// (g o h)(x) = g(h(x))
AffineMap compose(const AffineMap& g, const AffineMap& h);

// rho(g)[alpha][beta] = coefficient of x^alpha in (g^{-1} x)^beta, graded basis of F_d
MatrixQ coeff_action(const AffineMap& g, int n, int d);

UniformRep act(const AffineMap& g, const UniformRep& rep);

}  // namespace detrep
