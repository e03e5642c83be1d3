#pragma once

#include "detrep/poly.hpp"

#include <vector>

namespace detrep {

using MatrixQ = std::vector<std::vector<Rational>>;

MatrixQ identity_q(int n);
MatrixQ multiply(const MatrixQ& a, const MatrixQ& b);
Rational det(MatrixQ a);
int rank(MatrixQ a);
// throws std::domain_error when singular
MatrixQ inverse(const MatrixQ& a);

// incremental row-echelon basis over Q, used for span membership tests
class RowSpace {
 public:
  explicit RowSpace(int dim) : dim_(dim) {}
  // returns true if v enlarged the span
  bool insert(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(std::vector<Rational>& v) const;
  int dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

}  // namespace detrep
