#pragma once

#include "detrep/connected.hpp"
#include "detrep/rep.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace detrep {

enum class Method { Cons1Tree, Cons1Lattice, Cons2Split, Cons2Table, Cons2Turan, Cons2Binary, RepJan, MinUnif };

const std::vector<Method>& all_methods();
std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& s);

struct CoveringError : std::invalid_argument {
  Exponent alpha;
  CoveringError(const std::string& what, Exponent a) : std::invalid_argument(what), alpha(std::move(a)) {}
};

struct Inapplicable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AssignmentEntry {
  Exponent alpha;
  int i = 0, j = 0;  // W-member row index, V-member column index
  int delta = -1;    // -1 for no shift, otherwise the variable index
  int sign = 1;
};

// decompositions x^alpha = x^delta x^{V_j} x^{W_i}, smallest (delta, j, i) with no shift first
std::vector<AssignmentEntry> assign(int d, const MonomialSet& V, const MonomialSet& W);

UniformRep cons1(const MonomialSet& V, int d);
UniformRep cons2(const MonomialSet& V, const MonomialSet& W, int d);
UniformRep repjan(int d);
UniformRep minunif(int d);

// the 1x1 representation [c_0] used for d = 0
UniformRep constant_rep(int n);

UniformRep construct(int n, int d, Method m);

// method used to reach the best known size in the regression table
Method best_method(int n, int d);
// filled cells of the size table: the tabulated value, or 0
int tabulated_size(int n, int d);

}  // namespace detrep
