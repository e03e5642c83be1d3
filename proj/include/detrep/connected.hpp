#pragma once

#include "detrep/rep.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace detrep {

struct ParentEdge {
  int child = 0, parent = 0, var = 0;
};

struct MonomialSet {
  int n = 0;
  std::vector<Exponent> members;  // graded order, members[0] = 0
  std::vector<ParentEdge> parents;

  int size() const { return static_cast<int>(members.size()); }
  int index_of(const Exponent& e) const;  // -1 if absent
};

struct ConnectResult {
  std::optional<MonomialSet> set;
  std::string error;                // "missing zero" or "orphan"
  std::optional<Exponent> orphan;   // first unconnectable member
  explicit operator bool() const { return set.has_value(); }
};

ConnectResult check_connected(int n, const std::vector<Exponent>& members);
// like check_connected but throws std::invalid_argument on failure
MonomialSet make_connected(int n, const std::vector<Exponent>& members);

AffineMatrixQ build_MV(const MonomialSet& V);

MonomialSet tree_set(int d);
MonomialSet lattice_set(int n, int d);
std::pair<MonomialSet, MonomialSet> binary_sets(int n, int d);
std::pair<MonomialSet, MonomialSet> split_sets(int n, int d);
std::pair<MonomialSet, MonomialSet> table_sets(int n, int d);
std::pair<MonomialSet, MonomialSet> turan_sets(int n);

// which (n, d) cells table_sets knows about
bool table_cell(int n, int d);

// members of B_0 (bits only at even positions) or B_1 (odd positions) up to `limit`
std::vector<int> binary_digits_set(int parity, int limit);

// Cartan matrix of type A with `rank` rows
std::vector<std::vector<int>> cartan_A(int rank);
bool in_root_lattice(const std::vector<int>& v);

// first alpha in F_d without x^alpha = x^delta x^beta x^gamma, delta in {0, e_k}, beta in V, gamma in W
std::optional<Exponent> uncovered(int d, const MonomialSet& V, const MonomialSet& W);
MonomialSet one_set(int n);

long long turan_number_42(int n);

}  // namespace detrep
