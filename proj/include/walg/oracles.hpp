// Independent matrix-side oracles: centralizer dimension as the nullity of
// ad(e) on the structure-constant matrix, Jordan type from ranks of powers of
// e, and the dimension of {x : x^T J^eps + J^eps x = 0} by exact elimination.
#pragma once

#include <vector>

#include "walg/algebra.hpp"

namespace walg {

// Nullity of x -> [e, x] on g, by exact elimination.
long oracle_centralizer_dim(const AlgebraPtr& alg);

// n^2 l / 2 for even l, (n^2 l - n epsilon)/2 for odd l.
long centralizer_dim_formula(const Config& cfg);

// Jordan partition of e from the rank sequence of its matrix powers,
// parts in decreasing order.
std::vector<int> oracle_jordan_type(const AlgebraPtr& alg);

// Solves x^T J^eps + J^eps x = 0 over all N x N matrices x; the nullity is
// dim g^eps_N, independent of the f-basis enumeration.
long oracle_matrix_equation_dim(const Config& cfg);

}  // namespace walg
