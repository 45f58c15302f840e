// The level-l images kappa(S^{(r)}_{i,j}) in U(h), computed two independent
// ways: the closed subset-sum formula over increasing diagonal words, and the
// u^{l-r} coefficient of the ordered product expansion
//   u^l kappa(S(u)) = s((u + e_{1-l,1-l}) ... (u + e_{l-1,l-1}))  (+ odd-l tail).
// Also: admissible triples, the kernel recurrence past level l, the
// coefficient-wise symmetry relation, and PBW independence by exact rank.
#pragma once

#include <array>
#include <vector>

#include "walg/algebra.hpp"
#include "walg/smap.hpp"
#include "walg/uea.hpp"

namespace walg {

// (i,j,r) with 1 <= r <= l and i+j <= 0 when phi (-1)^r = +1, i+j < 0 otherwise.
bool is_admissible(int i, int j, int r, const Config& cfg);
std::vector<std::array<int, 3>> admissible_triples(const Config& cfg);
long admissible_triple_count(const Config& cfg);

// Closed formula: sum over p_1 < ... < p_r of s_{i,j}(e_{p_1,p_1}...e_{p_r,p_r})
// plus, for odd l, sum_{t=1}^{r-1} (-2 phi)^{t-r} over 0-containing subsets of
// size t. Lands in U(h) (checked). r = 0 gives delta_{i,j}.
UEAElement kappa_generator(const AlgebraPtr& alg, int i, int j, int r);

// Independent code path through the ordered product expansion.
UEAElement kappa_generator_product_form(const AlgebraPtr& alg, int i, int j, int r);

// r > l: kappa(S^{(r)}) = 0 for even l; = -(phi/2) kappa(S^{(r-1)}) for odd l.
// Checked over all i,j.
bool check_kernel_relation(const AlgebraPtr& alg, int r);

// Coefficient of u^{-r} in
//   phi^{hat i + hat j} S_{-j,-i}(-u) = S_{i,j}(u) + phi (S_{i,j}(u) - S_{i,j}(-u))/(2u):
//   phi^{hat i + hat j} (-1)^r kappa(S^{(r)}_{-j,-i})
//     = kappa(S^{(r)}_{i,j}) + [r even] phi kappa(S^{(r-1)}_{i,j}).
// Checked for all i,j and 1 <= r <= max_r.
bool check_symmetry_relation(const AlgebraPtr& alg, int max_r);

struct PbwIndependence {
    bool independent = false;
    std::size_t monomial_count = 0;
    std::size_t rank = 0;
};

// Ordered monomials in the admissible kappa generators up to total Kazhdan
// degree max_degree, tested for linear independence by fraction-free rank.
PbwIndependence pbw_independence_check(const AlgebraPtr& alg, int max_degree);

}  // namespace walg
