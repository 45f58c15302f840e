// The s-map T(gl_l) -> M_n (x) U(g): on matrix units
// s_{i,j}(e_{p,q}) = phi^{hat i hat p + hat j hat q} f_{a,b} with row(a) = i,
// col(a) = p, row(b) = j, col(b) = q; on longer words by
// s_{i,j}(x y) = sum_k s_{i,k}(x) s_{k,j}(y), evaluated as a prefix DP.
// Also: the W-algebra generators s_{i,j}(omega_r), the centralizer elements
// f_{i,j;r} with the alpha_{p,q} weights, and the closed commutator expansion
// of [s_{i,j}(e_{p,q}), s_{h,k}(y_1 (x) ... (x) y_m)] with its gamma sign.
#pragma once

#include "walg/algebra.hpp"
#include "walg/mutation.hpp"
#include "walg/omega.hpp"
#include "walg/uea.hpp"

namespace walg {

using UEAPoly = UPoly<UEAElement>;

// s_{i,j}(e_{p,q}) (a signed canonical generator; may be zero).
UEAElement s_generator(const AlgebraPtr& alg, int i, int j, int p, int q);

UEAElement s_word(const AlgebraPtr& alg, int i, int j, const TensorWord& w);
UEAElement s_element(const AlgebraPtr& alg, int i, int j, const TensorElement& t);
UEAPoly s_poly(const AlgebraPtr& alg, int i, int j, const TensorPoly& p);

// s_{i,j}(omega_r); always lands in U(p) (checked).
UEAElement w_generator(const AlgebraPtr& alg, int i, int j, int r, Mutation mut = Mutation::None);

// The four-case weight alpha_{p,q} for q - p = 2r:
//   1                    if q < 0
//   phi (-1)^{q/2}       if p < 0, q >= 0, l odd
//   (-1)^{(q+1)/2}       if p < 0, q > 0, l even
//   (-1)^{(q-p)/2}       if p >= 0.
Rational alpha_coefficient(int p, int q, const Config& cfg, Mutation mut = Mutation::None);

// f_{i,j;r} = sum_{q-p=2r} alpha_{p,q} s_{i,j}(e_{p,q}), an element of the
// centralizer of e.
LieElement centralizer_element(const AlgebraPtr& alg, int i, int j, int r,
                               Mutation mut = Mutation::None);

// gamma sign of the commutator expansion.
Rational gamma_factor(int i, int j, int p, int q, const Config& cfg);

// Closed-form right-hand side of
//   [s_{i,j}(e_{p,q}), s_{h,k}(y_1 (x) ... (x) y_m)]
// with matrix products e_{p,q} y_t etc. taken in M_l.
UEAElement s_commutator_expansion(const AlgebraPtr& alg, int i, int j, int p, int q, int h, int k,
                                  const TensorWord& w);

}  // namespace walg
