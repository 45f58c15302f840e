// Exact projection identities for row determinants of the Omega matrices,
// checked as polynomials in u with U(g) coefficients:
//   RowReplacement:            pr(s_{i,j}(rdet of Omega_{q,l-1} with its first
//                              row replaced by the e_{q+2,*} row)) equals
//                              (u + rho_{q+2} - n) s_{i,j}(rdet Omega_{q+4,l-1}),
//                              for q >= 0.
//   SubmatrixCommutator:       pr([s_{i,j}(e_{q+2,q}), s_{h,k}(rdet Omega_{p,l-1})]) = 0
//                              for q > 0, -q < p < q.
//   FullCommutator:            pr([s_{i,j}(e_{q+2,q}), s_{h,k}(rdet Omega)]) = 0 for q > 0.
//   EvenBottomCommutator:      pr([s_{i,j}(e_{1,-1}), s_{h,k}(rdet Omega)]) = 0, l even.
//   OddZeroColumnCommutator:   the two closed-form expansions of
//                              pr([s_{i,j}(e_{2,0}), s_{h,k}(rdet Omega / barOmega)]), l odd.
#pragma once

#include <string>
#include <vector>

#include "walg/smap.hpp"

namespace walg {

enum class RdetIdentity {
    RowReplacement,
    SubmatrixCommutator,
    FullCommutator,
    EvenBottomCommutator,
    OddZeroColumnCommutator,
};

std::string rdet_identity_name(RdetIdentity id);

struct RdetParams {
    int q = 0;
    int p = 0;
    int i = 0, j = 0, h = 0, k = 0;
    bool barred = false;
};

struct RdetOutcome {
    bool ok = false;
    UEAPoly difference;  // lhs - rhs, zero exactly when the identity holds

    explicit operator bool() const { return ok; }
};

// Evaluates one identity instance exactly; throws std::invalid_argument when
// the parameters violate the identity's hypotheses.
RdetOutcome check_rdet_identity(const AlgebraPtr& alg, RdetIdentity id, const RdetParams& params);

// Every hypothesis-respecting parameter tuple for the given config.
std::vector<RdetParams> rdet_identity_params(RdetIdentity id, const Config& cfg);

// Per-coefficient application of pr.
UEAPoly pr(const UEAPoly& x);

}  // namespace walg
