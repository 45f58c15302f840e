// The l x l matrices Omega(u) / barred Omega(u) over T(gl_l)[u], row
// determinants (noncommutative Laplace expansion keeping monomials in row
// order), and extraction of the coefficients omega_r of the generating
// series: omega(u) = rdet Omega(u) for even l, plus the geometric tail
// sum_{t>=1} (-2 phi u)^{-t} rdet barOmega(u) for odd l, resolved in closed
// form per coefficient.
#pragma once

#include <vector>

#include "walg/config.hpp"
#include "walg/mutation.hpp"
#include "walg/tensor.hpp"
#include "walg/upoly.hpp"

namespace walg {

using TensorPoly = UPoly<TensorElement>;

// u_q = u + e_{q,q} + rho_q.
TensorPoly u_entry(int q, const Config& cfg);

struct OmegaMatrix {
    Config cfg;
    bool barred = false;
    std::vector<int> indices;                    // contiguous sub-interval of I_l
    std::vector<std::vector<TensorPoly>> entry;  // entry[i][j] for indices[i], indices[j]

    std::size_t size() const { return indices.size(); }
};

OmegaMatrix omega_matrix(const Config& cfg, bool barred = false, Mutation mut = Mutation::None);

// Square submatrix with rows and columns indexed by {from, from+2, ..., to};
// empty when from > to.
OmegaMatrix submatrix(const OmegaMatrix& m, int from, int to);

// Row determinant via first-row expansion, skipping structural zeros (the
// Hessenberg pattern makes this cheap). Equals the full permutation sum.
TensorPoly rdet(const std::vector<std::vector<TensorPoly>>& m);
TensorPoly rdet(const OmegaMatrix& m);

// Reference oracle: the unpruned sum over all permutations with signs,
// factors in row order.
TensorPoly rdet_permutation_sum(const std::vector<std::vector<TensorPoly>>& m);
TensorPoly rdet_permutation_sum(const OmegaMatrix& m);

// omega_r = [u^{l-r}] rdet Omega(u)
//         + (l odd) sum_{t=max(1,r-l)}^{r-1} (-2 phi)^{-t} [u^{l-r+t}] rdet barOmega(u).
TensorElement omega_coefficient(int r, const Config& cfg, Mutation mut = Mutation::None);

}  // namespace walg
