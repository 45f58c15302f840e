// The n x l box array: rows labeled top-to-bottom by I_n, columns left-to-right
// by I_l, boxes labeled skew-symmetrically by I_{nl} (row(-a) = -row(a),
// col(-a) = -col(a)). For epsilon = - the labels additionally satisfy a > 0
// exactly when col(a) > 0, or col(a) = 0 and row(a) > 0.
//
// The standard labeling fills boxes column-major (left to right, top to
// bottom) with I_{nl} in increasing order; that rule is skew-symmetric, meets
// the epsilon = - constraint, and for (3,2,-) produces the array
// {-5,1 / -3,3 / -1,5}.
#pragma once

#include <vector>

#include "walg/config.hpp"
#include "walg/lie_core.hpp"
#include "walg/rational.hpp"

namespace walg {

class Pyramid {
   public:
    // Deterministic column-major labeling.
    static Pyramid standard(const Config& cfg);
    // Arbitrary labeling, validated against both invariants. boxes_by_rowphys
    // lists label values row by row (top to bottom), each row left to right.
    static Pyramid custom(const Config& cfg, const std::vector<std::vector<int>>& boxes_by_row);

    const Config& config() const { return cfg_; }

    int row(int label) const;  // in I_n
    int col(int label) const;  // in I_l
    int label_at(int row, int col) const;

    bool operator==(const Pyramid& o) const { return cfg_ == o.cfg_ && labels_ == o.labels_; }

    // deg f_{a,b} = col(b) - col(a); always even.
    int degree(int a, int b) const { return col(b) - col(a); }

   private:
    Pyramid(const Config& cfg, std::vector<int> labels);
    void validate() const;

    Config cfg_;
    std::vector<int> labels_;       // physical box (row_pos * l + col_pos) -> label
    std::vector<int> row_of_;       // index_pos(label, N) -> row value
    std::vector<int> col_of_;       // index_pos(label, N) -> col value
};

// rho_q = (nq - epsilon)/2 for q > 0, (nq + epsilon)/2 for q < 0, 0 for q = 0.
Rational rho(int q, const Config& cfg);

// The nilpotent of Jordan type (l^n) attached to the pyramid:
//   sum over horizontally adjacent boxes f_{a,b} (col(a)+2 = col(b) >= 2),
//   plus the col(b) = 1 transitions with coefficient 1 on rows > 0 and 1/2 on
//   row 0.
LieElement nilpotent_e(const Pyramid& pyr);

}  // namespace walg
