// Commutative polynomials over the exact rationals in formal symbols, used
// for the leading-symbol checks: the x^{[p]}_{i,j} symbol algebra modulo
// x^{[p]}_{i,j} + phi^{hat i + hat j} x^{[-p]}_{-j,-i} = 0 (the presentation
// of gr U(h)), the theta-star image of the elementary symmetric coordinates,
// and top-degree Kazhdan symbols of PBW elements.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "walg/algebra.hpp"
#include "walg/uea.hpp"

namespace walg {

using VarId = std::uint32_t;
using CommMonomial = std::vector<VarId>;  // sorted with multiplicity

class CommPoly {
   public:
    CommPoly() = default;  // zero

    static CommPoly scalar(const Rational& c);
    static CommPoly variable(VarId v, const Rational& c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<CommMonomial, Rational>& terms() const { return terms_; }

    void add(CommMonomial m, const Rational& c);  // sorts m

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    CommPoly& operator*=(const Rational& c);
    friend CommPoly operator+(CommPoly x, const CommPoly& y) { return x += y; }
    friend CommPoly operator-(CommPoly x, const CommPoly& y) { return x -= y; }
    friend CommPoly operator*(const Rational& c, CommPoly x) { return x *= c; }
    CommPoly operator*(const CommPoly& o) const;

    bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }

    Rational evaluate(const std::vector<Rational>& values) const;

   private:
    std::map<CommMonomial, Rational> terms_;
};

// Canonicalized symbol variables x^{[p]}_{i,j}: one VarId per orbit of
// (i,j,p) ~ (-j,-i,-p) with the sign transported, zero when the relation
// forces self-cancellation.
class SymbolTable {
   public:
    explicit SymbolTable(const Config& cfg);

    struct Resolved {
        int sign = 0;  // 0 means the symbol is identically zero
        VarId var = 0;
    };
    Resolved resolve(int i, int j, int p) const;

    std::size_t size() const { return count_; }

    // Value assignment from matrices A_p (indexed by p in I_l): the canonical
    // variable for (i,j,p) takes the (i,j) entry of A_p.
    std::vector<Rational> values_from_matrices(const std::vector<RatMatrix>& a) const;

   private:
    Config cfg_;
    std::map<std::array<int, 3>, VarId> vars_;
    std::vector<std::array<int, 3>> var_keys_;
    std::size_t count_ = 0;
};

// theta-star image of the elementary symmetric coordinate y^{[r]}_{i,j}:
//   sum over i_1..i_{r-1} in I_n and p_1 < ... < p_r in I_l of
//   x^{[p_1]}_{i,i_1} x^{[p_2]}_{i_1,i_2} ... x^{[p_r]}_{i_{r-1},j}.
CommPoly theta_star(const Config& cfg, const SymbolTable& table, int i, int j, int r);

// Degree-r part of an element of U(h) as a symbol polynomial: each length-r
// PBW monomial maps factor-wise through gr_1 s_{i,j}(e_{p,p}) = x^{[p]}_{i,j}.
// Throws if some monomial is longer than r.
CommPoly h_top_symbol(const AlgebraPtr& alg, const SymbolTable& table, const UEAElement& x, int r);

// Commutative image of the top Kazhdan-degree part of x, over one variable
// per basis generator (VarId = GenId).
CommPoly kazhdan_top_symbol(const UEAElement& x);

}  // namespace walg
