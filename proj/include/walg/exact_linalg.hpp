// Dense exact-rational matrices and fraction-free rank computation
// (Bareiss elimination over the integers after clearing denominators).
#pragma once

#include <cstddef>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

class RatMatrix {
   public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& c);
    friend RatMatrix operator+(RatMatrix x, const RatMatrix& y) { return x += y; }
    friend RatMatrix operator-(RatMatrix x, const RatMatrix& y) { return x -= y; }
    friend RatMatrix operator*(const Rational& c, RatMatrix x) { return x *= c; }
    RatMatrix operator*(const RatMatrix& o) const;

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Rational trace() const;

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

RatMatrix commutator(const RatMatrix& x, const RatMatrix& y);

// Fraction-free integer Bareiss elimination; exact.
std::size_t exact_rank(std::vector<std::vector<Integer>> m);

// Clears denominators row-wise and delegates to the integer routine.
std::size_t exact_rank(const RatMatrix& m);

std::size_t exact_rank(const std::vector<std::vector<Rational>>& m);

}  // namespace walg
