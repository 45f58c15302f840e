#include "walg/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace walg {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c) {
    for (auto& v : a_) v *= c;
    return *this;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
    RatMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (walg::is_zero(v)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& w = o.at(k, j);
                if (!walg::is_zero(w)) out.at(i, j) += v * w;
            }
        }
    return out;
}

Rational RatMatrix::trace() const {
    Rational t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

RatMatrix commutator(const RatMatrix& x, const RatMatrix& y) { return x * y - y * x; }

std::size_t exact_rank(std::vector<std::vector<Integer>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    Integer prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& m) {
    std::vector<std::vector<Integer>> zm;
    zm.reserve(m.size());
    for (const auto& row : m) {
        Integer lcm(1);
        for (const auto& v : row)
            if (!is_zero(v)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<Integer> zr;
        zr.reserve(row.size());
        for (const auto& v : row) zr.push_back(Integer(v.get_num() * (lcm / v.get_den())));
        zm.push_back(std::move(zr));
    }
    return exact_rank(std::move(zm));
}

std::size_t exact_rank(const RatMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
    }
    return exact_rank(rows);
}

}  // namespace walg
