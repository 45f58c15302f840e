// Polynomials (and finite Laurent expressions) in the central indeterminate u
// with coefficients in a not-necessarily-commutative ring: coefficient order
// is preserved under multiplication. Identities involving generating series
// are checked by equating u-coefficients of these values.
#pragma once

#include <map>
#include <string>

#include "walg/rational.hpp"

namespace walg {

template <class C>
class UPoly {
   public:
    UPoly() = default;  // zero

    static UPoly constant(C c) {
        UPoly p;
        p.set(0, std::move(c));
        return p;
    }
    static UPoly monomial(int power, C c) {
        UPoly p;
        p.set(power, std::move(c));
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, C>& coefficients() const { return coeffs_; }

    C coeff(int power) const {
        auto it = coeffs_.find(power);
        return it == coeffs_.end() ? C{} : it->second;
    }
    int degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    int low_power() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

    void set(int power, C c) {
        if (is_zero_coeff(c))
            coeffs_.erase(power);
        else
            coeffs_[power] = std::move(c);
    }
    void add(int power, const C& c) {
        auto it = coeffs_.find(power);
        if (it == coeffs_.end()) {
            if (!is_zero_coeff(c)) coeffs_[power] = c;
            return;
        }
        it->second += c;
        if (is_zero_coeff(it->second)) coeffs_.erase(it);
    }

    UPoly& operator+=(const UPoly& o) {
        for (const auto& [k, c] : o.coeffs_) add(k, c);
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        for (const auto& [k, c] : o.coeffs_) {
            C neg = c;
            neg *= Rational(-1);
            add(k, neg);
        }
        return *this;
    }
    friend UPoly operator+(UPoly x, const UPoly& y) { return x += y; }
    friend UPoly operator-(UPoly x, const UPoly& y) { return x -= y; }

    UPoly& operator*=(const Rational& r) {
        if (walg::is_zero(r)) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [k, c] : coeffs_) c *= r;
        return *this;
    }
    friend UPoly operator*(const Rational& r, UPoly x) { return x *= r; }

    UPoly operator*(const UPoly& o) const {
        UPoly out;
        for (const auto& [k1, c1] : coeffs_)
            for (const auto& [k2, c2] : o.coeffs_) out.add(k1 + k2, c1 * c2);
        return out;
    }

    // Multiplies every coefficient by u^k.
    UPoly shifted(int k) const {
        UPoly out;
        for (const auto& [p, c] : coeffs_) out.coeffs_[p + k] = c;
        return out;
    }

    bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }

   private:
    static bool is_zero_coeff(const C& c) {
        using walg::is_zero;
        return is_zero(c);
    }

    std::map<int, C> coeffs_;
};

}  // namespace walg
