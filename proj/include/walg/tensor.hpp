// Words in the gl_l matrix units and their exact-rational combinations,
// i.e. elements of the tensor algebra T(gl_l). Multiplication concatenates
// words; nothing commutes.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

struct MatUnit {
    int p = 0;
    int q = 0;
    auto operator<=>(const MatUnit&) const = default;
};

using TensorWord = std::vector<MatUnit>;  // empty word = 1

// e_{p,q} e_{v,w} = delta_{q,v} e_{p,w} in M_l.
std::optional<MatUnit> mat_unit_product(const MatUnit& x, const MatUnit& y);

class TensorElement {
   public:
    TensorElement() = default;  // zero

    static TensorElement one() { return scalar(Rational(1)); }
    static TensorElement scalar(const Rational& c);
    static TensorElement unit(int p, int q);
    static TensorElement word(TensorWord w, const Rational& c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<TensorWord, Rational>& terms() const { return terms_; }

    void add(const TensorWord& w, const Rational& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Rational& c);
    friend TensorElement operator+(TensorElement x, const TensorElement& y) { return x += y; }
    friend TensorElement operator-(TensorElement x, const TensorElement& y) { return x -= y; }
    friend TensorElement operator*(const Rational& c, TensorElement x) { return x *= c; }
    TensorElement operator-() const;

    TensorElement operator*(const TensorElement& o) const;  // word concatenation

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

   private:
    std::map<TensorWord, Rational> terms_;
};

inline bool is_zero(const TensorElement& t) { return t.is_zero(); }

}  // namespace walg
