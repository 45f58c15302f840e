// The f-basis of g^epsilon_N: f_{a,b} = e_{a,b} - epsilon^{hat a + hat b} e_{-b,-a},
// with canonical representatives, the structure constants
//   [f_{a,b}, f_{c,d}] = d_{c,b} f_{a,d} - d_{a,d} f_{c,b}
//                        + epsilon^{hat a + hat b} (-d_{c,-a} f_{-b,d} + d_{-b,d} f_{c,-a}),
// and exact-rational linear combinations of canonical basis elements.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "walg/config.hpp"
#include "walg/rational.hpp"

namespace walg {

using FPair = std::pair<int, int>;

struct Canonicalized {
    Rational coeff;             // 0 when the element vanishes identically
    std::optional<FPair> pair;  // canonical representative, absent when zero
};

// f_{a,b} rewritten on the canonical representative: the lexicographically
// smaller of (a,b) and (-b,-a). Self-paired elements f_{a,-a} vanish exactly
// when 1 - epsilon^{hat a + hat b} = 0 and are kept with their natural
// normalization otherwise. Throws std::out_of_range for indices outside I_N.
Canonicalized canonicalize_f(int a, int b, int epsilon, int N);

// Exact-rational combination of canonical f-basis elements over one Config.
class LieElement {
   public:
    LieElement() = default;
    explicit LieElement(const Config& cfg) : cfg_(cfg), attached_(true) {}

    static LieElement zero(const Config& cfg) { return LieElement(cfg); }
    // coeff * f_{a,b}, canonicalized (may be zero).
    static LieElement basis(const Config& cfg, int a, int b, const Rational& coeff = Rational(1));

    const Config& config() const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<FPair, Rational>& terms() const { return terms_; }

    // Adds coeff * f_{a,b} (canonicalizing first).
    void add(int a, int b, const Rational& coeff);

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rational& c);
    friend LieElement operator+(LieElement x, const LieElement& y) { return x += y; }
    friend LieElement operator-(LieElement x, const LieElement& y) { return x -= y; }
    friend LieElement operator*(const Rational& c, LieElement x) { return x *= c; }
    LieElement operator-() const;

    bool operator==(const LieElement& o) const;

    std::string to_string() const;

   private:
    Config cfg_;
    bool attached_ = false;  // default-constructed elements are context-free zeros
    std::map<FPair, Rational> terms_;

    friend LieElement bracket(const LieElement&, const LieElement&);
    void require_same(const LieElement& o) const;
};

// Lie bracket, bilinear extension of the displayed structure constants.
LieElement bracket(const LieElement& x, const LieElement& y);

// All canonical basis pairs of g^epsilon_N, lexicographically ordered.
std::vector<FPair> canonical_basis(const Config& cfg);

// N(N-1)/2 for epsilon = +, N(N+1)/2 for epsilon = -.
long lie_dimension_formula(const Config& cfg);

}  // namespace walg
