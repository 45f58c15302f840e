#include "walg/lie_core.hpp"

#include <sstream>
#include <stdexcept>

namespace walg {

Canonicalized canonicalize_f(int a, int b, int epsilon, int N) {
    if (!in_index_set(a, N) || !in_index_set(b, N))
        throw std::out_of_range("canonicalize_f: index outside I_N");
    const int eps_hat = sign_pow(epsilon, (hat(a) + hat(b)) % 2);
    const FPair self{a, b};
    const FPair partner{-b, -a};
    if (self == partner) {
        // f_{a,-a} = (1 - epsilon^{hat a + hat b}) e_{a,-a}
        if (eps_hat == 1) return {Rational(0), std::nullopt};
        return {Rational(1), self};
    }
    if (self < partner) return {Rational(1), self};
    return {Rational(-eps_hat), partner};
}

LieElement LieElement::basis(const Config& cfg, int a, int b, const Rational& coeff) {
    LieElement x(cfg);
    x.add(a, b, coeff);
    return x;
}

const Config& LieElement::config() const {
    if (!attached_) throw std::logic_error("LieElement: no config attached");
    return cfg_;
}

void LieElement::add(int a, int b, const Rational& coeff) {
    if (!attached_) throw std::logic_error("LieElement::add: no config attached");
    if (walg::is_zero(coeff)) return;
    auto canon = canonicalize_f(a, b, cfg_.epsilon, cfg_.N());
    if (!canon.pair) return;
    Rational& slot = terms_[*canon.pair];
    slot += coeff * canon.coeff;
    if (walg::is_zero(slot)) terms_.erase(*canon.pair);
}

void LieElement::require_same(const LieElement& o) const {
    if (attached_ && o.attached_ && !(cfg_ == o.cfg_))
        throw std::invalid_argument("LieElement: mismatched configs");
}

LieElement& LieElement::operator+=(const LieElement& o) {
    require_same(o);
    if (!attached_) {
        cfg_ = o.cfg_;
        attached_ = o.attached_;
    }
    for (const auto& [key, c] : o.terms_) {
        Rational& slot = terms_[key];
        slot += c;
        if (walg::is_zero(slot)) terms_.erase(key);
    }
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    LieElement neg = -o;
    return *this += neg;
}

LieElement& LieElement::operator*=(const Rational& c) {
    if (walg::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

LieElement LieElement::operator-() const {
    LieElement out = *this;
    for (auto& [key, v] : out.terms_) v = -v;
    return out;
}

bool LieElement::operator==(const LieElement& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    if (attached_ && o.attached_ && !(cfg_ == o.cfg_)) return false;
    return terms_ == o.terms_;
}

std::string LieElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*f[" << key.first << "," << key.second << "]";
    }
    return os.str();
}

namespace {

// [f_{a,b}, f_{c,d}] accumulated into out (canonicalizing each term).
void accumulate_bracket(const Config& cfg, FPair x, FPair y, const Rational& coeff,
                        LieElement& out) {
    const auto [a, b] = x;
    const auto [c, d] = y;
    const int eps_ab = sign_pow(cfg.epsilon, (hat(a) + hat(b)) % 2);
    if (c == b) out.add(a, d, coeff);
    if (a == d) out.add(c, b, -coeff);
    if (c == -a) out.add(-b, d, -coeff * eps_ab);
    if (-b == d) out.add(c, -a, coeff * eps_ab);
}

}  // namespace

LieElement bracket(const LieElement& x, const LieElement& y) {
    x.require_same(y);
    if (x.terms().empty()) return x;
    if (y.terms().empty()) return y;
    LieElement out(x.config());
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms())
            accumulate_bracket(out.config(), kx, ky, cx * cy, out);
    return out;
}

std::vector<FPair> canonical_basis(const Config& cfg) {
    std::vector<FPair> out;
    const int N = cfg.N();
    for (int a : index_set(N))
        for (int b : index_set(N)) {
            auto canon = canonicalize_f(a, b, cfg.epsilon, N);
            if (canon.pair && *canon.pair == FPair{a, b}) out.push_back({a, b});
        }
    return out;
}

long lie_dimension_formula(const Config& cfg) {
    const long N = cfg.N();
    return cfg.epsilon == 1 ? N * (N - 1) / 2 : N * (N + 1) / 2;
}

}  // namespace walg
