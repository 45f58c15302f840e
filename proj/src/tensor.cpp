#include "walg/tensor.hpp"

#include <sstream>

namespace walg {

std::optional<MatUnit> mat_unit_product(const MatUnit& x, const MatUnit& y) {
    if (x.q != y.p) return std::nullopt;
    return MatUnit{x.p, y.q};
}

TensorElement TensorElement::scalar(const Rational& c) {
    TensorElement t;
    if (!walg::is_zero(c)) t.terms_[TensorWord{}] = c;
    return t;
}

TensorElement TensorElement::unit(int p, int q) {
    TensorElement t;
    t.terms_[TensorWord{MatUnit{p, q}}] = Rational(1);
    return t;
}

TensorElement TensorElement::word(TensorWord w, const Rational& c) {
    TensorElement t;
    if (!walg::is_zero(c)) t.terms_[std::move(w)] = c;
    return t;
}

void TensorElement::add(const TensorWord& w, const Rational& c) {
    if (walg::is_zero(c)) return;
    Rational& slot = terms_[w];
    slot += c;
    if (walg::is_zero(slot)) terms_.erase(w);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
    if (walg::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

TensorElement TensorElement::operator-() const {
    TensorElement out = *this;
    for (auto& [w, v] : out.terms_) v = -v;
    return out;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    TensorElement out;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            TensorWord w;
            w.reserve(w1.size() + w2.size());
            w.insert(w.end(), w1.begin(), w1.end());
            w.insert(w.end(), w2.begin(), w2.end());
            out.add(w, c1 * c2);
        }
    return out;
}

std::string TensorElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (const auto& u : w) os << "*e[" << u.p << "," << u.q << "]";
    }
    return os.str();
}

}  // namespace walg
