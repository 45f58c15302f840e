#include "walg/uea.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace walg {

UEAElement UEAElement::zero(AlgebraPtr alg) {
    UEAElement x;
    x.alg_ = std::move(alg);
    return x;
}

UEAElement UEAElement::scalar(AlgebraPtr alg, const Rational& c) {
    UEAElement x = zero(std::move(alg));
    if (!walg::is_zero(c)) x.terms_[Monomial{}] = c;
    return x;
}

UEAElement UEAElement::generator(AlgebraPtr alg, GenId id) {
    if (id >= alg->dim()) throw std::out_of_range("UEAElement::generator: bad id");
    UEAElement x = zero(std::move(alg));
    x.terms_[Monomial{id}] = Rational(1);
    return x;
}

UEAElement UEAElement::from_lie(AlgebraPtr alg, const LieElement& x) {
    UEAElement out = zero(alg);
    for (const auto& [pair, c] : x.terms()) out.terms_[Monomial{alg->id_of(pair)}] = c;
    return out;
}

UEAElement UEAElement::from_normal_form(AlgebraPtr alg, std::map<Monomial, Rational> terms) {
    UEAElement out = zero(std::move(alg));
    for (auto it = terms.begin(); it != terms.end();) {
        if (!std::is_sorted(it->first.begin(), it->first.end()))
            throw std::invalid_argument("from_normal_form: monomial not in PBW order");
        it = walg::is_zero(it->second) ? terms.erase(it) : std::next(it);
    }
    out.terms_ = std::move(terms);
    return out;
}

void UEAElement::require_compatible(const UEAElement& o) const {
    if (alg_ && o.alg_ && alg_ != o.alg_ &&
        !(alg_->config() == o.alg_->config() && alg_->pyramid() == o.alg_->pyramid()))
        throw std::invalid_argument("UEAElement: mismatched configs");
}

void UEAElement::adopt(const UEAElement& o) {
    if (!alg_) alg_ = o.alg_;
}

void UEAElement::add_term(Monomial m, Rational c) {
    if (walg::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (walg::is_zero(it->second)) terms_.erase(it);
    }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    require_compatible(o);
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    require_compatible(o);
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

UEAElement& UEAElement::operator*=(const Rational& c) {
    if (walg::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

UEAElement UEAElement::operator-() const {
    UEAElement out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

namespace {

// Straightens `word` (arbitrary order) times `coeff` into normal form,
// accumulating into `out`. Iterative worklist; each bracket substitution
// shortens the word, each swap reduces the inversion count.
void straighten_into(const Algebra& alg, Monomial word, Rational coeff,
                     std::map<Monomial, Rational>& out) {
    std::vector<std::pair<Monomial, Rational>> work;
    work.emplace_back(std::move(word), std::move(coeff));
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        std::size_t i = 0;
        bool sorted = true;
        for (; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                sorted = false;
                break;
            }
        if (sorted) {
            auto [it, inserted] = out.try_emplace(std::move(w), c);
            if (!inserted) {
                it->second += c;
                if (is_zero(it->second)) out.erase(it);
            }
            continue;
        }
        for (const auto& [g, cb] : alg.bracket_terms(w[i], w[i + 1])) {
            Monomial shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + i);
            shorter.push_back(g);
            shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
            work.emplace_back(std::move(shorter), c * cb);
        }
        std::swap(w[i], w[i + 1]);
        work.emplace_back(std::move(w), std::move(c));
    }
}

}  // namespace

UEAElement UEAElement::operator*(const UEAElement& o) const {
    require_compatible(o);
    UEAElement out = zero(alg_ ? alg_ : o.alg_);
    if (is_zero() || o.is_zero()) return out;
    const Algebra& alg = *out.alg_;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial w;
            w.reserve(m1.size() + m2.size());
            w.insert(w.end(), m1.begin(), m1.end());
            w.insert(w.end(), m2.begin(), m2.end());
            straighten_into(alg, std::move(w), c1 * c2, out.terms_);
        }
    return out;
}

UEAElement UEAElement::pow(unsigned e) const {
    if (!alg_) throw std::logic_error("UEAElement::pow: no algebra attached");
    UEAElement acc = one(alg_);
    for (unsigned k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

bool UEAElement::operator==(const UEAElement& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    if (alg_ && o.alg_ && alg_ != o.alg_ &&
        !(alg_->config() == o.alg_->config() && alg_->pyramid() == o.alg_->pyramid()))
        return false;
    return terms_ == o.terms_;
}

long UEAElement::kazhdan_degree() const {
    if (is_zero()) throw std::domain_error("kazhdan_degree: zero element");
    long best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (GenId id : m) d += alg_->degree_of(id) / 2 + 1;
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

namespace {
long good_degree_of(const Algebra& alg, const Monomial& m) {
    long d = 0;
    for (GenId id : m) d += alg.degree_of(id);
    return d / 2;
}
}  // namespace

long UEAElement::good_degree() const {
    if (is_zero()) throw std::domain_error("good_degree: zero element");
    long best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        long d = good_degree_of(*alg_, m);
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

UEAElement UEAElement::good_leading_term() const { return good_component(good_degree()); }

UEAElement UEAElement::good_component(long r) const {
    UEAElement out = zero(alg_);
    for (const auto& [m, c] : terms_)
        if (good_degree_of(*alg_, m) == r) out.terms_[m] = c;
    return out;
}

bool UEAElement::supported_in_p() const {
    for (const auto& [m, c] : terms_)
        for (GenId id : m)
            if (alg_->is_m(id)) return false;
    return true;
}

bool UEAElement::supported_in_h() const {
    for (const auto& [m, c] : terms_)
        for (GenId id : m)
            if (!alg_->is_h(id)) return false;
    return true;
}

std::string UEAElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (GenId id : m) {
            const auto& [a, b] = alg_->pair_of(id);
            os << "*f[" << a << "," << b << "]";
        }
    }
    return os.str();
}

UEAElement commutator(const UEAElement& x, const UEAElement& y) { return x * y - y * x; }

UEAElement apply_hom(const std::map<GenId, UEAElement>& images, const UEAElement& x) {
    UEAElement out = UEAElement::zero(x.algebra());
    for (const auto& [m, c] : x.terms()) {
        UEAElement acc;
        bool started = false;
        bool dead = false;
        for (GenId id : m) {
            auto it = images.find(id);
            if (it == images.end())
                throw std::invalid_argument("apply_hom: generator outside the image domain");
            if (it->second.is_zero()) {
                dead = true;
                break;
            }
            acc = started ? acc * it->second : it->second;
            started = true;
        }
        if (dead) continue;
        if (!started) acc = UEAElement::one(x.algebra());
        out += c * acc;
    }
    return out;
}

bool check_lie_hom(const std::map<GenId, UEAElement>& images, const AlgebraPtr& alg,
                   std::size_t samples) {
    if (images.empty()) return true;
    std::vector<GenId> domain;
    domain.reserve(images.size());
    for (const auto& [id, img] : images) domain.push_back(id);
    std::mt19937_64 rng(0xabcdefULL);
    std::uniform_int_distribution<std::size_t> pick(0, domain.size() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        GenId x = domain[pick(rng)];
        GenId y = domain[pick(rng)];
        bool in_domain = true;
        UEAElement rhs = UEAElement::zero(alg);
        for (const auto& [g, c] : alg->bracket_terms(x, y)) {
            auto it = images.find(g);
            if (it == images.end()) {
                in_domain = false;
                break;
            }
            rhs += c * it->second;
        }
        if (!in_domain) continue;
        if (!(commutator(images.at(x), images.at(y)) == rhs)) return false;
    }
    return true;
}

}  // namespace walg
