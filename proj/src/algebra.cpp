#include "walg/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace walg {

namespace {

RatMatrix f_matrix(const Config& cfg, int a, int b) {
    const int N = cfg.N();
    RatMatrix m(N, N);
    m.at(index_pos(a, N), index_pos(b, N)) += Rational(1);
    m.at(index_pos(-b, N), index_pos(-a, N)) -=
        Rational(sign_pow(cfg.epsilon, (hat(a) + hat(b)) % 2));
    return m;
}

// chi(f_{a,b}) per the case table: 1 when row(a) = row(b), col(a) = col(b)+2
// and either col(a) >= 2 or col(a) = 1 with row(a) >= 0.
bool chi_condition(const Pyramid& pyr, int a, int b) {
    if (pyr.row(a) != pyr.row(b)) return false;
    if (pyr.col(a) != pyr.col(b) + 2) return false;
    return pyr.col(a) >= 2 || (pyr.col(a) == 1 && pyr.row(a) >= 0);
}

}  // namespace

Algebra::Algebra(const Config& cfg, const Pyramid& pyr) : cfg_(cfg), pyr_(pyr), e_(cfg) {
    // Basis order: p-part (degree >= 0, ascending, h first) then m-part.
    struct Key {
        int is_m, deg, a, b;
        bool operator<(const Key& o) const {
            return std::tie(is_m, deg, a, b) < std::tie(o.is_m, o.deg, o.a, o.b);
        }
    };
    std::vector<std::pair<Key, FPair>> keyed;
    for (const FPair& p : canonical_basis(cfg)) {
        const int deg = pyr_.degree(p.first, p.second);
        keyed.push_back({Key{deg < 0 ? 1 : 0, deg, p.first, p.second}, p});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    basis_.reserve(keyed.size());
    degree_.reserve(keyed.size());
    for (const auto& [key, pair] : keyed) {
        id_[pair] = static_cast<GenId>(basis_.size());
        basis_.push_back(pair);
        degree_.push_back(key.deg);
    }
    h_count_ = 0;
    while (h_count_ < basis_.size() && degree_[h_count_] == 0) ++h_count_;
    first_m_ = static_cast<GenId>(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (degree_[i] < 0) {
            first_m_ = static_cast<GenId>(i);
            break;
        }

    mats_.reserve(basis_.size());
    for (const FPair& p : basis_) mats_.push_back(f_matrix(cfg_, p.first, p.second));

    e_ = nilpotent_e(pyr_);
    e_matrix_ = matrix_of(e_);

    // chi: case table cross-checked against (1/2) tr(e x).
    chi_.assign(basis_.size(), Rational(0));
    for (std::size_t i = first_m_; i < basis_.size(); ++i) {
        const auto [a, b] = basis_[i];
        Rational table(0);
        if (chi_condition(pyr_, a, b))
            table = Rational(1);
        else if (chi_condition(pyr_, -b, -a))
            table = Rational(-sign_pow(cfg_.epsilon, (hat(a) + hat(b)) % 2));
        Rational traced = (e_matrix_ * mats_[i]).trace() / 2;
        if (table != traced)
            throw std::logic_error("Algebra: chi case table disagrees with (1/2)tr(e x)");
        chi_[i] = table;
    }

    // Eager pairwise bracket memo; safe for concurrent reads afterwards.
    const std::size_t d = basis_.size();
    brackets_.resize(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        LieElement fi = LieElement::basis(cfg_, basis_[i].first, basis_[i].second);
        for (std::size_t j = 0; j < d; ++j) {
            LieElement fj = LieElement::basis(cfg_, basis_[j].first, basis_[j].second);
            LieElement br = bracket(fi, fj);
            auto& slot = brackets_[i * d + j];
            for (const auto& [pair, c] : br.terms()) slot.push_back({id_.at(pair), c});
        }
    }
}

std::shared_ptr<const Algebra> Algebra::make(const Config& cfg) {
    return make(cfg, Pyramid::standard(cfg));
}

std::shared_ptr<const Algebra> Algebra::make(const Config& cfg, const Pyramid& pyr) {
    if (!(pyr.config() == cfg)) throw std::invalid_argument("Algebra::make: pyramid config mismatch");
    return std::shared_ptr<const Algebra>(new Algebra(cfg, pyr));
}

GenId Algebra::id_of(const FPair& canonical_pair) const {
    auto it = id_.find(canonical_pair);
    if (it == id_.end()) throw std::out_of_range("Algebra::id_of: not a canonical basis pair");
    return it->second;
}

RatMatrix Algebra::matrix_of(const LieElement& x) const {
    RatMatrix out(cfg_.N(), cfg_.N());
    for (const auto& [pair, c] : x.terms()) out += c * mats_[id_of(pair)];
    return out;
}

Rational chi(const Algebra& alg, const LieElement& x) {
    Rational out(0);
    for (const auto& [pair, c] : x.terms()) {
        const GenId id = alg.id_of(pair);
        if (!alg.is_m(id)) throw std::invalid_argument("chi: element not supported on m");
        out += c * alg.chi(id);
    }
    return out;
}

}  // namespace walg
