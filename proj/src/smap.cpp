#include "walg/smap.hpp"

#include <stdexcept>

namespace walg {

UEAElement s_generator(const AlgebraPtr& alg, int i, int j, int p, int q) {
    const Config& cfg = alg->config();
    if (!in_index_set(i, cfg.n) || !in_index_set(j, cfg.n))
        throw std::out_of_range("s_generator: row index outside I_n");
    if (!in_index_set(p, cfg.l) || !in_index_set(q, cfg.l))
        throw std::out_of_range("s_generator: column index outside I_l");
    const Pyramid& pyr = alg->pyramid();
    const int a = pyr.label_at(i, p);
    const int b = pyr.label_at(j, q);
    const int sign = sign_pow(cfg.phi, (hat(i) * hat(p) + hat(j) * hat(q)) % 2);
    return UEAElement::from_lie(alg, LieElement::basis(cfg, a, b, Rational(sign)));
}

UEAElement s_word(const AlgebraPtr& alg, int i, int j, const TensorWord& w) {
    const Config& cfg = alg->config();
    if (!in_index_set(i, cfg.n) || !in_index_set(j, cfg.n))
        throw std::out_of_range("s_word: row index outside I_n");
    // state[k] = s_{i, k}(processed prefix)
    std::vector<UEAElement> state(cfg.n, UEAElement::zero(alg));
    state[index_pos(i, cfg.n)] = UEAElement::one(alg);
    for (const MatUnit& letter : w) {
        std::vector<UEAElement> next(cfg.n, UEAElement::zero(alg));
        for (int k : index_set(cfg.n)) {
            const UEAElement& acc = state[index_pos(k, cfg.n)];
            if (acc.is_zero()) continue;
            for (int k2 : index_set(cfg.n)) {
                UEAElement step = s_generator(alg, k, k2, letter.p, letter.q);
                if (step.is_zero()) continue;
                next[index_pos(k2, cfg.n)] += acc * step;
            }
        }
        state = std::move(next);
    }
    return state[index_pos(j, cfg.n)];
}

UEAElement s_element(const AlgebraPtr& alg, int i, int j, const TensorElement& t) {
    UEAElement out = UEAElement::zero(alg);
    for (const auto& [w, c] : t.terms()) out += c * s_word(alg, i, j, w);
    return out;
}

UEAPoly s_poly(const AlgebraPtr& alg, int i, int j, const TensorPoly& p) {
    UEAPoly out;
    for (const auto& [power, c] : p.coefficients()) out.add(power, s_element(alg, i, j, c));
    return out;
}

UEAElement w_generator(const AlgebraPtr& alg, int i, int j, int r, Mutation mut) {
    UEAElement out = s_element(alg, i, j, omega_coefficient(r, alg->config(), mut));
    if (!out.supported_in_p())
        throw std::logic_error("w_generator: image escaped U(p)");
    return out;
}

Rational alpha_coefficient(int p, int q, const Config& cfg, Mutation mut) {
    if ((q - p) % 2 != 0 || q - p < 0)
        throw std::invalid_argument("alpha_coefficient: need q - p even and >= 0");
    Rational a;
    Mutation hit = Mutation::None;
    if (q < 0) {
        a = Rational(1);
        hit = Mutation::AlphaQNegative;
    } else if (p < 0 && cfg.l % 2 == 1) {
        a = Rational(cfg.phi * (q / 2 % 2 == 0 ? 1 : -1));
        hit = Mutation::AlphaPNegOddL;
    } else if (p < 0 && q > 0 && cfg.l % 2 == 0) {
        a = Rational((q + 1) / 2 % 2 == 0 ? 1 : -1);
        hit = Mutation::AlphaPNegEvenL;
    } else {
        a = Rational((q - p) / 2 % 2 == 0 ? 1 : -1);
        hit = Mutation::AlphaPNonneg;
    }
    if (mut == hit) a = -a;
    return a;
}

LieElement centralizer_element(const AlgebraPtr& alg, int i, int j, int r, Mutation mut) {
    if (r < 0) throw std::invalid_argument("centralizer_element: r must be >= 0");
    const Config& cfg = alg->config();
    LieElement out(cfg);
    for (int p : index_set(cfg.l)) {
        const int q = p + 2 * r;
        if (!in_index_set(q, cfg.l)) continue;
        UEAElement img = alpha_coefficient(p, q, cfg, mut) * s_generator(alg, i, j, p, q);
        for (const auto& [m, c] : img.terms()) {
            const auto& [a, b] = alg->pair_of(m.at(0));
            out.add(a, b, c);
        }
    }
    return out;
}

Rational gamma_factor(int i, int j, int p, int q, const Config& cfg) {
    const int phi = cfg.phi;
    const int eps = cfg.epsilon;
    int phi_bit = 0, eps_bit = 0;
    if (p != 0 && q != 0) {
        phi_bit = hat(i) * hat(p) + tilde(i) * tilde(p) + hat(j) * hat(q) + tilde(j) * tilde(q);
        eps_bit = hat(p) + hat(q);
    } else if (p == 0 && q != 0) {
        phi_bit = hat(j) * hat(q) + tilde(j) * tilde(q);
        eps_bit = hat(i) + hat(q);
    } else if (p != 0 && q == 0) {
        phi_bit = hat(i) * hat(p) + tilde(i) * tilde(p);
        eps_bit = hat(p) + hat(j);
    } else {
        eps_bit = hat(i) + hat(j);
    }
    return Rational(sign_pow(phi, phi_bit % 2) * sign_pow(eps, eps_bit % 2));
}

UEAElement s_commutator_expansion(const AlgebraPtr& alg, int i, int j, int p, int q, int h, int k,
                                  const TensorWord& w) {
    const MatUnit epq{p, q};
    const MatUnit emqp{-q, -p};
    UEAElement out = UEAElement::zero(alg);
    const std::size_t m = w.size();
    for (std::size_t t = 0; t < m; ++t) {
        TensorWord before(w.begin(), w.begin() + t);
        TensorWord after(w.begin() + t + 1, w.end());
        // + s_{h,j}(y_1...y_{t-1}) s_{i,k}(e_{p,q} y_t (x) y_{t+1}...y_m)
        if (auto prod = mat_unit_product(epq, w[t])) {
            TensorWord tail{*prod};
            tail.insert(tail.end(), after.begin(), after.end());
            out += s_word(alg, h, j, before) * s_word(alg, i, k, tail);
        }
        // - s_{h,j}(y_1...y_{t-1} (x) y_t e_{p,q}) s_{i,k}(y_{t+1}...y_m)
        if (auto prod = mat_unit_product(w[t], epq)) {
            TensorWord head = before;
            head.push_back(*prod);
            out -= s_word(alg, h, j, head) * s_word(alg, i, k, after);
        }
    }
    const Rational gamma = gamma_factor(i, j, p, q, alg->config());
    for (std::size_t t = 0; t < m; ++t) {
        TensorWord before(w.begin(), w.begin() + t);
        TensorWord after(w.begin() + t + 1, w.end());
        // - gamma s_{h,-i}(y_1...y_{t-1}) s_{-j,k}(e_{-q,-p} y_t (x) ...)
        if (auto prod = mat_unit_product(emqp, w[t])) {
            TensorWord tail{*prod};
            tail.insert(tail.end(), after.begin(), after.end());
            out -= gamma * (s_word(alg, h, -i, before) * s_word(alg, -j, k, tail));
        }
        // + gamma s_{h,-i}(y_1...y_{t-1} (x) y_t e_{-q,-p}) s_{-j,k}(...)
        if (auto prod = mat_unit_product(w[t], emqp)) {
            TensorWord head = before;
            head.push_back(*prod);
            out += gamma * (s_word(alg, h, -i, head) * s_word(alg, -j, k, after));
        }
    }
    return out;
}

}  // namespace walg
