#include "walg/yangian.hpp"

#include <stdexcept>

#include "walg/exact_linalg.hpp"

namespace walg {

bool is_admissible(int i, int j, int r, const Config& cfg) {
    if (r < 1 || r > cfg.l) return false;
    if (!in_index_set(i, cfg.n) || !in_index_set(j, cfg.n)) return false;
    const int phi_parity = cfg.phi * (r % 2 == 0 ? 1 : -1);
    return phi_parity == 1 ? i + j <= 0 : i + j < 0;
}

std::vector<std::array<int, 3>> admissible_triples(const Config& cfg) {
    std::vector<std::array<int, 3>> out;
    for (int r = 1; r <= cfg.l; ++r)
        for (int i : index_set(cfg.n))
            for (int j : index_set(cfg.n))
                if (is_admissible(i, j, r, cfg)) out.push_back({i, j, r});
    return out;
}

long admissible_triple_count(const Config& cfg) {
    return static_cast<long>(admissible_triples(cfg).size());
}

namespace {

// All increasing subsets of I_l of the given size, optionally forced to
// contain 0, emitted as diagonal tensor words.
void diagonal_subsets(const Config& cfg, int size, bool must_contain_zero,
                      std::vector<TensorWord>& out) {
    const auto values = index_set(cfg.l);
    TensorWord current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(current.size()) == size) {
            if (!must_contain_zero) {
                out.push_back(current);
                return;
            }
            for (const MatUnit& u : current)
                if (u.p == 0) {
                    out.push_back(current);
                    return;
                }
            return;
        }
        for (std::size_t t = start; t < values.size(); ++t) {
            current.push_back(MatUnit{values[t], values[t]});
            self(self, t + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
}

void require_in_h(const UEAElement& x, const char* who) {
    if (!x.supported_in_h()) throw std::logic_error(std::string(who) + ": image escaped U(h)");
}

}  // namespace

UEAElement kappa_generator(const AlgebraPtr& alg, int i, int j, int r) {
    const Config& cfg = alg->config();
    if (r < 0) throw std::invalid_argument("kappa_generator: r must be >= 0");
    if (r == 0)
        return i == j ? UEAElement::one(alg) : UEAElement::zero(alg);
    TensorElement t;
    std::vector<TensorWord> words;
    if (r <= cfg.l) {
        diagonal_subsets(cfg, r, false, words);
        for (const auto& w : words) t.add(w, Rational(1));
    }
    if (cfg.l % 2 == 1) {
        for (int size = 1; size <= std::min(r - 1, cfg.l); ++size) {
            words.clear();
            diagonal_subsets(cfg, size, true, words);
            const Rational c = rat_pow(rat(-2 * cfg.phi), size - r);
            for (const auto& w : words) t.add(w, c);
        }
    }
    UEAElement out = s_element(alg, i, j, t);
    require_in_h(out, "kappa_generator");
    return out;
}

UEAElement kappa_generator_product_form(const AlgebraPtr& alg, int i, int j, int r) {
    const Config& cfg = alg->config();
    if (r < 0) throw std::invalid_argument("kappa_generator_product_form: r must be >= 0");
    // Ordered product over p in I_l of (u + e_{p,p}), and for odd l the same
    // product with the p = 0 factor replaced by the bare e_{0,0}.
    TensorPoly main = TensorPoly::constant(TensorElement::one());
    TensorPoly replaced = TensorPoly::constant(TensorElement::one());
    for (int p : index_set(cfg.l)) {
        TensorPoly factor;
        factor.set(1, TensorElement::one());
        factor.set(0, TensorElement::unit(p, p));
        main = main * factor;
        if (cfg.l % 2 == 1) {
            TensorPoly barred =
                p == 0 ? TensorPoly::constant(TensorElement::unit(0, 0)) : factor;
            replaced = replaced * barred;
        }
    }
    TensorElement t = main.coeff(cfg.l - r);
    if (cfg.l % 2 == 1)
        for (int s = std::max(1, r - cfg.l); s <= r - 1; ++s)
            t += rat_pow(rat(-2 * cfg.phi), -s) * replaced.coeff(cfg.l - r + s);
    UEAElement out = s_element(alg, i, j, t);
    require_in_h(out, "kappa_generator_product_form");
    return out;
}

bool check_kernel_relation(const AlgebraPtr& alg, int r) {
    const Config& cfg = alg->config();
    if (r <= cfg.l) throw std::invalid_argument("check_kernel_relation: requires r > l");
    for (int i : index_set(cfg.n))
        for (int j : index_set(cfg.n)) {
            UEAElement lhs = kappa_generator(alg, i, j, r);
            if (cfg.l % 2 == 0) {
                if (!lhs.is_zero()) return false;
            } else {
                UEAElement rhs = rat(-cfg.phi, 2) * kappa_generator(alg, i, j, r - 1);
                if (!(lhs == rhs)) return false;
            }
        }
    return true;
}

bool check_symmetry_relation(const AlgebraPtr& alg, int max_r) {
    const Config& cfg = alg->config();
    if (max_r < 1) throw std::invalid_argument("check_symmetry_relation: max_r must be >= 1");
    for (int r = 1; r <= max_r; ++r)
        for (int i : index_set(cfg.n))
            for (int j : index_set(cfg.n)) {
                const int sign =
                    sign_pow(cfg.phi, (hat(i) + hat(j)) % 2) * (r % 2 == 0 ? 1 : -1);
                UEAElement lhs = Rational(sign) * kappa_generator(alg, -j, -i, r);
                UEAElement rhs = kappa_generator(alg, i, j, r);
                if (r % 2 == 0)
                    rhs += Rational(cfg.phi) * kappa_generator(alg, i, j, r - 1);
                if (!(lhs == rhs)) return false;
            }
    return true;
}

PbwIndependence pbw_independence_check(const AlgebraPtr& alg, int max_degree) {
    const Config& cfg = alg->config();
    if (max_degree < 0) throw std::invalid_argument("pbw_independence_check: bad degree");
    const auto triples = admissible_triples(cfg);
    std::vector<UEAElement> gens;
    std::vector<int> weights;  // Kazhdan degree of each generator is its r
    for (const auto& [i, j, r] : triples) {
        if (r > max_degree) continue;
        gens.push_back(kappa_generator(alg, i, j, r));
        weights.push_back(r);
    }
    // Ordered monomials (non-decreasing generator index) of total weight
    // <= max_degree, the empty monomial included.
    std::vector<UEAElement> products;
    std::vector<UEAElement> stack{UEAElement::one(alg)};
    auto rec = [&](auto&& self, std::size_t start, int budget) -> void {
        products.push_back(stack.back());
        for (std::size_t g = start; g < gens.size(); ++g) {
            if (weights[g] > budget) continue;
            stack.push_back(stack.back() * gens[g]);
            self(self, g, budget - weights[g]);
            stack.pop_back();
        }
    };
    rec(rec, 0, max_degree);

    std::map<Monomial, std::size_t> columns;
    for (const auto& x : products)
        for (const auto& [m, c] : x.terms())
            columns.try_emplace(m, columns.size());
    std::vector<std::vector<Rational>> rows;
    rows.reserve(products.size());
    for (const auto& x : products) {
        std::vector<Rational> row(columns.size(), Rational(0));
        for (const auto& [m, c] : x.terms()) row[columns.at(m)] = c;
        rows.push_back(std::move(row));
    }
    PbwIndependence out;
    out.monomial_count = products.size();
    out.rank = exact_rank(rows);
    out.independent = out.rank == out.monomial_count;
    return out;
}

}  // namespace walg
