#include "walg/commpoly.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace walg {

CommPoly CommPoly::scalar(const Rational& c) {
    CommPoly p;
    p.add(CommMonomial{}, c);
    return p;
}

CommPoly CommPoly::variable(VarId v, const Rational& c) {
    CommPoly p;
    p.add(CommMonomial{v}, c);
    return p;
}

void CommPoly::add(CommMonomial m, const Rational& c) {
    if (walg::is_zero(c)) return;
    std::sort(m.begin(), m.end());
    Rational& slot = terms_[m];
    slot += c;
    if (walg::is_zero(slot)) terms_.erase(m);
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
    if (walg::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

CommPoly CommPoly::operator*(const CommPoly& o) const {
    CommPoly out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            CommMonomial m;
            m.reserve(m1.size() + m2.size());
            std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(m));
            out.add(std::move(m), c1 * c2);
        }
    return out;
}

Rational CommPoly::evaluate(const std::vector<Rational>& values) const {
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (VarId v : m) term *= values.at(v);
        out += term;
    }
    return out;
}

SymbolTable::SymbolTable(const Config& cfg) : cfg_(cfg) {
    for (int p : index_set(cfg.l))
        for (int i : index_set(cfg.n))
            for (int j : index_set(cfg.n)) {
                const std::array<int, 3> key{i, j, p};
                const std::array<int, 3> partner{-j, -i, -p};
                if (key == partner) {
                    // survives only when phi^{hat i + hat j} = -1
                    if (sign_pow(cfg.phi, (hat(i) + hat(j)) % 2) != -1) continue;
                    vars_.emplace(key, static_cast<VarId>(count_));
                    var_keys_.push_back(key);
                    ++count_;
                } else if (key < partner) {
                    vars_.emplace(key, static_cast<VarId>(count_));
                    var_keys_.push_back(key);
                    ++count_;
                }
            }
}

SymbolTable::Resolved SymbolTable::resolve(int i, int j, int p) const {
    const std::array<int, 3> key{i, j, p};
    const std::array<int, 3> partner{-j, -i, -p};
    if (key == partner) {
        auto it = vars_.find(key);
        if (it == vars_.end()) return {0, 0};
        return {1, it->second};
    }
    if (key < partner) return {1, vars_.at(key)};
    // x_{i,j,p} = -phi^{hat i + hat j} x_{-j,-i,-p}
    return {-sign_pow(cfg_.phi, (hat(i) + hat(j)) % 2), vars_.at(partner)};
}

std::vector<Rational> SymbolTable::values_from_matrices(const std::vector<RatMatrix>& a) const {
    std::vector<Rational> values;
    values.reserve(count_);
    for (const auto& [i, j, p] : var_keys_)
        values.push_back(a.at(index_pos(p, cfg_.l)).at(index_pos(i, cfg_.n), index_pos(j, cfg_.n)));
    return values;
}

namespace {

void theta_chain(const Config& cfg, const SymbolTable& table, const std::vector<int>& ps,
                 std::size_t step, int from, int to, int sign, CommMonomial& mono, CommPoly& out) {
    if (step + 1 == ps.size()) {
        auto res = table.resolve(from, to, ps[step]);
        if (res.sign == 0) return;
        CommMonomial m = mono;
        m.push_back(res.var);
        out.add(std::move(m), Rational(sign * res.sign));
        return;
    }
    for (int mid : index_set(cfg.n)) {
        auto res = table.resolve(from, mid, ps[step]);
        if (res.sign == 0) continue;
        mono.push_back(res.var);
        theta_chain(cfg, table, ps, step + 1, mid, to, sign * res.sign, mono, out);
        mono.pop_back();
    }
}

void increasing_subsets(const std::vector<int>& values, int size,
                        std::vector<std::vector<int>>& out) {
    std::vector<int> current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(current.size()) == size) {
            out.push_back(current);
            return;
        }
        for (std::size_t t = start; t < values.size(); ++t) {
            current.push_back(values[t]);
            self(self, t + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

CommPoly theta_star(const Config& cfg, const SymbolTable& table, int i, int j, int r) {
    if (r < 1) throw std::invalid_argument("theta_star: r must be >= 1");
    CommPoly out;
    std::vector<std::vector<int>> subsets;
    increasing_subsets(index_set(cfg.l), r, subsets);
    for (const auto& ps : subsets) {
        CommMonomial mono;
        theta_chain(cfg, table, ps, 0, i, j, 1, mono, out);
    }
    return out;
}

CommPoly h_top_symbol(const AlgebraPtr& alg, const SymbolTable& table, const UEAElement& x,
                      int r) {
    const Config& cfg = alg->config();
    const Pyramid& pyr = alg->pyramid();
    CommPoly out;
    for (const auto& [m, c] : x.terms()) {
        if (static_cast<int>(m.size()) > r)
            throw std::invalid_argument("h_top_symbol: monomial above the stated degree");
        if (static_cast<int>(m.size()) < r) continue;
        CommMonomial mono;
        int sign = 1;
        for (GenId id : m) {
            if (!alg->is_h(id)) throw std::invalid_argument("h_top_symbol: element not in U(h)");
            const auto& [a, b] = alg->pair_of(id);
            const int p = pyr.col(a);
            const int i = pyr.row(a);
            const int j = pyr.row(b);
            // f_{a,b} = phi^{(hat i + hat j) hat p} s_{i,j}(e_{p,p})
            const int conv = sign_pow(cfg.phi, (hat(i) + hat(j)) * hat(p) % 2);
            auto res = table.resolve(i, j, p);
            if (res.sign == 0)
                throw std::logic_error("h_top_symbol: basis generator mapped to a zero symbol");
            sign *= conv * res.sign;
            mono.push_back(res.var);
        }
        out.add(std::move(mono), Rational(sign) * c);
    }
    return out;
}

CommPoly kazhdan_top_symbol(const UEAElement& x) {
    CommPoly out;
    if (x.is_zero()) return out;
    const AlgebraPtr& alg = x.algebra();
    const long top = x.kazhdan_degree();
    for (const auto& [m, c] : x.terms()) {
        long d = 0;
        for (GenId id : m) d += alg->degree_of(id) / 2 + 1;
        if (d != top) continue;
        CommMonomial mono(m.begin(), m.end());
        out.add(std::move(mono), c);
    }
    return out;
}

}  // namespace walg
