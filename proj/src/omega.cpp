#include "walg/omega.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "walg/pyramid.hpp"

namespace walg {

TensorPoly u_entry(int q, const Config& cfg) {
    TensorPoly p;
    p.set(1, TensorElement::one());
    p.set(0, TensorElement::unit(q, q) + TensorElement::scalar(rho(q, cfg)));
    return p;
}

namespace {

TensorPoly omega_entry(int p, int q, const Config& cfg, bool barred, Mutation mut) {
    if (barred && p == 0 && q == 0) return TensorPoly::constant(TensorElement::unit(0, 0));
    if (p < q) return TensorPoly::constant(TensorElement::unit(p, q));
    if (p == q) return u_entry(q, cfg);
    if (p == q + 2) {
        int value = p < 0 ? -1 : (p == 0 ? -cfg.phi : 1);
        if (p == 0 && mut == Mutation::OmegaPhiEntry) value = -value;
        return TensorPoly::constant(TensorElement::scalar(Rational(value)));
    }
    return TensorPoly{};
}

}  // namespace

OmegaMatrix omega_matrix(const Config& cfg, bool barred, Mutation mut) {
    if (barred && cfg.l % 2 == 0)
        throw std::invalid_argument("omega_matrix: barred variant requires odd l");
    OmegaMatrix m;
    m.cfg = cfg;
    m.barred = barred;
    m.indices = index_set(cfg.l);
    m.entry.resize(cfg.l, std::vector<TensorPoly>(cfg.l));
    for (int i = 0; i < cfg.l; ++i)
        for (int j = 0; j < cfg.l; ++j)
            m.entry[i][j] = omega_entry(m.indices[i], m.indices[j], cfg, barred, mut);
    return m;
}

OmegaMatrix submatrix(const OmegaMatrix& m, int from, int to) {
    OmegaMatrix out;
    out.cfg = m.cfg;
    out.barred = m.barred;
    if (from > to) return out;
    if (!in_index_set(from, m.cfg.l) || !in_index_set(to, m.cfg.l))
        throw std::out_of_range("submatrix: bounds outside I_l");
    for (int v = from; v <= to; v += 2) out.indices.push_back(v);
    const int base = index_pos(from, m.cfg.l);
    const std::size_t k = out.indices.size();
    out.entry.resize(k, std::vector<TensorPoly>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out.entry[i][j] = m.entry[base + i][base + j];
    return out;
}

namespace {

TensorPoly rdet_expand(const std::vector<std::vector<TensorPoly>>& m, std::size_t row,
                       std::vector<std::size_t>& cols) {
    if (row == m.size()) return TensorPoly::constant(TensorElement::one());
    TensorPoly out;
    for (std::size_t pos = 0; pos < cols.size(); ++pos) {
        const TensorPoly& e = m[row][cols[pos]];
        if (e.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != pos) rest.push_back(cols[t]);
        TensorPoly minor = rdet_expand(m, row + 1, rest);
        TensorPoly term = e * minor;
        if (pos % 2 == 1) term *= Rational(-1);
        out += term;
    }
    return out;
}

}  // namespace

TensorPoly rdet(const std::vector<std::vector<TensorPoly>>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("rdet: matrix not square");
    std::vector<std::size_t> cols(m.size());
    std::iota(cols.begin(), cols.end(), 0);
    return rdet_expand(m, 0, cols);
}

TensorPoly rdet(const OmegaMatrix& m) { return rdet(m.entry); }

TensorPoly rdet_permutation_sum(const std::vector<std::vector<TensorPoly>>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("rdet: matrix not square");
    const std::size_t k = m.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    TensorPoly out;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        TensorPoly term = TensorPoly::constant(TensorElement::one());
        for (std::size_t r = 0; r < k; ++r) term = term * m[r][perm[r]];
        if (inversions % 2 == 1) term *= Rational(-1);
        out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

TensorPoly rdet_permutation_sum(const OmegaMatrix& m) { return rdet_permutation_sum(m.entry); }

TensorElement omega_coefficient(int r, const Config& cfg, Mutation mut) {
    if (r < 1) throw std::invalid_argument("omega_coefficient: r must be >= 1");
    TensorElement out = rdet(omega_matrix(cfg, false, mut)).coeff(cfg.l - r);
    if (cfg.l % 2 == 1) {
        TensorPoly barred = rdet(omega_matrix(cfg, true, mut));
        for (int t = std::max(1, r - cfg.l); t <= r - 1; ++t)
            out += rat_pow(rat(-2 * cfg.phi), -t) * barred.coeff(cfg.l - r + t);
    }
    return out;
}

}  // namespace walg
