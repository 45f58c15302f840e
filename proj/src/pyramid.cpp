#include "walg/pyramid.hpp"

#include <stdexcept>

namespace walg {

Pyramid::Pyramid(const Config& cfg, std::vector<int> labels) : cfg_(cfg), labels_(std::move(labels)) {
    const int N = cfg_.N();
    row_of_.assign(N, 0);
    col_of_.assign(N, 0);
    const auto rows = index_set(cfg_.n);
    const auto cols = index_set(cfg_.l);
    std::vector<bool> seen(N, false);
    for (int r = 0; r < cfg_.n; ++r)
        for (int c = 0; c < cfg_.l; ++c) {
            const int label = labels_[r * cfg_.l + c];
            if (!in_index_set(label, N)) throw std::invalid_argument("Pyramid: label outside I_N");
            const int pos = index_pos(label, N);
            if (seen[pos]) throw std::invalid_argument("Pyramid: duplicate label");
            seen[pos] = true;
            row_of_[pos] = rows[r];
            col_of_[pos] = cols[c];
        }
    validate();
}

void Pyramid::validate() const {
    const int N = cfg_.N();
    for (int a : index_set(N)) {
        if (row(-a) != -row(a) || col(-a) != -col(a))
            throw std::invalid_argument("Pyramid: labeling is not skew-symmetric");
        if (cfg_.epsilon == -1) {
            const bool positive_side = col(a) > 0 || (col(a) == 0 && row(a) > 0);
            if ((a > 0) != positive_side)
                throw std::invalid_argument("Pyramid: epsilon = - labeling constraint violated");
        }
    }
}

Pyramid Pyramid::standard(const Config& cfg) {
    const int N = cfg.N();
    const auto all = index_set(N);
    std::vector<int> labels(N, 0);
    int next = 0;
    for (int c = 0; c < cfg.l; ++c)
        for (int r = 0; r < cfg.n; ++r) labels[r * cfg.l + c] = all[next++];
    return Pyramid(cfg, std::move(labels));
}

Pyramid Pyramid::custom(const Config& cfg, const std::vector<std::vector<int>>& boxes_by_row) {
    if (static_cast<int>(boxes_by_row.size()) != cfg.n)
        throw std::invalid_argument("Pyramid::custom: wrong number of rows");
    std::vector<int> labels;
    labels.reserve(cfg.N());
    for (const auto& row : boxes_by_row) {
        if (static_cast<int>(row.size()) != cfg.l)
            throw std::invalid_argument("Pyramid::custom: wrong row length");
        labels.insert(labels.end(), row.begin(), row.end());
    }
    return Pyramid(cfg, std::move(labels));
}

int Pyramid::row(int label) const {
    if (!in_index_set(label, cfg_.N())) throw std::out_of_range("Pyramid::row: label outside I_N");
    return row_of_[index_pos(label, cfg_.N())];
}

int Pyramid::col(int label) const {
    if (!in_index_set(label, cfg_.N())) throw std::out_of_range("Pyramid::col: label outside I_N");
    return col_of_[index_pos(label, cfg_.N())];
}

int Pyramid::label_at(int row, int col) const {
    if (!in_index_set(row, cfg_.n) || !in_index_set(col, cfg_.l))
        throw std::out_of_range("Pyramid::label_at: coordinates out of range");
    return labels_[index_pos(row, cfg_.n) * cfg_.l + index_pos(col, cfg_.l)];
}

Rational rho(int q, const Config& cfg) {
    if (!in_index_set(q, cfg.l)) throw std::out_of_range("rho: q outside I_l");
    if (q == 0) return Rational(0);
    if (q > 0) return rat(cfg.n * q - cfg.epsilon, 2);
    return rat(cfg.n * q + cfg.epsilon, 2);
}

LieElement nilpotent_e(const Pyramid& pyr) {
    const Config& cfg = pyr.config();
    LieElement e(cfg);
    for (int r : index_set(cfg.n))
        for (int c : index_set(cfg.l)) {
            if (!in_index_set(c + 2, cfg.l)) continue;
            const int a = pyr.label_at(r, c);
            const int b = pyr.label_at(r, c + 2);
            if (c + 2 >= 2) {
                e.add(a, b, Rational(1));
            } else if (c + 2 == 1) {
                if (r > 0)
                    e.add(a, b, Rational(1));
                else if (r == 0)
                    e.add(a, b, rat(1, 2));
            }
        }
    return e;
}

}  // namespace walg
