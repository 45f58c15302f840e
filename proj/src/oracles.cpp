#include "walg/oracles.hpp"

#include <algorithm>

namespace walg {

long oracle_centralizer_dim(const AlgebraPtr& alg) {
    const std::size_t d = alg->dim();
    std::vector<std::vector<Rational>> ad_e(d, std::vector<Rational>(d, Rational(0)));
    for (GenId j = 0; j < d; ++j) {
        LieElement image = bracket(alg->e(), LieElement::basis(alg->config(), alg->pair_of(j).first,
                                                               alg->pair_of(j).second));
        for (const auto& [pair, c] : image.terms()) ad_e[alg->id_of(pair)][j] = c;
    }
    return static_cast<long>(d) - static_cast<long>(exact_rank(ad_e));
}

long centralizer_dim_formula(const Config& cfg) {
    const long n = cfg.n, l = cfg.l;
    return l % 2 == 0 ? n * n * l / 2 : (n * n * l - n * cfg.epsilon) / 2;
}

std::vector<int> oracle_jordan_type(const AlgebraPtr& alg) {
    const int N = alg->config().N();
    RatMatrix power = RatMatrix::identity(N);
    std::vector<std::size_t> ranks{static_cast<std::size_t>(N)};
    do {
        power = power * alg->e_matrix();
        std::vector<std::vector<Rational>> rows(N, std::vector<Rational>(N));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) rows[i][j] = power.at(i, j);
        ranks.push_back(exact_rank(rows));
    } while (ranks.back() > 0);
    // blocks_ge[k] = #blocks of size >= k = rank(e^{k-1}) - rank(e^k)
    std::vector<int> parts;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const int ge_k = static_cast<int>(ranks[k - 1] - ranks[k]);
        const int ge_next = k + 1 < ranks.size() ? static_cast<int>(ranks[k] - ranks[k + 1]) : 0;
        for (int c = 0; c < ge_k - ge_next; ++c) parts.push_back(static_cast<int>(k));
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

long oracle_matrix_equation_dim(const Config& cfg) {
    const int N = cfg.N();
    // J entries: J_{i,-i} as a sign.
    auto j_sign = [&](int col) {
        // entry J_{-col, col}
        if (cfg.epsilon == 1) return 1;
        return col > 0 ? 1 : -1;
    };
    // Equation per (i,j): sgn(j) x_{-j,i} + sgn(-i) x_{-i,j} = 0.
    const auto idx = index_set(N);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(N) * N);
    for (int i : idx)
        for (int j : idx) {
            std::vector<Rational> row(static_cast<std::size_t>(N) * N, Rational(0));
            auto var = [&](int r, int c) { return index_pos(r, N) * N + index_pos(c, N); };
            row[var(-j, i)] += Rational(j_sign(j));
            row[var(-i, j)] += Rational(j_sign(-i));
            rows.push_back(std::move(row));
        }
    return static_cast<long>(static_cast<std::size_t>(N) * N - exact_rank(rows));
}

}  // namespace walg
