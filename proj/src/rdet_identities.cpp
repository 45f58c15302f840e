#include "walg/rdet_identities.hpp"

#include <stdexcept>

#include "walg/walgebra.hpp"

namespace walg {

std::string rdet_identity_name(RdetIdentity id) {
    switch (id) {
        case RdetIdentity::RowReplacement: return "row_replacement";
        case RdetIdentity::SubmatrixCommutator: return "submatrix_commutator";
        case RdetIdentity::FullCommutator: return "full_commutator";
        case RdetIdentity::EvenBottomCommutator: return "even_bottom_commutator";
        case RdetIdentity::OddZeroColumnCommutator: return "odd_zero_column_commutator";
    }
    throw std::invalid_argument("rdet_identity_name: unknown identity");
}

UEAPoly pr(const UEAPoly& x) {
    UEAPoly out;
    for (const auto& [k, c] : x.coefficients()) out.add(k, pr(c));
    return out;
}

namespace {

UEAPoly commutator_poly(const UEAElement& x, const UEAPoly& y) {
    UEAPoly out;
    for (const auto& [k, c] : y.coefficients()) out.add(k, commutator(x, c));
    return out;
}

// (u + c) * x
UEAPoly linear_times(const AlgebraPtr& alg, const Rational& c, const UEAPoly& x) {
    UEAPoly factor;
    factor.set(1, UEAElement::one(alg));
    if (!is_zero(c)) factor.set(0, UEAElement::scalar(alg, c));
    return factor * x;
}

RdetOutcome outcome(UEAPoly lhs, const UEAPoly& rhs) {
    RdetOutcome out;
    out.difference = lhs - rhs;
    out.ok = out.difference.is_zero();
    return out;
}

RdetOutcome check_row_replacement(const AlgebraPtr& alg, const RdetParams& pm) {
    const Config& cfg = alg->config();
    if (!(in_index_set(pm.q, cfg.l) && pm.q >= 0 && in_index_set(pm.q + 2, cfg.l)))
        throw std::invalid_argument("row_replacement: requires q >= 0 with q+2 in I_l");
    const OmegaMatrix omega = omega_matrix(cfg, pm.barred);
    std::vector<int> indices;
    for (int v = pm.q; v <= cfg.l - 1; v += 2) indices.push_back(v);
    std::vector<std::vector<TensorPoly>> m(indices.size(),
                                           std::vector<TensorPoly>(indices.size()));
    for (std::size_t c = 0; c < indices.size(); ++c)
        m[0][c] = TensorPoly::constant(TensorElement::unit(pm.q + 2, indices[c]));
    for (std::size_t r = 1; r < indices.size(); ++r)
        for (std::size_t c = 0; c < indices.size(); ++c)
            m[r][c] = omega.entry[index_pos(indices[r], cfg.l)][index_pos(indices[c], cfg.l)];
    UEAPoly lhs = pr(s_poly(alg, pm.i, pm.j, rdet(m)));
    TensorPoly tail = rdet(submatrix(omega, pm.q + 4, cfg.l - 1));
    UEAPoly rhs = linear_times(alg, rho(pm.q + 2, cfg) - Rational(cfg.n),
                               s_poly(alg, pm.i, pm.j, tail));
    return outcome(std::move(lhs), rhs);
}

RdetOutcome check_submatrix_commutator(const AlgebraPtr& alg, const RdetParams& pm) {
    const Config& cfg = alg->config();
    if (!(in_index_set(pm.q, cfg.l) && pm.q > 0 && in_index_set(pm.q + 2, cfg.l)))
        throw std::invalid_argument("submatrix_commutator: requires q > 0 with q+2 in I_l");
    if (!(in_index_set(pm.p, cfg.l) && -pm.q < pm.p && pm.p < pm.q))
        throw std::invalid_argument("submatrix_commutator: requires -q < p < q");
    const OmegaMatrix omega = omega_matrix(cfg, pm.barred);
    TensorPoly sub = rdet(submatrix(omega, pm.p, cfg.l - 1));
    UEAElement x = s_generator(alg, pm.i, pm.j, pm.q + 2, pm.q);
    UEAPoly lhs = pr(commutator_poly(x, s_poly(alg, pm.h, pm.k, sub)));
    return outcome(std::move(lhs), UEAPoly{});
}

RdetOutcome check_full_commutator(const AlgebraPtr& alg, const RdetParams& pm) {
    const Config& cfg = alg->config();
    if (!(in_index_set(pm.q, cfg.l) && pm.q > 0 && in_index_set(pm.q + 2, cfg.l)))
        throw std::invalid_argument("full_commutator: requires q > 0 with q+2 in I_l");
    TensorPoly full = rdet(omega_matrix(cfg, pm.barred));
    UEAElement x = s_generator(alg, pm.i, pm.j, pm.q + 2, pm.q);
    UEAPoly lhs = pr(commutator_poly(x, s_poly(alg, pm.h, pm.k, full)));
    return outcome(std::move(lhs), UEAPoly{});
}

RdetOutcome check_even_bottom_commutator(const AlgebraPtr& alg, const RdetParams& pm) {
    const Config& cfg = alg->config();
    if (cfg.l % 2 != 0) throw std::invalid_argument("even_bottom_commutator: requires even l");
    if (pm.barred) throw std::invalid_argument("even_bottom_commutator: no barred variant");
    TensorPoly full = rdet(omega_matrix(cfg, false));
    UEAElement x = s_generator(alg, pm.i, pm.j, 1, -1);
    UEAPoly lhs = pr(commutator_poly(x, s_poly(alg, pm.h, pm.k, full)));
    return outcome(std::move(lhs), UEAPoly{});
}

RdetOutcome check_odd_zero_column_commutator(const AlgebraPtr& alg, const RdetParams& pm) {
    const Config& cfg = alg->config();
    if (cfg.l % 2 != 1 || cfg.l < 3)
        throw std::invalid_argument("odd_zero_column_commutator: requires odd l >= 3");
    const OmegaMatrix omega = omega_matrix(cfg, false);
    UEAElement x = s_generator(alg, pm.i, pm.j, 2, 0);
    TensorPoly source = rdet(omega_matrix(cfg, pm.barred));
    UEAPoly lhs = pr(commutator_poly(x, s_poly(alg, pm.h, pm.k, source)));

    UEAPoly t1 = s_poly(alg, pm.h, pm.j, rdet(submatrix(omega, 1 - cfg.l, -2))) *
                 s_poly(alg, pm.i, pm.k, rdet(submatrix(omega, 4, cfg.l - 1)));
    UEAPoly left = s_poly(alg, pm.h, -pm.i, rdet(submatrix(omega, 1 - cfg.l, -4)));
    UEAPoly t2 = left * s_poly(alg, -pm.j, pm.k, rdet(submatrix(omega, 4, cfg.l - 1)));
    UEAPoly t3 = left * s_poly(alg, -pm.j, pm.k, rdet(submatrix(omega, 2, cfg.l - 1)));

    // twist = phi^{tilde(i) + hat(j)}
    const int twist = sign_pow(cfg.phi, (tilde(pm.i) + hat(pm.j)) % 2);
    UEAPoly rhs;
    if (!pm.barred) {
        rhs += rat(cfg.phi, 2) * t1;
        rhs += rat(twist * cfg.phi, 2) * t2;
        rhs -= rat(twist, 2) * t3;
    } else {
        rhs += linear_times(alg, rat(cfg.phi, 2), t1);
        rhs += Rational(twist) * linear_times(alg, rat(cfg.phi, 2), t2);
        rhs -= Rational(twist * cfg.phi) * linear_times(alg, rat(cfg.phi, 2), t3);
    }
    return outcome(std::move(lhs), rhs);
}

}  // namespace

RdetOutcome check_rdet_identity(const AlgebraPtr& alg, RdetIdentity id, const RdetParams& params) {
    switch (id) {
        case RdetIdentity::RowReplacement: return check_row_replacement(alg, params);
        case RdetIdentity::SubmatrixCommutator: return check_submatrix_commutator(alg, params);
        case RdetIdentity::FullCommutator: return check_full_commutator(alg, params);
        case RdetIdentity::EvenBottomCommutator: return check_even_bottom_commutator(alg, params);
        case RdetIdentity::OddZeroColumnCommutator:
            return check_odd_zero_column_commutator(alg, params);
    }
    throw std::invalid_argument("check_rdet_identity: unknown identity");
}

std::vector<RdetParams> rdet_identity_params(RdetIdentity id, const Config& cfg) {
    std::vector<RdetParams> out;
    const auto rows = index_set(cfg.n);
    const auto cols = index_set(cfg.l);
    const bool odd = cfg.l % 2 == 1;
    switch (id) {
        case RdetIdentity::RowReplacement:
            for (int q : cols) {
                if (q < 0 || !in_index_set(q + 2, cfg.l)) continue;
                for (int i : rows)
                    for (int j : rows)
                        for (int barred : odd ? std::vector<int>{0, 1} : std::vector<int>{0})
                            out.push_back({q, 0, i, j, 0, 0, barred != 0});
            }
            break;
        case RdetIdentity::SubmatrixCommutator:
            for (int q : cols) {
                if (q <= 0 || !in_index_set(q + 2, cfg.l)) continue;
                for (int p : cols) {
                    if (!(-q < p && p < q)) continue;
                    for (int i : rows)
                        for (int j : rows)
                            for (int h : rows)
                                for (int k : rows)
                                    for (int barred :
                                         odd ? std::vector<int>{0, 1} : std::vector<int>{0})
                                        out.push_back({q, p, i, j, h, k, barred != 0});
                }
            }
            break;
        case RdetIdentity::FullCommutator:
            for (int q : cols) {
                if (q <= 0 || !in_index_set(q + 2, cfg.l)) continue;
                for (int i : rows)
                    for (int j : rows)
                        for (int h : rows)
                            for (int k : rows)
                                for (int barred : odd ? std::vector<int>{0, 1} : std::vector<int>{0})
                                    out.push_back({q, 0, i, j, h, k, barred != 0});
            }
            break;
        case RdetIdentity::EvenBottomCommutator:
            if (cfg.l % 2 == 0)
                for (int i : rows)
                    for (int j : rows)
                        for (int h : rows)
                            for (int k : rows) out.push_back({-1, 0, i, j, h, k, false});
            break;
        case RdetIdentity::OddZeroColumnCommutator:
            if (odd && cfg.l >= 3)
                for (int i : rows)
                    for (int j : rows)
                        for (int h : rows)
                            for (int k : rows)
                                for (int barred : {0, 1})
                                    out.push_back({0, 0, i, j, h, k, barred != 0});
            break;
    }
    return out;
}

}  // namespace walg
