#include "walg/walgebra.hpp"

#include <cassert>
#include <stdexcept>

namespace walg {

UEAElement pr(const UEAElement& x) {
    if (x.is_zero()) return x;
    const AlgebraPtr& alg = x.algebra();
    std::map<Monomial, Rational> out;
    for (const auto& [m, c] : x.terms()) {
        std::size_t split = m.size();
        while (split > 0 && alg->is_m(m[split - 1])) --split;
        Rational factor = c;
        for (std::size_t k = split; k < m.size() && !is_zero(factor); ++k) factor *= alg->chi(m[k]);
        if (is_zero(factor)) continue;
        Monomial prefix(m.begin(), m.begin() + split);
        Rational& slot = out[prefix];
        slot += factor;
        if (is_zero(slot)) out.erase(prefix);
    }
    return UEAElement::from_normal_form(alg, std::move(out));
}

WMembership check_w_membership(const UEAElement& x) {
    if (!x.supported_in_p()) throw std::invalid_argument("check_w_membership: element not in U(p)");
    WMembership res;
    res.in_w = true;
    if (x.is_zero()) return res;
    const AlgebraPtr& alg = x.algebra();
    for (GenId f = alg->first_m_id(); f < alg->dim(); ++f) {
        UEAElement residue = pr(commutator(UEAElement::generator(alg, f), x));
        if (!residue.is_zero()) {
            res.in_w = false;
            res.witness_generator = f;
            res.residue = residue;
            return res;
        }
    }
    return res;
}

bool is_in_w(const UEAElement& x) { return check_w_membership(x).in_w; }

UEAElement xi(const UEAElement& x) {
    if (!x.supported_in_p()) throw std::invalid_argument("xi: element not in U(p)");
    if (x.is_zero()) return x;
    const AlgebraPtr& alg = x.algebra();
    // Factor-wise images (h generators fixed, positive generators to zero);
    // surviving monomials are already sorted, so no re-straightening occurs.
    std::map<Monomial, Rational> kept;
    for (const auto& [m, c] : x.terms()) {
        bool survives = true;
        for (GenId id : m)
            if (!alg->is_h(id)) {
                survives = false;
                break;
            }
        if (survives) kept[m] = c;
    }
    return UEAElement::from_normal_form(alg, std::move(kept));
}

UEAElement eta(const UEAElement& x) {
    if (!x.supported_in_h()) throw std::invalid_argument("eta: element not in U(h)");
    if (x.is_zero()) return x;
    const AlgebraPtr& alg = x.algebra();
    std::map<GenId, UEAElement> images;
    for (GenId id = 0; id < alg->h_count(); ++id) {
        const auto& [a, b] = alg->pair_of(id);
        UEAElement img = UEAElement::generator(alg, id);
        if (a == b) img -= rho(alg->pyramid().col(a), alg->config()) * UEAElement::one(alg);
        images.emplace(id, std::move(img));
    }
    assert(check_lie_hom(images, alg));
    return apply_hom(images, x);
}

UEAElement miura(const UEAElement& x) { return eta(xi(x)); }

}  // namespace walg
