#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "walg/commpoly.hpp"
#include "walg/smap.hpp"
#include "walg/uea.hpp"
#include "walg/walgebra.hpp"

using namespace walg;

namespace {

UEAElement random_element(const AlgebraPtr& alg, std::mt19937_64& rng, int max_len = 2,
                          int terms = 3) {
    std::uniform_int_distribution<std::size_t> pick(0, alg->dim() - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> len(0, max_len);
    UEAElement out = UEAElement::zero(alg);
    for (int t = 0; t < terms; ++t) {
        UEAElement mono = UEAElement::scalar(alg, Rational(coeff(rng)));
        const int k = len(rng);
        for (int s = 0; s < k; ++s)
            mono = mono * UEAElement::generator(alg, static_cast<GenId>(pick(rng)));
        out += mono;
    }
    return out;
}

}  // namespace

TEST_CASE("multiplication basics in (1,2,-)") {
    const Config cfg = make_config(1, 2, -1);
    auto alg = Algebra::make(cfg);
    const UEAElement one = UEAElement::one(alg);
    const GenId lo = alg->id_of({-1, 1});   // degree 2, earlier in the order
    const GenId hi = alg->id_of({1, -1});   // m generator, last
    const UEAElement x = UEAElement::generator(alg, lo);
    const UEAElement y = UEAElement::generator(alg, hi);

    CHECK(one * x == x);
    CHECK(x * one == x);

    // sorted product stays as written
    UEAElement sorted = x * y;
    REQUIRE(sorted.terms().size() == 1);
    CHECK(sorted.terms().begin()->first == Monomial{lo, hi});

    // out-of-order product straightens with the bracket correction:
    // f_{1,-1} f_{-1,1} = f_{-1,1} f_{1,-1} - 4 f_{-1,-1}
    UEAElement swapped = y * x;
    UEAElement expected = sorted - Rational(4) * UEAElement::generator(alg, alg->id_of({-1, -1}));
    CHECK(swapped == expected);
}

TEST_CASE("commutator matches the Lie bracket on generators") {
    const Config cfg = make_config(1, 2, -1);
    auto alg = Algebra::make(cfg);
    const UEAElement x = UEAElement::generator(alg, alg->id_of({1, -1}));
    const UEAElement y = UEAElement::generator(alg, alg->id_of({-1, 1}));
    CHECK(commutator(x, y) ==
          Rational(-4) * UEAElement::generator(alg, alg->id_of({-1, -1})));
    CHECK(commutator(x, UEAElement::one(alg)).is_zero());
}

TEST_CASE("associativity on random triples") {
    for (const Config& cfg : {make_config(1, 2, -1), make_config(2, 2, 1), make_config(2, 3, -1),
                              make_config(3, 2, -1)}) {
        auto alg = Algebra::make(cfg);
        std::mt19937_64 rng(11);
        for (int s = 0; s < 60; ++s) {
            const UEAElement x = random_element(alg, rng);
            const UEAElement y = random_element(alg, rng);
            const UEAElement z = random_element(alg, rng);
            REQUIRE((x * y) * z == x * (y * z));
        }
    }
}

TEST_CASE("commutators are antisymmetric") {
    auto alg = Algebra::make(make_config(2, 2, -1));
    std::mt19937_64 rng(13);
    for (int s = 0; s < 40; ++s) {
        const UEAElement x = random_element(alg, rng);
        const UEAElement y = random_element(alg, rng);
        UEAElement sum = commutator(x, y) + commutator(y, x);
        REQUIRE(sum.is_zero());
    }
}

TEST_CASE("straightening is Kazhdan filtered with multiplicative top symbols") {
    auto alg = Algebra::make(make_config(2, 3, 1));
    std::mt19937_64 rng(17);
    for (int s = 0; s < 40; ++s) {
        const UEAElement x = random_element(alg, rng);
        const UEAElement y = random_element(alg, rng);
        if (x.is_zero() || y.is_zero()) continue;
        const UEAElement xy = x * y;
        REQUIRE(!xy.is_zero());  // U(g) has no zero divisors
        CHECK(xy.kazhdan_degree() <= x.kazhdan_degree() + y.kazhdan_degree());
        // gr is the symmetric algebra: top symbols multiply
        CHECK(kazhdan_top_symbol(xy) == kazhdan_top_symbol(x) * kazhdan_top_symbol(y));
    }
}

TEST_CASE("degree conventions") {
    const Config cfg = make_config(1, 2, -1);
    auto alg = Algebra::make(cfg);
    const UEAElement deg2 = UEAElement::generator(alg, alg->id_of({-1, 1}));
    CHECK(deg2.kazhdan_degree() == 2);  // 2/2 + 1
    CHECK(UEAElement::one(alg).good_degree() == 0);
    CHECK(deg2.good_degree() == 1);
    CHECK_THROWS_AS(UEAElement::zero(alg).kazhdan_degree(), std::domain_error);
    CHECK_THROWS_AS(UEAElement::zero(alg).good_degree(), std::domain_error);
}

TEST_CASE("apply_hom identity and annihilation") {
    const Config cfg = make_config(2, 2, 1);
    auto alg = Algebra::make(cfg);
    std::map<GenId, UEAElement> identity, killall;
    for (GenId id = 0; id < alg->dim(); ++id) {
        identity.emplace(id, UEAElement::generator(alg, id));
        killall.emplace(id, UEAElement::zero(alg));
    }
    std::mt19937_64 rng(19);
    const UEAElement x = random_element(alg, rng, 3, 4);
    CHECK(apply_hom(identity, x) == x);
    UEAElement len1plus = x - UEAElement::scalar(alg, x.terms().count(Monomial{})
                                                          ? x.terms().at(Monomial{})
                                                          : Rational(0));
    CHECK(apply_hom(killall, len1plus).is_zero());
}

TEST_CASE("apply_hom eta shift expands binomially") {
    const Config cfg = make_config(2, 3, 1);
    auto alg = Algebra::make(cfg);
    // pick two distinct canonical diagonal h generators f_{a,a}, f_{b,b}
    std::vector<GenId> diag;
    for (GenId id = 0; id < alg->h_count(); ++id)
        if (alg->pair_of(id).first == alg->pair_of(id).second) diag.push_back(id);
    REQUIRE(diag.size() >= 2);
    const GenId a = diag[0], b = diag[1];
    std::map<GenId, UEAElement> images;
    const Rational ra = rho(alg->pyramid().col(alg->pair_of(a).first), cfg);
    const Rational rb = rho(alg->pyramid().col(alg->pair_of(b).first), cfg);
    for (GenId id = 0; id < alg->dim(); ++id) {
        UEAElement img = UEAElement::generator(alg, id);
        if (id == a) img -= ra * UEAElement::one(alg);
        if (id == b) img -= rb * UEAElement::one(alg);
        images.emplace(id, std::move(img));
    }
    const UEAElement fa = UEAElement::generator(alg, a);
    const UEAElement fb = UEAElement::generator(alg, b);
    // (f_a - r_a)(f_b - r_b), expanded by hand
    UEAElement expected = fa * fb - rb * fa - ra * fb + (ra * rb) * UEAElement::one(alg);
    CHECK(apply_hom(images, fa * fb) == expected);
}

TEST_CASE("check_lie_hom accepts homomorphic images and rejects broken ones") {
    auto alg = Algebra::make(make_config(2, 2, -1));
    std::map<GenId, UEAElement> identity, doubled;
    for (GenId id = 0; id < alg->dim(); ++id) {
        identity.emplace(id, UEAElement::generator(alg, id));
        doubled.emplace(id, Rational(2) * UEAElement::generator(alg, id));
    }
    CHECK(check_lie_hom(identity, alg));
    // doubling scales brackets by 4 on one side and 2 on the other
    CHECK_FALSE(check_lie_hom(doubled, alg, 256));
}

TEST_CASE("apply_hom rejects missing images") {
    auto alg = Algebra::make(make_config(1, 2, -1));
    std::map<GenId, UEAElement> empty;
    CHECK_THROWS_AS(apply_hom(empty, UEAElement::generator(alg, 0)), std::invalid_argument);
}

TEST_CASE("good leading term of the W generators") {
    // s_{i,j}(omega_{r+1}) has good degree r generically, with the alpha-weighted
    // single-generator sum as its top part
    const Config cfg = make_config(1, 2, -1);
    auto alg = Algebra::make(cfg);
    UEAElement w = w_generator(alg, 0, 0, 2);
    CHECK(w.good_degree() == 1);
    CHECK(w.good_leading_term() ==
          UEAElement::from_lie(alg, centralizer_element(alg, 0, 0, 1)));
}

TEST_CASE("mixed-config arithmetic is rejected") {
    auto a1 = Algebra::make(make_config(1, 2, -1));
    auto a2 = Algebra::make(make_config(2, 2, 1));
    UEAElement x = UEAElement::generator(a1, 0);
    UEAElement y = UEAElement::generator(a2, 0);
    CHECK_THROWS_AS(x * y, std::invalid_argument);
    CHECK_THROWS_AS(x += y, std::invalid_argument);
}
