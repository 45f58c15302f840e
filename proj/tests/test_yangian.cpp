#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walg/commpoly.hpp"
#include "walg/oracles.hpp"
#include "walg/rdet_identities.hpp"
#include "walg/walgebra.hpp"
#include "walg/yangian.hpp"

using namespace walg;

TEST_CASE("kappa examples in (1,2,-)") {
    const Config cfg = make_config(1, 2, -1);
    auto alg = Algebra::make(cfg);
    CHECK(kappa_generator(alg, 0, 0, 0) == UEAElement::one(alg));
    CHECK(kappa_generator(alg, 0, 0, 1).is_zero());
    UEAElement f = UEAElement::generator(alg, alg->id_of({-1, -1}));
    CHECK(kappa_generator(alg, 0, 0, 2) == -(f * f));
    CHECK(kappa_generator(alg, 0, 0, 2) == miura(w_generator(alg, 0, 0, 2)));
}

TEST_CASE("r = 1 sums over single diagonal units for even l") {
    const Config cfg = make_config(2, 4, 1);
    auto alg = Algebra::make(cfg);
    for (int i : index_set(cfg.n))
        for (int j : index_set(cfg.n)) {
            UEAElement expected = UEAElement::zero(alg);
            for (int p : index_set(cfg.l)) expected += s_generator(alg, i, j, p, p);
            CHECK(kappa_generator(alg, i, j, 1) == expected);
        }
}

TEST_CASE("kappa images live in U(h)") {
    for (const Config& cfg : {make_config(2, 3, -1), make_config(2, 4, -1)}) {
        auto alg = Algebra::make(cfg);
        for (int i : index_set(cfg.n))
            for (int j : index_set(cfg.n))
                for (int r = 1; r <= cfg.l + 2; ++r)
                    REQUIRE(kappa_generator(alg, i, j, r).supported_in_h());
    }
}

TEST_CASE("subset formula equals product form") {
    for (const Config& cfg : {make_config(1, 2, -1), make_config(2, 2, -1), make_config(1, 3, 1),
                              make_config(2, 3, 1), make_config(1, 4, -1)}) {
        auto alg = Algebra::make(cfg);
        for (int i : index_set(cfg.n))
            for (int j : index_set(cfg.n))
                for (int r = 1; r <= cfg.l + 3; ++r)
                    REQUIRE(kappa_generator(alg, i, j, r) ==
                            kappa_generator_product_form(alg, i, j, r));
    }
}

TEST_CASE("kernel relations") {
    CHECK(check_kernel_relation(Algebra::make(make_config(1, 2, -1)), 3));
    auto alg23p = Algebra::make(make_config(2, 3, 1));
    CHECK(check_kernel_relation(alg23p, 4));
    CHECK(check_kernel_relation(alg23p, 5));  // iterated past the level
    CHECK_THROWS_AS(check_kernel_relation(alg23p, 3), std::invalid_argument);
}

TEST_CASE("symmetry relation, including the hand-expanded r = 1 case") {
    for (const Config& cfg : {make_config(1, 2, -1), make_config(2, 2, 1), make_config(2, 3, -1),
                              make_config(1, 4, -1)}) {
        auto alg = Algebra::make(cfg);
        // r = 1 coefficient: phi^{hat i + hat j} (-1) kappa(S^{(1)}_{-j,-i}) = kappa(S^{(1)}_{i,j})
        for (int i : index_set(cfg.n))
            for (int j : index_set(cfg.n)) {
                UEAElement lhs = Rational(-sign_pow(cfg.phi, (hat(i) + hat(j)) % 2)) *
                                 kappa_generator(alg, -j, -i, 1);
                REQUIRE(lhs == kappa_generator(alg, i, j, 1));
            }
        CHECK(check_symmetry_relation(alg, cfg.l + 3));
    }
}

TEST_CASE("admissible triples count the centralizer dimension") {
    CHECK(admissible_triple_count(make_config(1, 2, -1)) == 1);
    CHECK(admissible_triple_count(make_config(2, 3, 1)) == 5);
    CHECK(admissible_triple_count(make_config(2, 3, -1)) == 7);
    CHECK(admissible_triple_count(make_config(2, 2, 1)) == 4);
    for (const Config& cfg : {make_config(1, 2, -1), make_config(2, 3, 1), make_config(2, 3, -1),
                              make_config(3, 2, -1), make_config(2, 4, 1)}) {
        CHECK(admissible_triple_count(cfg) == centralizer_dim_formula(cfg));
        CHECK(admissible_triple_count(cfg) == oracle_centralizer_dim(Algebra::make(cfg)));
    }
}

TEST_CASE("centralizer dimension oracle values") {
    CHECK(oracle_centralizer_dim(Algebra::make(make_config(1, 2, -1))) == 1);
    CHECK(oracle_centralizer_dim(Algebra::make(make_config(2, 3, 1))) == 5);
    CHECK(oracle_centralizer_dim(Algebra::make(make_config(2, 3, -1))) == 7);
}

TEST_CASE("centralizer elements centralize e and exhaust g_e") {
    for (const Config& cfg : {make_config(2, 3, 1), make_config(2, 4, -1), make_config(3, 2, -1)}) {
        auto alg = Algebra::make(cfg);
        std::vector<std::vector<Rational>> rows;
        for (const auto& [i, j, r] : admissible_triples(cfg)) {
            LieElement f = centralizer_element(alg, i, j, r - 1);
            REQUIRE(bracket(alg->e(), f).is_zero());
            std::vector<Rational> row(alg->dim(), Rational(0));
            for (const auto& [pair, c] : f.terms()) row[alg->id_of(pair)] = c;
            rows.push_back(std::move(row));
        }
        CHECK(exact_rank(rows) == rows.size());
        CHECK(static_cast<long>(rows.size()) == centralizer_dim_formula(cfg));
    }
}

TEST_CASE("good component of s(omega_{r+1}) is the centralizer element") {
    for (const Config& cfg : {make_config(2, 2, 1), make_config(2, 3, 1), make_config(1, 4, -1)}) {
        auto alg = Algebra::make(cfg);
        for (int i : index_set(cfg.n))
            for (int j : index_set(cfg.n))
                for (int rp1 = 1; rp1 <= cfg.l; ++rp1) {
                    UEAElement w = w_generator(alg, i, j, rp1);
                    UEAElement expected =
                        UEAElement::from_lie(alg, centralizer_element(alg, i, j, rp1 - 1));
                    REQUIRE(w.good_component(rp1 - 1) == expected);
                    if (!w.is_zero()) REQUIRE(w.good_degree() <= rp1 - 1);
                }
    }
}

TEST_CASE("pbw independence at desk scale") {
    {
        // single admissible generator (0,0,2); its powers stay independent
        auto res = pbw_independence_check(Algebra::make(make_config(1, 2, -1)), 4);
        CHECK(res.independent);
        CHECK(res.monomial_count == 3);  // 1, k, k^2
    }
    {
        auto res = pbw_independence_check(Algebra::make(make_config(2, 2, 1)), 3);
        CHECK(res.independent);
        CHECK(res.monomial_count > 4);
    }
    {
        auto res = pbw_independence_check(Algebra::make(make_config(2, 2, -1)), 3);
        CHECK(res.independent);
    }
}

TEST_CASE("theta-star symbols") {
    const Config cfg = make_config(2, 2, 1);
    SymbolTable table(cfg);
    // r = 1: sum over p of x^{[p]}_{i,j}
    for (int i : index_set(cfg.n))
        for (int j : index_set(cfg.n)) {
            CommPoly expected;
            for (int p : index_set(cfg.l)) {
                auto res = table.resolve(i, j, p);
                if (res.sign != 0) expected += CommPoly::variable(res.var, Rational(res.sign));
            }
            CHECK(theta_star(cfg, table, i, j, 1) == expected);
        }
}

TEST_CASE("symbol table size equals dim h") {
    for (const Config& cfg : {make_config(2, 2, 1), make_config(2, 3, 1), make_config(2, 3, -1),
                              make_config(3, 2, -1)}) {
        auto alg = Algebra::make(cfg);
        CHECK(SymbolTable(cfg).size() == alg->h_count());
    }
}

TEST_CASE("gr_r kappa equals theta-star symbolically") {
    for (const Config& cfg : {make_config(1, 2, -1), make_config(2, 2, 1), make_config(2, 3, -1),
                              make_config(2, 4, 1)}) {
        auto alg = Algebra::make(cfg);
        SymbolTable table(cfg);
        for (int r = 1; r <= std::min(3, cfg.l); ++r)
            for (int i : index_set(cfg.n))
                for (int j : index_set(cfg.n)) {
                    CommPoly lhs = h_top_symbol(alg, table, kappa_generator(alg, i, j, r), r);
                    CommPoly rhs = theta_star(cfg, table, i, j, r);
                    REQUIRE(lhs == rhs);
                }
    }
}

TEST_CASE("images and invariance hold with three block rows") {
    // n = 3 exercises generic index triples (including 0) in every sign rule.
    const Config cfg = make_config(3, 3, 1);
    auto alg = Algebra::make(cfg);
    for (int i : index_set(cfg.n))
        for (int j : index_set(cfg.n))
            for (int r = 1; r <= cfg.l + 1; ++r) {
                CAPTURE(i);
                CAPTURE(j);
                CAPTURE(r);
                UEAElement w = w_generator(alg, i, j, r);
                REQUIRE(is_in_w(w));
                REQUIRE(miura(w) == kappa_generator(alg, i, j, r));
                REQUIRE(kappa_generator(alg, i, j, r) ==
                        kappa_generator_product_form(alg, i, j, r));
            }
    CHECK(check_symmetry_relation(alg, cfg.l + 2));
    CHECK(check_kernel_relation(alg, cfg.l + 1));
}

TEST_CASE("generators sit inside filtered degree r") {
    for (const Config& cfg : {make_config(2, 3, 1), make_config(2, 4, -1)}) {
        auto alg = Algebra::make(cfg);
        for (int i : index_set(cfg.n))
            for (int j : index_set(cfg.n))
                for (int r = 1; r <= cfg.l + 1; ++r) {
                    UEAElement k = kappa_generator(alg, i, j, r);
                    if (!k.is_zero()) CHECK(k.kazhdan_degree() <= r);
                    UEAElement w = w_generator(alg, i, j, r);
                    if (!w.is_zero()) CHECK(w.kazhdan_degree() <= r);
                }
    }
    // the (1,2,-) generator realizes its degree bound
    auto alg = Algebra::make(make_config(1, 2, -1));
    CHECK(w_generator(alg, 0, 0, 2).kazhdan_degree() == 2);
    CHECK(kappa_generator(alg, 0, 0, 2).kazhdan_degree() == 2);
}

TEST_CASE("admissibility parity cases") {
    const Config plus = make_config(2, 2, 1);  // phi = -
    CHECK(is_admissible(-1, -1, 1, plus));
    CHECK(is_admissible(-1, 1, 1, plus));   // i+j = 0, r odd, phi=-: allowed (<=)
    CHECK_FALSE(is_admissible(1, 1, 1, plus));
    CHECK_FALSE(is_admissible(-1, 1, 2, plus));  // r even, phi=-: needs strict
    CHECK_FALSE(is_admissible(-1, -1, 3, plus));  // r > l
}
