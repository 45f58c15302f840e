#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "walg/algebra.hpp"
#include "walg/lie_core.hpp"
#include "walg/oracles.hpp"

using namespace walg;

TEST_CASE("make_config derives phi and rejects contradictions") {
    CHECK(make_config(3, 2, -1).phi == 1);
    CHECK(make_config(2, 3, -1).phi == -1);
    CHECK(make_config(1, 3, 1).phi == 1);
    CHECK(make_config(2, 4, 1).phi == -1);
    CHECK_THROWS_AS(make_config(1, 2, 1), std::invalid_argument);  // n odd forces phi=+, l even forces -
    CHECK_THROWS_AS(make_config(3, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_config(0, 2, -1), std::invalid_argument);
    CHECK_THROWS_AS(make_config(1, 2, 0), std::invalid_argument);
}

TEST_CASE("hat and tilde conventions") {
    CHECK(hat(0) == 0);
    CHECK(hat(-3) == 1);
    CHECK(hat(5) == 0);
    CHECK(tilde(0) == 0);
    CHECK(tilde(5) == 1);
    CHECK(tilde(-5) == 0);
}

TEST_CASE("index sets") {
    CHECK(index_set(3) == std::vector<int>{-2, 0, 2});
    CHECK(index_set(4) == std::vector<int>{-3, -1, 1, 3});
    CHECK(in_index_set(0, 3));
    CHECK_FALSE(in_index_set(0, 4));
    CHECK_FALSE(in_index_set(4, 4));
}

TEST_CASE("canonicalize_f") {
    // f_{1,1} = -f_{-1,-1} for epsilon = -
    auto c = canonicalize_f(1, 1, -1, 2);
    REQUIRE(c.pair.has_value());
    CHECK(*c.pair == FPair{-1, -1});
    CHECK(c.coeff == Rational(-1));

    // f_{a,-a} vanishes for epsilon = +
    auto z = canonicalize_f(1, -1, 1, 2);
    CHECK_FALSE(z.pair.has_value());
    CHECK(z.coeff == Rational(0));

    // already lex-minimal, self-paired, nonzero for epsilon = -
    auto k = canonicalize_f(-1, 1, -1, 2);
    REQUIRE(k.pair.has_value());
    CHECK(*k.pair == FPair{-1, 1});
    CHECK(k.coeff == Rational(1));

    CHECK_THROWS_AS(canonicalize_f(2, 1, -1, 2), std::out_of_range);
}

TEST_CASE("bracket examples in (1,2,-)") {
    const Config cfg = make_config(1, 2, -1);
    const LieElement x = LieElement::basis(cfg, -1, 1);
    const LieElement y = LieElement::basis(cfg, 1, -1);
    // [f_{-1,1}, f_{1,-1}] = 4 f_{-1,-1}
    CHECK(bracket(x, y) == LieElement::basis(cfg, -1, -1, Rational(4)));
    CHECK(bracket(x, x).is_zero());
    CHECK(bracket(y, x) == LieElement::basis(cfg, -1, -1, Rational(-4)));
}

TEST_CASE("bracket vanishes without index coincidences") {
    const Config cfg = make_config(2, 4, -1);
    // all eight indices distinct, no +- coincidences
    const LieElement x = LieElement::basis(cfg, -7, 5);
    const LieElement y = LieElement::basis(cfg, -3, 1);
    CHECK(bracket(x, y).is_zero());
}

TEST_CASE("dimension formula vs enumeration vs matrix equation") {
    for (const Config& cfg : {make_config(1, 2, -1), make_config(2, 2, 1), make_config(2, 2, -1),
                              make_config(1, 3, 1), make_config(2, 3, -1), make_config(2, 4, 1)}) {
        CAPTURE(cfg.n);
        CAPTURE(cfg.l);
        CAPTURE(cfg.epsilon);
        const long from_basis = static_cast<long>(canonical_basis(cfg).size());
        CHECK(from_basis == lie_dimension_formula(cfg));
        CHECK(from_basis == oracle_matrix_equation_dim(cfg));
    }
}

TEST_CASE("bracket agrees with matrix commutators on all basis pairs") {
    for (const Config& cfg : {make_config(1, 2, -1), make_config(2, 2, 1), make_config(1, 3, 1),
                              make_config(3, 2, -1), make_config(2, 3, 1), make_config(2, 4, -1)}) {
        auto alg = Algebra::make(cfg);
        for (GenId i = 0; i < alg->dim(); ++i)
            for (GenId j = 0; j < alg->dim(); ++j) {
                RatMatrix expected = commutator(alg->matrix_of(i), alg->matrix_of(j));
                RatMatrix actual(cfg.N(), cfg.N());
                for (const auto& [g, c] : alg->bracket_terms(i, j)) actual += c * alg->matrix_of(g);
                REQUIRE(actual == expected);
            }
    }
}

TEST_CASE("antisymmetry and Jacobi on random triples") {
    for (const Config& cfg : {make_config(2, 3, -1), make_config(2, 4, 1)}) {
        auto alg = Algebra::make(cfg);
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::size_t> pick(0, alg->dim() - 1);
        for (int s = 0; s < 150; ++s) {
            auto elem = [&]() {
                auto [a, b] = alg->pair_of(static_cast<GenId>(pick(rng)));
                return LieElement::basis(cfg, a, b);
            };
            const LieElement x = elem(), y = elem(), z = elem();
            CHECK(bracket(x, y) == -bracket(y, x));
            LieElement jac =
                bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
            REQUIRE(jac.is_zero());
        }
    }
}

TEST_CASE("mismatched configs are rejected") {
    const LieElement x = LieElement::basis(make_config(1, 2, -1), -1, 1);
    const LieElement y = LieElement::basis(make_config(2, 2, 1), -3, 1);
    CHECK_THROWS_AS(bracket(x, y), std::invalid_argument);
}
