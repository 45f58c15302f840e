#include "walg/suites.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "walg/commpoly.hpp"
#include "walg/oracles.hpp"
#include "walg/rdet_identities.hpp"
#include "walg/walgebra.hpp"
#include "walg/yangian.hpp"

namespace walg {

namespace {

int default_max_r(const Config& cfg, const CheckOptions& opt) {
    return opt.max_r > 0 ? opt.max_r : cfg.l + 3;
}

std::vector<CheckTask> invariance_tasks(const AlgebraPtr& alg, const CheckOptions& opt) {
    std::vector<CheckTask> tasks;
    const Config& cfg = alg->config();
    for (int i : index_set(cfg.n))
        for (int j : index_set(cfg.n))
            for (int r = 1; r <= default_max_r(cfg, opt); ++r)
                tasks.push_back(
                    {"invariance", Json{{"i", i}, {"j", j}, {"r", r}}, [alg, i, j, r, opt]() {
                         UEAElement w = w_generator(alg, i, j, r, opt.mutation);
                         WMembership res = check_w_membership(w);
                         CheckOutcome out;
                         out.pass = res.in_w;
                         if (!res.in_w) {
                             const auto& [a, b] = alg->pair_of(*res.witness_generator);
                             out.witness = Json{{"m_generator", Json::array({a, b})},
                                                {"residue", uea_to_json(res.residue)}};
                         }
                         return out;
                     }});
    return tasks;
}

std::vector<CheckTask> images_tasks(const AlgebraPtr& alg, const CheckOptions& opt) {
    std::vector<CheckTask> tasks;
    const Config& cfg = alg->config();
    for (int i : index_set(cfg.n))
        for (int j : index_set(cfg.n))
            for (int r = 1; r <= default_max_r(cfg, opt); ++r) {
                tasks.push_back({"images",
                                 Json{{"path", "miura_vs_kappa"}, {"i", i}, {"j", j}, {"r", r}},
                                 [alg, i, j, r, opt]() {
                                     UEAElement lhs = miura(w_generator(alg, i, j, r, opt.mutation));
                                     UEAElement rhs = kappa_generator(alg, i, j, r);
                                     CheckOutcome out;
                                     out.pass = lhs == rhs;
                                     if (!out.pass)
                                         out.witness = Json{{"miura_image", uea_to_json(lhs)},
                                                            {"kappa", uea_to_json(rhs)}};
                                     return out;
                                 }});
                tasks.push_back({"images",
                                 Json{{"path", "kappa_cross_path"}, {"i", i}, {"j", j}, {"r", r}},
                                 [alg, i, j, r]() {
                                     UEAElement lhs = kappa_generator(alg, i, j, r);
                                     UEAElement rhs = kappa_generator_product_form(alg, i, j, r);
                                     CheckOutcome out;
                                     out.pass = lhs == rhs;
                                     if (!out.pass)
                                         out.witness = Json{{"subset_form", uea_to_json(lhs)},
                                                            {"product_form", uea_to_json(rhs)}};
                                     return out;
                                 }});
            }
    return tasks;
}

std::vector<CheckTask> kernel_tasks(const AlgebraPtr& alg, const CheckOptions& opt) {
    std::vector<CheckTask> tasks;
    const Config& cfg = alg->config();
    const int top = std::max(default_max_r(cfg, opt), cfg.l + 1);
    for (int i : index_set(cfg.n))
        for (int j : index_set(cfg.n))
            for (int r = cfg.l + 1; r <= top; ++r)
                tasks.push_back(
                    {"kernel", Json{{"i", i}, {"j", j}, {"r", r}}, [alg, i, j, r]() {
                         const Config& c = alg->config();
                         UEAElement lhs = kappa_generator(alg, i, j, r);
                         UEAElement rhs = c.l % 2 == 0
                                              ? UEAElement::zero(alg)
                                              : rat(-c.phi, 2) * kappa_generator(alg, i, j, r - 1);
                         CheckOutcome out;
                         out.pass = lhs == rhs;
                         if (!out.pass)
                             out.witness = Json{{"kappa_r", uea_to_json(lhs)},
                                                {"expected", uea_to_json(rhs)}};
                         return out;
                     }});
    return tasks;
}

std::vector<CheckTask> symmetry_tasks(const AlgebraPtr& alg, const CheckOptions& opt) {
    std::vector<CheckTask> tasks;
    const Config& cfg = alg->config();
    for (int i : index_set(cfg.n))
        for (int j : index_set(cfg.n))
            for (int r = 1; r <= default_max_r(cfg, opt); ++r)
                tasks.push_back(
                    {"symmetry", Json{{"i", i}, {"j", j}, {"r", r}}, [alg, i, j, r]() {
                         const Config& c = alg->config();
                         const int sign =
                             sign_pow(c.phi, (hat(i) + hat(j)) % 2) * (r % 2 == 0 ? 1 : -1);
                         UEAElement lhs = Rational(sign) * kappa_generator(alg, -j, -i, r);
                         UEAElement rhs = kappa_generator(alg, i, j, r);
                         if (r % 2 == 0)
                             rhs += Rational(c.phi) * kappa_generator(alg, i, j, r - 1);
                         CheckOutcome out;
                         out.pass = lhs == rhs;
                         if (!out.pass)
                             out.witness = Json{{"reflected_side", uea_to_json(lhs)},
                                                {"direct_side", uea_to_json(rhs)}};
                         return out;
                     }});
    return tasks;
}

std::vector<CheckTask> centralizer_tasks(const AlgebraPtr& alg, const CheckOptions& opt) {
    std::vector<CheckTask> tasks;
    const Config& cfg = alg->config();
    tasks.push_back({"centralizer", Json{{"item", "admissible_count_vs_formula"}}, [alg]() {
                         const long count = admissible_triple_count(alg->config());
                         const long formula = centralizer_dim_formula(alg->config());
                         CheckOutcome out;
                         out.pass = count == formula;
                         if (!out.pass)
                             out.witness = Json{{"count", count}, {"formula", formula}};
                         return out;
                     }});
    tasks.push_back({"centralizer", Json{{"item", "admissible_count_vs_ad_e_nullity"}}, [alg]() {
                         const long count = admissible_triple_count(alg->config());
                         const long oracle = oracle_centralizer_dim(alg);
                         CheckOutcome out;
                         out.pass = count == oracle;
                         if (!out.pass) out.witness = Json{{"count", count}, {"nullity", oracle}};
                         return out;
                     }});
    tasks.push_back({"centralizer", Json{{"item", "family_rank"}}, [alg, opt]() {
                         const Config& c = alg->config();
                         std::vector<std::vector<Rational>> rows;
                         for (const auto& [i, j, r] : admissible_triples(c)) {
                             LieElement f = centralizer_element(alg, i, j, r - 1, opt.mutation);
                             std::vector<Rational> row(alg->dim(), Rational(0));
                             for (const auto& [pair, coeff] : f.terms())
                                 row[alg->id_of(pair)] = coeff;
                             rows.push_back(std::move(row));
                         }
                         CheckOutcome out;
                         const std::size_t rank = exact_rank(rows);
                         out.pass = rank == rows.size() &&
                                    static_cast<long>(rank) == centralizer_dim_formula(c);
                         if (!out.pass)
                             out.witness =
                                 Json{{"rank", rank}, {"family_size", rows.size()}};
                         return out;
                     }});
    for (int i : index_set(cfg.n))
        for (int j : index_set(cfg.n))
            for (int rp1 = 1; rp1 <= cfg.l; ++rp1) {
                tasks.push_back({"centralizer",
                                 Json{{"item", "centralizes_e"}, {"i", i}, {"j", j}, {"r", rp1 - 1}},
                                 [alg, i, j, rp1, opt]() {
                                     LieElement f =
                                         centralizer_element(alg, i, j, rp1 - 1, opt.mutation);
                                     LieElement br = bracket(alg->e(), f);
                                     CheckOutcome out;
                                     out.pass = br.is_zero();
                                     if (!out.pass)
                                         out.witness = Json{{"bracket_with_e",
                                                             lie_to_json(br)}};
                                     return out;
                                 }});
                tasks.push_back(
                    {"centralizer",
                     Json{{"item", "good_leading_term"}, {"i", i}, {"j", j}, {"r", rp1 - 1}},
                     [alg, i, j, rp1, opt]() {
                         UEAElement w = w_generator(alg, i, j, rp1, opt.mutation);
                         UEAElement lead = w.good_component(rp1 - 1);
                         UEAElement expected = UEAElement::from_lie(
                             alg, centralizer_element(alg, i, j, rp1 - 1, opt.mutation));
                         CheckOutcome out;
                         out.pass = lead == expected &&
                                    (w.is_zero() || w.good_degree() <= rp1 - 1);
                         if (!out.pass)
                             out.witness = Json{{"degree_component", uea_to_json(lead)},
                                                {"centralizer_element", uea_to_json(expected)}};
                         return out;
                     }});
            }
    return tasks;
}

std::vector<CheckTask> pbw_tasks(const AlgebraPtr& alg, const CheckOptions& opt) {
    std::vector<CheckTask> tasks;
    const Config& cfg = alg->config();
    const int maxdeg = opt.pbw_max_degree > 0 ? opt.pbw_max_degree : (cfg.N() >= 8 ? 3 : 4);
    tasks.push_back(
        {"pbw", Json{{"item", "independence"}, {"max_degree", maxdeg}}, [alg, maxdeg]() {
             PbwIndependence res = pbw_independence_check(alg, maxdeg);
             CheckOutcome out;
             out.pass = res.independent;
             if (!out.pass)
                 out.witness =
                     Json{{"monomials", res.monomial_count}, {"rank", res.rank}};
             return out;
         }});
    for (int r = 1; r <= std::min(3, cfg.l); ++r)
        tasks.push_back(
            {"pbw", Json{{"item", "theta_star_symbolic"}, {"r", r}}, [alg, r]() {
                 const Config& c = alg->config();
                 SymbolTable table(c);
                 CheckOutcome out;
                 out.pass = true;
                 for (int i : index_set(c.n))
                     for (int j : index_set(c.n)) {
                         CommPoly lhs =
                             h_top_symbol(alg, table, kappa_generator(alg, i, j, r), r);
                         CommPoly rhs = theta_star(c, table, i, j, r);
                         if (!(lhs == rhs)) {
                             out.pass = false;
                             out.witness = Json{{"i", i},
                                                {"j", j},
                                                {"kappa_symbol_terms", lhs.terms().size()},
                                                {"theta_terms", rhs.terms().size()}};
                             return out;
                         }
                     }
                 return out;
             }});
    for (int r = 1; r <= std::min(4, cfg.l); ++r)
        tasks.push_back(
            {"pbw",
             Json{{"item", "theta_star_numeric"}, {"r", r}, {"samples", 20}, {"seed", opt.seed}},
             [alg, r, opt]() {
                 const Config& c = alg->config();
                 SymbolTable table(c);
                 std::mt19937_64 rng(opt.seed + static_cast<unsigned long>(r));
                 std::uniform_int_distribution<int> entry(-5, 5);
                 CheckOutcome out;
                 out.pass = true;
                 for (int sample = 0; sample < 20; ++sample) {
                     // Tuples (A_p) with (A_{-p})_{-j,-i} = -phi^{hat i + hat j} (A_p)_{i,j}.
                     std::vector<RatMatrix> mats(c.l, RatMatrix(c.n, c.n));
                     for (int p : index_set(c.l)) {
                         if (p < 0) continue;
                         for (int i : index_set(c.n))
                             for (int j : index_set(c.n)) {
                                 const Rational v(entry(rng));
                                 if (p > 0) {
                                     mats[index_pos(p, c.l)].at(index_pos(i, c.n),
                                                                index_pos(j, c.n)) = v;
                                 } else {
                                     // p = 0: impose the self constraint
                                     auto& m0 = mats[index_pos(0, c.l)];
                                     m0.at(index_pos(i, c.n), index_pos(j, c.n)) = v;
                                 }
                             }
                         if (p > 0) {
                             for (int i : index_set(c.n))
                                 for (int j : index_set(c.n)) {
                                     const Rational v = mats[index_pos(p, c.l)].at(
                                         index_pos(i, c.n), index_pos(j, c.n));
                                     mats[index_pos(-p, c.l)].at(index_pos(-j, c.n),
                                                                 index_pos(-i, c.n)) =
                                         Rational(-sign_pow(c.phi, (hat(i) + hat(j)) % 2)) * v;
                                 }
                         }
                     }
                     if (c.l % 2 == 1) {
                         // symmetrize A_0 in place
                         auto& m0 = mats[index_pos(0, c.l)];
                         RatMatrix fixed(c.n, c.n);
                         for (int i : index_set(c.n))
                             for (int j : index_set(c.n)) {
                                 const Rational v = m0.at(index_pos(i, c.n), index_pos(j, c.n));
                                 fixed.at(index_pos(i, c.n), index_pos(j, c.n)) += v;
                                 fixed.at(index_pos(-j, c.n), index_pos(-i, c.n)) -=
                                     Rational(sign_pow(c.phi, (hat(i) + hat(j)) % 2)) * v;
                             }
                         m0 = fixed;
                     }
                     // Elementary symmetric of the matrices, in index order.
                     std::vector<RatMatrix> elem(static_cast<std::size_t>(r) + 1,
                                                 RatMatrix(c.n, c.n));
                     elem[0] = RatMatrix::identity(c.n);
                     for (int p : index_set(c.l)) {
                         const RatMatrix& a = mats[index_pos(p, c.l)];
                         for (int d = std::min<int>(r, c.l); d >= 1; --d)
                             elem[d] += elem[d - 1] * a;
                     }
                     const auto values = table.values_from_matrices(mats);
                     for (int i : index_set(c.n))
                         for (int j : index_set(c.n)) {
                             const Rational direct =
                                 elem[r].at(index_pos(i, c.n), index_pos(j, c.n));
                             const Rational via_theta =
                                 theta_star(c, table, i, j, r).evaluate(values);
                             if (direct != via_theta) {
                                 out.pass = false;
                                 out.witness = Json{{"sample", sample},
                                                    {"i", i},
                                                    {"j", j},
                                                    {"matrix_entry", rational_to_json(direct)},
                                                    {"theta_value", rational_to_json(via_theta)}};
                                 return out;
                             }
                         }
                 }
                 return out;
             }});
    return tasks;
}

std::vector<CheckTask> lemma4_tasks(const AlgebraPtr& alg, const CheckOptions&) {
    std::vector<CheckTask> tasks;
    const Config& cfg = alg->config();
    for (RdetIdentity id :
         {RdetIdentity::RowReplacement, RdetIdentity::SubmatrixCommutator,
          RdetIdentity::FullCommutator, RdetIdentity::EvenBottomCommutator,
          RdetIdentity::OddZeroColumnCommutator})
        for (const RdetParams& pm : rdet_identity_params(id, cfg))
            tasks.push_back({"lemma4",
                             Json{{"identity", rdet_identity_name(id)},
                                  {"q", pm.q},
                                  {"p", pm.p},
                                  {"i", pm.i},
                                  {"j", pm.j},
                                  {"h", pm.h},
                                  {"k", pm.k},
                                  {"barred", pm.barred}},
                             [alg, id, pm]() {
                                 RdetOutcome res = check_rdet_identity(alg, id, pm);
                                 CheckOutcome out;
                                 out.pass = res.ok;
                                 if (!out.pass)
                                     out.witness = Json{{"difference", ueapoly_to_json(res.difference)}};
                                 return out;
                             }});
    return tasks;
}

std::vector<CheckTask> core_tasks(const AlgebraPtr& alg, const CheckOptions& opt) {
    std::vector<CheckTask> tasks;
    const unsigned long seed = opt.seed;

    tasks.push_back({"core", Json{{"item", "antisymmetry_sample"}, {"samples", 120}, {"seed", seed}},
                     [alg, seed]() {
                         std::mt19937_64 rng(seed);
                         std::uniform_int_distribution<std::size_t> pick(0, alg->dim() - 1);
                         CheckOutcome out;
                         out.pass = true;
                         for (int s = 0; s < 120; ++s) {
                             auto fx = alg->pair_of(static_cast<GenId>(pick(rng)));
                             auto fy = alg->pair_of(static_cast<GenId>(pick(rng)));
                             LieElement x = LieElement::basis(alg->config(), fx.first, fx.second);
                             LieElement y = LieElement::basis(alg->config(), fy.first, fy.second);
                             if (!(bracket(x, y) == -bracket(y, x))) {
                                 out.pass = false;
                                 out.witness = Json{{"x", lie_to_json(x)}, {"y", lie_to_json(y)}};
                                 return out;
                             }
                         }
                         return out;
                     }});
    tasks.push_back({"core", Json{{"item", "jacobi_sample"}, {"samples", 120}, {"seed", seed}},
                     [alg, seed]() {
                         std::mt19937_64 rng(seed + 1);
                         std::uniform_int_distribution<std::size_t> pick(0, alg->dim() - 1);
                         CheckOutcome out;
                         out.pass = true;
                         for (int s = 0; s < 120; ++s) {
                             LieElement x = LieElement::basis(
                                 alg->config(), alg->pair_of(static_cast<GenId>(pick(rng))).first,
                                 alg->pair_of(static_cast<GenId>(pick(rng))).second);
                             auto py = alg->pair_of(static_cast<GenId>(pick(rng)));
                             auto pz = alg->pair_of(static_cast<GenId>(pick(rng)));
                             LieElement y = LieElement::basis(alg->config(), py.first, py.second);
                             LieElement z = LieElement::basis(alg->config(), pz.first, pz.second);
                             LieElement jac = bracket(x, bracket(y, z)) +
                                              bracket(y, bracket(z, x)) +
                                              bracket(z, bracket(x, y));
                             if (!jac.is_zero()) {
                                 out.pass = false;
                                 out.witness = Json{{"jacobiator", lie_to_json(jac)}};
                                 return out;
                             }
                         }
                         return out;
                     }});
    tasks.push_back(
        {"core", Json{{"item", "associativity_sample"}, {"samples", 50}, {"seed", seed}},
         [alg, seed]() {
             std::mt19937_64 rng(seed + 2);
             std::uniform_int_distribution<std::size_t> pick(0, alg->dim() - 1);
             std::uniform_int_distribution<int> coeff(-3, 3);
             std::uniform_int_distribution<int> len(0, 2);
             auto random_element = [&]() {
                 UEAElement out = UEAElement::zero(alg);
                 for (int t = 0; t < 3; ++t) {
                     UEAElement mono = UEAElement::scalar(alg, Rational(coeff(rng)));
                     for (int s = len(rng); s > 0; --s)
                         mono = mono * UEAElement::generator(alg, static_cast<GenId>(pick(rng)));
                     out += mono;
                 }
                 return out;
             };
             CheckOutcome out;
             out.pass = true;
             for (int s = 0; s < 50; ++s) {
                 const UEAElement x = random_element();
                 const UEAElement y = random_element();
                 const UEAElement z = random_element();
                 if (!((x * y) * z == x * (y * z))) {
                     out.pass = false;
                     out.witness = Json{{"x", uea_to_json(x)},
                                        {"y", uea_to_json(y)},
                                        {"z", uea_to_json(z)}};
                     return out;
                 }
             }
             return out;
         }});
    tasks.push_back(
        {"core", Json{{"item", "structure_constants_vs_matrices"}}, [alg]() {
             CheckOutcome out;
             out.pass = true;
             const std::size_t d = alg->dim();
             for (GenId i = 0; i < d; ++i)
                 for (GenId j = 0; j < d; ++j) {
                     RatMatrix lhs = commutator(alg->matrix_of(i), alg->matrix_of(j));
                     RatMatrix rhs(alg->config().N(), alg->config().N());
                     for (const auto& [g, c] : alg->bracket_terms(i, j))
                         rhs += c * alg->matrix_of(g);
                     if (!(lhs == rhs)) {
                         out.pass = false;
                         const auto& [a, b] = alg->pair_of(i);
                         const auto& [cc, dd] = alg->pair_of(j);
                         out.witness = Json{{"pair", Json::array({a, b})},
                                            {"other", Json::array({cc, dd})}};
                         return out;
                     }
                 }
             return out;
         }});
    tasks.push_back({"core", Json{{"item", "jordan_type"}}, [alg]() {
                         const Config& c = alg->config();
                         std::vector<int> expected(c.n, c.l);
                         const auto actual = oracle_jordan_type(alg);
                         CheckOutcome out;
                         out.pass = actual == expected;
                         if (!out.pass) out.witness = Json{{"partition", actual}};
                         return out;
                     }});
    tasks.push_back(
        {"core", Json{{"item", "chi_character_on_brackets"}}, [alg]() {
             // chi([m, m]) = 0, exhaustively over m-basis pairs.
             CheckOutcome out;
             out.pass = true;
             for (GenId x = alg->first_m_id(); x < alg->dim(); ++x)
                 for (GenId y = alg->first_m_id(); y < alg->dim(); ++y) {
                     Rational value(0);
                     for (const auto& [g, c] : alg->bracket_terms(x, y)) value += c * alg->chi(g);
                     if (!is_zero(value)) {
                         out.pass = false;
                         const auto& [a, b] = alg->pair_of(x);
                         const auto& [cc, dd] = alg->pair_of(y);
                         out.witness = Json{{"x", Json::array({a, b})},
                                            {"y", Json::array({cc, dd})},
                                            {"chi", rational_to_json(value)}};
                         return out;
                     }
                 }
             return out;
         }});
    tasks.push_back({"core", Json{{"item", "dimension_vs_matrix_equation"}}, [alg]() {
                         const Config& c = alg->config();
                         const long dim = static_cast<long>(alg->dim());
                         CheckOutcome out;
                         out.pass = dim == lie_dimension_formula(c) &&
                                    dim == oracle_matrix_equation_dim(c);
                         if (!out.pass)
                             out.witness = Json{{"basis", dim},
                                                {"formula", lie_dimension_formula(c)},
                                                {"matrix_equation", oracle_matrix_equation_dim(c)}};
                         return out;
                     }});
    tasks.push_back(
        {"core", Json{{"item", "grading_decomposition"}}, [alg]() {
             const Config& c = alg->config();
             // dim m + dim h + dim(positive) = dim g, dim p = dim h + positive,
             // h count per the direct-sum description, e concentrated in degree 2.
             const long m_count = static_cast<long>(alg->m_count());
             const long h_count = static_cast<long>(alg->h_count());
             const long p_count = static_cast<long>(alg->p_count());
             const long dim = static_cast<long>(alg->dim());
             long h_expected = (c.l / 2) * c.n * c.n;
             if (c.l % 2 == 1)
                 h_expected += c.epsilon == 1 ? c.n * (c.n - 1) / 2 : c.n * (c.n + 1) / 2;
             bool e_in_degree2 = true;
             for (const auto& [pair, coeff] : alg->e().terms())
                 if (alg->pyramid().degree(pair.first, pair.second) != 2) e_in_degree2 = false;
             CheckOutcome out;
             out.pass = (m_count + p_count == dim) && (h_count <= p_count) &&
                        (h_count == h_expected) && e_in_degree2 &&
                        (m_count == dim - p_count);
             if (!out.pass)
                 out.witness = Json{{"dim", dim},
                                    {"m", m_count},
                                    {"h", h_count},
                                    {"p", p_count},
                                    {"h_expected", h_expected},
                                    {"e_in_degree2", e_in_degree2}};
             return out;
         }});
    return tasks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"invariance", "images",      "kernel",
                                                "symmetry",   "pbw",         "centralizer",
                                                "lemma4",     "core"};
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckTask> make_suite_tasks(const std::string& suite, const Config& cfg,
                                        const CheckOptions& opt) {
    AlgebraPtr alg = Algebra::make(cfg);
    if (suite == "invariance") return invariance_tasks(alg, opt);
    if (suite == "images") return images_tasks(alg, opt);
    if (suite == "kernel") return kernel_tasks(alg, opt);
    if (suite == "symmetry") return symmetry_tasks(alg, opt);
    if (suite == "pbw") return pbw_tasks(alg, opt);
    if (suite == "centralizer") return centralizer_tasks(alg, opt);
    if (suite == "lemma4") return lemma4_tasks(alg, opt);
    if (suite == "core") return core_tasks(alg, opt);
    throw std::invalid_argument("make_suite_tasks: unknown suite '" + suite + "'");
}

std::vector<Config> default_grid() {
    return {make_config(1, 2, -1), make_config(2, 2, 1),  make_config(2, 2, -1),
            make_config(3, 2, -1), make_config(1, 3, 1),  make_config(2, 3, 1),
            make_config(2, 3, -1), make_config(2, 4, 1),  make_config(2, 4, -1),
            make_config(1, 4, -1)};
}

}  // namespace walg
