#include "walg/serialize.hpp"

namespace walg {

Json rational_to_json(const Rational& r) {
    return Json::array({num_string(r), den_string(r)});
}

Json config_to_json(const Config& cfg) {
    return Json{{"n", cfg.n},
                {"l", cfg.l},
                {"epsilon", sign_string(cfg.epsilon)},
                {"phi", sign_string(cfg.phi)}};
}

Json pyramid_to_json(const Pyramid& pyr) {
    const Config& cfg = pyr.config();
    Json boxes = Json::array();
    for (int r : index_set(cfg.n))
        for (int c : index_set(cfg.l)) boxes.push_back(Json::array({r, c, pyr.label_at(r, c)}));
    Json out = config_to_json(cfg);
    out["boxes"] = boxes;
    return out;
}

Json uea_to_json(const UEAElement& x) {
    Json out = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json mono = Json::array();
        for (GenId id : m) {
            const auto& [a, b] = x.algebra()->pair_of(id);
            mono.push_back(Json::array({a, b}));
        }
        out.push_back(Json{{"monomial", mono}, {"coeff", rational_to_json(c)}});
    }
    return out;
}

Json lie_to_json(const LieElement& x) {
    Json out = Json::array();
    for (const auto& [pair, c] : x.terms())
        out.push_back(Json{{"monomial", Json::array({Json::array({pair.first, pair.second})})},
                           {"coeff", rational_to_json(c)}});
    return out;
}

Json ueapoly_to_json(const UEAPoly& x) {
    Json out = Json::array();
    for (const auto& [power, c] : x.coefficients())
        out.push_back(Json{{"power", power}, {"coeff", uea_to_json(c)}});
    return out;
}

Json generator_row_to_json(const Config& cfg, int i, int j, int r, const UEAElement& element) {
    return Json{{"config", config_to_json(cfg)},
                {"i", i},
                {"j", j},
                {"r", r},
                {"element", uea_to_json(element)}};
}

}  // namespace walg
