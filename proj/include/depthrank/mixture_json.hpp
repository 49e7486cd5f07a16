#pragma once

#include <json.hpp>

#include "depthrank/model.hpp"

// JSON wire format for mixture specs:
//   {"dim": d, "components": [{"weight": w, "mean": [...], "cov": [...]}]}
// with cov flattened row-major.

namespace depthrank {

inline nlohmann::json mixture_to_json(const GaussianMixture& mix) {
    nlohmann::json j;
    j["dim"] = mix.dim();
    j["components"] = nlohmann::json::array();
    for (const auto& c : mix.components()) {
        nlohmann::json jc;
        jc["weight"] = c.weight;
        jc["mean"] = c.mean;
        jc["cov"] = c.cov.data();
        j["components"].push_back(std::move(jc));
    }
    return j;
}

inline GaussianMixture mixture_from_json(const nlohmann::json& j) {
    if (!j.contains("dim") || !j.contains("components"))
        throw data_error("mixture json: missing 'dim' or 'components'");
    std::size_t d = j.at("dim").get<std::size_t>();
    std::vector<GaussianComponent> comps;
    for (const auto& jc : j.at("components")) {
        GaussianComponent c;
        c.weight = jc.at("weight").get<double>();
        c.mean = jc.at("mean").get<Vector>();
        auto flat = jc.at("cov").get<std::vector<double>>();
        if (flat.size() != d * d)
            throw data_error("mixture json: cov must have dim*dim entries");
        c.cov = Matrix(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t k = 0; k < d; ++k) c.cov(r, k) = flat[r * d + k];
        comps.push_back(std::move(c));
    }
    return GaussianMixture(d, std::move(comps));
}

} // namespace depthrank
