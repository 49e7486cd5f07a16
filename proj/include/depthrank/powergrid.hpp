#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

// Result grids for power curves and table reproductions. Serialized as CSV
// with the fixed header (param, method, power, mc_se); analytic cells leave
// mc_se empty, Monte Carlo cells carry their binomial standard error.

namespace depthrank {

struct PowerCell {
    double param = 0.0;
    std::string method;
    double power = 0.0;
    double mc_se = std::numeric_limits<double>::quiet_NaN(); // NaN = analytic
    bool monte_carlo = false;
};

struct PowerGrid {
    std::string target;
    std::vector<PowerCell> cells;

    std::string to_csv() const {
        std::string out = "param,method,power,mc_se\n";
        char buf[64];
        auto num = [&buf](double v) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            return std::string(buf);
        };
        for (const auto& c : cells) {
            out += num(c.param);
            out += ',';
            out += c.method;
            out += ',';
            out += num(c.power);
            out += ',';
            if (c.monte_carlo && std::isfinite(c.mc_se)) out += num(c.mc_se);
            out += '\n';
        }
        return out;
    }
};

} // namespace depthrank
