#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "depthrank/errors.hpp"
#include "depthrank/linalg.hpp"
#include "depthrank/rng.hpp"

// Gaussian mixture specifications and seeded sampling. These are the
// distribution families the power study works with: a standard normal null
// and location/scale/contaminated alternatives shrinking to it.

namespace depthrank {

struct GaussianComponent {
    double weight = 1.0;
    Vector mean;
    Matrix cov;
};

class GaussianMixture {
public:
    GaussianMixture(std::size_t dim, std::vector<GaussianComponent> components)
        : dim_(dim), components_(std::move(components)) {
        if (dim_ == 0) throw data_error("GaussianMixture: dimension must be >= 1");
        if (components_.empty())
            throw data_error("GaussianMixture: need at least one component");
        double wsum = 0.0;
        for (const auto& c : components_) {
            if (!(c.weight > 0.0 && c.weight <= 1.0))
                throw data_error("GaussianMixture: component weights must lie in (0,1]");
            if (c.mean.size() != dim_ || c.cov.rows() != dim_ || c.cov.cols() != dim_)
                throw data_error("GaussianMixture: component dimension mismatch");
            try {
                cholesky(c.cov); // must admit a factor
            } catch (const numeric_error& e) {
                throw data_error(std::string("GaussianMixture: component covariance "
                                             "is not positive definite: ") +
                                 e.what());
            }
            wsum += c.weight;
        }
        if (std::fabs(wsum - 1.0) > 1e-12)
            throw data_error("GaussianMixture: weights sum to " + std::to_string(wsum) +
                             ", expected 1");
    }

    static GaussianMixture single(Vector mean, Matrix cov) {
        std::size_t d = mean.size();
        return GaussianMixture(d, {GaussianComponent{1.0, std::move(mean), std::move(cov)}});
    }

    // N_d(0, I)
    static GaussianMixture standard(std::size_t d) {
        return single(Vector(d, 0.0), Matrix::identity(d));
    }

    std::size_t dim() const { return dim_; }
    const std::vector<GaussianComponent>& components() const { return components_; }

private:
    std::size_t dim_;
    std::vector<GaussianComponent> components_;
};

// Draws n observations. Component choice and the normal vector for each row
// come sequentially from the provided stream, so the output is a pure
// function of (mix, n, rng state).
inline Sample sample(const GaussianMixture& mix, std::size_t n, RngStream& rng) {
    if (n < 1) throw data_error("sample: n must be >= 1");
    const std::size_t d = mix.dim();
    const auto& comps = mix.components();

    std::vector<Matrix> chol;
    chol.reserve(comps.size());
    for (const auto& c : comps) chol.push_back(cholesky(c.cov));

    Sample out(n, d);
    Vector z(d);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = 0;
        if (comps.size() > 1) {
            double u = rng.next_double();
            double acc = 0.0;
            for (; k + 1 < comps.size(); ++k) {
                acc += comps[k].weight;
                if (u < acc) break;
            }
        }
        for (std::size_t j = 0; j < d; ++j) z[j] = rng.next_normal();
        const Matrix& l = chol[k];
        const Vector& mu = comps[k].mean;
        for (std::size_t r = 0; r < d; ++r) {
            double s = mu[r];
            for (std::size_t c = 0; c <= r; ++c) s += l(r, c) * z[c];
            out(i, r) = s;
        }
    }
    return out;
}

// The bivariate alternative families of the power study, each indexed by a
// single parameter and collapsing to N2(0, I) at its null value.
enum class AlternativeFamily {
    contaminated_location, // param u:      0.9 N((u,u)', I) + 0.1 N(0, (1+160u) I)
    contaminated_scale,    // param s2:     0.9 N(0, s2 I) + 0.1 N((u,u)', I), u = s-1
    location_scale,        // param u:      N((u,u)', (1+u)^2 I)
    pure_location,         // param u:      N((u,u)', I)
    pure_scale,            // param s2:     N(0, s2 I)
};

inline const char* family_name(AlternativeFamily f) {
    switch (f) {
        case AlternativeFamily::contaminated_location: return "contaminated-location";
        case AlternativeFamily::contaminated_scale: return "contaminated-scale";
        case AlternativeFamily::location_scale: return "location-scale";
        case AlternativeFamily::pure_location: return "pure-location";
        case AlternativeFamily::pure_scale: return "pure-scale";
    }
    return "?";
}

inline AlternativeFamily family_from_name(const std::string& name) {
    if (name == "contaminated-location") return AlternativeFamily::contaminated_location;
    if (name == "contaminated-scale") return AlternativeFamily::contaminated_scale;
    if (name == "location-scale") return AlternativeFamily::location_scale;
    if (name == "pure-location") return AlternativeFamily::pure_location;
    if (name == "pure-scale") return AlternativeFamily::pure_scale;
    throw std::domain_error("unknown alternative family: " + name);
}

inline GaussianMixture alternative_family(AlternativeFamily kind, double param) {
    const Matrix i2 = Matrix::identity(2);
    auto iso = [](double v) {
        Matrix m = Matrix::identity(2);
        m(0, 0) = m(1, 1) = v;
        return m;
    };
    switch (kind) {
        case AlternativeFamily::contaminated_location: {
            double u = param;
            if (u < 0.0) throw std::domain_error("contaminated-location: u must be >= 0");
            // Contaminant variance 1 + 10 u sigma^2 with sigma = 4 fixed.
            double var = 1.0 + 160.0 * u;
            return GaussianMixture(2, {GaussianComponent{0.9, Vector{u, u}, i2},
                                       GaussianComponent{0.1, Vector{0.0, 0.0}, iso(var)}});
        }
        case AlternativeFamily::contaminated_scale: {
            double s2 = param;
            if (s2 < 1.0) throw std::domain_error("contaminated-scale: sigma^2 must be >= 1");
            double u = std::sqrt(s2) - 1.0;
            return GaussianMixture(2, {GaussianComponent{0.9, Vector{0.0, 0.0}, iso(s2)},
                                       GaussianComponent{0.1, Vector{u, u}, i2}});
        }
        case AlternativeFamily::location_scale: {
            double u = param;
            if (u < 0.0) throw std::domain_error("location-scale: u must be >= 0");
            double s = 1.0 + u;
            return GaussianMixture::single(Vector{u, u}, iso(s * s));
        }
        case AlternativeFamily::pure_location:
            return GaussianMixture::single(Vector{param, param}, i2);
        case AlternativeFamily::pure_scale: {
            if (param <= 0.0) throw std::domain_error("pure-scale: sigma^2 must be > 0");
            return GaussianMixture::single(Vector{0.0, 0.0}, iso(param));
        }
    }
    throw std::domain_error("unknown alternative family");
}

} // namespace depthrank
