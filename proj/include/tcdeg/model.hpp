#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "tcdeg/errors.hpp"
#include "tcdeg/log.hpp"

namespace tcdeg {

// Units: hbar = 1 for all quantum engines. omega, lambda and omega0 share one
// frequency unit; times are in its inverse.
class ModelParams {
public:
    ModelParams(double omega, double lambda, double omega0 = 0.0)
        : omega_(omega), lambda_(lambda), omega0_(omega0) {
        if (!std::isfinite(omega) || !std::isfinite(lambda) || !std::isfinite(omega0))
            throw ConfigError("model parameters must be finite");
        if (omega <= 0.0) throw ConfigError("omega must be positive");
        if (lambda < 0.0) throw ConfigError("lambda must be non-negative");
        if (omega0 < 0.0) throw ConfigError("omega0 must be non-negative");
        beta_ = lambda_ / omega_;
    }

    double omega() const { return omega_; }
    double lambda() const { return lambda_; }
    double omega0() const { return omega0_; }

    // Dimensionless coupling lambda/omega.
    double beta() const { return beta_; }

    // m * lambda / omega for the collective sigma_x eigenvalue 2m, m in {-1, 0, 1}.
    double beta_m(int m) const {
        if (m < -1 || m > 1) throw ConfigError("m must be -1, 0 or +1");
        return m * beta_;
    }

    bool degenerate() const { return omega0_ == 0.0; }

    friend bool operator==(const ModelParams&, const ModelParams&) = default;

private:
    double omega_;
    double lambda_;
    double omega0_;
    double beta_;
};

inline ModelParams make_params(double omega, double lambda, double omega0 = 0.0) {
    return ModelParams(omega, lambda, omega0);
}

// Degenerate-only engines call this before ignoring omega0.
inline void warn_if_nondegenerate(const ModelParams& params, std::string_view engine) {
    if (!params.degenerate()) {
        log::warn(std::string(engine) + ": omega0 = " + std::to_string(params.omega0()) +
                  " ignored, engine assumes the degenerate regime omega0 = 0");
    }
}

}  // namespace tcdeg
