#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "tcdeg/errors.hpp"
#include "tcdeg/qubit.hpp"

namespace tcdeg {

// Initial oscillator states.
struct ThermalState {
    double mean_n = 0.0;
};

struct CoherentState {
    cplx alpha0{0.0, 0.0};
};

struct FockState {
    int n = 0;
};

// Truncated density matrix in the Fock basis |0>..|dim-1>.
struct ExplicitState {
    Eigen::MatrixXcd rho;
    int dim() const { return static_cast<int>(rho.rows()); }
};

using OscillatorSpec = std::variant<ThermalState, CoherentState, FockState, ExplicitState>;

inline std::string describe(const OscillatorSpec& spec) {
    struct {
        std::string operator()(const ThermalState& s) const {
            return "thermal(mean_n=" + std::to_string(s.mean_n) + ")";
        }
        std::string operator()(const CoherentState& s) const {
            return "coherent(alpha0=" + std::to_string(s.alpha0.real()) + "+" +
                   std::to_string(s.alpha0.imag()) + "i)";
        }
        std::string operator()(const FockState& s) const {
            return "fock(n=" + std::to_string(s.n) + ")";
        }
        std::string operator()(const ExplicitState& s) const {
            return "explicit(dim=" + std::to_string(s.dim()) + ")";
        }
    } visitor;
    return std::visit(visitor, spec);
}

inline void validate(const OscillatorSpec& spec) {
    if (const auto* th = std::get_if<ThermalState>(&spec)) {
        if (!std::isfinite(th->mean_n) || th->mean_n < 0.0)
            throw ConfigError("thermal mean_n must be finite and non-negative");
    } else if (const auto* co = std::get_if<CoherentState>(&spec)) {
        if (!std::isfinite(co->alpha0.real()) || !std::isfinite(co->alpha0.imag()))
            throw ConfigError("coherent alpha0 must be finite");
    } else if (const auto* fo = std::get_if<FockState>(&spec)) {
        if (fo->n < 0) throw ConfigError("Fock index must be non-negative");
    } else if (const auto* ex = std::get_if<ExplicitState>(&spec)) {
        if (ex->rho.rows() != ex->rho.cols() || ex->rho.rows() < 1)
            throw ConfigError("explicit oscillator density must be square and non-empty");
        const auto c = check_density_matrix(ex->rho);
        if (!c.ok(1e-10, 1e-10, 1e-10))
            throw ConfigError("explicit oscillator density is not a valid density matrix");
    }
}

}  // namespace tcdeg
