#pragma once

// Closed-form dynamics of two degenerate qubits coupled to one oscillator
// without the rotating wave approximation.
//
// Conventions: hbar = 1; the oscillator initial state enters through its
// Glauber-Sudarshan P function, alpha = x + i y, with Fourier transform
//   Pt(k1, k2) = int dx dy P(x, y) exp(-i (k1 x + k2 y)).
// Every coherence of the reduced qubit state is Pt evaluated at
//   k = 4 (beta_m - beta_m') (sin wt, 1 - cos wt)
// times a Gaussian damping and a pure phase. For the Psi+ coherence
// beta_m - beta_m' = 2 beta.

#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>
#include <variant>

#include "tcdeg/bounds.hpp"
#include "tcdeg/errors.hpp"
#include "tcdeg/laguerre.hpp"
#include "tcdeg/log.hpp"
#include "tcdeg/model.hpp"
#include "tcdeg/oscillator.hpp"
#include "tcdeg/qubit.hpp"

namespace tcdeg::analytic {

using namespace std::complex_literals;

// f(wt, alpha) = sin(wt/2) (alpha* e^{i wt/2} + alpha e^{-i wt/2}); the bracket is
// 2 Re(alpha e^{-i wt/2}), so f is real.
inline double f_phase(double omega_t, cplx alpha) {
    return 2.0 * std::sin(omega_t / 2.0) * std::real(alpha * std::exp(-0.5i * omega_t));
}

struct JM {
    int j = 1;
    int m = 0;
};

inline void validate(JM jm) {
    const bool ok = (jm.j == 1 && (jm.m == 1 || jm.m == 0 || jm.m == -1)) ||
                    (jm.j == 0 && jm.m == 0);
    if (!ok) {
        throw ConfigError("invalid (j, m) = (" + std::to_string(jm.j) + ", " +
                          std::to_string(jm.m) + ")");
    }
}

// exp(-i H t)|j,m>|alpha> = |j,m>|alpha_t> * phase.
struct EvolvedCoherentBranch {
    JM jm;
    cplx alpha_t;
    cplx phase;
};

inline EvolvedCoherentBranch evolve_product_state(JM jm, cplx alpha, double t,
                                                  const ModelParams& params) {
    validate(jm);
    const double wt = params.omega() * t;
    const double b = params.beta_m(jm.m);
    const cplx alpha_t = (alpha + 2.0 * b) * std::exp(-1.0i * wt) - 2.0 * b;
    const double angle = -2.0 * b * f_phase(wt, alpha) + 4.0 * b * b * (wt - std::sin(wt));
    return {jm, alpha_t, std::polar(1.0, angle)};
}

struct PTransformQuery {
    double k1 = 0.0;
    double k2 = 0.0;
};

// Fourier arguments for a coherence with beta_m - beta_m' = delta_beta.
inline PTransformQuery fourier_arguments(double delta_beta, double omega_t) {
    return {4.0 * delta_beta * std::sin(omega_t), 4.0 * delta_beta * (1.0 - std::cos(omega_t))};
}

// Arguments of the Psi+ coherence: 8 beta sin wt, 8 beta (1 - cos wt).
inline PTransformQuery fourier_arguments(double t, const ModelParams& params) {
    return fourier_arguments(2.0 * params.beta(), params.omega() * t);
}

// Fourier transform of the P function of each closed-form state.
//   thermal:  exp(-<n> (k1^2 + k2^2) / 4)
//   coherent: exp(-i (k1 x0 + k2 y0))
//   Fock N:   L_N((k1^2 + k2^2) / 4)
inline cplx p_tilde(const OscillatorSpec& spec, double k1, double k2) {
    const double k_sq = k1 * k1 + k2 * k2;
    if (const auto* th = std::get_if<ThermalState>(&spec)) {
        if (th->mean_n < 0.0) throw ConfigError("mean_n must be non-negative");
        return std::exp(-th->mean_n * k_sq / 4.0);
    }
    if (const auto* co = std::get_if<CoherentState>(&spec)) {
        return std::polar(1.0, -(k1 * co->alpha0.real() + k2 * co->alpha0.imag()));
    }
    if (const auto* fo = std::get_if<FockState>(&spec)) {
        if (fo->n < 0) throw ConfigError("Fock index must be non-negative");
        return laguerre(fo->n, k_sq / 4.0);
    }
    throw ConfigError("no closed form for an explicit oscillator density; use the Fock oracle");
}

inline double coherence_damping(double t, const ModelParams& params) {
    const double s = std::sin(params.omega() * t / 2.0);
    return std::exp(-32.0 * params.beta() * params.beta() * s * s);
}

// I(t): the Psi+ coherence, rho_JM(|1,1>, |1,-1>) = -I(t)/2.
inline cplx psi_plus_coherence(const OscillatorSpec& spec, double t, const ModelParams& params) {
    const auto k = fourier_arguments(t, params);
    return p_tilde(spec, k.k1, k.k2) * coherence_damping(t, params);
}

// Reduced qubit density for an arbitrary initial qubit state q and a closed-form
// oscillator state. Result in the JM basis.
inline QubitDensity reduced_qubit_density(const QubitDensity& q, const OscillatorSpec& spec,
                                          double t, const ModelParams& params) {
    warn_if_nondegenerate(params, "analytic");
    const Mat4 q_jm = change_basis(q, Basis::JM).entries;
    const double wt = params.omega() * t;
    const double s = std::sin(wt / 2.0);
    const double secular = wt - std::sin(wt);
    Mat4 out;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double bm = params.beta_m(kJmM[a]);
            const double bn = params.beta_m(kJmM[b]);
            const double delta = bm - bn;
            cplx factor = 1.0;
            if (delta != 0.0) {
                const auto k = fourier_arguments(delta, wt);
                factor = p_tilde(spec, k.k1, k.k2) * std::exp(-8.0 * delta * delta * s * s) *
                         std::polar(1.0, 4.0 * (bm * bm - bn * bn) * secular);
            }
            out(a, b) = q_jm(a, b) * factor;
        }
    }
    return {out, Basis::JM};
}

// EG-basis reduced density for the Psi+ initial state:
//   (1/4) [[1-u, iv, iv, 1-u], [-iv, 1+u, 1+u, -iv], [-iv, 1+u, 1+u, -iv], [1-u, iv, iv, 1-u]]
// with u + i v = I(t).
inline QubitDensity reduced_qubit_density_psi_plus(const OscillatorSpec& spec, double t,
                                                   const ModelParams& params) {
    warn_if_nondegenerate(params, "analytic");
    const cplx i_t = psi_plus_coherence(spec, t, params);
    const double u = i_t.real();
    const double v = i_t.imag();
    const cplx a = 1.0 - u;
    const cplx b = 1.0 + u;
    const cplx c = 1.0i * v;
    Mat4 m;
    m << a, c, c, a,
        -c, b, b, -c,
        -c, b, b, -c,
         a, c, c, a;
    return {m / 4.0, Basis::EG};
}

// C(t) = |Pt(8 beta sin wt, 8 beta (1 - cos wt))| exp(-32 beta^2 sin^2(wt/2)).
template <class PTilde>
    requires std::invocable<PTilde&, double, double>
double concurrence_general(PTilde&& p_tilde_fn, double t, const ModelParams& params) {
    const auto k = fourier_arguments(t, params);
    const cplx value = cplx(p_tilde_fn(k.k1, k.k2));
    if (std::isnan(value.real()) || std::isnan(value.imag()))
        throw NumericalError("P-function transform returned NaN");
    return clamp_concurrence(std::abs(value) * coherence_damping(t, params));
}

inline double concurrence_thermal(double mean_n, double t, const ModelParams& params) {
    if (!(mean_n >= 0.0)) throw ConfigError("mean_n must be non-negative");
    const double s = std::sin(params.omega() * t / 2.0);
    const double beta = params.beta();
    return clamp_concurrence(std::exp(-32.0 * beta * beta * s * s * (1.0 + 2.0 * mean_n)));
}

// Independent of alpha0; the argument is accepted for interface symmetry.
inline double concurrence_coherent(cplx /*alpha0*/, double t, const ModelParams& params) {
    return clamp_concurrence(coherence_damping(t, params));
}

inline double concurrence_number(int n_index, double t, const ModelParams& params) {
    if (n_index < 0) throw ConfigError("Fock index must be non-negative");
    const double s = std::sin(params.omega() * t / 2.0);
    const double y = std::pow(8.0 * params.beta() * s, 2);
    return clamp_concurrence(std::abs(laguerre(n_index, y)) * std::exp(-y / 2.0));
}

// Binomial-sum form of I_N(t):
//   sum_m C(N, m) / (N - m)! (8 i beta sin(wt/2))^{2(N - m)} exp(-32 beta^2 sin^2(wt/2)).
// Kept as an independent route to the Laguerre form. The alternating sum
// cancels heavily near zeros of L_N, so it is accumulated in long double.
inline cplx i_number_bruteforce(int n_index, double t, const ModelParams& params) {
    if (n_index < 0) throw ConfigError("Fock index must be non-negative");
    if (n_index > 170) throw NumericalError("binomial sum overflows for N > 170");
    using ld = long double;
    const ld s = std::sin(static_cast<ld>(params.omega()) * t / 2.0L);
    const std::complex<ld> z(0.0L, 8.0L * params.beta() * s);
    const std::complex<ld> z2 = z * z;
    std::complex<ld> sum = 0.0L;
    for (int m = 0; m <= n_index; ++m) {
        const int j = n_index - m;
        ld binom = 1.0L;
        for (int k = 1; k <= m; ++k) binom = binom * (n_index - m + k) / k;
        ld fact = 1.0L;
        for (int k = 2; k <= j; ++k) fact *= k;
        std::complex<ld> power = 1.0L;
        for (int p = 0; p < j; ++p) power *= z2;
        const std::complex<ld> term = binom / fact * power;
        if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
            throw NumericalError("binomial sum term overflowed at N = " + std::to_string(n_index));
        sum += term;
    }
    return cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag())) * coherence_damping(t, params);
}

// Closed-form concurrence for Psi+ (equivalently Phi+).
inline double concurrence(const OscillatorSpec& spec, double t, const ModelParams& params) {
    warn_if_nondegenerate(params, "analytic");
    if (const auto* th = std::get_if<ThermalState>(&spec)) return concurrence_thermal(th->mean_n, t, params);
    if (const auto* co = std::get_if<CoherentState>(&spec)) return concurrence_coherent(co->alpha0, t, params);
    if (const auto* fo = std::get_if<FockState>(&spec)) return concurrence_number(fo->n, t, params);
    throw ConfigError("no closed form for an explicit oscillator density; use the Fock oracle");
}

// Concurrence at wt = pi as a function of beta alone.
inline double half_period_concurrence(const OscillatorSpec& spec, double beta) {
    const ModelParams params(1.0, beta, 0.0);
    return concurrence(spec, std::numbers::pi, params);
}

}  // namespace tcdeg::analytic
