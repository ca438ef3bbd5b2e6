#pragma once

// Neoclassical comparison: the oscillator is a classical (q, p) pair with unit
// mass, H_osc = (p^2 + omega^2 q^2) / 2, coupled to the qubits through their
// expectation values. Quantum correspondence p = sqrt(hbar omega / 2)(a + a^dag).
//
// The qubit-side formulas keep explicit hbar factors; hbar defaults to 1 to
// agree with the quantum engines.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <numbers>
#include <random>
#include <thread>
#include <variant>
#include <vector>

#include "tcdeg/bounds.hpp"
#include "tcdeg/errors.hpp"
#include "tcdeg/model.hpp"

namespace tcdeg::neoclassical {

using cplx = std::complex<double>;

inline constexpr double kHbar = 1.0;

struct Delta {
    double q0 = 0.0;
    double p0 = 0.0;
};

// P(q0, p0) = exp(-(q0 - q_bar)^2 / dq^2 - (p0 - p_bar)^2 / dp^2) / (pi dq dp).
// Note the width convention: the variance of q0 is dq^2 / 2.
struct Gaussian {
    double q_bar = 0.0;
    double p_bar = 0.0;
    double dq = 1.0;
    double dp = 1.0;
};

using PhaseSpaceDist = std::variant<Delta, Gaussian>;

inline void validate(const Gaussian& g) {
    if (!(g.dq > 0.0) || !(g.dp > 0.0) || !std::isfinite(g.dq) || !std::isfinite(g.dp))
        throw ConfigError("Gaussian phase-space widths must be positive and finite");
    if (!std::isfinite(g.q_bar) || !std::isfinite(g.p_bar))
        throw ConfigError("Gaussian phase-space means must be finite");
}

struct ClassicalThermalSpec {
    double kT = 1.0;
};

// dq = sqrt(2 kT / omega^2), dp = sqrt(2 kT).
inline Gaussian thermal_widths(ClassicalThermalSpec spec, const ModelParams& params) {
    if (!(spec.kT > 0.0) || !std::isfinite(spec.kT)) throw ConfigError("kT must be positive");
    return {0.0, 0.0, std::sqrt(2.0 * spec.kT) / params.omega(), std::sqrt(2.0 * spec.kT)};
}

// Coherent-state Wigner function: dq = sqrt(hbar / omega), dp = sqrt(hbar omega).
inline Gaussian minimum_uncertainty(double q_bar, double p_bar, const ModelParams& params,
                                    double hbar = kHbar) {
    return {q_bar, p_bar, std::sqrt(hbar / params.omega()), std::sqrt(hbar * params.omega())};
}

// Phase-space centre of the coherent state |alpha0>:
// p = sqrt(2 hbar omega) Re alpha0, q = -sqrt(2 hbar / omega) Im alpha0.
inline Gaussian coherent_wigner(cplx alpha0, const ModelParams& params, double hbar = kHbar) {
    return minimum_uncertainty(-std::sqrt(2.0 * hbar / params.omega()) * alpha0.imag(),
                               std::sqrt(2.0 * hbar * params.omega()) * alpha0.real(), params, hbar);
}

struct PhasePoint {
    double q = 0.0;
    double p = 0.0;
};

// Free oscillator motion. The back-reaction drive is proportional to
// <sigma_x1 + sigma_x2>, which vanishes for every state handled here; a nonzero
// value is rejected rather than simulated.
inline PhasePoint classical_trajectory(double q0, double p0, double t, const ModelParams& params,
                                       double sigma_x_sum = 0.0) {
    if (sigma_x_sum != 0.0)
        throw ConfigError("driven oscillator (<sigma_x1 + sigma_x2> != 0) is not supported");
    const double w = params.omega();
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    return {q0 * c + p0 / w * s, p0 * c - w * q0 * s};
}

// <S+^(1)(t) S+^(2)(t)> for qubits starting in Psi+ (initial value -1/2).
inline cplx s_plus_correlator(double q0, double p0, double t, const ModelParams& params,
                              double hbar = kHbar) {
    const double w = params.omega();
    const double beta = params.beta();
    const double half = std::sin(w * t / 2.0);
    const double phase = 8.0 * beta * std::sqrt(2.0 * w / hbar) * q0 * half * half -
                         4.0 * beta * std::sqrt(2.0 / (hbar * w)) * p0 * std::sin(w * t);
    return -0.5 * std::polar(1.0, phase);
}

// 2 |<S+ S+>| averaged over the Gaussian, modulus taken after the average.
inline double classical_concurrence_gaussian(const PhaseSpaceDist& dist, double t,
                                             const ModelParams& params, double hbar = kHbar) {
    const auto* g = std::get_if<Gaussian>(&dist);
    if (g == nullptr) throw ConfigError("closed-form Gaussian average needs a Gaussian distribution");
    validate(*g);
    const double w = params.omega();
    const double beta = params.beta();
    const double half = std::sin(w * t / 2.0);
    const double full = std::sin(w * t);
    const double exponent = 32.0 * beta * beta * std::pow(half, 4) * w * g->dq * g->dq / hbar +
                            8.0 * beta * beta * full * full * g->dp * g->dp / (hbar * w);
    return clamp_concurrence(std::exp(-exponent));
}

inline double classical_concurrence_thermal(double kT, double t, const ModelParams& params,
                                            double hbar = kHbar) {
    if (!(kT > 0.0) || !std::isfinite(kT)) throw ConfigError("kT must be positive");
    const double beta = params.beta();
    const double half = std::sin(params.omega() * t / 2.0);
    return clamp_concurrence(
        std::exp(-64.0 * beta * beta * half * half * kT / (hbar * params.omega())));
}

// Point distributions keep the qubits maximally entangled: the correlator only
// acquires a phase.
inline double classical_concurrence(const PhaseSpaceDist& dist, double t, const ModelParams& params,
                                    double hbar = kHbar) {
    if (std::holds_alternative<Delta>(dist)) return 1.0;
    return classical_concurrence_gaussian(dist, t, params, hbar);
}

struct MonteCarloResult {
    double estimate = 0.0;
    double std_error = 0.0;  // jackknife
    // Expected |mean| of n uncorrelated unit phases, sqrt(pi / (4 n)): estimates
    // at or below this level are indistinguishable from zero.
    double noise_floor = 0.0;
    std::size_t samples = 0;
};

inline constexpr std::size_t kMinMonteCarloSamples = 1000;
inline constexpr std::size_t kMonteCarloChunks = 64;

namespace detail {

// Samples of the correlator for one chunk. Each chunk owns a generator seeded
// from (seed, chunk), so results do not depend on how chunks map to threads.
inline std::vector<cplx> sample_chunk(const Gaussian& g, double t, const ModelParams& params,
                                      double hbar, std::uint64_t seed, std::size_t chunk,
                                      std::size_t count) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), 0x7463u};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> q_dist(g.q_bar, g.dq / std::numbers::sqrt2);
    std::normal_distribution<double> p_dist(g.p_bar, g.dp / std::numbers::sqrt2);
    std::vector<cplx> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double q0 = q_dist(rng);
        const double p0 = p_dist(rng);
        out.push_back(s_plus_correlator(q0, p0, t, params, hbar));
    }
    return out;
}

}  // namespace detail

inline MonteCarloResult monte_carlo_classical_concurrence(const PhaseSpaceDist& dist, double t,
                                                          const ModelParams& params,
                                                          std::size_t n_samples, std::uint64_t seed,
                                                          double hbar = kHbar,
                                                          unsigned workers = 0) {
    if (n_samples < kMinMonteCarloSamples)
        throw ConfigError("Monte Carlo needs at least 1000 samples");
    MonteCarloResult result;
    result.samples = n_samples;
    result.noise_floor = std::sqrt(std::numbers::pi / (4.0 * static_cast<double>(n_samples)));
    if (std::holds_alternative<Delta>(dist)) {
        result.estimate = 1.0;
        return result;
    }
    const auto& g = std::get<Gaussian>(dist);
    validate(g);

    std::vector<std::size_t> counts(kMonteCarloChunks, n_samples / kMonteCarloChunks);
    for (std::size_t c = 0; c < n_samples % kMonteCarloChunks; ++c) ++counts[c];

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, kMonteCarloChunks);
    std::vector<std::vector<cplx>> chunks(kMonteCarloChunks);
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t c = w; c < kMonteCarloChunks; c += workers)
                chunks[c] = detail::sample_chunk(g, t, params, hbar, seed, c, counts[c]);
        }));
    }
    for (auto& job : jobs) job.get();

    cplx sum = 0.0;
    for (const auto& chunk : chunks)
        for (const cplx& z : chunk) sum += z;
    const double n = static_cast<double>(n_samples);
    result.estimate = clamp_concurrence(2.0 * std::abs(sum / n));

    // Jackknife over leave-one-out means.
    double loo_mean = 0.0;
    for (const auto& chunk : chunks)
        for (const cplx& z : chunk) loo_mean += 2.0 * std::abs((sum - z) / (n - 1.0));
    loo_mean /= n;
    double acc = 0.0;
    for (const auto& chunk : chunks) {
        for (const cplx& z : chunk) {
            const double d = 2.0 * std::abs((sum - z) / (n - 1.0)) - loo_mean;
            acc += d * d;
        }
    }
    result.std_error = std::sqrt((n - 1.0) / n * acc);
    return result;
}

}  // namespace tcdeg::neoclassical
