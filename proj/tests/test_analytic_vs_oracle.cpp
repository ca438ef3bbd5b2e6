#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "tcdeg/tcdeg.hpp"

using namespace tcdeg;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

QubitDensity random_qubit_density(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Mat4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = cplx(g(rng), g(rng));
    Mat4 rho = a * a.adjoint();
    rho /= rho.trace();
    return {rho, Basis::EG};
}

Eigen::VectorXcd coherent_vector(cplx alpha, int dim) {
    Eigen::VectorXcd c(dim);
    c(0) = std::exp(-std::norm(alpha) / 2.0);
    for (int n = 1; n < dim; ++n) c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    return c;
}

double max_oracle_error(const OscillatorSpec& spec, const ModelParams& oracle_params,
                        const ModelParams& analytic_params, const std::vector<double>& times,
                        oracle::OracleOptions opt = {}) {
    const auto series = oracle::oracle_concurrence_series(BellKind::PsiPlus, spec, times, oracle_params, opt);
    double worst = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i)
        worst = std::max(worst, std::abs(series.concurrence[i] - analytic::concurrence(spec, times[i], analytic_params)));
    return worst;
}

}  // namespace

TEST(AnalyticVsOracle, PsiPlusCoherenceAndConcurrence) {
    const ModelParams p(1.0, 0.1);
    const auto times = linspace(0.0, 4.0 * kPi, 41);
    const OscillatorSpec specs[] = {ThermalState{1.0}, CoherentState{0.5 - 1.0i}, FockState{3}};
    for (const auto& spec : specs) {
        const auto series = oracle::oracle_concurrence_series(BellKind::PsiPlus, spec, times, p);
        for (std::size_t i = 0; i < times.size(); ++i) {
            const cplx expected = analytic::psi_plus_coherence(spec, times[i], p);
            EXPECT_NEAR(series.u[i], expected.real(), 1e-8) << describe(spec);
            EXPECT_NEAR(series.v[i], expected.imag(), 1e-8) << describe(spec);
            EXPECT_NEAR(series.concurrence[i], analytic::concurrence(spec, times[i], p), 1e-8);
        }
    }
}

TEST(AnalyticVsOracle, GeneralReducedDensityForRandomQubitStates) {
    std::mt19937_64 rng(20241015);
    const ModelParams p(1.0, 0.13);
    const OscillatorSpec specs[] = {ThermalState{0.7}, CoherentState{0.8 + 0.6i}, FockState{2}};
    for (const auto& spec : specs) {
        for (int trial = 0; trial < 3; ++trial) {
            const QubitDensity q = random_qubit_density(rng);
            const oracle::OracleRun run(q, spec, p);
            for (double t : {0.4, 1.9, kPi, 5.2, 9.0}) {
                const auto analytic_rho = change_basis(analytic::reduced_qubit_density(q, spec, t, p), Basis::EG);
                EXPECT_LT((run.at(t).rho.entries - analytic_rho.entries).cwiseAbs().maxCoeff(), 1e-9)
                    << describe(spec) << " t=" << t;
            }
        }
    }
}

// Mixture of two coherent states has an asymmetric P function, so |P~| depends
// on the sign of the second Fourier argument.
TEST(AnalyticVsOracle, FourierArgumentSignPinnedByCoherentMixture) {
    const ModelParams p(1.0, 0.1);
    const cplx a1 = 1.0 + 0.5i;
    const cplx a2 = -0.3 + 1.2i;
    const int dim = 40;
    const Eigen::VectorXcd c1 = coherent_vector(a1, dim);
    const Eigen::VectorXcd c2 = coherent_vector(a2, dim);
    const OscillatorSpec mixture = ExplicitState{(c1 * c1.adjoint() + c2 * c2.adjoint()) / 2.0};

    const auto times = linspace(0.0, 2.0 * kPi, 33);
    const auto series = oracle::oracle_concurrence_series(BellKind::PsiPlus, mixture, times, p);
    double flipped_gap = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        const cplx expected = 0.5 * (analytic::psi_plus_coherence(CoherentState{a1}, t, p) +
                                     analytic::psi_plus_coherence(CoherentState{a2}, t, p));
        EXPECT_NEAR(series.u[i], expected.real(), 1e-9);
        EXPECT_NEAR(series.v[i], expected.imag(), 1e-9);

        const auto k = analytic::fourier_arguments(t, p);
        const cplx flipped = 0.5 * (analytic::p_tilde(CoherentState{a1}, k.k1, -k.k2) +
                                    analytic::p_tilde(CoherentState{a2}, k.k1, -k.k2)) *
                             analytic::coherence_damping(t, p);
        flipped_gap = std::max(flipped_gap, std::abs(series.concurrence[i] - std::abs(flipped)));
    }
    EXPECT_GT(flipped_gap, 1e-2);
}

TEST(AnalyticVsOracle, SmallOmega0ConvergesToDegenerateCurve) {
    const double lambda = 0.1;
    const ModelParams degenerate(1.0, lambda);
    const auto times = linspace(0.0, 4.0 * kPi, 60);
    const OscillatorSpec spec = ThermalState{1.0};
    double previous = std::numeric_limits<double>::infinity();
    for (double scale : {0.1, 0.01, 0.001}) {
        const double err = max_oracle_error(spec, ModelParams(1.0, lambda, scale * lambda), degenerate, times);
        EXPECT_LT(err, previous) << "omega0 = " << scale * lambda;
        previous = err;
    }
    EXPECT_LT(previous, 1e-3);
}

TEST(AnalyticVsOracle, TruncationErrorShrinksWithDimension) {
    const ModelParams p(1.0, 0.1);
    const OscillatorSpec spec = ThermalState{2.0};
    const auto times = linspace(0.0, 2.0 * kPi, 30);
    oracle::OracleOptions opt;
    opt.tail_tolerance = 1.0;
    opt.leakage_error = 1.0;
    opt.leakage_warn = 1.0;
    double previous = std::numeric_limits<double>::infinity();
    for (int dim : {8, 12, 18, 26, 38, 55}) {
        opt.dim = dim;
        const double err = max_oracle_error(spec, p, p, times, opt);
        EXPECT_LT(err, previous) << "dim " << dim;
        previous = err;
    }
    EXPECT_LT(previous, 1e-8);
}

TEST(AnalyticVsOracle, EnergyIsConserved) {
    const ModelParams p(1.0, 0.2, 0.05);
    const oracle::OracleRun run(bell_state(BellKind::PsiPlus), ThermalState{0.8}, p);
    const auto& h = run.hamiltonian();
    const double e0 = (run.initial_state().rho * h).trace().real();
    for (double t : {0.3, 2.0, 7.7}) {
        const auto rho_t = run.propagator().evolve(run.initial_state(), t);
        EXPECT_NEAR((rho_t.rho * h).trace().real(), e0, 1e-10);
    }
}
