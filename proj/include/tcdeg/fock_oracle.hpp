#pragma once

// Brute-force reference engine: the full Hamiltonian
//   H = omega0/2 (sz1 + sz2) + omega a^dag a + lambda (a + a^dag)(sx1 + sx2)
// on C^4 (x) a truncated Fock space, exact diagonalization, unitary evolution,
// partial trace and Wootters concurrence. It uses none of the closed-form
// results and serves as the independent check for them.
//
// Composite index: qubit-major, row = q * dim + n with q in EG order.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "tcdeg/bounds.hpp"
#include "tcdeg/errors.hpp"
#include "tcdeg/log.hpp"
#include "tcdeg/model.hpp"
#include "tcdeg/oscillator.hpp"
#include "tcdeg/qubit.hpp"
#include "tcdeg/series.hpp"

namespace tcdeg::oracle {

using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

class FockSpace {
public:
    explicit FockSpace(int dim) : dim_(dim) {
        if (dim < 2) throw ConfigError("Fock truncation dimension must be at least 2");
    }
    int dim() const { return dim_; }
    int composite_dim() const { return 4 * dim_; }

private:
    int dim_;
};

inline MatX annihilation(int dim) {
    MatX a = MatX::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

inline MatX kron(const MatX& a, const MatX& b) {
    MatX out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// sigma_x^(1) + sigma_x^(2) and sigma_z^(1) + sigma_z^(2) in the EG basis.
inline MatX collective_sigma_x() {
    MatX sx(2, 2);
    sx << 0, 1, 1, 0;
    const MatX id = MatX::Identity(2, 2);
    return kron(sx, id) + kron(id, sx);
}

inline MatX collective_sigma_z() {
    MatX sz(2, 2);
    sz << 1, 0, 0, -1;
    const MatX id = MatX::Identity(2, 2);
    return kron(sz, id) + kron(id, sz);
}

inline MatX build_hamiltonian(const ModelParams& params, FockSpace space) {
    const int d = space.dim();
    const MatX a = annihilation(d);
    const MatX number = a.adjoint() * a;
    const MatX position = a + a.adjoint();
    return (params.omega0() / 2.0) * kron(collective_sigma_z(), MatX::Identity(d, d)) +
           params.omega() * kron(MatX::Identity(4, 4), number) +
           params.lambda() * kron(collective_sigma_x(), position);
}

inline constexpr int kDisplacementMargin = 10;

// D(-2 beta_m)|n> with D(x) = exp[x (a^dag - a)], from the truncated generator.
inline VecX displaced_number_state(int n_index, int m, const ModelParams& params, FockSpace space,
                                   int margin = kDisplacementMargin) {
    if (n_index < 0) throw ConfigError("Fock index must be non-negative");
    if (n_index >= space.dim() - margin)
        throw ConfigError("displaced state |" + std::to_string(n_index) +
                          "> violates the truncation margin of dim " +
                          std::to_string(space.dim()));
    const double x = -2.0 * params.beta_m(m);
    const int d = space.dim();
    const MatX a = annihilation(d);
    // a^dag - a is anti-Hermitian; i (a^dag - a) is Hermitian.
    const MatX k = std::complex<double>(0.0, 1.0) * (a.adjoint() - a);
    Eigen::SelfAdjointEigenSolver<MatX> es(k);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    const VecX phases =
        (std::complex<double>(0.0, -x) * es.eigenvalues().cast<std::complex<double>>()).array().exp();
    VecX basis = VecX::Zero(d);
    basis(n_index) = 1.0;
    return es.eigenvectors() * phases.asDiagonal() * (es.eigenvectors().adjoint() * basis);
}

// Oscillator density matrix on the truncated space, renormalized after
// truncation. Throws when the discarded tail exceeds tail_tolerance.
inline MatX oscillator_initial_state(const OscillatorSpec& spec, FockSpace space,
                                     double tail_tolerance = 1e-12) {
    validate(spec);
    const int d = space.dim();
    auto tail_check = [&](double tail, const std::string& what) {
        if (tail > tail_tolerance) {
            std::ostringstream os;
            os << what << ": population " << tail << " beyond dim " << d
               << " exceeds tail tolerance " << tail_tolerance;
            throw NumericalError(os.str());
        }
    };
    MatX rho = MatX::Zero(d, d);
    if (const auto* th = std::get_if<ThermalState>(&spec)) {
        const double ratio = th->mean_n / (1.0 + th->mean_n);
        tail_check(std::pow(ratio, d), "thermal state");
        double p = 1.0 / (1.0 + th->mean_n);
        for (int n = 0; n < d; ++n, p *= ratio) rho(n, n) = p;
    } else if (const auto* co = std::get_if<CoherentState>(&spec)) {
        VecX c(d);
        c(0) = std::exp(-std::norm(co->alpha0) / 2.0);
        for (int n = 1; n < d; ++n) c(n) = c(n - 1) * co->alpha0 / std::sqrt(static_cast<double>(n));
        tail_check(std::max(0.0, 1.0 - c.squaredNorm()), "coherent state");
        rho = c * c.adjoint();
    } else if (const auto* fo = std::get_if<FockState>(&spec)) {
        if (fo->n >= d) tail_check(1.0, "Fock state");
        else rho(fo->n, fo->n) = 1.0;
    } else {
        const auto& ex = std::get<ExplicitState>(spec);
        const int keep = std::min(d, ex.dim());
        const double kept = ex.rho.diagonal().head(keep).real().sum();
        tail_check(std::max(0.0, 1.0 - kept), "explicit state");
        rho.topLeftCorner(keep, keep) = ex.rho.topLeftCorner(keep, keep);
    }
    const double tr = rho.trace().real();
    if (!(tr > 0.0)) throw NumericalError("oscillator state has no weight in the truncated space");
    return rho / tr;
}

// Truncation rule: with r = |alpha0| + 4 beta + q_th,
//   dim = max(20, ceil(r^2) + 10 ceil(r) + N_fock + 10),
// q_th = 4 sqrt(<n>) for thermal states. Explicit states count their own
// dimension in place of N_fock.
inline int truncation_dim(const OscillatorSpec& spec, const ModelParams& params) {
    validate(spec);
    double amplitude = 4.0 * params.beta();
    int n_fock = 0;
    if (const auto* th = std::get_if<ThermalState>(&spec)) amplitude += 4.0 * std::sqrt(th->mean_n);
    else if (const auto* co = std::get_if<CoherentState>(&spec)) amplitude += std::abs(co->alpha0);
    else if (const auto* fo = std::get_if<FockState>(&spec)) n_fock = fo->n;
    else n_fock = std::get<ExplicitState>(spec).dim();
    const int rule = static_cast<int>(std::ceil(amplitude * amplitude)) +
                     10 * static_cast<int>(std::ceil(amplitude)) + n_fock + 10;
    return std::max(20, rule);
}

struct CompositeState {
    MatX rho;
    FockSpace space;
};

inline CompositeState product_state(const QubitDensity& q, const MatX& oscillator) {
    const Mat4 q_eg = change_basis(q, Basis::EG).entries;
    return {kron(MatX(q_eg), oscillator), FockSpace(static_cast<int>(oscillator.rows()))};
}

// Population in the two highest retained Fock levels.
inline double truncation_leakage(const CompositeState& state) {
    const int d = state.space.dim();
    double sum = 0.0;
    for (int q = 0; q < 4; ++q)
        for (int n = d - 2; n < d; ++n) sum += state.rho(q * d + n, q * d + n).real();
    return sum;
}

// Spectral propagator of a time-independent Hamiltonian; decompose once,
// evolve to any t.
class Propagator {
public:
    explicit Propagator(const MatX& hamiltonian) {
        Eigen::SelfAdjointEigenSolver<MatX> es(hamiltonian);
        if (es.info() != Eigen::Success) throw NumericalError("Hamiltonian eigendecomposition failed");
        energies_ = es.eigenvalues();
        vectors_ = es.eigenvectors();
    }

    const Eigen::VectorXd& energies() const { return energies_; }
    const MatX& eigenvectors() const { return vectors_; }

    VecX phases(double t) const {
        return (std::complex<double>(0.0, -t) * energies_.cast<std::complex<double>>()).array().exp();
    }

    MatX unitary(double t) const { return vectors_ * phases(t).asDiagonal() * vectors_.adjoint(); }

    CompositeState evolve(const CompositeState& rho0, double t) const {
        if (rho0.rho.rows() != vectors_.rows())
            throw ConfigError("state and Hamiltonian dimensions differ");
        const VecX ph = phases(t);
        MatX r = vectors_.adjoint() * rho0.rho * vectors_;
        r = ph.asDiagonal() * r * ph.conjugate().asDiagonal();
        return {vectors_ * r * vectors_.adjoint(), rho0.space};
    }

private:
    Eigen::VectorXd energies_;
    MatX vectors_;
};

inline CompositeState evolve_density(const CompositeState& rho0, double t, const MatX& hamiltonian) {
    return Propagator(hamiltonian).evolve(rho0, t);
}

inline QubitDensity partial_trace_oscillator(const CompositeState& state) {
    const int d = state.space.dim();
    Mat4 out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out(a, b) = state.rho.block(a * d, b * d, d, d).trace();
    return {out, Basis::EG};
}

inline constexpr double kPositivitySlack = 1e-10;

// Wootters concurrence max(0, l1 - l2 - l3 - l4), l_i the descending square
// roots of the eigenvalues of rho (sy x sy) rho* (sy x sy). The l_i are taken
// as the singular values of sqrt(rho) (sy x sy) sqrt(rho)*, which avoids
// square roots of rounding-level eigenvalues near pure states.
inline double wootters_concurrence(const QubitDensity& input) {
    const Mat4 rho = change_basis(input, Basis::EG).entries;
    const Mat4 herm = (rho + rho.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat4> es(herm);
    Eigen::Vector4d w = es.eigenvalues();
    if (w.minCoeff() < -kPositivitySlack)
        throw NumericalError("Wootters concurrence: input density is not positive");
    w = w.cwiseMax(0.0);
    const Mat4 sqrt_rho =
        es.eigenvectors() * w.cwiseSqrt().cast<std::complex<double>>().asDiagonal() *
        es.eigenvectors().adjoint();

    Mat4 yy = Mat4::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Mat4 a = sqrt_rho * yy * sqrt_rho.conjugate();
    Eigen::JacobiSVD<Mat4> svd(a);
    const Eigen::Vector4d l = svd.singularValues();  // descending
    return clamp_concurrence(std::max(0.0, l(0) - l(1) - l(2) - l(3)));
}

struct OracleOptions {
    int dim = 0;                  // 0 selects truncation_dim()
    double tail_tolerance = 1e-12;
    double leakage_warn = 1e-8;
    double leakage_error = 1e-6;
    double component_cutoff = 1e-15;
};

struct OracleSample {
    QubitDensity rho;  // EG basis
    double leakage = 0.0;
};

// A prepared oracle job: Hamiltonian, its eigendecomposition and the initial
// product state Q (x) F projected onto the eigenbasis. Reduced qubit states at
// any t then cost O(D^2) each:
//   rho_q(a, b; t) = sum_ij phi_i conj(phi_j) R_ij G_ab(i, j),
// with phi = exp(-i E t), R = V^dag rho0 V, G_ab(i, j) = sum_n V(a n, i) conj(V(b n, j)).
class OracleRun {
public:
    OracleRun(const QubitDensity& qubits, const OscillatorSpec& spec, const ModelParams& params,
              const OracleOptions& options = {})
        : options_(options),
          space_(options.dim > 0 ? options.dim : truncation_dim(spec, params)),
          hamiltonian_(build_hamiltonian(params, space_)),
          propagator_(hamiltonian_) {
        const MatX f = oscillator_initial_state(spec, space_, options_.tail_tolerance);
        const Mat4 q = change_basis(qubits, Basis::EG).entries;
        initial_ = {kron(MatX(q), f), space_};

        // Pure-state ensemble of rho0 keeps the projection onto the eigenbasis cheap.
        Eigen::SelfAdjointEigenSolver<Mat4> qs((q + q.adjoint()) / 2.0);
        Eigen::SelfAdjointEigenSolver<MatX> fs((f + f.adjoint()) / 2.0);
        const int d = space_.dim();
        std::vector<VecX> columns;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < d; ++j) {
                const double w = qs.eigenvalues()(i) * fs.eigenvalues()(j);
                if (w <= options_.component_cutoff) continue;
                columns.push_back(std::sqrt(w) *
                                  kron(MatX(qs.eigenvectors().col(i)), MatX(fs.eigenvectors().col(j))));
            }
        }
        MatX psi0(4 * d, static_cast<Eigen::Index>(columns.size()));
        for (std::size_t k = 0; k < columns.size(); ++k) psi0.col(static_cast<Eigen::Index>(k)) = columns[k];
        const MatX& v = propagator_.eigenvectors();
        const MatX c = v.adjoint() * psi0;
        const MatX r = c * c.adjoint();

        for (int a = 0; a < 4; ++a) {
            for (int b = a; b < 4; ++b) {
                const MatX g = v.middleRows(a * d, d).transpose() * v.middleRows(b * d, d).conjugate();
                weights_[index(a, b)] = r.cwiseProduct(g);
            }
        }
        MatX g_leak = MatX::Zero(4 * d, 4 * d);
        for (int a = 0; a < 4; ++a) {
            const auto top = v.middleRows(a * d + d - 2, 2);
            g_leak += top.transpose() * top.conjugate();
        }
        leak_weights_ = r.cwiseProduct(g_leak);
    }

    FockSpace space() const { return space_; }
    int dim() const { return space_.dim(); }
    const MatX& hamiltonian() const { return hamiltonian_; }
    const Propagator& propagator() const { return propagator_; }
    const CompositeState& initial_state() const { return initial_; }

    OracleSample at(double t) const {
        const VecX phi = propagator_.phases(t);
        const VecX phi_conj = phi.conjugate();
        Mat4 out;
        for (int a = 0; a < 4; ++a) {
            for (int b = a; b < 4; ++b) {
                const std::complex<double> value = phi.transpose() * (weights_[index(a, b)] * phi_conj);
                out(a, b) = value;
                out(b, a) = std::conj(value);
            }
            out(a, a) = out(a, a).real();
        }
        const double leak = (phi.transpose() * (leak_weights_ * phi_conj)).value().real();
        return {{out, Basis::EG}, leak};
    }

private:
    static std::size_t index(int a, int b) {
        // upper triangle of a 4x4, row-major
        static constexpr int offsets[4] = {0, 4, 7, 9};
        return static_cast<std::size_t>(offsets[a] + (b - a));
    }

    OracleOptions options_;
    FockSpace space_;
    MatX hamiltonian_;
    Propagator propagator_;
    CompositeState initial_{MatX(), FockSpace(2)};
    std::array<MatX, 10> weights_;
    MatX leak_weights_;
};

// Per-point Wootters concurrence of the evolved, partial-traced state with
// leakage diagnostics. Leakage above options.leakage_error is an error.
inline ConcurrenceSeries oracle_concurrence_series(BellKind qubit_init, const OscillatorSpec& spec,
                                                   const std::vector<double>& times,
                                                   const ModelParams& params,
                                                   const OracleOptions& options = {}) {
    if (times.empty()) throw ConfigError("empty time grid");
    for (double t : times)
        if (!std::isfinite(t)) throw ConfigError("time grid contains non-finite values");
    const OracleRun run(bell_state(qubit_init), spec, params, options);

    ConcurrenceSeries out;
    out.engine = Engine::Oracle;
    out.fock_dim = run.dim();
    const bool with_uv = qubit_init == BellKind::PsiPlus || qubit_init == BellKind::PhiPlus;
    // rho_JM(|1,1>, |1,-1>) = -I/2 for Psi+ and +I/2 for Phi+.
    const double sign = qubit_init == BellKind::PsiPlus ? -2.0 : 2.0;
    double worst = 0.0;
    for (double t : times) {
        const auto sample = run.at(t);
        out.t.push_back(t);
        out.omega_t.push_back(params.omega() * t);
        out.concurrence.push_back(wootters_concurrence(sample.rho));
        out.leakage.push_back(sample.leakage);
        worst = std::max(worst, sample.leakage);
        if (with_uv) {
            const auto coherence = sign * change_basis(sample.rho, Basis::JM).entries(0, 3);
            out.u.push_back(coherence.real());
            out.v.push_back(coherence.imag());
        }
    }
    if (worst > options.leakage_error) {
        std::ostringstream os;
        os << "truncation leakage " << worst << " exceeds " << options.leakage_error
           << " at dim " << run.dim();
        throw NumericalError(os.str());
    }
    if (worst > options.leakage_warn) {
        std::ostringstream os;
        os << "truncation leakage " << worst << " at dim " << run.dim();
        log::warn(os.str());
    }
    return out;
}

struct SpectrumLevel {
    int index = 0;
    double numerical = 0.0;
    double expected = 0.0;
    int n = 0;  // displaced number-state label
    int m = 0;  // collective sigma_x label
    int j = 1;
    double abs_error = 0.0;
};

struct SpectrumReport {
    int dim = 0;
    int checked = 0;
    double tolerance = 0.0;
    double max_abs_error = 0.0;
    std::vector<SpectrumLevel> levels;
    bool ok() const { return max_abs_error <= tolerance; }
};

// Compares the lowest 2 dim / 3 numerical eigenvalues (omega0 = 0) with
// E_{N,m} = omega (N - 4 beta_m^2): per N two levels at -4 beta^2 (m = +1, -1)
// and two at 0 (|1,0>, |0,0>).
inline SpectrumReport spectrum_check(const ModelParams& params, FockSpace space,
                                     double tolerance = 1e-8) {
    warn_if_nondegenerate(params, "spectrum");
    const ModelParams degenerate(params.omega(), params.lambda(), 0.0);
    const Propagator prop(build_hamiltonian(degenerate, space));
    const int d = space.dim();

    std::vector<SpectrumLevel> expected;
    expected.reserve(static_cast<std::size_t>(4 * d));
    const double shift = 4.0 * params.beta() * params.beta();
    for (int n = 0; n < d; ++n) {
        expected.push_back({0, 0.0, params.omega() * (n - shift), n, 1, 1, 0.0});
        expected.push_back({0, 0.0, params.omega() * (n - shift), n, -1, 1, 0.0});
        expected.push_back({0, 0.0, params.omega() * n, n, 0, 1, 0.0});
        expected.push_back({0, 0.0, params.omega() * n, n, 0, 0, 0.0});
    }
    std::stable_sort(expected.begin(), expected.end(),
                     [](const SpectrumLevel& x, const SpectrumLevel& y) { return x.expected < y.expected; });

    SpectrumReport report;
    report.dim = d;
    report.checked = 2 * d / 3;
    report.tolerance = tolerance;
    for (int i = 0; i < report.checked; ++i) {
        auto level = expected[static_cast<std::size_t>(i)];
        level.index = i;
        level.numerical = prop.energies()(i);
        level.abs_error = std::abs(level.numerical - level.expected);
        report.max_abs_error = std::max(report.max_abs_error, level.abs_error);
        report.levels.push_back(level);
    }
    return report;
}

}  // namespace tcdeg::oracle
