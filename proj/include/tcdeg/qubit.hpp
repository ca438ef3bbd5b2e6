#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "tcdeg/errors.hpp"

namespace tcdeg {

using cplx = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

// Two-qubit bases. Orderings are fixed:
//   EG: |e,e>, |e,g>, |g,e>, |g,g>
//   JM: |1,1>, |1,0>, |0,0>, |1,-1>   (eigenstates of sigma_x1 + sigma_x2, eigenvalue 2m)
//   XX: |+,+>, |+,->, |-,+>, |-,->    with |+-> = (|e> +- |g>)/sqrt(2)
enum class Basis { EG, JM, XX };

inline std::string_view to_string(Basis b) {
    switch (b) {
        case Basis::EG: return "EG";
        case Basis::JM: return "JM";
        case Basis::XX: return "XX";
    }
    return "?";
}

inline Basis basis_from_string(std::string_view s) {
    if (s == "EG") return Basis::EG;
    if (s == "JM") return Basis::JM;
    if (s == "XX") return Basis::XX;
    throw ConfigError("unknown basis tag: " + std::string(s));
}

// m quantum number of each JM basis index.
inline constexpr std::array<int, 4> kJmM = {1, 0, 0, -1};

struct QubitDensity {
    Mat4 entries = Mat4::Zero();
    Basis basis = Basis::EG;
};

struct DensityCheck {
    double hermiticity_error = 0.0;
    double trace_error = 0.0;
    double min_eigenvalue = 0.0;

    bool ok(double herm_tol = 1e-12, double trace_tol = 1e-12, double pos_tol = 1e-10) const {
        return hermiticity_error <= herm_tol && trace_error <= trace_tol &&
               min_eigenvalue >= -pos_tol;
    }
};

template <class Derived>
DensityCheck check_density_matrix(const Eigen::MatrixBase<Derived>& m) {
    DensityCheck out;
    out.hermiticity_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
    out.trace_error = std::abs(m.trace() - cplx(1.0, 0.0));
    using Plain = typename Derived::PlainObject;
    Plain herm = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Plain> es(herm, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = es.eigenvalues().minCoeff();
    return out;
}

inline DensityCheck check(const QubitDensity& rho) { return check_density_matrix(rho.entries); }

inline void require_valid(const QubitDensity& rho, double herm_tol = 1e-12,
                          double trace_tol = 1e-12, double pos_tol = 1e-10) {
    const auto c = check(rho);
    if (!c.ok(herm_tol, trace_tol, pos_tol)) {
        throw NumericalError("invalid qubit density: hermiticity error " +
                             std::to_string(c.hermiticity_error) + ", trace error " +
                             std::to_string(c.trace_error) + ", min eigenvalue " +
                             std::to_string(c.min_eigenvalue));
    }
}

// Rows give |j,m> in terms of |+,+>, |+,->, |-,+>, |-,->. Symmetric and orthogonal.
inline Eigen::Matrix4d jm_from_xx_rows() {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix4d m;
    m << 1, 0, 0, 0,
         0, r, r, 0,
         0, r, -r, 0,
         0, 0, 0, 1;
    return m;
}

// Columns are the basis vectors of `b` expressed in EG coordinates.
inline Mat4 eg_from(Basis b) {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2d h;
    h << r, r,
         r, -r;
    Eigen::Matrix4d xx;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) xx.block<2, 2>(2 * i, 2 * j) = h(i, j) * h;
    switch (b) {
        case Basis::EG: return Mat4::Identity();
        case Basis::XX: return xx.cast<cplx>();
        case Basis::JM: return (xx * jm_from_xx_rows().transpose()).cast<cplx>();
    }
    throw ConfigError("unknown basis tag");
}

inline QubitDensity change_basis(const QubitDensity& rho, Basis target) {
    if (rho.basis == target) return rho;
    const Mat4 u = eg_from(target).adjoint() * eg_from(rho.basis);
    return {u * rho.entries * u.adjoint(), target};
}

enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

inline std::string_view to_string(BellKind k) {
    switch (k) {
        case BellKind::PsiPlus: return "PsiPlus";
        case BellKind::PsiMinus: return "PsiMinus";
        case BellKind::PhiPlus: return "PhiPlus";
        case BellKind::PhiMinus: return "PhiMinus";
    }
    return "?";
}

inline BellKind bell_kind_from_string(std::string_view s) {
    if (s == "PsiPlus") return BellKind::PsiPlus;
    if (s == "PsiMinus") return BellKind::PsiMinus;
    if (s == "PhiPlus") return BellKind::PhiPlus;
    if (s == "PhiMinus") return BellKind::PhiMinus;
    throw ConfigError("unknown Bell state: " + std::string(s));
}

// EG-basis state vector.
inline Vec4 bell_vector(BellKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    Vec4 v = Vec4::Zero();
    switch (kind) {
        case BellKind::PsiPlus: v(1) = r; v(2) = r; break;
        case BellKind::PsiMinus: v(1) = r; v(2) = -r; break;
        case BellKind::PhiPlus: v(0) = r; v(3) = r; break;
        case BellKind::PhiMinus: v(0) = r; v(3) = -r; break;
    }
    return v;
}

inline QubitDensity bell_state(BellKind kind) {
    const Vec4 v = bell_vector(kind);
    return {v * v.adjoint(), Basis::EG};
}

}  // namespace tcdeg
