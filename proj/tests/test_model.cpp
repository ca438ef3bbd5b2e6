#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "tcdeg/tcdeg.hpp"

using namespace tcdeg;

TEST(ModelParams, BetaIsLambdaOverOmega) {
    const ModelParams p(2.0, 0.2);
    EXPECT_DOUBLE_EQ(p.beta(), 0.1);
    EXPECT_DOUBLE_EQ(p.beta_m(1), 0.1);
    EXPECT_DOUBLE_EQ(p.beta_m(0), 0.0);
    EXPECT_DOUBLE_EQ(p.beta_m(-1), -0.1);
    EXPECT_TRUE(p.degenerate());
}

TEST(ModelParams, RejectsInvalidValues) {
    EXPECT_THROW(ModelParams(0.0, 0.1), ConfigError);
    EXPECT_THROW(ModelParams(-1.0, 0.1), ConfigError);
    EXPECT_THROW(ModelParams(1.0, -0.1), ConfigError);
    EXPECT_THROW(ModelParams(1.0, 0.1, -1.0), ConfigError);
    EXPECT_THROW(ModelParams(std::numeric_limits<double>::quiet_NaN(), 0.1), ConfigError);
    EXPECT_THROW(ModelParams(1.0, std::numeric_limits<double>::infinity()), ConfigError);
    EXPECT_THROW(ModelParams(1.0, 0.1).beta_m(2), ConfigError);
}

TEST(ModelParams, WarnsOnlyWhenNondegenerate) {
    int warnings = 0;
    const auto previous = log::set_sink([&](log::Level level, std::string_view) {
        if (level == log::Level::warn) ++warnings;
    });
    warn_if_nondegenerate(ModelParams(1.0, 0.1, 0.0), "test");
    EXPECT_EQ(warnings, 0);
    warn_if_nondegenerate(ModelParams(1.0, 0.1, 0.3), "test");
    EXPECT_EQ(warnings, 1);
    log::set_sink(previous);
}

TEST(Qubit, BasisChangeIsUnitaryRoundTrip) {
    const auto rho = bell_state(BellKind::PsiPlus);
    for (Basis b : {Basis::JM, Basis::XX}) {
        const auto there = change_basis(rho, b);
        const auto back = change_basis(there, Basis::EG);
        EXPECT_LT((back.entries - rho.entries).norm(), 1e-14);
        EXPECT_NEAR(there.entries.trace().real(), 1.0, 1e-14);
    }
    EXPECT_LT((eg_from(Basis::JM).adjoint() * eg_from(Basis::JM) - Mat4::Identity()).norm(), 1e-14);
}

TEST(Qubit, JmBasisDiagonalizesCollectiveSigmaX) {
    Eigen::Matrix2cd sx;
    sx << 0, 1, 1, 0;
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    Mat4 sum;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    sum(2 * i + k, 2 * j + l) = sx(i, j) * id(k, l) + id(i, j) * sx(k, l);
    const Mat4 u = eg_from(Basis::JM);
    const Mat4 d = u.adjoint() * sum * u;
    for (int a = 0; a < 4; ++a) {
        EXPECT_NEAR(d(a, a).real(), 2.0 * kJmM[a], 1e-14);
        for (int b = 0; b < 4; ++b)
            if (a != b) EXPECT_NEAR(std::abs(d(a, b)), 0.0, 1e-14);
    }
}

TEST(Qubit, BellStatesInJmBasis) {
    const double r = 1.0 / std::sqrt(2.0);
    auto jm_vector = [](BellKind k) { return Vec4(eg_from(Basis::JM).adjoint() * bell_vector(k)); };
    const Vec4 psi_plus = jm_vector(BellKind::PsiPlus);
    EXPECT_NEAR(psi_plus(0).real(), r, 1e-14);
    EXPECT_NEAR(psi_plus(3).real(), -r, 1e-14);
    EXPECT_NEAR(std::abs(jm_vector(BellKind::PsiMinus)(2)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(jm_vector(BellKind::PhiMinus)(1)), 1.0, 1e-14);
    const Vec4 phi_plus = jm_vector(BellKind::PhiPlus);
    EXPECT_NEAR(phi_plus(0).real(), r, 1e-14);
    EXPECT_NEAR(phi_plus(3).real(), r, 1e-14);
}

TEST(Qubit, DensityCheckFlagsInvalidMatrices) {
    EXPECT_TRUE(check(bell_state(BellKind::PhiMinus)).ok());
    QubitDensity bad = bell_state(BellKind::PsiPlus);
    bad.entries(0, 0) = -0.1;
    bad.entries(1, 1) += 0.1;
    EXPECT_FALSE(check(bad).ok());
    EXPECT_THROW(require_valid(bad), NumericalError);
}

TEST(Qubit, ParsesTags) {
    EXPECT_EQ(bell_kind_from_string("PhiMinus"), BellKind::PhiMinus);
    EXPECT_EQ(basis_from_string("JM"), Basis::JM);
    EXPECT_THROW(bell_kind_from_string("psi+"), ConfigError);
    EXPECT_THROW(basis_from_string("ZZ"), ConfigError);
}

TEST(Oscillator, ValidatesSpecs) {
    EXPECT_NO_THROW(validate(OscillatorSpec{ThermalState{1.0}}));
    EXPECT_THROW(validate(OscillatorSpec{ThermalState{-1.0}}), ConfigError);
    EXPECT_THROW(validate(OscillatorSpec{FockState{-1}}), ConfigError);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
    rho(0, 0) = 0.5;
    EXPECT_THROW(validate(OscillatorSpec{ExplicitState{rho}}), ConfigError);
    rho(1, 1) = 0.5;
    EXPECT_NO_THROW(validate(OscillatorSpec{ExplicitState{rho}}));
    EXPECT_EQ(describe(OscillatorSpec{FockState{3}}), "fock(n=3)");
}

TEST(Bounds, ClampsRoundingAndRejectsGarbage) {
    EXPECT_DOUBLE_EQ(clamp_concurrence(1.0 + 1e-12), 1.0);
    EXPECT_DOUBLE_EQ(clamp_concurrence(-1e-12), 0.0);
    EXPECT_DOUBLE_EQ(clamp_concurrence(0.25), 0.25);
    EXPECT_THROW(clamp_concurrence(1.1), NumericalError);
    EXPECT_THROW(clamp_concurrence(std::numeric_limits<double>::quiet_NaN()), NumericalError);
}

TEST(Series, LinspaceIncludesEndpoints) {
    const auto t = linspace(0.0, 1.0, 5);
    ASSERT_EQ(t.size(), 5u);
    EXPECT_DOUBLE_EQ(t.front(), 0.0);
    EXPECT_DOUBLE_EQ(t[2], 0.5);
    EXPECT_DOUBLE_EQ(t.back(), 1.0);
    EXPECT_THROW(linspace(0.0, 1.0, 1), ConfigError);
    EXPECT_THROW(linspace(1.0, 1.0, 3), ConfigError);
}
