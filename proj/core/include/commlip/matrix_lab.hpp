#pragma once

#include <array>
#include <functional>
#include <string>

#include <Eigen/Dense>

namespace commlip {

using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using ScalarFn = std::function<double(double)>;

struct HermitianSpectral {
    RVector eigenvalues; // ascending
    CMatrix vectors;     // columns are eigenvectors
};

/// Throws NotHermitian when ||A - A*||_F > 1e-12 ||A||_F.
HermitianSpectral hermitian_eig(const CMatrix& A);

/// Descending.
RVector singular_values(const CMatrix& X);

struct NormKind {
    enum class Tag { operator_norm, ky_fan, schatten, trace, hilbert_schmidt };

    Tag tag = Tag::operator_norm;
    int k = 1;      // Ky Fan order
    double p = 2.0; // Schatten exponent

    static NormKind operator_norm() { return {Tag::operator_norm, 1, 2.0}; }
    static NormKind ky_fan(int k) { return {Tag::ky_fan, k, 2.0}; }
    static NormKind schatten(double p) { return {Tag::schatten, 1, p}; }
    static NormKind trace() { return {Tag::trace, 1, 2.0}; }
    static NormKind hilbert_schmidt() { return {Tag::hilbert_schmidt, 1, 2.0}; }

    /// "operator", "trace", "hs", "kyfan:K", "schatten:P"
    static NormKind parse(const std::string& text);
    [[nodiscard]] std::string name() const;
};

/// Evaluated from singular values. Throws BadParameter for k outside 1..n or p < 1.
double ui_norm(const CMatrix& X, const NormKind& kind);
double ui_norm_from_singular(const RVector& sigma, const NormKind& kind);

/// V f(L) V* for Hermitian A, no domain restriction on the spectrum.
CMatrix hermitian_function(const CMatrix& A, const ScalarFn& f);

/// Same, for f defined on [0, inf): eigenvalues in [-1e-10, 0) are clamped to 0
/// and anything more negative throws DomainViolation.
CMatrix matrix_function(const CMatrix& A, const ScalarFn& f);

/// e^{iX} for Hermitian X.
CMatrix unitary_exp(const CMatrix& X);

/// A X - X B
CMatrix gen_commutator(const CMatrix& A, const CMatrix& X, const CMatrix& B);
/// A X - X A
CMatrix commutator(const CMatrix& A, const CMatrix& X);

struct Doubled {
    CMatrix A; // diag(A, B)
    CMatrix X; // [[0, X], [X*, 0]]
};
Doubled doubling_embed(const CMatrix& A, const CMatrix& B, const CMatrix& X);

/// |||f(A) X - X f(B)||| / (|||X||| f(|||AX - XB||| / |||X|||)).
/// A vanishing numerator gives 0; a vanishing denominator with a non-zero
/// numerator throws ZeroDenominator.
double verify_conjecture_ratio(const CMatrix& A, const CMatrix& B, const CMatrix& X,
                               const ScalarFn& f, const NormKind& kind);

struct ExpChain {
    double lhs = 0.0; // |||[e^{iX}, Y]|||
    double mid = 0.0; // |||[X, Y]|||
    double rhs = 0.0; // (||X|| / sin ||X||) |||[e^{iX}, Y]|||
    bool holds = false;
};
/// Needs ||X|| < pi (SpectralRadiusTooLarge otherwise).
ExpChain verify_exp_equivalence(const CMatrix& X, const CMatrix& Y, const NormKind& kind);

struct AbsBoundsReport {
    double lhs = 0.0;         // |||[|A|, X]|||
    double spectral = 0.0;    // 2 min(a1, a2) + |||[A, X]|||
    double half_norm = 0.0;   // ||A|| / 2 + |||[A, X]|||
    double a1 = 0.0;          // -min spectrum, clamped at 0
    double a2 = 0.0;          // max spectrum, clamped at 0
    bool spectral_holds = false;
    bool half_norm_holds = false;
};
/// a1, a2 are taken as the tightest values with -a1 <= A <= a2.
AbsBoundsReport verify_abs_bounds(const CMatrix& A, const CMatrix& X, const NormKind& kind);

struct JensenCheck {
    double lhs = 0.0; // |||f(|Y|)|||
    double rhs = 0.0; // |||I||| f(|||Y||| / |||I|||)
    bool holds = false;
};
JensenCheck verify_jensen(const CMatrix& Y, const ScalarFn& f, const NormKind& kind);

struct CounterexampleReport {
    CMatrix A;
    CMatrix X;
    std::array<double, 3> sigma_commutator{};     // of [A, X]
    std::array<double, 3> sigma_exp_commutator{}; // of [A, e^{iX}]
    double trace_f_commutator = 0.0;              // sum f(sigma_commutator)
    double trace_f_exp_commutator = 0.0;          // sum f(sigma_exp_commutator)
    double f_shift = 0.02;                        // f(x) = x / (x + f_shift)
    bool reversal = false;                        // trace_f_exp > trace_f
};
/// Fixed 3x3 example in which the smallest singular value of [A, e^{iX}]
/// exceeds that of [A, X], so the trace norm of f(|.|) reverses.
CounterexampleReport counterexample_report();

} // namespace commlip
