#include "commlip/matrix_lab.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "commlip/errors.hpp"

namespace commlip {

namespace {

using cd = std::complex<double>;

constexpr double kHermitianTol = 1e-12;
constexpr double kNegativeEigTol = 1e-10;
constexpr double kCheckTol = 1e-9;

void require_square(const CMatrix& M, const char* what)
{
    if (M.rows() == 0 || M.rows() != M.cols()) {
        throw BadParameter(std::string(what) + ": matrix must be square and non-empty");
    }
}

CMatrix from_spectrum(const HermitianSpectral& s, const RVector& values)
{
    return s.vectors * values.cast<cd>().asDiagonal() * s.vectors.adjoint();
}

double parse_number(const std::string& text, const std::string& full)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw BadParameter("cannot parse norm '" + full + "'");
    }
    return v;
}

} // namespace

HermitianSpectral hermitian_eig(const CMatrix& A)
{
    require_square(A, "hermitian_eig");
    const double scale = A.norm();
    if ((A - A.adjoint()).norm() > kHermitianTol * std::max(scale, 1e-300)) {
        throw NotHermitian("matrix is not Hermitian");
    }
    // Symmetrise so the solver only ever sees an exactly Hermitian input.
    const CMatrix H = 0.5 * (A + A.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(H, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RVector singular_values(const CMatrix& X)
{
    if (X.size() == 0) return {};
    Eigen::JacobiSVD<CMatrix> svd(X);
    return svd.singularValues();
}

NormKind NormKind::parse(const std::string& text)
{
    if (text == "operator" || text == "op") return operator_norm();
    if (text == "trace") return trace();
    if (text == "hs" || text == "hilbert-schmidt") return hilbert_schmidt();
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        const std::string tail = text.substr(colon + 1);
        if (head == "kyfan") {
            const double k = parse_number(tail, text);
            if (k != std::floor(k) || k < 1) throw BadParameter("Ky Fan order must be a positive integer");
            return ky_fan(static_cast<int>(k));
        }
        if (head == "schatten") {
            const double p = parse_number(tail, text);
            if (!(p >= 1.0)) throw BadParameter("Schatten exponent must be >= 1");
            return schatten(p);
        }
    }
    throw BadParameter("unknown norm '" + text + "'");
}

std::string NormKind::name() const
{
    std::ostringstream out;
    switch (tag) {
    case Tag::operator_norm: return "operator";
    case Tag::trace: return "trace";
    case Tag::hilbert_schmidt: return "hs";
    case Tag::ky_fan: out << "kyfan:" << k; return out.str();
    case Tag::schatten: out << "schatten:" << p; return out.str();
    }
    return "unknown";
}

double ui_norm_from_singular(const RVector& sigma, const NormKind& kind)
{
    const auto n = sigma.size();
    switch (kind.tag) {
    case NormKind::Tag::operator_norm:
        return n == 0 ? 0.0 : sigma(0);
    case NormKind::Tag::ky_fan:
        if (kind.k < 1 || kind.k > n) throw BadParameter("Ky Fan order out of range");
        return sigma.head(kind.k).sum();
    case NormKind::Tag::trace:
        return sigma.sum();
    case NormKind::Tag::hilbert_schmidt:
        return sigma.norm();
    case NormKind::Tag::schatten: {
        if (!(kind.p >= 1.0)) throw BadParameter("Schatten exponent must be >= 1");
        if (n == 0 || sigma(0) == 0.0) return 0.0;
        // Scale by sigma_1 to keep large p from overflowing.
        const double top = sigma(0);
        double acc = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) acc += std::pow(sigma(i) / top, kind.p);
        return top * std::pow(acc, 1.0 / kind.p);
    }
    }
    throw BadParameter("unknown norm kind");
}

double ui_norm(const CMatrix& X, const NormKind& kind)
{
    return ui_norm_from_singular(singular_values(X), kind);
}

CMatrix hermitian_function(const CMatrix& A, const ScalarFn& f)
{
    const auto s = hermitian_eig(A);
    return from_spectrum(s, s.eigenvalues.unaryExpr([&f](double x) { return f(x); }));
}

CMatrix matrix_function(const CMatrix& A, const ScalarFn& f)
{
    const auto s = hermitian_eig(A);
    const double tol = kNegativeEigTol * std::max(1.0, s.eigenvalues.cwiseAbs().maxCoeff());
    if (s.eigenvalues.minCoeff() < -tol) {
        std::ostringstream msg;
        msg << "matrix_function: eigenvalue " << s.eigenvalues.minCoeff() << " is negative";
        throw DomainViolation(msg.str());
    }
    return from_spectrum(s, s.eigenvalues.unaryExpr([&f](double x) { return f(std::max(x, 0.0)); }));
}

CMatrix unitary_exp(const CMatrix& X)
{
    const auto s = hermitian_eig(X);
    const Eigen::VectorXcd phases = s.eigenvalues.unaryExpr([](double x) { return std::polar(1.0, x); });
    return s.vectors * phases.asDiagonal() * s.vectors.adjoint();
}

CMatrix gen_commutator(const CMatrix& A, const CMatrix& X, const CMatrix& B)
{
    if (A.rows() != A.cols() || B.rows() != B.cols() || X.rows() != A.rows() || X.cols() != B.rows()) {
        throw BadParameter("gen_commutator: incompatible dimensions");
    }
    return A * X - X * B;
}

CMatrix commutator(const CMatrix& A, const CMatrix& X) { return gen_commutator(A, X, A); }

Doubled doubling_embed(const CMatrix& A, const CMatrix& B, const CMatrix& X)
{
    require_square(A, "doubling_embed");
    const auto n = A.rows();
    if (B.rows() != n || B.cols() != n || X.rows() != n || X.cols() != n) {
        throw BadParameter("doubling_embed: A, B, X must share one dimension");
    }
    Doubled d{CMatrix::Zero(2 * n, 2 * n), CMatrix::Zero(2 * n, 2 * n)};
    d.A.topLeftCorner(n, n) = A;
    d.A.bottomRightCorner(n, n) = B;
    d.X.topRightCorner(n, n) = X;
    d.X.bottomLeftCorner(n, n) = X.adjoint();
    return d;
}

double verify_conjecture_ratio(const CMatrix& A, const CMatrix& B, const CMatrix& X,
                               const ScalarFn& f, const NormKind& kind)
{
    const CMatrix fA = matrix_function(A, f);
    const CMatrix fB = matrix_function(B, f);
    const double numerator = ui_norm(gen_commutator(fA, X, fB), kind);
    const double norm_x = ui_norm(X, kind);
    const double comm = ui_norm(gen_commutator(A, X, B), kind);

    // Round-off floor for the numerator: f(A) is rebuilt from an
    // eigendecomposition, so an exact zero is not guaranteed.
    const double floor = 1e-13 * (fA.norm() + fB.norm() + 1.0) * std::max(norm_x, 1.0);
    if (numerator <= floor) return 0.0;
    if (norm_x == 0.0) throw ZeroDenominator("conjecture ratio: X = 0");
    const double denominator = norm_x * f(comm / norm_x);
    if (!(denominator > 0.0)) throw ZeroDenominator("conjecture ratio: zero denominator");
    return numerator / denominator;
}

ExpChain verify_exp_equivalence(const CMatrix& X, const CMatrix& Y, const NormKind& kind)
{
    const double r = ui_norm(X, NormKind::operator_norm());
    if (!(r < std::numbers::pi)) throw SpectralRadiusTooLarge("exp equivalence needs ||X|| < pi");
    ExpChain out;
    out.lhs = ui_norm(commutator(unitary_exp(X), Y), kind);
    out.mid = ui_norm(commutator(X, Y), kind);
    out.rhs = r == 0.0 ? out.lhs : r / std::sin(r) * out.lhs;
    const double tol = kCheckTol * std::max(1.0, out.rhs);
    out.holds = out.lhs <= out.mid + tol && out.mid <= out.rhs + tol;
    return out;
}

AbsBoundsReport verify_abs_bounds(const CMatrix& A, const CMatrix& X, const NormKind& kind)
{
    const auto s = hermitian_eig(A);
    AbsBoundsReport rep;
    rep.a1 = std::max(0.0, -s.eigenvalues.minCoeff());
    rep.a2 = std::max(0.0, s.eigenvalues.maxCoeff());
    const CMatrix absA = from_spectrum(s, s.eigenvalues.cwiseAbs());
    rep.lhs = ui_norm(commutator(absA, X), kind);
    const double comm = ui_norm(commutator(A, X), kind);
    rep.spectral = 2.0 * std::min(rep.a1, rep.a2) + comm;
    rep.half_norm = 0.5 * std::max(rep.a1, rep.a2) + comm;
    const double tol = kCheckTol * std::max(1.0, rep.lhs);
    rep.spectral_holds = rep.lhs <= rep.spectral + tol;
    rep.half_norm_holds = rep.lhs <= rep.half_norm + tol;
    return rep;
}

JensenCheck verify_jensen(const CMatrix& Y, const ScalarFn& f, const NormKind& kind)
{
    require_square(Y, "verify_jensen");
    const CMatrix fabs = matrix_function(Y.adjoint() * Y, [&f](double x) { return f(std::sqrt(x)); });
    const CMatrix I = CMatrix::Identity(Y.rows(), Y.cols());
    const double norm_i = ui_norm(I, kind);
    JensenCheck out;
    out.lhs = ui_norm(fabs, kind);
    out.rhs = norm_i * f(ui_norm(Y, kind) / norm_i);
    out.holds = out.lhs <= out.rhs + kCheckTol * std::max(1.0, out.rhs);
    return out;
}

CounterexampleReport counterexample_report()
{
    const cd i{0.0, 1.0};
    CMatrix Y(3, 3);
    Y << 2, 4, 2,
         4, 2, 3,
         2, 3, 4;
    CMatrix A(3, 3);
    A << 5, 3, 3,
         3, 3, 3.0 - i,
         3, 3.0 + i, 5;

    CounterexampleReport rep;
    rep.A = A;
    rep.X = Y / ui_norm(Y, NormKind::operator_norm());
    const RVector s1 = singular_values(commutator(A, rep.X));
    const RVector s2 = singular_values(commutator(A, unitary_exp(rep.X)));
    const auto f = [&rep](double x) { return x / (x + rep.f_shift); };
    for (int k = 0; k < 3; ++k) {
        rep.sigma_commutator[k] = s1(k);
        rep.sigma_exp_commutator[k] = s2(k);
        rep.trace_f_commutator += f(s1(k));
        rep.trace_f_exp_commutator += f(s2(k));
    }
    rep.reversal = rep.trace_f_exp_commutator > rep.trace_f_commutator;
    return rep;
}

} // namespace commlip
