#pragma once

#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "commlip/matrix_lab.hpp"

namespace testing {

inline commlip::CMatrix random_complex(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> nd(0.0, 1.0);
    commlip::CMatrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) = {nd(rng), nd(rng)};
    return M;
}

inline commlip::CMatrix random_hermitian(int n, std::mt19937_64& rng)
{
    const auto M = random_complex(n, rng);
    return 0.5 * (M + M.adjoint());
}

inline commlip::CMatrix random_psd(int n, std::mt19937_64& rng)
{
    const auto M = random_complex(n, rng);
    commlip::CMatrix A = M.adjoint() * M / static_cast<double>(n);
    return 0.5 * (A + A.adjoint());
}

inline commlip::CMatrix random_unitary(int n, std::mt19937_64& rng)
{
    Eigen::HouseholderQR<commlip::CMatrix> qr(random_complex(n, rng));
    return qr.householderQ() * commlip::CMatrix::Identity(n, n);
}

inline std::vector<commlip::NormKind> all_kinds(int n)
{
    std::vector<commlip::NormKind> kinds{commlip::NormKind::operator_norm(), commlip::NormKind::trace(),
                                         commlip::NormKind::hilbert_schmidt(),
                                         commlip::NormKind::schatten(1.5), commlip::NormKind::schatten(4.0)};
    for (int k = 1; k <= n; ++k) kinds.push_back(commlip::NormKind::ky_fan(k));
    return kinds;
}

struct NamedFn {
    std::string name;
    std::function<double(double)> f;
};

// Non-negative concave functions on [0, inf) with f(0) = 0.
inline std::vector<NamedFn> concave_family()
{
    return {
        {"x/(x+1)", [](double x) { return x / (x + 1.0); }},
        {"sqrt", [](double x) { return std::sqrt(x); }},
        {"x^0.3", [](double x) { return std::pow(x, 0.3); }},
        {"log1p", [](double x) { return std::log1p(x); }},
        {"min(x,0.7)", [](double x) { return std::min(x, 0.7); }},
        {"1-exp(-x)", [](double x) { return -std::expm1(-x); }},
    };
}

} // namespace testing
