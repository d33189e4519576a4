#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <type_traits>

namespace kernint {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

/// Scalars the evaluation layer is instantiated on.
template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, complex>;

template <Scalar T>
constexpr double real_part(const T& z) {
    if constexpr (is_complex<T>::value) {
        return z.real();
    } else {
        return z;
    }
}

template <Scalar T>
constexpr double imag_part(const T& z) {
    if constexpr (is_complex<T>::value) {
        return z.imag();
    } else {
        return 0.0;
    }
}

/// Radius below which removable singularities switch to their Taylor limits.
inline constexpr double eps_lim = 1e-8;

/// sin(z)/z, with the 4th-order Taylor polynomial inside |z| < eps_lim.
template <Scalar T>
T sinc(const T& z) {
    using std::abs;
    using std::sin;
    if (abs(z) < eps_lim) {
        const T z2 = z * z;
        return T(1.0) - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return sin(z) / z;
}

}  // namespace kernint
