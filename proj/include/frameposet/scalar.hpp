#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

#include "frameposet/errors.hpp"

namespace frameposet {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Tolerances for float-mode comparisons. Exact-mode code ignores them.
struct Tolerance {
    double absolute = 1e-9;
    double relative = 1e-9;
};

/// Exact scalar tower shared by every module: rationals, Gaussian rationals
/// (complex), and real quadratic extensions a + b*sqrt(d), plus plain doubles
/// for float mode. Values are kept canonical:
///   - rationals in lowest terms with positive denominator (mpq invariant),
///   - quad values with b != 0 and d square-free >= 2 (b == 0 demotes to
///     Rational, square factors of d are folded into b),
///   - Gaussian values with im != 0 (im == 0 demotes to Rational).
/// Exact and float values never mix; doing so throws MixedModeError.
class Scalar {
public:
    enum class Kind { Rational, Quad, Gaussian, Float, ComplexFloat };

    struct QuadValue {
        Rational a, b;     // a + b*sqrt(d)
        long long d = 2;   // square-free, >= 2
    };
    struct GaussianValue {
        Rational re, im;   // im != 0
    };

    Scalar() : v_(Rational(0)) {}
    Scalar(int x) : v_(Rational(x)) {}
    Scalar(long long x) : v_(Rational(x)) {}
    Scalar(const Rational& r) : v_(r) {}
    Scalar(Rational&& r) : v_(std::move(r)) {}

    static Scalar quad(const Rational& a, const Rational& b, long long d);
    static Scalar gaussian(const Rational& re, const Rational& im);
    static Scalar real_float(double x) { Scalar s; s.v_ = x; return s; }
    static Scalar complex_float(std::complex<double> z);

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    bool is_exact() const { return kind() != Kind::Float && kind() != Kind::ComplexFloat; }
    bool is_real() const { return kind() != Kind::Gaussian && kind() != Kind::ComplexFloat; }

    const Rational& rational_value() const;
    const QuadValue& quad_value() const;
    const GaussianValue& gaussian_value() const;
    double float_value() const;
    std::complex<double> complex_float_value() const;

    // Real part / imaginary part as scalars of the matching real kind.
    Scalar real_part() const;
    Scalar imag_part() const;

    Scalar operator-() const;
    Scalar conjugate() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y); // throws on /0
    Scalar& operator+=(const Scalar& y) { *this = *this + y; return *this; }
    Scalar& operator-=(const Scalar& y) { *this = *this - y; return *this; }
    Scalar& operator*=(const Scalar& y) { *this = *this * y; return *this; }
    Scalar& operator/=(const Scalar& y) { *this = *this / y; return *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Exact structural zero for exact kinds; floats compare against 0.0
    // bitwise (use scalar_is_zero for tolerant tests).
    bool is_zero() const;

    // Sign of a real scalar: -1, 0, +1. Throws on complex kinds.
    int sign() const;

    // Ordering of real scalars via sign of the difference.
    bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
    bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

    double to_double() const;               // real kinds only
    std::complex<double> to_complex() const;

    // Canonical text form, e.g. "-3/4", "1/2+3/2*sqrt(2)", "1-2i", "0.25".
    std::string str() const;

private:
    std::variant<Rational, QuadValue, GaussianValue, double, std::complex<double>> v_;

    static Scalar make_quad_normalized(Rational a, Rational b, long long d);
};

/// True iff x is (tolerantly) zero. Exact kinds test mathematical zero and
/// ignore tol; floats test |x| <= max(tol.absolute, tol.relative * scale).
/// The context scale is supplied by the caller (default 1).
bool scalar_is_zero(const Scalar& x, const Tolerance& tol, double context_scale = 1.0);

/// x * conj(x) as a real scalar of the matching kind.
Scalar norm_sq(const Scalar& x);

/// Largest square-free divisor decomposition: d = s^2 * squarefree(d).
long long squarefree_part(long long d, long long& square_root_factor);

} // namespace frameposet
