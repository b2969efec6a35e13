#include "frameposet/scalar.hpp"

#include <cmath>
#include <sstream>

namespace frameposet {

namespace {

[[noreturn]] void throw_mixed(const char* what) {
    throw MixedModeError(std::string("incompatible scalar variants: ") + what);
}

int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

// Sign of a + b*sqrt(d) with d square-free >= 2 and b != 0.
int sign_of_quad(const Rational& a, const Rational& b, long long d) {
    const int sa = sign_of(a);
    const int sb = sign_of(b);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2*d. Equality would force sqrt(d)
    // rational, impossible for square-free d >= 2.
    const Rational lhs = a * a;
    const Rational rhs = b * b * Rational(d);
    if (lhs == rhs) throw Error("sqrt(d) rational: non-square-free d slipped through");
    return lhs > rhs ? sa : sb;
}

double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace

long long squarefree_part(long long d, long long& square_root_factor) {
    if (d <= 0) throw ValidationError("quadratic extension requires positive d");
    square_root_factor = 1;
    for (long long p = 2; p * p <= d; ++p) {
        while (d % (p * p) == 0) {
            d /= p * p;
            square_root_factor *= p;
        }
    }
    return d;
}

Scalar Scalar::make_quad_normalized(Rational a, Rational b, long long d) {
    long long s = 1;
    d = squarefree_part(d, s);
    b *= Rational(s);
    if (b == 0 || d == 1) {
        if (d == 1) a += b;
        return Scalar(a);
    }
    Scalar out;
    out.v_ = QuadValue{std::move(a), std::move(b), d};
    return out;
}

Scalar Scalar::quad(const Rational& a, const Rational& b, long long d) {
    return make_quad_normalized(a, b, d);
}

Scalar Scalar::gaussian(const Rational& re, const Rational& im) {
    if (im == 0) return Scalar(re);
    Scalar out;
    out.v_ = GaussianValue{re, im};
    return out;
}

Scalar Scalar::complex_float(std::complex<double> z) {
    if (z.imag() == 0.0) return real_float(z.real());
    Scalar out;
    out.v_ = z;
    return out;
}

const Rational& Scalar::rational_value() const {
    if (kind() != Kind::Rational) throw Error("scalar is not rational");
    return std::get<Rational>(v_);
}

const Scalar::QuadValue& Scalar::quad_value() const {
    if (kind() != Kind::Quad) throw Error("scalar is not quadratic");
    return std::get<QuadValue>(v_);
}

const Scalar::GaussianValue& Scalar::gaussian_value() const {
    if (kind() != Kind::Gaussian) throw Error("scalar is not Gaussian rational");
    return std::get<GaussianValue>(v_);
}

double Scalar::float_value() const {
    if (kind() != Kind::Float) throw Error("scalar is not a float");
    return std::get<double>(v_);
}

std::complex<double> Scalar::complex_float_value() const {
    if (kind() != Kind::ComplexFloat) throw Error("scalar is not a complex float");
    return std::get<std::complex<double>>(v_);
}

Scalar Scalar::real_part() const {
    switch (kind()) {
        case Kind::Gaussian: return Scalar(gaussian_value().re);
        case Kind::ComplexFloat: return real_float(complex_float_value().real());
        default: return *this;
    }
}

Scalar Scalar::imag_part() const {
    switch (kind()) {
        case Kind::Gaussian: return Scalar(gaussian_value().im);
        case Kind::ComplexFloat: return real_float(complex_float_value().imag());
        default:
            return is_exact() ? Scalar(0) : real_float(0.0);
    }
}

Scalar Scalar::operator-() const {
    switch (kind()) {
        case Kind::Rational: return Scalar(Rational(-rational_value()));
        case Kind::Quad: {
            const auto& q = quad_value();
            Scalar out;
            out.v_ = QuadValue{-q.a, -q.b, q.d};
            return out;
        }
        case Kind::Gaussian: {
            const auto& g = gaussian_value();
            return gaussian(-g.re, -g.im);
        }
        case Kind::Float: return real_float(-float_value());
        case Kind::ComplexFloat: return complex_float(-complex_float_value());
    }
    throw Error("unreachable");
}

Scalar Scalar::conjugate() const {
    switch (kind()) {
        case Kind::Gaussian: {
            const auto& g = gaussian_value();
            return gaussian(g.re, -g.im);
        }
        case Kind::ComplexFloat: return complex_float(std::conj(complex_float_value()));
        default: return *this;
    }
}

namespace {

enum class Family { Exact, Float };

Family family_of(const Scalar& s) {
    return s.is_exact() ? Family::Exact : Family::Float;
}

} // namespace

namespace {

Rational quad_a_of(const Scalar& s) {
    return s.kind() == Scalar::Kind::Quad ? s.quad_value().a : s.rational_value();
}
Rational quad_b_of(const Scalar& s) {
    return s.kind() == Scalar::Kind::Quad ? s.quad_value().b : Rational(0);
}
Rational re_of(const Scalar& s) {
    return s.kind() == Scalar::Kind::Gaussian ? s.gaussian_value().re : s.rational_value();
}
Rational im_of(const Scalar& s) {
    return s.kind() == Scalar::Kind::Gaussian ? s.gaussian_value().im : Rational(0);
}

enum class ExactOp { Add, Sub, Mul };

Scalar exact_binop(const Scalar& x, const Scalar& y, ExactOp op) {
    using K = Scalar::Kind;
    const bool xq = x.kind() == K::Quad, yq = y.kind() == K::Quad;
    const bool xg = x.kind() == K::Gaussian, yg = y.kind() == K::Gaussian;
    if ((xq && yg) || (xg && yq)) throw_mixed("quadratic and Gaussian");
    if (xq || yq) {
        const long long d = xq ? x.quad_value().d : y.quad_value().d;
        if (xq && yq && x.quad_value().d != y.quad_value().d)
            throw_mixed("different quadratic extensions");
        const Rational a1 = quad_a_of(x), b1 = quad_b_of(x);
        const Rational a2 = quad_a_of(y), b2 = quad_b_of(y);
        switch (op) {
            case ExactOp::Add: return Scalar::quad(a1 + a2, b1 + b2, d);
            case ExactOp::Sub: return Scalar::quad(a1 - a2, b1 - b2, d);
            case ExactOp::Mul:
                return Scalar::quad(a1 * a2 + b1 * b2 * Rational(d), a1 * b2 + a2 * b1, d);
        }
    }
    if (xg || yg) {
        const Rational r1 = re_of(x), i1 = im_of(x);
        const Rational r2 = re_of(y), i2 = im_of(y);
        switch (op) {
            case ExactOp::Add: return Scalar::gaussian(r1 + r2, i1 + i2);
            case ExactOp::Sub: return Scalar::gaussian(r1 - r2, i1 - i2);
            case ExactOp::Mul: return Scalar::gaussian(r1 * r2 - i1 * i2, r1 * i2 + i1 * r2);
        }
    }
    const Rational& a = x.rational_value();
    const Rational& b = y.rational_value();
    switch (op) {
        case ExactOp::Add: return Scalar(Rational(a + b));
        case ExactOp::Sub: return Scalar(Rational(a - b));
        case ExactOp::Mul: return Scalar(Rational(a * b));
    }
    throw Error("unreachable");
}

Scalar binop(const Scalar& x, const Scalar& y, ExactOp op) {
    using K = Scalar::Kind;
    if (family_of(x) != family_of(y)) throw_mixed("exact and float");
    if (family_of(x) == Family::Float) {
        if (x.kind() == K::ComplexFloat || y.kind() == K::ComplexFloat) {
            const auto a = x.to_complex(), b = y.to_complex();
            switch (op) {
                case ExactOp::Add: return Scalar::complex_float(a + b);
                case ExactOp::Sub: return Scalar::complex_float(a - b);
                case ExactOp::Mul: return Scalar::complex_float(a * b);
            }
        }
        const double a = x.float_value(), b = y.float_value();
        switch (op) {
            case ExactOp::Add: return Scalar::real_float(a + b);
            case ExactOp::Sub: return Scalar::real_float(a - b);
            case ExactOp::Mul: return Scalar::real_float(a * b);
        }
    }
    return exact_binop(x, y, op);
}

} // namespace

Scalar operator+(const Scalar& x, const Scalar& y) { return binop(x, y, ExactOp::Add); }
Scalar operator-(const Scalar& x, const Scalar& y) { return binop(x, y, ExactOp::Sub); }
Scalar operator*(const Scalar& x, const Scalar& y) { return binop(x, y, ExactOp::Mul); }

Scalar operator/(const Scalar& x, const Scalar& y) {
    using K = Scalar::Kind;
    if (family_of(x) != family_of(y)) throw_mixed("exact and float");
    if (y.is_zero()) throw ValidationError("division by zero scalar");
    if (family_of(x) == Family::Float) {
        if (x.kind() == K::ComplexFloat || y.kind() == K::ComplexFloat)
            return Scalar::complex_float(x.to_complex() / y.to_complex());
        return Scalar::real_float(x.float_value() / y.float_value());
    }
    switch (y.kind()) {
        case K::Rational: {
            const Rational inv = 1 / y.rational_value();
            return x * Scalar(inv);
        }
        case K::Quad: {
            // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2-b^2 d)
            const auto& q = y.quad_value();
            const Rational denom = q.a * q.a - q.b * q.b * Rational(q.d);
            if (denom == 0) throw Error("quad norm vanished: non-square-free d");
            return x * Scalar::quad(q.a / denom, -q.b / denom, q.d);
        }
        case K::Gaussian: {
            const auto& g = y.gaussian_value();
            const Rational denom = g.re * g.re + g.im * g.im;
            return x * Scalar::gaussian(g.re / denom, -g.im / denom);
        }
        default: throw Error("unreachable");
    }
}

bool Scalar::operator==(const Scalar& o) const {
    if (kind() != o.kind()) return false; // canonical forms make kinds comparable
    switch (kind()) {
        case Kind::Rational: return rational_value() == o.rational_value();
        case Kind::Quad: {
            const auto& p = quad_value();
            const auto& q = o.quad_value();
            return p.d == q.d && p.a == q.a && p.b == q.b;
        }
        case Kind::Gaussian: {
            const auto& p = gaussian_value();
            const auto& q = o.gaussian_value();
            return p.re == q.re && p.im == q.im;
        }
        case Kind::Float: return float_value() == o.float_value();
        case Kind::ComplexFloat: return complex_float_value() == o.complex_float_value();
    }
    return false;
}

bool Scalar::is_zero() const {
    switch (kind()) {
        case Kind::Rational: return rational_value() == 0;
        case Kind::Quad: return false;      // canonical form: b != 0
        case Kind::Gaussian: return false;  // canonical form: im != 0
        case Kind::Float: return float_value() == 0.0;
        case Kind::ComplexFloat: return complex_float_value() == std::complex<double>(0.0, 0.0);
    }
    return false;
}

int Scalar::sign() const {
    switch (kind()) {
        case Kind::Rational: return sign_of(rational_value());
        case Kind::Quad: {
            const auto& q = quad_value();
            return sign_of_quad(q.a, q.b, q.d);
        }
        case Kind::Float: {
            const double v = float_value();
            return v > 0 ? 1 : (v < 0 ? -1 : 0);
        }
        default:
            throw ValidationError("sign of a complex scalar is undefined");
    }
}

double Scalar::to_double() const {
    switch (kind()) {
        case Kind::Rational: return rational_to_double(rational_value());
        case Kind::Quad: {
            const auto& q = quad_value();
            return rational_to_double(q.a) +
                   rational_to_double(q.b) * std::sqrt(static_cast<double>(q.d));
        }
        case Kind::Float: return float_value();
        default:
            throw ValidationError("to_double on a complex scalar");
    }
}

std::complex<double> Scalar::to_complex() const {
    switch (kind()) {
        case Kind::Gaussian: {
            const auto& g = gaussian_value();
            return {rational_to_double(g.re), rational_to_double(g.im)};
        }
        case Kind::ComplexFloat: return complex_float_value();
        default: return {to_double(), 0.0};
    }
}

std::string Scalar::str() const {
    std::ostringstream os;
    switch (kind()) {
        case Kind::Rational: os << rational_value(); break;
        case Kind::Quad: {
            const auto& q = quad_value();
            os << q.a;
            os << (q.b > 0 ? "+" : "") << q.b << "*sqrt(" << q.d << ")";
            break;
        }
        case Kind::Gaussian: {
            const auto& g = gaussian_value();
            os << g.re << (g.im > 0 ? "+" : "") << g.im << "i";
            break;
        }
        case Kind::Float: os << float_value(); break;
        case Kind::ComplexFloat: {
            const auto z = complex_float_value();
            os << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
            break;
        }
    }
    return os.str();
}

bool scalar_is_zero(const Scalar& x, const Tolerance& tol, double context_scale) {
    if (x.is_exact()) return x.is_zero();
    const double bound = std::max(tol.absolute, tol.relative * std::abs(context_scale));
    if (x.kind() == Scalar::Kind::ComplexFloat) return std::abs(x.complex_float_value()) <= bound;
    return std::abs(x.float_value()) <= bound;
}

Scalar norm_sq(const Scalar& x) {
    switch (x.kind()) {
        case Scalar::Kind::Gaussian: {
            const auto& g = x.gaussian_value();
            return Scalar(Rational(g.re * g.re + g.im * g.im));
        }
        case Scalar::Kind::ComplexFloat: return Scalar::real_float(std::norm(x.complex_float_value()));
        default: return x * x;
    }
}

} // namespace frameposet
