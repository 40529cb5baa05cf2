#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <vector>

#include "bcpa/errors.hpp"

namespace bcpa {

// Magnitudes below this are chopped to exactly zero when correlating.
inline constexpr double kDefaultTol = 1e-5;

// a mod m with a result in [0, m) for any sign of a.
inline int floor_mod(long long a, int m) {
    const long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Value of exponent e over r roots of unity: exp(2*pi*i*e/r).
inline std::complex<double> root_value(long long e, int r) {
    if (r < 1) throw InvalidOrderError("root order must be >= 1, got " + std::to_string(r));
    const double arg = 2.0 * std::numbers::pi * floor_mod(e, r) / r;
    return {std::cos(arg), std::sin(arg)};
}

// Exact arithmetic on exponents of r-th roots of unity. Multiplying values is
// adding exponents mod r; floating complex appears only through value()/corr_term().
class RootOps {
public:
    using Element = int;
    using Value = std::complex<double>;

    explicit RootOps(int r) : r_(r) {
        if (r < 1) throw InvalidOrderError("root order must be >= 1, got " + std::to_string(r));
        unit_.reserve(static_cast<std::size_t>(r_));
        for (int t = 0; t < r_; ++t) unit_.push_back(root_value(t, r_));
    }

    int order() const { return r_; }
    Element identity() const { return 0; }
    Element mul(Element a, Element b) const {
        const int s = a + b;
        return s >= r_ ? s - r_ : s;
    }
    Element conj(Element a) const { return a == 0 ? 0 : r_ - a; }
    Value value(Element a) const { return unit_[static_cast<std::size_t>(a)]; }
    // a * conj(b), formed exactly in exponent space before evaluation
    Value corr_term(Element a, Element b) const {
        const int t = a - b;
        return unit_[static_cast<std::size_t>(t < 0 ? t + r_ : t)];
    }
    Value zero() const { return {0.0, 0.0}; }
    double magnitude(const Value& v) const { return std::abs(v); }

private:
    int r_;
    std::vector<Value> unit_;
};

template <typename T>
struct Quaternion {
    T w{}, x{}, y{}, z{};

    friend bool operator==(const Quaternion&, const Quaternion&) = default;

    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    Quaternion& operator+=(const Quaternion& o) {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
};

// Hamilton product (non-commutative).
template <typename T>
Quaternion<T> operator*(const Quaternion<T>& p, const Quaternion<T>& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

template <typename T>
Quaternion<T> conj(const Quaternion<T>& q) {
    return {q.w, -q.x, -q.y, -q.z};
}

template <typename T>
T norm2(const Quaternion<T>& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

template <typename T>
double norm(const Quaternion<T>& q) {
    return std::sqrt(static_cast<double>(norm2(q)));
}

template <typename To, typename From>
Quaternion<To> quat_cast(const Quaternion<From>& q) {
    return {static_cast<To>(q.w), static_cast<To>(q.x), static_cast<To>(q.y),
            static_cast<To>(q.z)};
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Quaternion<T>& q) {
    return os << '(' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ')';
}

// Same operation set as RootOps, over exact unit quaternions. Correlation
// values accumulate componentwise; sums of the bundled data stay integral.
struct QuatOps {
    using Element = Quaternion<int>;
    using Value = Quaternion<double>;

    Element identity() const { return {1, 0, 0, 0}; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element conj(const Element& a) const { return bcpa::conj(a); }
    Value value(const Element& a) const { return quat_cast<double>(a); }
    Value corr_term(const Element& a, const Element& b) const {
        return quat_cast<double>(a * bcpa::conj(b));
    }
    Value zero() const { return {}; }
    double magnitude(const Value& v) const { return norm(v); }
};

}  // namespace bcpa
