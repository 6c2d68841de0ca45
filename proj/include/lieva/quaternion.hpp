#pragma once

#include "lieva/rational.hpp"

#include <stdexcept>
#include <string>

namespace lieva {

// Quaternion over the exact rationals, components (re, i, j, k).
// Products follow the Hamilton table: ij = -ji = k, jk = -kj = i,
// ki = -ik = j, and i^2 = j^2 = k^2 = -1.
class Quaternion {
public:
    Quaternion() : c_{BigRational(0), BigRational(0), BigRational(0), BigRational(0)} {}
    Quaternion(BigRational re, BigRational i, BigRational j, BigRational k)
        : c_{std::move(re), std::move(i), std::move(j), std::move(k)} {}
    explicit Quaternion(const BigRational& re) : Quaternion(re, 0, 0, 0) {}
    Quaternion(long re) : Quaternion(BigRational(re)) {}

    const BigRational& re() const { return c_[0]; }
    const BigRational& ci() const { return c_[1]; }
    const BigRational& cj() const { return c_[2]; }
    const BigRational& ck() const { return c_[3]; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_real() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    // Purely imaginary: zero real part.
    bool is_imaginary() const { return c_[0].is_zero(); }

    Quaternion operator+(const Quaternion& o) const {
        return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
    }
    Quaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

    Quaternion operator*(const Quaternion& o) const {
        const BigRational &a = c_[0], &b = c_[1], &c = c_[2], &d = c_[3];
        const BigRational &w = o.c_[0], &x = o.c_[1], &y = o.c_[2], &z = o.c_[3];
        return {a * w - b * x - c * y - d * z,
                a * x + b * w + c * z - d * y,
                a * y - b * z + c * w + d * x,
                a * z + b * y - c * x + d * w};
    }

    Quaternion conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

    BigRational norm_sq() const {
        return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
    }

    // x^{-1} = conj(x) / |x|^2; norm_sq is positive for nonzero x, so this is
    // total away from zero.
    Quaternion inverse() const {
        if (is_zero()) throw std::domain_error("quaternion: inverse of zero");
        const BigRational n = norm_sq();
        return {c_[0] / n, -c_[1] / n, -c_[2] / n, -c_[3] / n};
    }

    bool operator==(const Quaternion& o) const {
        return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2] && c_[3] == o.c_[3];
    }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    // Canonical literal: all four components, signs folded, e.g. "1-2i+0j+3/4k".
    std::string to_string() const {
        std::string s = c_[0].to_string();
        const char* units[3] = {"i", "j", "k"};
        for (int t = 1; t <= 3; ++t) {
            if (c_[t].sign() < 0)
                s += "-" + (-c_[t]).to_string();
            else
                s += "+" + c_[t].to_string();
            s += units[t - 1];
        }
        return s;
    }

private:
    BigRational c_[4];
};

} // namespace lieva
