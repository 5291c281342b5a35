// Copyright 2026 The taco authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "taco/angle.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace taco {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;
// Largest denominator exponent considered when snapping floats. Beyond
// this the dyadic grid is finer than any sensible tolerance and snapping
// would fire on arbitrary values.
constexpr int kMaxSnapExp = 24;

double g_angle_tolerance = 1e-9;
}  // namespace

double angle_tolerance() { return g_angle_tolerance; }
void set_angle_tolerance(double tol) { g_angle_tolerance = tol; }

int Angle::pow2_exp(int pow2) {
    int e = 0;
    while ((1 << e) < pow2) ++e;
    if ((1 << e) != pow2) throw std::invalid_argument("pi_over: not a power of two");
    return e;
}

Angle Angle::exact_pi_over_pow2(std::int64_t num, int den_exp) {
    if (den_exp < 0 || den_exp > 61) throw std::invalid_argument("angle denominator exponent out of range");
    Angle a;
    a.exact_ = true;
    a.num_ = num;
    a.den_exp_ = den_exp;
    a.normalize();
    return a;
}

void Angle::normalize() {
    if (!exact_) return;
    // Wrap numerator into [0, 2^(k+1)), i.e. angle in [0, 2*pi).
    const std::int64_t period = std::int64_t{1} << (den_exp_ + 1);
    num_ %= period;
    if (num_ < 0) num_ += period;
    // Reduce the dyadic fraction.
    while (den_exp_ > 0 && num_ % 2 == 0) {
        num_ /= 2;
        --den_exp_;
    }
    if (num_ == 0) den_exp_ = 0;
}

Angle Angle::from_radians(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0) r += kTwoPi;
    const double tol = angle_tolerance();
    // Snap to the coarsest dyadic grid that matches within tolerance. The
    // grid is only searched while its half-spacing exceeds the tolerance,
    // so a snap is always an unambiguous nearest match.
    for (int k = 0; k <= kMaxSnapExp; ++k) {
        const double step = kPi / static_cast<double>(std::int64_t{1} << k);
        if (step / 2.0 <= tol) break;
        const double m = std::nearbyint(r / step);
        if (std::fabs(r - m * step) <= tol) {
            return exact_pi_over_pow2(static_cast<std::int64_t>(m), k);
        }
    }
    Angle a;
    a.exact_ = false;
    a.radians_ = r;
    return a;
}

double Angle::radians() const {
    if (!exact_) return radians_;
    return static_cast<double>(num_) * kPi / static_cast<double>(std::int64_t{1} << den_exp_);
}

bool Angle::is_zero() const {
    if (exact_) return num_ == 0;
    return std::fabs(radians_) <= angle_tolerance() || std::fabs(radians_ - kTwoPi) <= angle_tolerance();
}

bool Angle::is_multiple_of_pi_4() const {
    if (exact_) return den_exp_ <= 2;
    const double step = kPi / 4.0;
    const double m = std::nearbyint(radians_ / step);
    return std::fabs(radians_ - m * step) <= angle_tolerance();
}

bool Angle::is_multiple_of_pi_2() const {
    if (exact_) return den_exp_ <= 1;
    const double step = kPi / 2.0;
    const double m = std::nearbyint(radians_ / step);
    return std::fabs(radians_ - m * step) <= angle_tolerance();
}

int Angle::pi_4_multiple() const {
    if (exact_) {
        if (den_exp_ > 2) throw std::logic_error("pi_4_multiple: not a multiple of pi/4");
        return static_cast<int>(num_ << (2 - den_exp_)) % 8;
    }
    const double step = kPi / 4.0;
    const auto m = static_cast<std::int64_t>(std::nearbyint(radians_ / step));
    if (std::fabs(radians_ - static_cast<double>(m) * step) > angle_tolerance())
        throw std::logic_error("pi_4_multiple: not a multiple of pi/4");
    return static_cast<int>(((m % 8) + 8) % 8);
}

Angle Angle::negated() const {
    if (exact_) return exact_pi_over_pow2(-num_, den_exp_);
    return from_radians(-radians_);
}

Angle Angle::halved() const {
    if (exact_) {
        if (den_exp_ >= 61) return from_radians(radians() / 2.0);
        return exact_pi_over_pow2(num_, den_exp_ + 1);
    }
    return from_radians(radians_ / 2.0);
}

Angle Angle::plus(const Angle& other) const {
    if (exact_ && other.exact_) {
        const int k = std::max(den_exp_, other.den_exp_);
        if (k <= 60) {
            const std::int64_t a = num_ << (k - den_exp_);
            const std::int64_t b = other.num_ << (k - other.den_exp_);
            return exact_pi_over_pow2(a + b, k);
        }
    }
    return from_radians(radians() + other.radians());
}

std::string Angle::to_string() const {
    if (!exact_) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", radians_);
        return buf;
    }
    if (num_ == 0) return "0";
    const std::int64_t den = std::int64_t{1} << den_exp_;
    std::string s;
    if (num_ != 1) s += std::to_string(num_) + "*";
    s += "pi";
    if (den != 1) s += "/" + std::to_string(den);
    return s;
}

bool Angle::operator==(const Angle& other) const {
    if (exact_ != other.exact_) return false;
    if (exact_) return num_ == other.num_ && den_exp_ == other.den_exp_;
    return radians_ == other.radians_;
}

}  // namespace taco
