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

#include "taco/ring.hpp"

#include <cmath>
#include <stdexcept>

namespace taco {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

RingElt RingElt::omega(int power) {
    int p = ((power % 8) + 8) % 8;
    const std::int64_t sign = p >= 4 ? -1 : 1;
    p %= 4;
    std::int64_t co[4] = {0, 0, 0, 0};
    co[p] = sign;
    return {co[0], co[1], co[2], co[3]};
}

void RingElt::reduce() {
    if (is_zero()) {
        k_ = 0;
        return;
    }
    // x/sqrt(2) exists in the ring iff a=c and b=d mod 2; then
    // x/sqrt(2) = ((b-d)/2? ...) -- solved from y*sqrt(2) = x with
    // sqrt(2) = omega - omega^3.
    while (k_ > 0 && ((a_ ^ c_) & 1) == 0 && ((b_ ^ d_) & 1) == 0) {
        const std::int64_t na = (b_ - d_) / 2;
        const std::int64_t nb = (a_ + c_) / 2;
        const std::int64_t nc = (b_ + d_) / 2;
        const std::int64_t nd = (c_ - a_) / 2;
        a_ = na;
        b_ = nb;
        c_ = nc;
        d_ = nd;
        --k_;
    }
}

RingElt RingElt::with_k(int target_k) const {
    RingElt r = *this;
    while (r.k_ < target_k) {
        // Multiply numerator by sqrt(2) = omega - omega^3.
        const std::int64_t na = r.b_ - r.d_;
        const std::int64_t nb = r.a_ + r.c_;
        const std::int64_t nc = r.b_ + r.d_;
        const std::int64_t nd = r.c_ - r.a_;
        r.a_ = na;
        r.b_ = nb;
        r.c_ = nc;
        r.d_ = nd;
        ++r.k_;
    }
    return r;
}

RingElt RingElt::operator+(const RingElt& rhs) const {
    const int k = std::max(k_, rhs.k_);
    const RingElt x = with_k(k);
    const RingElt y = rhs.with_k(k);
    return RingElt(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_, k);
}

RingElt RingElt::operator-(const RingElt& rhs) const { return *this + (-rhs); }

namespace {
std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("RingElt: coefficient overflow (word too long)");
    return r;
}
std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("RingElt: coefficient overflow (word too long)");
    return r;
}
std::int64_t dot4(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s,
                  std::int64_t t, std::int64_t u, std::int64_t v, std::int64_t w) {
    return checked_add(checked_add(checked_mul(p, q), checked_mul(r, s)),
                       checked_add(checked_mul(t, u), checked_mul(v, w)));
}
}  // namespace

RingElt RingElt::operator*(const RingElt& rhs) const {
    // omega^4 = -1 wraps the degree-3..6 terms with sign flips.
    const std::int64_t a = dot4(a_, rhs.a_, -b_, rhs.d_, -c_, rhs.c_, -d_, rhs.b_);
    const std::int64_t b = dot4(a_, rhs.b_, b_, rhs.a_, -c_, rhs.d_, -d_, rhs.c_);
    const std::int64_t c = dot4(a_, rhs.c_, b_, rhs.b_, c_, rhs.a_, -d_, rhs.d_);
    const std::int64_t d = dot4(a_, rhs.d_, b_, rhs.c_, c_, rhs.b_, d_, rhs.a_);
    return RingElt(a, b, c, d, k_ + rhs.k_);
}

RingElt RingElt::times_omega(int power) const {
    return *this * omega(power);
}

std::complex<double> RingElt::to_complex() const {
    const std::complex<double> w(kInvSqrt2, kInvSqrt2);  // omega
    std::complex<double> v = static_cast<double>(a_) + static_cast<double>(b_) * w +
                             static_cast<double>(c_) * (w * w) +
                             static_cast<double>(d_) * (w * w * w);
    return v * std::pow(kInvSqrt2, k_);
}

std::string RingElt::to_string() const {
    std::string s = "(" + std::to_string(a_) + "," + std::to_string(b_) + "," +
                    std::to_string(c_) + "," + std::to_string(d_) + ")";
    if (k_ > 0) s += "/r2^" + std::to_string(k_);
    return s;
}

std::size_t RingEltHash::operator()(const RingElt& r) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(r.a_));
    mix(static_cast<std::uint64_t>(r.b_));
    mix(static_cast<std::uint64_t>(r.c_));
    mix(static_cast<std::uint64_t>(r.d_));
    mix(static_cast<std::uint64_t>(r.k_));
    return h;
}

}  // namespace taco
