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

#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace taco {

/// Element of Z[omega] / sqrt(2)^k, omega = exp(i*pi/4):
///
///   (a + b*omega + c*omega^2 + d*omega^3) / sqrt(2)^k
///
/// Always kept reduced: k = 0, or the numerator is not divisible by
/// sqrt(2) (divisibility criterion: a = c and b = d mod 2). All
/// operations are exact integer arithmetic; this is the exact carrier of
/// single-qubit Clifford+T entries.
class RingElt {
  public:
    RingElt() = default;
    RingElt(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int k = 0)
        : a_(a), b_(b), c_(c), d_(d), k_(k) {
        reduce();
    }

    static RingElt zero() { return {}; }
    static RingElt one() { return {1, 0, 0, 0}; }
    static RingElt omega(int power = 1);          // omega^power, power mod 8
    static RingElt inv_sqrt2(int k) { return RingElt(1, 0, 0, 0, k); }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }
    int k() const { return k_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

    RingElt operator+(const RingElt& rhs) const;
    RingElt operator-(const RingElt& rhs) const;
    RingElt operator*(const RingElt& rhs) const;
    RingElt operator-() const { return RingElt(-a_, -b_, -c_, -d_, k_); }
    /// Complex conjugate.
    RingElt conj() const { return RingElt(a_, -d_, -c_, -b_, k_); }
    /// Multiplication by omega^power without rescaling.
    RingElt times_omega(int power) const;

    /// Numerator residues mod 2 packed as (a&1) | (b&1)<<1 | (c&1)<<2 | (d&1)<<3.
    int residue() const {
        return static_cast<int>((a_ & 1) | ((b_ & 1) << 1) | ((c_ & 1) << 2) | ((d_ & 1) << 3));
    }

    std::complex<double> to_complex() const;
    std::string to_string() const;

    bool operator==(const RingElt& rhs) const {
        return a_ == rhs.a_ && b_ == rhs.b_ && c_ == rhs.c_ && d_ == rhs.d_ && k_ == rhs.k_;
    }
    bool operator!=(const RingElt& rhs) const { return !(*this == rhs); }

  private:
    void reduce();
    /// Rescales to denominator exponent `target_k` >= k by multiplying the
    /// numerator with sqrt(2)^(target_k - k).
    RingElt with_k(int target_k) const;

    std::int64_t a_ = 0, b_ = 0, c_ = 0, d_ = 0;
    int k_ = 0;

    friend struct RingEltHash;
};

struct RingEltHash {
    std::size_t operator()(const RingElt& r) const;
};

}  // namespace taco
