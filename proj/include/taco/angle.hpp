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

#include <cstdint>
#include <string>

namespace taco {

/// Tolerance (radians) used when deciding whether a floating-point angle
/// should be canonicalized to an exact dyadic multiple of pi. Global,
/// set once at startup; defaults to 1e-9.
double angle_tolerance();
void set_angle_tolerance(double tol);

/// An angle that is either an exact dyadic multiple of pi
/// (num * pi / 2^den_exp, normalized into [0, 2*pi)) or a generic real
/// number of radians. Exact representation keeps Clifford/T angle
/// detection free of floating-point tolerances.
class Angle {
  public:
    Angle() = default;  // zero

    /// Exact angle num * pi / 2^den_exp. Normalized on construction.
    static Angle exact_pi_over_pow2(std::int64_t num, int den_exp);
    /// From radians; values within angle_tolerance() of a dyadic multiple
    /// of pi are canonicalized to the exact form.
    static Angle from_radians(double radians);
    static Angle zero() { return Angle{}; }
    static Angle pi() { return exact_pi_over_pow2(1, 0); }
    static Angle pi_over(int pow2) { return exact_pi_over_pow2(1, pow2_exp(pow2)); }

    bool is_exact() const { return exact_; }
    /// Numerator of the exact form (valid only when is_exact()).
    std::int64_t num() const { return num_; }
    /// Denominator exponent of the exact form (valid only when is_exact()).
    int den_exp() const { return den_exp_; }

    double radians() const;

    bool is_zero() const;
    /// True when the angle is an exact (or within-tolerance) multiple of
    /// pi/2^k for k = 2 (pi/4), 1 (pi/2), 0 (pi).
    bool is_multiple_of_pi_4() const;
    bool is_multiple_of_pi_2() const;
    /// For a multiple of pi/4: the multiplier in [0, 8). Precondition:
    /// is_multiple_of_pi_4().
    int pi_4_multiple() const;

    Angle negated() const;
    Angle halved() const;
    Angle plus(const Angle& other) const;

    /// Canonical text form used by the QASM emitter and the synthesis
    /// sidecar files: "0", "pi/4", "3*pi/2", "7*pi/64", or a bare decimal.
    std::string to_string() const;

    bool operator==(const Angle& other) const;
    bool operator!=(const Angle& other) const { return !(*this == other); }

  private:
    static int pow2_exp(int pow2);
    void normalize();

    bool exact_ = true;
    std::int64_t num_ = 0;
    int den_exp_ = 0;
    double radians_ = 0.0;
};

}  // namespace taco
