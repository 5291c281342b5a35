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

#include "taco/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace taco {

Circuit make_qft(std::uint32_t n) {
    Circuit c(n, "qft" + std::to_string(n));
    for (std::uint32_t i = 0; i < n; ++i) {
        c.append(Gate::h(i));
        for (std::uint32_t j = i + 1; j < n; ++j) {
            c.append(Gate::cp(Angle::exact_pi_over_pow2(1, static_cast<int>(j - i)), j, i));
        }
    }
    return c;
}

Circuit make_qpe(std::uint32_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("qpe needs at least 2 qubits");
    const std::uint32_t counting = n - 1;
    const std::uint32_t target = n - 1;
    Circuit c(n, "qpe" + std::to_string(n));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * 3.14159265358979324);
    const double phi = dist(rng);

    c.append(Gate::x(target));  // eigenstate |1> of the phase gate
    for (std::uint32_t i = 0; i < counting; ++i) c.append(Gate::h(i));
    // Controlled-U^(2^i) for U = RZ(phi) is a controlled phase of 2^i*phi.
    for (std::uint32_t i = 0; i < counting; ++i) {
        const double turns = std::pow(2.0, static_cast<double>(i)) * phi;
        c.append(Gate::cp(Angle::from_radians(turns), i, target));
    }
    // Inverse QFT on the counting register.
    for (std::uint32_t ii = counting; ii-- > 0;) {
        for (std::uint32_t j = counting; j-- > ii + 1;) {
            c.append(Gate::cp(Angle::exact_pi_over_pow2(-1, static_cast<int>(j - ii)), j, ii));
        }
        c.append(Gate::h(ii));
    }
    return c;
}

Circuit make_ising(std::uint32_t n, std::uint32_t steps) {
    Circuit c(n, "ising" + std::to_string(n));
    const Angle zz = Angle::from_radians(0.2);  // 2*J*dt with J=1, dt=0.1
    const Angle xf = Angle::from_radians(0.2);  // 2*h*dt
    for (std::uint32_t s = 0; s < steps; ++s) {
        for (std::uint32_t i = 0; i + 1 < n; ++i) {
            c.append(Gate::cx(i, i + 1));
            c.append(Gate::rz(zz, i + 1));
            c.append(Gate::cx(i, i + 1));
        }
        for (std::uint32_t i = 0; i < n; ++i) c.append(Gate::rx(xf, i));
    }
    return c;
}

Circuit make_wstate(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("wstate needs at least 1 qubit");
    Circuit c(n, "wstate" + std::to_string(n));
    c.append(Gate::x(0));
    // Controlled-RY cascade moving 1/sqrt(n) of the amplitude at each step.
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        const double theta = 2.0 * std::acos(1.0 / std::sqrt(static_cast<double>(n - i)));
        const Angle half = Angle::from_radians(theta / 2.0);
        c.append(Gate::ry(half, i + 1));
        c.append(Gate::cx(i, i + 1));
        c.append(Gate::ry(half.negated(), i + 1));
        c.append(Gate::cx(i, i + 1));
        c.append(Gate::cx(i + 1, i));
    }
    return c;
}

Circuit make_from_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    auto num = [&](size_t i, long long fallback) -> long long {
        if (i >= parts.size() || parts[i].empty()) return fallback;
        return std::stoll(parts[i]);
    };
    if (parts.empty()) throw std::invalid_argument("empty generator spec");
    const std::string& kind = parts[0];
    if (kind == "qft") return make_qft(static_cast<std::uint32_t>(num(1, -1)));
    if (kind == "qpe")
        return make_qpe(static_cast<std::uint32_t>(num(1, -1)),
                        static_cast<std::uint64_t>(num(2, 7)));
    if (kind == "ising")
        return make_ising(static_cast<std::uint32_t>(num(1, -1)),
                          static_cast<std::uint32_t>(num(2, 1)));
    if (kind == "wstate") return make_wstate(static_cast<std::uint32_t>(num(1, -1)));
    throw std::invalid_argument("unknown generator '" + kind + "'");
}

}  // namespace taco
