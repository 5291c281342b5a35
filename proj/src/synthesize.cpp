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

#include "taco/synthesize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "taco/qasm.hpp"

namespace taco {

double synth_distance(const Unitary2& a, const Unitary2& b) { return projective_distance(a, b); }

namespace {

// ---------------------------------------------------------------------
// SU(2) quaternion machinery for the bounded search. All comparisons are
// projective, so the determinant phase of each factor is normalized away
// once and products stay in SU(2).

struct Quat {
    double w = 1, x = 0, y = 0, z = 0;
};

Quat su2_of(const Unitary2& u) {
    const cplx det = u.e[0] * u.e[3] - u.e[1] * u.e[2];
    const cplx s = std::sqrt(det);
    Quat q;
    q.w = (u.e[0] / s + u.e[3] / s).real() / 2.0;
    q.z = (u.e[0] / s - u.e[3] / s).imag() / 2.0;
    q.x = (u.e[1] / s + u.e[2] / s).imag() / 2.0;
    q.y = (u.e[1] / s - u.e[2] / s).real() / 2.0;
    return q;
}

// Product in the U = w + i(v . sigma) parameterization.
Quat qmul(const Quat& a, const Quat& b) {
    Quat r;
    r.w = a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z;
    r.x = a.w * b.x + b.w * a.x - (a.y * b.z - a.z * b.y);
    r.y = a.w * b.y + b.w * a.y - (a.z * b.x - a.x * b.z);
    r.z = a.w * b.z + b.w * a.z - (a.x * b.y - a.y * b.x);
    return r;
}

Quat qconj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }

double qdot(const Quat& a, const Quat& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

struct SearchTables {
    Quat t, ht, sht;
    Quat cliff[CliffordClass::kCount];
    SearchTables() {
        t = su2_of(ExactUnitary::of_kind(GateKind::T).to_unitary2());
        const auto H = ExactUnitary::of_kind(GateKind::H);
        const auto T = ExactUnitary::of_kind(GateKind::T);
        const auto S = ExactUnitary::of_kind(GateKind::S);
        ht = su2_of(H.times(T).to_unitary2());
        sht = su2_of(S.times(H).times(T).to_unitary2());
        for (int c = 0; c < CliffordClass::kCount; ++c)
            cliff[c] = su2_of(CliffordClass::from_index(c).exact().to_unitary2());
    }
};

const SearchTables& search_tables() {
    static const SearchTables t;
    return t;
}

// Spatial hash over S^3 used by the meet-in-the-middle levels.
struct PointGrid {
    double cell = 1.0;
    std::vector<Quat> points;
    std::vector<std::uint32_t> payload;    // syllable bits * 24 + clifford
    std::vector<std::int32_t> next;        // intrusive chains per cell
    std::unordered_map<std::uint64_t, std::int32_t> head;

    std::uint64_t key_of(double w, double x, double y, double z) const {
        auto comp = [this](double v) -> std::uint64_t {
            return static_cast<std::uint64_t>(
                       static_cast<std::int64_t>(std::floor(v / cell)) + 32768) &
                   0xffff;
        };
        return comp(w) | comp(x) << 16 | comp(y) << 32 | comp(z) << 48;
    }

    void insert(const Quat& q, std::uint32_t data) {
        const auto idx = static_cast<std::int32_t>(points.size());
        points.push_back(q);
        payload.push_back(data);
        const auto k = key_of(q.w, q.x, q.y, q.z);
        auto it = head.find(k);
        next.push_back(it == head.end() ? -1 : it->second);
        head[k] = idx;
    }

    template <typename Fn>
    void for_neighbors(const Quat& p, Fn&& fn) const {
        for (int dw = -1; dw <= 1; ++dw)
            for (int dx = -1; dx <= 1; ++dx)
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dz = -1; dz <= 1; ++dz) {
                        const auto k = key_of(p.w + dw * cell, p.x + dx * cell, p.y + dy * cell,
                                              p.z + dz * cell);
                        auto it = head.find(k);
                        if (it == head.end()) continue;
                        for (std::int32_t i = it->second; i >= 0; i = next[i])
                            fn(points[i], payload[i]);
                    }
    }
};

struct Candidate {
    bool leading_t;
    std::vector<Syllable> syllables;
    int clifford;

    bool operator<(const Candidate& rhs) const {
        if (leading_t != rhs.leading_t) return !leading_t;
        if (syllables != rhs.syllables) return syllables < rhs.syllables;
        return clifford < rhs.clifford;
    }
};

std::vector<Syllable> bits_to_syllables(std::uint32_t bits, int len) {
    std::vector<Syllable> s(len);
    for (int i = 0; i < len; ++i) s[i] = (bits >> i) & 1 ? Syllable::SHT : Syllable::HT;
    return s;
}

// Enumerates all products of `len` syllables, leftmost syllable indexed
// by bit 0, invoking fn(bits, quat).
template <typename Fn>
void enumerate_strings(int len, const Quat& seed, Fn&& fn) {
    const auto& tb = search_tables();
    struct Frame {
        std::uint32_t bits;
        int depth;
        Quat q;
    };
    std::vector<Frame> stack{{0u, 0, seed}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (f.depth == len) {
            fn(f.bits, f.q);
            continue;
        }
        stack.push_back({f.bits | (1u << f.depth), f.depth + 1, qmul(f.q, tb.sht)});
        stack.push_back({f.bits, f.depth + 1, qmul(f.q, tb.ht)});
    }
}

}  // namespace

std::optional<MAWord> search_approximation(const Unitary2& target, double epsilon,
                                           int tcount_cap) {
    const auto& tb = search_tables();
    const Quat qt = su2_of(target);
    const double accept = 1.0 - epsilon * epsilon;          // |dot| threshold
    const double probe = std::max(0.0, accept - 1e-9);      // slack for float drift

    PointGrid grid;
    int grid_len = -1;

    for (int level = 0; level <= tcount_cap; ++level) {
        const int t2 = level / 2;
        const int t1 = level - t2;
        if (t2 != grid_len) {
            grid = PointGrid();
            grid.cell = std::max(2.0 * std::sqrt(2.0) * epsilon, 1e-4);
            grid_len = t2;
            enumerate_strings(t2, Quat{}, [&](std::uint32_t bits, const Quat& q) {
                for (int c = 0; c < CliffordClass::kCount; ++c)
                    grid.insert(qmul(q, tb.cliff[c]),
                                bits * static_cast<std::uint32_t>(CliffordClass::kCount) +
                                    static_cast<std::uint32_t>(c));
            });
        }

        std::vector<Candidate> hits;
        for (int a = 0; a < 2; ++a) {
            const int j = t1 - a;
            if (j < 0 || (a == 1 && level == 0)) continue;
            const Quat seed = a ? tb.t : Quat{};
            enumerate_strings(j, seed, [&](std::uint32_t abits, const Quat& qa) {
                // Want |<qa*qb, qt>| >= accept, i.e. qb near +-conj(qa)*qt.
                const Quat p = qmul(qconj(qa), qt);
                auto visit = [&](const Quat& center) {
                    grid.for_neighbors(center, [&](const Quat& qb, std::uint32_t data) {
                        if (std::fabs(qdot(qmul(qa, qb), qt)) < probe) return;
                        Candidate cand;
                        cand.leading_t = a == 1;
                        cand.syllables = bits_to_syllables(abits, j);
                        const auto bs = bits_to_syllables(data / CliffordClass::kCount, t2);
                        cand.syllables.insert(cand.syllables.end(), bs.begin(), bs.end());
                        cand.clifford = static_cast<int>(data % CliffordClass::kCount);
                        hits.push_back(std::move(cand));
                    });
                };
                visit(p);
                visit(Quat{-p.w, -p.x, -p.y, -p.z});
            });
        }
        if (hits.empty()) continue;

        std::sort(hits.begin(), hits.end());
        for (const auto& cand : hits) {
            MAWord w;
            w.leading_t = cand.leading_t;
            w.syllables = cand.syllables;
            w.terminal = CliffordClass::from_index(cand.clifford);
            // Authoritative acceptance check from the exact word.
            if (synth_distance(w.to_exact().to_unitary2(), target) <= epsilon) return w;
        }
    }
    return std::nullopt;
}

std::vector<Gate> parse_synth_string(const std::string& s) {
    std::vector<GateKind> kinds;  // matrix order
    for (const char ch : s) {
        switch (ch) {
            case 'H': kinds.push_back(GateKind::H); break;
            case 'T': kinds.push_back(GateKind::T); break;
            case 'S': kinds.push_back(GateKind::S); break;
            case 'X': kinds.push_back(GateKind::X); break;
            case 'W':
            case 'I':
                break;  // global phase / identity
            default:
                throw SynthError(std::string("parse_synth_string: unknown character '") + ch +
                                 "'");
        }
    }
    std::vector<Gate> gates;
    gates.reserve(kinds.size());
    for (auto it = kinds.rbegin(); it != kinds.rend(); ++it)
        gates.emplace_back(*it, std::vector<std::uint32_t>{0});
    return gates;
}

std::vector<SidecarEntry> parse_sidecar(const std::string& text) {
    std::vector<SidecarEntry> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string angle_text, eps_text, letters;
        if (!(ls >> angle_text)) continue;  // blank
        if (!(ls >> eps_text >> letters))
            throw SynthError("sidecar line " + std::to_string(lineno) +
                             ": expected <angle> <epsilon> <letters>");
        SidecarEntry e;
        e.theta = parse_angle_expr(angle_text);
        e.epsilon = std::strtod(eps_text.c_str(), nullptr);
        e.letters = letters;
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<SidecarEntry> load_sidecar_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SynthError("cannot open synthesis sidecar file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_sidecar(ss.str());
}

namespace {

const std::vector<SidecarEntry>& cached_sidecar(const std::string& path) {
    static std::mutex mu;
    static std::unordered_map<std::string, std::vector<SidecarEntry>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(path);
    if (it == cache.end()) it = cache.emplace(path, load_sidecar_file(path)).first;
    return it->second;
}

bool angles_match(const Angle& a, const Angle& b) {
    if (a.is_exact() && b.is_exact()) return a == b;
    double d = std::fabs(a.radians() - b.radians());
    d = std::min(d, std::fabs(d - 2.0 * 3.14159265358979324));
    return d <= angle_tolerance();
}

MAWord exact_pi4_word(const Angle& theta) {
    std::vector<Gate> ts(static_cast<std::size_t>(theta.pi_4_multiple()), Gate::t(0));
    return ma_normalize(exact_unitary_of(ts));
}

}  // namespace

namespace {

std::string memo_key(const Angle& theta, double epsilon, const SynthOptions& opts) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%s|%a|%d|%d|", theta.to_string().c_str(), epsilon,
                  static_cast<int>(opts.backend), opts.search_tcount_cap);
    return std::string(buf) + opts.sidecar_path;
}

std::mutex g_memo_mu;
std::unordered_map<std::string, MAWord> g_memo;

}  // namespace

MAWord synthesize_rz(const Angle& theta, double epsilon, const SynthOptions& opts) {
    if (epsilon <= 0) throw SynthError("synthesize_rz: epsilon must be positive");
    if (theta.is_multiple_of_pi_4()) return exact_pi4_word(theta);
    if (opts.backend == SynthBackend::Exact)
        throw SynthError("exact backend: angle " + theta.to_string() +
                         " is not a multiple of pi/4");

    const std::string key = memo_key(theta, epsilon, opts);
    {
        std::lock_guard<std::mutex> lock(g_memo_mu);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) return it->second;
    }
    const MAWord result = [&] {
        const Unitary2 target = rz_matrix(theta.radians());
        if (opts.backend == SynthBackend::External) {
            std::string path = opts.sidecar_path;
            if (path.empty()) {
                const char* env = std::getenv("TACO_SYNTH_FILE");
                if (env) path = env;
            }
            if (!path.empty()) {
                const SidecarEntry* best = nullptr;
                for (const auto& e : cached_sidecar(path)) {
                    if (!angles_match(e.theta, theta)) continue;
                    if (e.epsilon > epsilon * (1.0 + 1e-12)) continue;
                    if (!best || e.epsilon < best->epsilon) best = &e;
                }
                if (best) {
                    const auto gates = parse_synth_string(best->letters);
                    const MAWord w = ma_normalize(exact_unitary_of(gates));
                    const double d = synth_distance(w.to_exact().to_unitary2(), target);
                    if (d > epsilon)
                        throw SynthError("sidecar entry for " + theta.to_string() +
                                         " misses the requested tolerance");
                    return w;
                }
            }
            // Unknown angles fall through to the bounded search.
        }
        auto found = search_approximation(target, epsilon, opts.search_tcount_cap);
        if (!found)
            throw SynthError("search backend: T-count cap " +
                             std::to_string(opts.search_tcount_cap) + " exhausted for angle " +
                             theta.to_string());
        return *found;
    }();
    std::lock_guard<std::mutex> lock(g_memo_mu);
    g_memo.emplace(key, result);
    return result;
}

}  // namespace taco
