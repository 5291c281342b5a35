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

#include "taco/clifford.hpp"

#include <array>
#include <stdexcept>
#include <unordered_map>

namespace taco {

char pauli_char(PauliLetter p) {
    switch (p) {
        case PauliLetter::I: return 'I';
        case PauliLetter::X: return 'X';
        case PauliLetter::Y: return 'Y';
        case PauliLetter::Z: return 'Z';
    }
    return '?';
}

PauliLetter pauli_mul(PauliLetter a, PauliLetter b) {
    // XOR on the (x, z) symplectic bits.
    auto bits = [](PauliLetter p) -> int {
        switch (p) {
            case PauliLetter::I: return 0b00;
            case PauliLetter::X: return 0b01;
            case PauliLetter::Y: return 0b11;
            case PauliLetter::Z: return 0b10;
        }
        return 0;
    };
    const int r = bits(a) ^ bits(b);
    switch (r) {
        case 0b00: return PauliLetter::I;
        case 0b01: return PauliLetter::X;
        case 0b11: return PauliLetter::Y;
        default: return PauliLetter::Z;
    }
}

namespace {

GateKind pauli_kind(PauliLetter p) {
    switch (p) {
        case PauliLetter::X: return GateKind::X;
        case PauliLetter::Y: return GateKind::Y;
        case PauliLetter::Z: return GateKind::Z;
        default: throw std::logic_error("pauli_kind(I)");
    }
}

struct Tables {
    std::array<ExactUnitary, 24> unitary;                       // canonical phase reps
    std::unordered_map<ExactUnitary, int, ExactUnitaryHash> index_of;
    int mult[24][24];
    int adjoint_of[24];
    std::array<std::vector<GateKind>, 24> nonpauli;             // matrix order
    std::array<PauliLetter, 24> pauli;
    std::array<std::vector<GateKind>, 24> word;                 // nonpauli + pauli
    PauliLetter conj[24][4];
    int kind_class[8];  // H,S,Sdg,X,Y,Z by local code

    Tables() {
        // Closure of {H, S} under left multiplication: the 24 classes.
        std::vector<ExactUnitary> elems{ExactUnitary::identity().canonical()};
        index_of[elems[0]] = 0;
        const ExactUnitary gens[2] = {ExactUnitary::of_kind(GateKind::H),
                                      ExactUnitary::of_kind(GateKind::S)};
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (const auto& g : gens) {
                const ExactUnitary next = g.times(elems[i]).canonical();
                if (!index_of.count(next)) {
                    index_of[next] = static_cast<int>(elems.size());
                    elems.push_back(next);
                }
            }
        }
        if (elems.size() != 24) throw std::logic_error("Clifford closure size != 24");
        for (int i = 0; i < 24; ++i) unitary[i] = elems[i];

        for (int i = 0; i < 24; ++i) {
            for (int j = 0; j < 24; ++j)
                mult[i][j] = index_of.at(unitary[i].times(unitary[j]).canonical());
            adjoint_of[i] = index_of.at(unitary[i].adjoint().canonical());
        }

        // Coset decomposition: class = rep * pauli (pauli applied first).
        const std::array<std::vector<GateKind>, 6> reps = {{
            {},
            {GateKind::H},
            {GateKind::S},
            {GateKind::H, GateKind::S},
            {GateKind::S, GateKind::H},
            {GateKind::S, GateKind::H, GateKind::S},
        }};
        const std::array<PauliLetter, 4> paulis = {PauliLetter::I, PauliLetter::X, PauliLetter::Y,
                                                   PauliLetter::Z};
        std::array<bool, 24> seen{};
        for (const auto& rep : reps) {
            const ExactUnitary ur = exact_unitary_of_kinds(rep);
            for (const auto p : paulis) {
                ExactUnitary u = ur;
                if (p != PauliLetter::I) u = u.times(ExactUnitary::of_kind(pauli_kind(p)));
                const int idx = index_of.at(u.canonical());
                if (seen[idx]) throw std::logic_error("Clifford coset decomposition not unique");
                seen[idx] = true;
                nonpauli[idx] = rep;
                pauli[idx] = p;
                word[idx] = rep;
                if (p != PauliLetter::I) word[idx].push_back(pauli_kind(p));
            }
        }

        // Pauli conjugation: letter of C P C^dag.
        for (int i = 0; i < 24; ++i) {
            conj[i][0] = PauliLetter::I;
            for (int pi = 1; pi < 4; ++pi) {
                const auto p = static_cast<PauliLetter>(pi);
                const ExactUnitary cpc =
                    unitary[i].times(ExactUnitary::of_kind(pauli_kind(p))).times(
                        unitary[i].adjoint());
                PauliLetter found = PauliLetter::I;
                for (int qi = 1; qi < 4; ++qi) {
                    const auto q = static_cast<PauliLetter>(qi);
                    if (cpc.projectively_equal(ExactUnitary::of_kind(pauli_kind(q)))) {
                        found = q;
                        break;
                    }
                }
                if (found == PauliLetter::I)
                    throw std::logic_error("Pauli conjugation left the Pauli group");
                conj[i][pi] = found;
            }
        }

        const GateKind kinds[6] = {GateKind::H, GateKind::S,  GateKind::Sdg,
                                   GateKind::X, GateKind::Y, GateKind::Z};
        for (int i = 0; i < 6; ++i)
            kind_class[i] = index_of.at(ExactUnitary::of_kind(kinds[i]).canonical());
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

int kind_slot(GateKind kind) {
    switch (kind) {
        case GateKind::H: return 0;
        case GateKind::S: return 1;
        case GateKind::Sdg: return 2;
        case GateKind::X: return 3;
        case GateKind::Y: return 4;
        case GateKind::Z: return 5;
        default:
            throw std::invalid_argument(std::string("not a Clifford generator: ") +
                                        gate_name(kind));
    }
}

}  // namespace

CliffordClass CliffordClass::of_kind(GateKind kind) {
    return CliffordClass(tables().kind_class[kind_slot(kind)]);
}

bool CliffordClass::is_clifford(const ExactUnitary& u) {
    return tables().index_of.count(u.canonical()) > 0;
}

CliffordClass CliffordClass::from_index(int index) {
    if (index < 0 || index >= kCount) throw std::out_of_range("CliffordClass::from_index");
    return CliffordClass(index);
}

CliffordClass CliffordClass::from_exact(const ExactUnitary& u) {
    const auto& t = tables();
    const auto it = t.index_of.find(u.canonical());
    if (it == t.index_of.end()) throw std::invalid_argument("from_exact: not a Clifford operator");
    return CliffordClass(it->second);
}

CliffordClass CliffordClass::times(const CliffordClass& rhs) const {
    return CliffordClass(tables().mult[index_][rhs.index_]);
}

CliffordClass CliffordClass::adjoint() const { return CliffordClass(tables().adjoint_of[index_]); }

const ExactUnitary& CliffordClass::exact() const { return tables().unitary[index_]; }

const std::vector<GateKind>& CliffordClass::canonical_word() const {
    return tables().word[index_];
}

const std::vector<GateKind>& CliffordClass::nonpauli_word() const {
    return tables().nonpauli[index_];
}

PauliLetter CliffordClass::pauli_part() const { return tables().pauli[index_]; }

PauliLetter CliffordClass::conjugate_pauli(PauliLetter p) const {
    return tables().conj[index_][static_cast<int>(p)];
}

}  // namespace taco
