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

#include "taco/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>

namespace taco {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// Parameter expressions are evaluated symbolically as q * pi^p with q a
// rational, falling back to plain doubles when the structure is lost
// (e.g. "pi + 1" or non-rational division). This keeps "pi/2^k" angles
// exact through the whole parse.
struct ParamValue {
    bool symbolic = false;  // value = (num/den) * pi^pi_pow
    long long num = 0;
    long long den = 1;
    int pi_pow = 0;
    double value = 0.0;

    static ParamValue rational(long long n, long long d, int pp) {
        ParamValue v;
        v.symbolic = true;
        v.num = n;
        v.den = d;
        v.pi_pow = pp;
        v.reduce();
        v.value = static_cast<double>(v.num) / static_cast<double>(v.den) * std::pow(kPi, pp);
        return v;
    }
    static ParamValue real(double x) {
        ParamValue v;
        v.value = x;
        return v;
    }
    void reduce() {
        if (den < 0) {
            den = -den;
            num = -num;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) pi_pow = 0;
    }
};

bool mul_overflows(long long a, long long b) {
    if (a == 0 || b == 0) return false;
    long long r = a * b;
    return r / b != a;
}

ParamValue pv_neg(const ParamValue& a) {
    if (a.symbolic) return ParamValue::rational(-a.num, a.den, a.pi_pow);
    return ParamValue::real(-a.value);
}

ParamValue pv_add(const ParamValue& a, const ParamValue& b, bool subtract) {
    if (a.symbolic && b.symbolic && a.pi_pow == b.pi_pow && !mul_overflows(a.num, b.den) &&
        !mul_overflows(b.num, a.den) && !mul_overflows(a.den, b.den)) {
        const long long n = a.num * b.den + (subtract ? -1 : 1) * b.num * a.den;
        return ParamValue::rational(n, a.den * b.den, a.pi_pow);
    }
    return ParamValue::real(a.value + (subtract ? -b.value : b.value));
}

ParamValue pv_mul(const ParamValue& a, const ParamValue& b) {
    if (a.symbolic && b.symbolic && !mul_overflows(a.num, b.num) && !mul_overflows(a.den, b.den))
        return ParamValue::rational(a.num * b.num, a.den * b.den, a.pi_pow + b.pi_pow);
    return ParamValue::real(a.value * b.value);
}

ParamValue pv_div(const ParamValue& a, const ParamValue& b) {
    if (a.symbolic && b.symbolic && b.num != 0 && !mul_overflows(a.num, b.den) &&
        !mul_overflows(a.den, b.num))
        return ParamValue::rational(a.num * b.den, a.den * b.num, a.pi_pow - b.pi_pow);
    return ParamValue::real(a.value / b.value);
}

// A value q*pi with q = m/2^k maps to the exact dyadic form; everything
// else goes through float canonicalization.
Angle pv_to_angle(const ParamValue& v) {
    if (v.symbolic && v.pi_pow == 1) {
        long long den = v.den;
        int k = 0;
        while (den % 2 == 0) {
            den /= 2;
            ++k;
        }
        if (den == 1 && k <= 61) return Angle::exact_pi_over_pow2(v.num, k);
    }
    return Angle::from_radians(v.value);
}

enum class TokKind { Ident, Number, Symbol, String, End };

struct Token {
    TokKind kind;
    std::string text;
    double number = 0.0;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        skip_ws_and_comments();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_ = {TokKind::End, "", 0.0, line_, col_};
            return;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                s += take();
            tok_ = {TokKind::Ident, s, 0.0, tok_.line, tok_.col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                    text_[pos_] == 'e' || text_[pos_] == 'E' ||
                    ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > 0 &&
                     (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
                s += take();
            tok_ = {TokKind::Number, s, std::strtod(s.c_str(), nullptr), tok_.line, tok_.col};
            return;
        }
        if (c == '"') {
            take();
            std::string s;
            while (pos_ < text_.size() && text_[pos_] != '"') s += take();
            if (pos_ < text_.size()) take();
            tok_ = {TokKind::String, s, 0.0, tok_.line, tok_.col};
            return;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            take();
            take();
            tok_ = {TokKind::Symbol, "->", 0.0, tok_.line, tok_.col};
            return;
        }
        tok_ = {TokKind::Symbol, std::string(1, take()), 0.0, tok_.line, tok_.col};
    }

    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    char take() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Circuit parse() {
        // Optional header and include.
        if (peek_ident("OPENQASM")) {
            lex_.next();
            expect_number();
            expect_symbol(";");
        }
        while (peek_ident("include")) {
            lex_.next();
            if (lex_.peek().kind != TokKind::String) fail("expected include file string");
            lex_.next();
            expect_symbol(";");
        }

        Circuit c;
        bool have_qreg = false;
        while (lex_.peek().kind != TokKind::End) {
            const Token t = lex_.peek();
            if (t.kind != TokKind::Ident) fail("expected statement");
            if (t.text == "qreg") {
                if (have_qreg) fail("multiple quantum registers are not supported");
                lex_.next();
                qreg_name_ = expect_ident();
                expect_symbol("[");
                c.num_qubits = static_cast<std::uint32_t>(expect_number());
                expect_symbol("]");
                expect_symbol(";");
                have_qreg = true;
            } else if (t.text == "creg") {
                lex_.next();
                creg_name_ = expect_ident();
                expect_symbol("[");
                expect_number();
                expect_symbol("]");
                expect_symbol(";");
            } else if (t.text == "measure") {
                if (!have_qreg) fail("measure before qreg");
                lex_.next();
                const auto q = qubit_operand(c);
                expect_symbol("->");
                expect_ident();
                expect_symbol("[");
                expect_number();
                expect_symbol("]");
                expect_symbol(";");
                append(c, Gate::measure_z(q), t);
            } else if (t.text == "barrier") {
                // No scheduling semantics at this level; skip operands.
                lex_.next();
                while (lex_.peek().kind != TokKind::End &&
                       !(lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ";"))
                    lex_.next();
                expect_symbol(";");
            } else {
                if (!have_qreg) fail("gate before qreg");
                parse_gate(c);
            }
        }
        if (!have_qreg) fail("missing qreg declaration");
        return c;
    }

  private:
    void parse_gate(Circuit& c) {
        const Token name_tok = lex_.next();
        const std::string& name = name_tok.text;
        std::vector<Angle> params;
        if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "(") {
            lex_.next();
            if (!(lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ")")) {
                params.push_back(pv_to_angle(expr()));
                while (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ",") {
                    lex_.next();
                    params.push_back(pv_to_angle(expr()));
                }
            }
            expect_symbol(")");
        }
        std::vector<std::uint32_t> qubits;
        qubits.push_back(qubit_operand(c));
        while (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ",") {
            lex_.next();
            qubits.push_back(qubit_operand(c));
        }
        expect_symbol(";");
        append(c, make_gate(name, qubits, params, name_tok), name_tok);
    }

    Gate make_gate(const std::string& name, std::vector<std::uint32_t> qs, std::vector<Angle> ps,
                   const Token& at) {
        auto expect_arity = [&](size_t nq, size_t np) {
            if (qs.size() != nq || ps.size() != np)
                fail_at(at, "gate " + name + ": expected " + std::to_string(nq) + " qubits and " +
                                std::to_string(np) + " parameters");
        };
        auto fixed = [&](GateKind k) {
            expect_arity(static_cast<size_t>(gate_arity(k)), 0);
            return Gate(k, std::move(qs));
        };
        if (name == "x") return fixed(GateKind::X);
        if (name == "y") return fixed(GateKind::Y);
        if (name == "z") return fixed(GateKind::Z);
        if (name == "h") return fixed(GateKind::H);
        if (name == "s") return fixed(GateKind::S);
        if (name == "sdg") return fixed(GateKind::Sdg);
        if (name == "t") return fixed(GateKind::T);
        if (name == "tdg") return fixed(GateKind::Tdg);
        if (name == "cx" || name == "CX") return fixed(GateKind::CX);
        if (name == "cz") return fixed(GateKind::CZ);
        if (name == "swap") return fixed(GateKind::Swap);
        if (name == "ccx") return fixed(GateKind::CCX);
        if (name == "cp" || name == "cu1") {
            expect_arity(2, 1);
            return Gate(GateKind::CP, std::move(qs), std::move(ps));
        }
        if (name == "rz" || name == "u1" || name == "p") {
            expect_arity(1, 1);
            return Gate(GateKind::RZ, std::move(qs), std::move(ps));
        }
        if (name == "rx") {
            expect_arity(1, 1);
            // Exact +-pi/4 X rotations canonicalize to the dedicated kinds.
            if (ps[0].is_exact() && ps[0].den_exp() == 2) {
                if (ps[0].num() == 1) return Gate(GateKind::RxPi4, std::move(qs));
                if (ps[0].num() == 7) return Gate(GateKind::RxPi4Dg, std::move(qs));
            }
            return Gate(GateKind::RX, std::move(qs), std::move(ps));
        }
        if (name == "ry") {
            expect_arity(1, 1);
            return Gate(GateKind::RY, std::move(qs), std::move(ps));
        }
        if (name == "u3" || name == "u") {
            expect_arity(1, 3);
            return Gate(GateKind::U3, std::move(qs), std::move(ps));
        }
        fail_at(at, "unsupported gate '" + name + "'");
        throw std::logic_error("unreachable");
    }

    std::uint32_t qubit_operand(const Circuit& c) {
        const Token name = lex_.next();
        if (name.kind != TokKind::Ident || name.text != qreg_name_)
            fail_at(name, "expected qubit register '" + qreg_name_ + "'");
        expect_symbol("[");
        const Token idx = lex_.peek();
        const auto q = static_cast<std::int64_t>(expect_number());
        expect_symbol("]");
        if (q < 0 || q >= static_cast<std::int64_t>(c.num_qubits))
            fail_at(idx, "qubit index " + std::to_string(q) + " out of range");
        return static_cast<std::uint32_t>(q);
    }

    void append(Circuit& c, Gate g, const Token& at) {
        try {
            c.append(std::move(g));
        } catch (const std::invalid_argument& e) {
            fail_at(at, e.what());
        }
    }

    // expr := term (('+'|'-') term)*
    ParamValue expr() {
        ParamValue v = term();
        while (lex_.peek().kind == TokKind::Symbol &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            const bool sub = lex_.next().text == "-";
            v = pv_add(v, term(), sub);
        }
        return v;
    }

    // term := unary (('*'|'/') unary)*
    ParamValue term() {
        ParamValue v = unary();
        while (lex_.peek().kind == TokKind::Symbol &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            const bool div = lex_.next().text == "/";
            v = div ? pv_div(v, unary()) : pv_mul(v, unary());
        }
        return v;
    }

    ParamValue unary() {
        if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "-") {
            lex_.next();
            return pv_neg(unary());
        }
        if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "+") {
            lex_.next();
            return unary();
        }
        if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "(") {
            lex_.next();
            ParamValue v = expr();
            expect_symbol(")");
            return v;
        }
        const Token t = lex_.next();
        if (t.kind == TokKind::Ident && t.text == "pi") return ParamValue::rational(1, 1, 1);
        if (t.kind == TokKind::Number) {
            // Keep short decimal literals exact as rationals.
            if (t.text.find('e') == std::string::npos && t.text.find('E') == std::string::npos &&
                t.text.size() <= 18) {
                const auto dot = t.text.find('.');
                long long num = 0;
                long long den = 1;
                bool ok = true;
                for (char ch : t.text) {
                    if (ch == '.') continue;
                    if (!std::isdigit(static_cast<unsigned char>(ch))) {
                        ok = false;
                        break;
                    }
                    if (mul_overflows(num, 10)) {
                        ok = false;
                        break;
                    }
                    num = num * 10 + (ch - '0');
                }
                if (ok && dot != std::string::npos) {
                    for (size_t i = dot + 1; i < t.text.size(); ++i) {
                        if (mul_overflows(den, 10)) {
                            ok = false;
                            break;
                        }
                        den *= 10;
                    }
                }
                if (ok) {
                    ParamValue v = ParamValue::rational(num, den, 0);
                    v.value = t.number;  // keep the correctly rounded double
                    return v;
                }
            }
            return ParamValue::real(t.number);
        }
        fail_at(t, "expected expression");
        throw std::logic_error("unreachable");
    }

    bool peek_ident(const char* s) {
        return lex_.peek().kind == TokKind::Ident && lex_.peek().text == s;
    }
    std::string expect_ident() {
        const Token t = lex_.next();
        if (t.kind != TokKind::Ident) fail_at(t, "expected identifier");
        return t.text;
    }
    double expect_number() {
        const Token t = lex_.next();
        if (t.kind != TokKind::Number) fail_at(t, "expected number");
        return t.number;
    }
    void expect_symbol(const std::string& s) {
        const Token t = lex_.next();
        if (t.kind != TokKind::Symbol || t.text != s) fail_at(t, "expected '" + s + "'");
    }
    [[noreturn]] void fail(const std::string& msg) { fail_at(lex_.peek(), msg); }
    [[noreturn]] void fail_at(const Token& t, const std::string& msg) {
        throw ParseError(msg, t.line, t.col);
    }

  public:
    ParamValue parse_bare_expr() {
        ParamValue v = expr();
        if (lex_.peek().kind != TokKind::End) fail("trailing input after expression");
        return v;
    }

  private:
    Lexer lex_;
    std::string qreg_name_ = "q";
    std::string creg_name_ = "c";
};

}  // namespace

Circuit parse_qasm(const std::string& text) {
    Parser p(text);
    Circuit c = p.parse();
    c.validate();
    return c;
}

Angle parse_angle_expr(const std::string& text) {
    Parser p(text);
    return pv_to_angle(p.parse_bare_expr());
}

std::string emit_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.num_qubits << "];\n";
    bool has_measure = false;
    for (const auto& g : c.gates)
        if (g.kind == GateKind::MeasureZ) has_measure = true;
    if (has_measure) out << "creg c[" << c.num_qubits << "];\n";

    for (const auto& g : c.gates) {
        if (g.kind == GateKind::MeasureZ) {
            out << "measure q[" << g.qubits[0] << "] -> c[" << g.qubits[0] << "];\n";
            continue;
        }
        if (g.kind == GateKind::RxPi4) {
            out << "rx(pi/4) q[" << g.qubits[0] << "];\n";
            continue;
        }
        if (g.kind == GateKind::RxPi4Dg) {
            out << "rx(-pi/4) q[" << g.qubits[0] << "];\n";
            continue;
        }
        out << gate_name(g.kind);
        if (!g.params.empty()) {
            out << "(";
            for (size_t i = 0; i < g.params.size(); ++i) {
                if (i) out << ",";
                out << g.params[i].to_string();
            }
            out << ")";
        }
        for (size_t i = 0; i < g.qubits.size(); ++i)
            out << (i ? "," : " ") << "q[" << g.qubits[i] << "]";
        out << ";\n";
    }
    return out.str();
}

}  // namespace taco
