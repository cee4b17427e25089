// Copyright 2026 The otocsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "otocsim/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <set>

#include "otocsim/errors.hpp"

namespace otocsim {

namespace {

// ---------------------------------------------------------------- lowering

void lower_single_control(Circuit &out, const Op &op) {
    const Control ctrl = op.controls.front();
    const int c = ctrl.qubit;
    const int t = op.targets.front();
    if (ctrl.on_zero) {
        out.x(c);
    }
    switch (op.kind) {
        case GateKind::X:
            out.cx(c, t);
            break;
        case GateKind::U1: {
            const double l = op.params[0];
            out.u1(l / 2.0, c);
            out.cx(c, t);
            out.u1(-l / 2.0, t);
            out.cx(c, t);
            out.u1(l / 2.0, t);
            break;
        }
        case GateKind::H:
        case GateKind::U3: {
            const double th = op.kind == GateKind::H ? std::numbers::pi / 2.0 : op.params[0];
            const double ph = op.kind == GateKind::H ? 0.0 : op.params[1];
            const double la = op.kind == GateKind::H ? std::numbers::pi : op.params[2];
            out.u1((la + ph) / 2.0, c);
            out.u1((la - ph) / 2.0, t);
            out.cx(c, t);
            out.u3(-th / 2.0, 0.0, -(ph + la) / 2.0, t);
            out.cx(c, t);
            out.u3(th / 2.0, ph, 0.0, t);
            break;
        }
        default:
            throw EmissionError("cannot lower controlled " + op.name());
    }
    if (ctrl.on_zero) {
        out.x(c);
    }
}

std::string format_angle(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------- parsing

enum class Tok { Ident, Number, String, Symbol, Arrow, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    double number = 0.0;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        Token tok;
        tok.line = line_;
        tok.column = col_;
        if (pos_ >= src_.size()) {
            tok.kind = Tok::End;
            return tok;
        }
        const char ch = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                advance();
            }
            tok.kind = Tok::Ident;
            tok.text = std::string(src_.substr(start, pos_ - start));
            return tok;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            std::size_t start = pos_;
            while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
                advance();
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                advance();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                    advance();
                }
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    advance();
                }
            }
            tok.kind = Tok::Number;
            tok.text = std::string(src_.substr(start, pos_ - start));
            const auto res = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), tok.number);
            if (res.ec != std::errc() || res.ptr != tok.text.data() + tok.text.size()) {
                throw SyntaxError("malformed number '" + tok.text + "'", tok.line, tok.column);
            }
            return tok;
        }
        if (ch == '"') {
            advance();
            std::size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                advance();
            }
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                throw SyntaxError("unterminated string", tok.line, tok.column);
            }
            tok.kind = Tok::String;
            tok.text = std::string(src_.substr(start, pos_ - start));
            advance();
            return tok;
        }
        if (ch == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            advance();
            advance();
            tok.kind = Tok::Arrow;
            tok.text = "->";
            return tok;
        }
        if (std::string_view("[](),;+-*/").find(ch) != std::string_view::npos) {
            advance();
            tok.kind = Tok::Symbol;
            tok.text = std::string(1, ch);
            return tok;
        }
        throw SyntaxError(std::string("unexpected character '") + ch + "'", tok.line, tok.column);
    }

   private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
                advance();
            } else if (src_.substr(pos_, 2) == "//") {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
   public:
    explicit Parser(std::string_view text) : lex_(text) { cur_ = lex_.next(); }

    Circuit parse() {
        expect_ident("OPENQASM");
        const Token version = cur_;
        if (version.kind != Tok::Number || version.text != "2.0") {
            throw SyntaxError("expected version 2.0", version.line, version.column);
        }
        bump();
        expect_symbol(";");

        while (cur_.kind != Tok::End) {
            statement();
        }
        if (!circuit_) {
            return Circuit(1);
        }
        return std::move(*circuit_);
    }

   private:
    [[noreturn]] void fail(const std::string &msg, const Token &at) { throw SyntaxError(msg, at.line, at.column); }

    [[noreturn]] void unsupported(const std::string &what, const Token &at) {
        throw CapabilityError("line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " +
                              what + " is outside the supported QASM subset");
    }

    void bump() { cur_ = lex_.next(); }

    bool is_symbol(const char *s) const { return cur_.kind == Tok::Symbol && cur_.text == s; }

    void expect_symbol(const char *s) {
        if (!is_symbol(s)) {
            fail(std::string("expected '") + s + "'" + (cur_.kind == Tok::End ? " before end of input" : ""), cur_);
        }
        bump();
    }

    void expect_ident(const char *s) {
        if (cur_.kind != Tok::Ident || cur_.text != s) {
            fail(std::string("expected '") + s + "'", cur_);
        }
        bump();
    }

    std::string ident() {
        if (cur_.kind != Tok::Ident) {
            fail("expected an identifier", cur_);
        }
        std::string s = cur_.text;
        bump();
        return s;
    }

    int integer() {
        if (cur_.kind != Tok::Number || cur_.text.find_first_not_of("0123456789") != std::string::npos) {
            fail("expected a non-negative integer", cur_);
        }
        const double v = cur_.number;
        bump();
        return static_cast<int>(v);
    }

    // expr := term (('+'|'-') term)*
    double expr() {
        double v = term();
        while (is_symbol("+") || is_symbol("-")) {
            const bool plus = is_symbol("+");
            bump();
            const double rhs = term();
            v = plus ? v + rhs : v - rhs;
        }
        return v;
    }

    double term() {
        double v = unary();
        while (is_symbol("*") || is_symbol("/")) {
            const bool mul = is_symbol("*");
            bump();
            const double rhs = unary();
            v = mul ? v * rhs : v / rhs;
        }
        return v;
    }

    double unary() {
        if (is_symbol("-")) {
            bump();
            return -unary();
        }
        if (is_symbol("+")) {
            bump();
            return unary();
        }
        if (is_symbol("(")) {
            bump();
            const double v = expr();
            expect_symbol(")");
            return v;
        }
        if (cur_.kind == Tok::Number) {
            const double v = cur_.number;
            bump();
            return v;
        }
        if (cur_.kind == Tok::Ident && cur_.text == "pi") {
            bump();
            return std::numbers::pi;
        }
        fail("expected a parameter expression", cur_);
    }

    std::vector<int> qarg(bool allow_whole_register) {
        const Token at = cur_;
        const std::string name = ident();
        if (!circuit_ || name != qreg_name_) {
            fail("unknown quantum register '" + name + "'", at);
        }
        if (!is_symbol("[")) {
            if (allow_whole_register) {
                std::vector<int> all(static_cast<std::size_t>(circuit_->n_qubits()));
                for (int q = 0; q < circuit_->n_qubits(); ++q) {
                    all[static_cast<std::size_t>(q)] = q;
                }
                return all;
            }
            fail("expected '[' after register name", cur_);
        }
        bump();
        const Token idx_tok = cur_;
        const int idx = integer();
        expect_symbol("]");
        if (idx >= circuit_->n_qubits()) {
            fail("qubit index " + std::to_string(idx) + " out of range", idx_tok);
        }
        return {idx};
    }

    int single_qarg() { return qarg(false).front(); }

    void declaration(bool quantum, const Token &kw) {
        const Token name_tok = cur_;
        const std::string name = ident();
        expect_symbol("[");
        const Token size_tok = cur_;
        const int size = integer();
        expect_symbol("]");
        expect_symbol(";");
        if (size < 1) {
            fail("register size must be >= 1", size_tok);
        }
        if (quantum) {
            if (circuit_) {
                unsupported("a second qreg", kw);
            }
            if (size > kMaxQubits) {
                unsupported("a register wider than " + std::to_string(kMaxQubits) + " qubits", size_tok);
            }
            circuit_.emplace(size);
            qreg_name_ = name;
        } else {
            if (creg_size_ > 0) {
                unsupported("a second creg", kw);
            }
            creg_name_ = name;
            creg_size_ = size;
        }
        (void)name_tok;
    }

    void statement() {
        const Token kw = cur_;
        if (kw.kind != Tok::Ident) {
            fail("expected a statement", kw);
        }
        const std::string word = kw.text;
        bump();
        if (word == "include") {
            if (cur_.kind != Tok::String) {
                fail("expected a file name string", cur_);
            }
            bump();
            expect_symbol(";");
            return;
        }
        if (word == "qreg" || word == "creg") {
            declaration(word == "qreg", kw);
            return;
        }
        static const std::set<std::string> known{"x", "h", "cx", "u1", "u3", "measure", "barrier"};
        if (!known.count(word)) {
            unsupported("'" + word + "'", kw);
        }
        if (!circuit_) {
            fail("gate before qreg declaration", kw);
        }

        std::vector<double> params;
        if (is_symbol("(")) {
            bump();
            if (!is_symbol(")")) {
                params.push_back(expr());
                while (is_symbol(",")) {
                    bump();
                    params.push_back(expr());
                }
            }
            expect_symbol(")");
        }
        const std::size_t want = word == "u1" ? 1 : word == "u3" ? 3 : 0;
        if (params.size() != want) {
            fail("'" + word + "' takes " + std::to_string(want) + " parameter(s), got " +
                     std::to_string(params.size()),
                 kw);
        }

        if (word == "measure") {
            const int q = single_qarg();
            if (cur_.kind != Tok::Arrow) {
                fail("expected '->'", cur_);
            }
            bump();
            const Token creg_tok = cur_;
            const std::string cname = ident();
            if (creg_size_ == 0 || cname != creg_name_) {
                fail("unknown classical register '" + cname + "'", creg_tok);
            }
            expect_symbol("[");
            const Token idx_tok = cur_;
            const int bit = integer();
            expect_symbol("]");
            if (bit >= creg_size_) {
                fail("classical bit " + std::to_string(bit) + " out of range", idx_tok);
            }
            expect_symbol(";");
            circuit_->measure(q, bit);
            return;
        }
        if (word == "barrier") {
            std::vector<int> qubits = qarg(true);
            while (is_symbol(",")) {
                bump();
                const auto more = qarg(true);
                qubits.insert(qubits.end(), more.begin(), more.end());
            }
            expect_symbol(";");
            circuit_->barrier(std::move(qubits));
            return;
        }
        if (word == "cx") {
            const Token at = cur_;
            const int c = single_qarg();
            expect_symbol(",");
            const int t = single_qarg();
            expect_symbol(";");
            if (c == t) {
                fail("cx control and target coincide", at);
            }
            circuit_->cx(c, t);
            return;
        }
        const int q = single_qarg();
        if (is_symbol(",")) {
            fail("'" + word + "' takes one qubit", cur_);
        }
        expect_symbol(";");
        if (word == "x") {
            circuit_->x(q);
        } else if (word == "h") {
            circuit_->h(q);
        } else if (word == "u1") {
            circuit_->u1(params[0], q);
        } else {
            circuit_->u3(params[0], params[1], params[2], q);
        }
    }

    Lexer lex_;
    Token cur_;
    std::optional<Circuit> circuit_;
    std::string qreg_name_;
    std::string creg_name_;
    int creg_size_ = 0;
};

}  // namespace

Circuit lower_to_qasm_basis(const Circuit &circuit) {
    Circuit out(circuit.n_qubits());
    for (const auto &op : circuit.ops()) {
        if (op.controls.empty()) {
            out.add(op);
        } else if (op.controls.size() == 1) {
            lower_single_control(out, op);
        } else {
            throw EmissionError("op '" + op.name() + "' has " + std::to_string(op.controls.size()) +
                                " controls; lower_controls it first");
        }
    }
    out.set_global_phase(circuit.global_phase());
    return out;
}

std::string emit_qasm(const Circuit &circuit) {
    const Circuit lowered = lower_to_qasm_basis(circuit);
    int n_clbits = 0;
    for (const auto &op : lowered.ops()) {
        if (op.kind == GateKind::Measure) {
            n_clbits = std::max(n_clbits, op.clbit + 1);
        }
    }
    auto q = [](int i) { return "q[" + std::to_string(i) + "]"; };

    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(lowered.n_qubits()) + "];\n";
    if (n_clbits > 0) {
        out += "creg c[" + std::to_string(n_clbits) + "];\n";
    }
    for (const auto &op : lowered.ops()) {
        switch (op.kind) {
            case GateKind::X:
                out += op.controls.empty() ? "x " + q(op.targets[0]) + ";\n"
                                           : "cx " + q(op.controls[0].qubit) + "," + q(op.targets[0]) + ";\n";
                break;
            case GateKind::H:
                out += "h " + q(op.targets[0]) + ";\n";
                break;
            case GateKind::U1:
                out += "u1(" + format_angle(op.params[0]) + ") " + q(op.targets[0]) + ";\n";
                break;
            case GateKind::U3:
                out += "u3(" + format_angle(op.params[0]) + "," + format_angle(op.params[1]) + "," +
                       format_angle(op.params[2]) + ") " + q(op.targets[0]) + ";\n";
                break;
            case GateKind::Measure:
                out += "measure " + q(op.targets[0]) + " -> c[" + std::to_string(op.clbit) + "];\n";
                break;
            case GateKind::Barrier: {
                out += "barrier ";
                for (std::size_t k = 0; k < op.targets.size(); ++k) {
                    out += (k ? "," : "") + q(op.targets[k]);
                }
                out += ";\n";
                break;
            }
        }
    }
    return out;
}

Circuit parse_qasm(std::string_view text) { return Parser(text).parse(); }

}  // namespace otocsim
