// Copyright 2026 The qlre Authors
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

#include "qlre/expr.hpp"

#include <cctype>
#include <vector>

namespace qlre {

using boost::multiprecision::cpp_int;

struct Expr::Node {
    enum class Kind { Number, Variable, Add, Sub, Mul, Div, Pow, Neg, Ceil, Floor };
    Kind kind = Kind::Number;
    Rational value;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Node::Kind;

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

cpp_int floor_div(const Rational &q) {
    cpp_int num = boost::multiprecision::numerator(q);
    cpp_int den = boost::multiprecision::denominator(q);
    cpp_int r = num / den;
    if (num % den != 0 && num < 0) {
        r -= 1;
    }
    return r;
}

class Parser {
   public:
    Parser(std::string_view text, std::size_t pos) : s_(text), pos_(pos) {}

    NodePtr expression() {
        NodePtr lhs = term();
        while (true) {
            skip();
            if (peek('+')) {
                ++pos_;
                lhs = make(Kind::Add, lhs, term());
            } else if (peek('-')) {
                ++pos_;
                lhs = make(Kind::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    std::size_t pos() const {
        return pos_;
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw ExprError("expression '" + std::string(s_) + "' at column " + std::to_string(pos_ + 1) + ": " + what);
    }

   private:
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    NodePtr term() {
        NodePtr lhs = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                lhs = make(Kind::Mul, lhs, unary());
            } else if (peek('/')) {
                ++pos_;
                lhs = make(Kind::Div, lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary() {
        if (peek('-')) {
            ++pos_;
            return make(Kind::Neg, unary());
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (peek('^')) {
            ++pos_;
            return make(Kind::Pow, base, unary());
        }
        return base;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) {
            fail("unexpected end");
        }
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = expression();
            if (!peek(')')) {
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
                ++pos_;
            }
            if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
                std::size_t save = pos_++;
                if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                    ++pos_;
                }
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                        ++pos_;
                    }
                } else {
                    pos_ = save;
                }
            }
            auto n = std::make_shared<Expr::Node>();
            n->kind = Kind::Number;
            try {
                n->value = parse_decimal(s_.substr(start, pos_ - start));
            } catch (const ExprError &) {
                fail("bad number");
            }
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(s_.substr(start, pos_ - start));
            if (name == "ceil" || name == "floor") {
                if (!peek('(')) {
                    fail("expected '(' after " + name);
                }
                ++pos_;
                NodePtr arg = expression();
                if (!peek(')')) {
                    fail("expected ')'");
                }
                ++pos_;
                return make(name == "ceil" ? Kind::Ceil : Kind::Floor, arg);
            }
            auto n = std::make_shared<Expr::Node>();
            n->kind = Kind::Variable;
            n->name = std::move(name);
            return n;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_;
};

Rational eval_node(const Expr::Node &n, const Env &env) {
    switch (n.kind) {
        case Kind::Number:
            return n.value;
        case Kind::Variable: {
            auto it = env.find(n.name);
            if (it == env.end()) {
                throw ExprError("unknown variable '" + n.name + "'");
            }
            return it->second;
        }
        case Kind::Add:
            return eval_node(*n.lhs, env) + eval_node(*n.rhs, env);
        case Kind::Sub:
            return eval_node(*n.lhs, env) - eval_node(*n.rhs, env);
        case Kind::Mul:
            return eval_node(*n.lhs, env) * eval_node(*n.rhs, env);
        case Kind::Div: {
            Rational d = eval_node(*n.rhs, env);
            if (d == 0) {
                throw ExprError("division by zero");
            }
            return eval_node(*n.lhs, env) / d;
        }
        case Kind::Pow: {
            Rational base = eval_node(*n.lhs, env);
            Rational e = eval_node(*n.rhs, env);
            if (boost::multiprecision::denominator(e) != 1 || e < 0 || e > 100000) {
                throw ExprError("exponent must be an integer in [0, 100000]");
            }
            auto k = boost::multiprecision::numerator(e).convert_to<unsigned>();
            Rational r = 1;
            while (k) {
                if (k & 1U) r *= base;
                base *= base;
                k >>= 1U;
            }
            return r;
        }
        case Kind::Neg:
            return -eval_node(*n.lhs, env);
        case Kind::Ceil:
            return Rational(-floor_div(-eval_node(*n.lhs, env)));
        case Kind::Floor:
            return Rational(floor_div(eval_node(*n.lhs, env)));
    }
    throw ExprError("corrupt expression");
}

}  // namespace

Rational parse_decimal(std::string_view text) {
    std::string mant(text);
    long long exp10 = 0;
    if (auto e = mant.find_first_of("eE"); e != std::string::npos) {
        try {
            exp10 = std::stoll(mant.substr(e + 1));
        } catch (const std::exception &) {
            throw ExprError("bad exponent in '" + std::string(text) + "'");
        }
        mant.resize(e);
    }
    std::string digits;
    bool dot = false;
    for (char c : mant) {
        if (c == '.') {
            if (dot) throw ExprError("bad number '" + std::string(text) + "'");
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (dot) --exp10;
        } else {
            throw ExprError("bad number '" + std::string(text) + "'");
        }
    }
    if (digits.empty() || exp10 > 4000 || exp10 < -4000) {
        throw ExprError("bad number '" + std::string(text) + "'");
    }
    const auto first = digits.find_first_not_of('0');
    cpp_int value = first == std::string::npos ? cpp_int(0) : cpp_int(digits.substr(first));
    cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
    return exp10 >= 0 ? Rational(value * scale) : Rational(value, scale);
}

Expr Expr::parse(std::string_view text) {
    std::size_t pos = 0;
    Expr e = parse_prefix(text, pos);
    Parser p(text, pos);
    p.skip();
    if (p.pos() != text.size()) {
        p.fail("trailing input");
    }
    return e;
}

Expr Expr::parse_prefix(std::string_view text, std::size_t &pos) {
    Parser p(text, pos);
    Expr e;
    std::size_t start = pos;
    e.root_ = p.expression();
    pos = p.pos();
    std::string t(text.substr(start, pos - start));
    auto b = t.find_first_not_of(" \t");
    auto end = t.find_last_not_of(" \t");
    e.text_ = b == std::string::npos ? "" : t.substr(b, end - b + 1);
    return e;
}

Expr Expr::constant(const Rational &value) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Number;
    n->value = value;
    Expr e;
    e.root_ = n;
    e.text_ = value.str();
    return e;
}

Rational Expr::eval(const Env &env) const {
    if (!root_) {
        throw ExprError("empty expression");
    }
    return eval_node(*root_, env);
}

}  // namespace qlre
