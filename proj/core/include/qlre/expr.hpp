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

#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qlre {

using Rational = boost::multiprecision::cpp_rational;
using Env = std::map<std::string, Rational, std::less<>>;

class ExprError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Exact arithmetic over + - * / ^ with ceil() and floor(). Exponents must be
/// non-negative integers. Numbers may carry a decimal fraction and exponent
/// ("2.5e12").
class Expr {
   public:
    struct Node;

    Expr() = default;
    static Expr parse(std::string_view text);
    /// Parses a prefix of `text` starting at `pos`, stopping at a top-level
    /// ',' or ')' or the end; advances `pos`.
    static Expr parse_prefix(std::string_view text, std::size_t &pos);
    static Expr constant(const Rational &value);

    Rational eval(const Env &env) const;
    const std::string &text() const {
        return text_;
    }
    bool empty() const {
        return !root_;
    }

   private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

/// Parses a decimal literal such as "2.5e12" exactly.
Rational parse_decimal(std::string_view text);

}  // namespace qlre
