#pragma once

#include "kummer/artin_schreier.hpp"
#include "kummer/curve.hpp"
#include "kummer/family.hpp"

#include <memory>
#include <string>
#include <vector>

namespace kummer {

// Abstract syntax for the coordinate expression language:
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := base ("^" nat)?
//   base   := integer | "t" | param | "(" expr ")" | "-" base
// Whitespace-insensitive; rationals are written as quotients of integers;
// exponents are literal nonnegative integers. Note that unary minus binds
// tighter than "^", so -t^2 is (-t)^2.
struct Expr {
    enum class Kind { Literal, Variable, Parameter, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind;
    Integer literal;   // Literal
    unsigned exponent = 0; // Pow
    std::unique_ptr<Expr> lhs, rhs;
};

// Parses a comma-separated expression list. param_name empty means the
// parameter symbol is not allowed. Throws parse_error with position info.
std::vector<Expr> parse_expression_list(const std::string& text,
                                        const std::string& param_name = "");

std::string to_string(const Expr& e);

QRatFunc eval_torus_coordinate(const Expr& e);
FpRatFunc eval_additive_coordinate(const Expr& e, std::uint64_t p);
ParamRatFunc eval_family_coordinate(const Expr& e);

// Comma-separated coordinates; zero coordinates are a domain error here.
TorusCurve parse_torus_curve(const std::string& text);

// Additive-mode curve over F_p; zero coordinates are allowed.
AdditiveCurve parse_additive_curve(const std::string& text, std::uint64_t p);

FamilySpec parse_family(const std::string& text, const std::string& param_name);

} // namespace kummer
