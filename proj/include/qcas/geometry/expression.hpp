#pragma once

#include "qcas/geometry/jet.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcas::geometry {

/// Closed-form expression over named coordinates.
///
/// Grammar: numbers, variables, `pi`, `+ - * / ^`, unary minus, parentheses and
/// the functions exp, log, sin, cos, sqrt and norm (variadic Euclidean norm of its
/// arguments). Every construct is closed under Jet2 arithmetic, so the same tree
/// evaluates to plain values or to second-order jets.
class Expression {
public:
    struct Node;

    /// Throws ParseError (line 1, 1-based column) on malformed input or an
    /// unknown identifier.
    static Expression parse(std::string_view text, const std::vector<std::string>& variables);

    /// Constant expression, useful for builtin diagonal metrics.
    static Expression constant(double value, std::size_t arity);

    double eval(std::span<const double> x) const;

    /// Value, gradient and Hessian at x with respect to all variables.
    Jet2 eval_jet(std::span<const double> x) const;

    const std::string& text() const { return text_; }
    std::size_t arity() const { return arity_; }

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
    std::size_t arity_ = 0;
};

/// Open axis-aligned box; infinite bounds are allowed.
struct Box {
    std::vector<double> lower;
    std::vector<double> upper;

    static Box unbounded(std::size_t n);
    std::size_t dim() const { return lower.size(); }
    bool contains(std::span<const double> x) const;
};

/// A smooth scalar field on a coordinate box.
struct ScalarField {
    Expression expr;
    Box domain;
};

/// Value, gradient and Hessian of `field` at x. Throws DomainError if x is not
/// strictly inside the field's box.
Jet2 eval_jet2(const ScalarField& field, std::span<const double> x);

}  // namespace qcas::geometry
