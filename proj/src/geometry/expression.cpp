#include "qcas/geometry/expression.hpp"

#include "qcas/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace qcas::geometry {

struct Expression::Node {
    enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow, Exp, Log, Sin, Cos, Sqrt, Norm };

    Kind kind = Kind::Number;
    double number = 0.0;
    std::size_t index = 0;
    std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind kind, std::vector<NodePtr> args = {}) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = kind;
    n->args = std::move(args);
    return n;
}

NodePtr make_number(double v) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::Number;
    n->number = v;
    return n;
}

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("expression '" + std::string(text_) + "': " + msg, 1, pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+')) lhs = make(Kind::Add, {lhs, term()});
            else if (accept('-')) lhs = make(Kind::Sub, {lhs, term()});
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            if (accept('*')) lhs = make(Kind::Mul, {lhs, unary()});
            else if (accept('/')) lhs = make(Kind::Div, {lhs, unary()});
            else return lhs;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Kind::Neg, {unary()});
        if (accept('+')) return unary();
        return power();
    }

    // Right-associative; the exponent may carry its own sign.
    NodePtr power() {
        NodePtr base = primary();
        if (accept('^')) return make(Kind::Pow, {base, unary()});
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    NodePtr number() {
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc()) fail("malformed number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return make_number(v);
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));

        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            std::vector<NodePtr> args;
            if (!accept(')')) {
                do {
                    args.push_back(expr());
                } while (accept(','));
                if (!accept(')')) fail("expected ')' after arguments of " + name);
            }
            return call(name, std::move(args), start);
        }

        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] == name) {
                auto n = std::make_shared<Expression::Node>();
                n->kind = Kind::Variable;
                n->index = i;
                return n;
            }
        }
        if (name == "pi") return make_number(std::numbers::pi);
        pos_ = start;
        fail("unknown identifier '" + name + "'");
    }

    NodePtr call(const std::string& name, std::vector<NodePtr> args, std::size_t start) {
        static const std::pair<const char*, Kind> unary_functions[] = {
            {"exp", Kind::Exp}, {"log", Kind::Log}, {"sin", Kind::Sin},
            {"cos", Kind::Cos}, {"sqrt", Kind::Sqrt},
        };
        for (const auto& [fname, kind] : unary_functions) {
            if (name == fname) {
                if (args.size() != 1) {
                    pos_ = start;
                    fail(name + " takes exactly one argument");
                }
                return make(kind, std::move(args));
            }
        }
        if (name == "norm") {
            if (args.empty()) {
                pos_ = start;
                fail("norm needs at least one argument");
            }
            return make(Kind::Norm, std::move(args));
        }
        pos_ = start;
        fail("unknown function '" + name + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

// Exponent is a compile-time constant if it folds to a number.
bool constant_value(const Expression::Node& n, double& out) {
    if (n.kind == Kind::Number) {
        out = n.number;
        return true;
    }
    if (n.kind == Kind::Neg && constant_value(*n.args[0], out)) {
        out = -out;
        return true;
    }
    return false;
}

template <class T>
struct Evaluator {
    std::span<const T> vars;
    Eigen::Index n;

    T constant(double v) const {
        if constexpr (std::is_same_v<T, double>) return v;
        else return T(v, n);
    }

    T operator()(const Expression::Node& node) const {
        using std::cos, std::exp, std::log, std::pow, std::sin, std::sqrt;
        switch (node.kind) {
            case Kind::Number: return constant(node.number);
            case Kind::Variable: return vars[node.index];
            case Kind::Neg: return -(*this)(*node.args[0]);
            case Kind::Add: return (*this)(*node.args[0]) + (*this)(*node.args[1]);
            case Kind::Sub: return (*this)(*node.args[0]) - (*this)(*node.args[1]);
            case Kind::Mul: return (*this)(*node.args[0]) * (*this)(*node.args[1]);
            case Kind::Div: return (*this)(*node.args[0]) / (*this)(*node.args[1]);
            case Kind::Pow: {
                double p = 0.0;
                if (constant_value(*node.args[1], p)) return pow((*this)(*node.args[0]), p);
                return exp((*this)(*node.args[1]) * log((*this)(*node.args[0])));
            }
            case Kind::Exp: return exp((*this)(*node.args[0]));
            case Kind::Log: return log((*this)(*node.args[0]));
            case Kind::Sin: return sin((*this)(*node.args[0]));
            case Kind::Cos: return cos((*this)(*node.args[0]));
            case Kind::Sqrt: return sqrt((*this)(*node.args[0]));
            case Kind::Norm: {
                T sum = constant(0.0);
                for (const auto& a : node.args) {
                    T v = (*this)(*a);
                    sum = sum + v * v;
                }
                return sqrt(sum);
            }
        }
        throw ExpressionError("corrupt expression node");
    }
};

}  // namespace

Expression Expression::parse(std::string_view text, const std::vector<std::string>& variables) {
    Expression e;
    e.root_ = Parser(text, variables).parse();
    e.text_ = std::string(text);
    e.arity_ = variables.size();
    return e;
}

Expression Expression::constant(double value, std::size_t arity) {
    Expression e;
    e.root_ = make_number(value);
    std::ostringstream os;
    os.precision(17);
    os << value;
    e.text_ = os.str();
    e.arity_ = arity;
    return e;
}

double Expression::eval(std::span<const double> x) const {
    if (x.size() != arity_) throw DimensionError("expression expects " + std::to_string(arity_) + " coordinates");
    return Evaluator<double>{x, static_cast<Eigen::Index>(arity_)}(*root_);
}

Jet2 Expression::eval_jet(std::span<const double> x) const {
    if (x.size() != arity_) throw DimensionError("expression expects " + std::to_string(arity_) + " coordinates");
    const auto n = static_cast<Eigen::Index>(arity_);
    std::vector<Jet2> vars;
    vars.reserve(arity_);
    for (Eigen::Index i = 0; i < n; ++i) vars.push_back(Jet2::variable(x[i], i, n));
    return Evaluator<Jet2>{std::span<const Jet2>(vars), n}(*root_);
}

Box Box::unbounded(std::size_t n) {
    const double inf = std::numeric_limits<double>::infinity();
    return Box{std::vector<double>(n, -inf), std::vector<double>(n, inf)};
}

bool Box::contains(std::span<const double> x) const {
    if (x.size() != lower.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] > lower[i] && x[i] < upper[i])) return false;
    return true;
}

Jet2 eval_jet2(const ScalarField& field, std::span<const double> x) {
    if (!field.domain.contains(x)) throw DomainError("point outside the field's coordinate box");
    return field.expr.eval_jet(x);
}

}  // namespace qcas::geometry
