#pragma once

#include <stdexcept>
#include <string>

namespace qcas {

/// Root of every error raised by the engine. The `kind()` string is stable and
/// is what the CLI reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define QCAS_DEFINE_ERROR(Name, tag)                                   \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& what) : Error(tag, what) {}   \
    }

QCAS_DEFINE_ERROR(DomainError, "domain");
QCAS_DEFINE_ERROR(DegeneracyError, "degeneracy");
QCAS_DEFINE_ERROR(DependencyError, "dependency");
QCAS_DEFINE_ERROR(DimensionError, "dimension");
QCAS_DEFINE_ERROR(StructureError, "structure");
QCAS_DEFINE_ERROR(FrameError, "frame");
QCAS_DEFINE_ERROR(RankError, "rank");
QCAS_DEFINE_ERROR(NotRiemannianMapError, "not-a-riemannian-map");
QCAS_DEFINE_ERROR(ProvisoError, "proviso");
QCAS_DEFINE_ERROR(OracleError, "oracle");
QCAS_DEFINE_ERROR(ConfigurationError, "configuration");
QCAS_DEFINE_ERROR(MetricError, "metric");
QCAS_DEFINE_ERROR(ExpressionError, "expression");

#undef QCAS_DEFINE_ERROR

/// Parse failure with a 1-based source location.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("parse", what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Optimizer gave up; carries the best value seen so callers can still report it.
class OptimizationError : public Error {
public:
    OptimizationError(const std::string& what, double best_value)
        : Error("optimization", what), best_value_(best_value) {}

    double best_value() const noexcept { return best_value_; }

private:
    double best_value_;
};

}  // namespace qcas
