#ifndef CLIFFPAR_ERRORS_HPP
#define CLIFFPAR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffpar {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    UnsupportedTarget,
    ZeroPolynomial,
    NoGaloisAutomorphism,
    AlgebraMismatch,
    NotCentral,
    DependentVectors,
    DegenerateForm,
    NotInStar,
    WrongCharacteristic,
    ZeroElement,
    NotUnital,
    NotInvertible,
    InvalidDefiningSet,
    UnknownScenario,
    ParseError,
    ConfigError,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::UnsupportedTarget: return "UnsupportedTarget";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::NoGaloisAutomorphism: return "NoGaloisAutomorphism";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::NotCentral: return "NotCentral";
        case ErrorKind::DependentVectors: return "DependentVectors";
        case ErrorKind::DegenerateForm: return "DegenerateForm";
        case ErrorKind::NotInStar: return "NotInStar";
        case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::NotUnital: return "NotUnital";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::InvalidDefiningSet: return "InvalidDefiningSet";
        case ErrorKind::UnknownScenario: return "UnknownScenario";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the text grammars; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::ParseError, "at " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised by the config reader; line and column are 1-based.
class ConfigError : public Error {
public:
    ConfigError(std::size_t line, std::size_t column, const std::string& what)
        : Error(ErrorKind::ConfigError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace cliffpar

#endif
