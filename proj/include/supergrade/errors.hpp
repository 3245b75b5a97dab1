#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace supergrade {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AxiomViolation : public Error {
public:
    AxiomViolation(std::vector<std::size_t> indices, std::string axiom);
    [[nodiscard]] const std::vector<std::size_t>& indices() const { return indices_; }
    [[nodiscard]] const std::string& axiom() const { return axiom_; }

private:
    std::vector<std::size_t> indices_;
    std::string axiom_;
};

#define SUPERGRADE_SIMPLE_ERROR(Name)          \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

SUPERGRADE_SIMPLE_ERROR(MissingUnit);
SUPERGRADE_SIMPLE_ERROR(DimensionMismatch);
SUPERGRADE_SIMPLE_ERROR(NotCentral);
SUPERGRADE_SIMPLE_ERROR(BadParams);
SUPERGRADE_SIMPLE_ERROR(WrongAlgebra);
SUPERGRADE_SIMPLE_ERROR(NonSplitSpectrum);
SUPERGRADE_SIMPLE_ERROR(NotDiagonalizable);
SUPERGRADE_SIMPLE_ERROR(NotHomomorphism);
SUPERGRADE_SIMPLE_ERROR(NotThreeGraded);
SUPERGRADE_SIMPLE_ERROR(NotIdempotent);
SUPERGRADE_SIMPLE_ERROR(UnexpectedEigenvalue);
SUPERGRADE_SIMPLE_ERROR(UnitFailure);
SUPERGRADE_SIMPLE_ERROR(JacobiFailure);
SUPERGRADE_SIMPLE_ERROR(NotPerfect);
SUPERGRADE_SIMPLE_ERROR(UsageError);

#undef SUPERGRADE_SIMPLE_ERROR

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message);
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace supergrade
