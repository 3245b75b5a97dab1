#include "supergrade/errors.hpp"

#include <sstream>

namespace supergrade {

namespace {

std::string describe_violation(const std::vector<std::size_t>& indices, const std::string& axiom)
{
    std::ostringstream os;
    os << axiom << " fails on basis tuple (";
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i] + 1;
    os << ")";
    return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::vector<std::size_t> indices, std::string axiom)
    : Error(describe_violation(indices, axiom)), indices_(std::move(indices)), axiom_(std::move(axiom))
{
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

}  // namespace supergrade
