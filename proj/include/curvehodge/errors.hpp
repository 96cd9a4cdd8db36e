#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvehodge {

/// Bad user input: malformed text, wrong degree, unusable polynomial.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in a polynomial expression; position is a 0-based byte offset.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A curve-spec document that does not match the schema. `path` names the field, e.g.
/// `components[2].own_germs[0].mu`.
class SchemaError : public InputError {
public:
    SchemaError(const std::string& path, const std::string& what)
        : InputError(path + ": " + what), path_(path) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// A curve spec that parses but violates the model invariants.
class SpecError : public InputError {
public:
    explicit SpecError(std::vector<std::string> violations)
        : InputError(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid curve spec";
        for (const auto& s : v) out += "\n  " + s;
        return out;
    }
    std::vector<std::string> violations_;
};

/// A formula was requested for a curve that does not satisfy its hypotheses.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The Milnor profile did not become constant before r_max.
class StabilizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace curvehodge
