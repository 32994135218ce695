#pragma once

#include <stdexcept>
#include <string>

namespace rescell {

/// Input file is not syntactically valid.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Document parses but does not match the scenario schema
/// (missing required field, unknown key in strict mode, wrong type).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A value lies outside its documented validity range.
struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition is violated (e.g. division base <= 0).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cross-policy comparison received result sets with mismatched seeds.
struct PairingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Handover target cannot serve (depletion outage).
struct TargetUnavailableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rescell
