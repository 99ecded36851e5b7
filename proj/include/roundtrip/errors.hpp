#pragma once

#include <stdexcept>
#include <string>

namespace roundtrip {

// Base class for all domain errors raised by the harness. The CLI maps
// these to exit code 1, except backend errors which map to exit code 3.
struct HarnessError : std::runtime_error {
    explicit HarnessError(const std::string& msg) : std::runtime_error(msg) {}
};

struct LanguageMismatch : HarnessError {
    explicit LanguageMismatch(const std::string& msg) : HarnessError(msg) {}
};

struct UnsupportedLanguage : HarnessError {
    explicit UnsupportedLanguage(const std::string& msg) : HarnessError(msg) {}
};

struct InvalidDoc : HarnessError {
    explicit InvalidDoc(const std::string& msg) : HarnessError(msg) {}
};

struct CardinalityMismatch : HarnessError {
    explicit CardinalityMismatch(const std::string& msg) : HarnessError(msg) {}
};

struct EmptyDirection : HarnessError {
    explicit EmptyDirection(const std::string& msg) : HarnessError(msg) {}
};

struct Underfull : HarnessError {
    explicit Underfull(const std::string& msg) : HarnessError(msg) {}
};

struct UnknownContext : HarnessError {
    explicit UnknownContext(const std::string& msg) : HarnessError(msg) {}
};

struct UnknownAction : HarnessError {
    explicit UnknownAction(const std::string& msg) : HarnessError(msg) {}
};

struct IoFailure : HarnessError {
    explicit IoFailure(const std::string& msg) : HarnessError(msg) {}
};

// Backend errors; exit code 3 at the CLI boundary.
struct BackendError : HarnessError {
    explicit BackendError(const std::string& msg) : HarnessError(msg) {}
};

struct BackendUnavailable : BackendError {
    explicit BackendUnavailable(const std::string& msg) : BackendError(msg) {}
};

struct MalformedResponse : BackendError {
    explicit MalformedResponse(const std::string& msg) : BackendError(msg) {}
};

struct FixtureMiss : BackendError {
    explicit FixtureMiss(const std::string& msg) : BackendError(msg) {}
};

}  // namespace roundtrip
