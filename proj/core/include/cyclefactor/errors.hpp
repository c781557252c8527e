#pragma once

#include <stdexcept>
#include <string>

namespace cyclefactor {

/// Error codes for all recoverable failures raised by the toolkit.
enum class Errc {
    SelfLoop,
    VertexOutOfRange,
    SyntaxError,
    DanglingReference,
    NotBipartition,
    NotDirected,
    NotUndirected,
    TooLarge,
    MissingEndpoint,
    EndpointsNotDistinct,
    NotAFactor,
    ParityViolated,
    NotCubic,
    IndexOutOfRange,
    TerminalNotVertex,
    InfeasibleParameters,
    UnknownReduction,
    BadSolution,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

} // namespace cyclefactor
