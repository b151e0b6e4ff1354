#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace morse_bridge {

/// Base class for every error raised by the library. Carries an optional
/// pipeline stage which `analyze` fills in before rethrowing.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message)
        : std::runtime_error(message), message_(message), full_(message) {}

    const char* what() const noexcept override { return full_.c_str(); }

    const std::string& message() const noexcept { return message_; }
    const std::string& stage() const noexcept { return stage_; }

    void set_stage(std::string stage)
    {
        stage_ = std::move(stage);
        full_ = stage_.empty() ? message_ : "[" + stage_ + "] " + message_;
    }

private:
    std::string message_;
    std::string stage_;
    std::string full_;
};

// bridge_prob
class DomainError : public Error { using Error::Error; };
class NonConvergenceError : public Error { using Error::Error; };

// order
class StructureError : public Error { using Error::Error; };
class UnknownElementError : public Error { using Error::Error; };
class CycleError : public Error { using Error::Error; };

// complex / ingestion
class InputError : public Error { using Error::Error; };

// comb_map
class ComplexMismatchError : public Error { using Error::Error; };
class GridError : public Error { using Error::Error; };
class EmptyImageError : public Error { using Error::Error; };

// invset
class LatticeValidationError : public Error { using Error::Error; };
class NotForwardInvariantError : public LatticeValidationError { using LatticeValidationError::LatticeValidationError; };
class NotClosedError : public LatticeValidationError { using LatticeValidationError::LatticeValidationError; };

// tiling
class TauError : public Error { using Error::Error; };

// conley
class TorsionError : public Error { using Error::Error; };
class NonIntervalError : public Error { using Error::Error; };
class InvarianceError : public Error { using Error::Error; };
class OverflowError : public Error { using Error::Error; };

/// Collected non-fatal diagnostics.
using Warnings = std::vector<std::string>;

}  // namespace morse_bridge
