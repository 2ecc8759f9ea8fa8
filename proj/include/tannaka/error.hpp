#pragma once

#include <stdexcept>
#include <string>

namespace tannaka {

enum class ErrorKind {
    input,         // malformed documents, bad shapes, unknown names
    typing,        // ill-typed diagram terms
    construction,  // reconstruction could not build a structure map
    dimension,     // matrix shape mismatch inside the engine
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct InputError : Error {
    explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

struct TypingError : Error {
    explicit TypingError(const std::string& what) : Error(ErrorKind::typing, what) {}
};

struct ConstructionError : Error {
    explicit ConstructionError(const std::string& what) : Error(ErrorKind::construction, what) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(ErrorKind::dimension, what) {}
};

}  // namespace tannaka
