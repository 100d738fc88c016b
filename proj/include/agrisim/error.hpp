#pragma once

#include <stdexcept>
#include <string>

namespace agrisim {

// Numeric values double as C API status codes and CLI exit codes.
enum class ErrorKind : int {
    usage = 1,
    data = 2,
    internal = 3,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_data_error(const std::string& message) {
    throw Error(ErrorKind::data, message);
}

[[noreturn]] inline void throw_internal_error(const std::string& message) {
    throw Error(ErrorKind::internal, message);
}

} // namespace agrisim
