#pragma once

#include <stdexcept>
#include <string>

namespace nfb {

// Error categories map onto CLI exit codes: validation 2, computation 3, io 4.
enum class ErrorKind { validation, computation, io };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error validation_error(const std::string& msg) { return Error(ErrorKind::validation, msg); }
inline Error computation_error(const std::string& msg) { return Error(ErrorKind::computation, msg); }
inline Error io_error(const std::string& msg) { return Error(ErrorKind::io, msg); }

} // namespace nfb
