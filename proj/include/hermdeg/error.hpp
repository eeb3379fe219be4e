#ifndef HERMDEG_ERROR_HPP
#define HERMDEG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hermdeg {

// Error categories map 1:1 onto the C API status codes and CLI exit codes.
enum class ErrorCode {
    Input = 2,          // bad syntax, bad arguments, unusable variety
    Budget = 3,         // computation budget exceeded
    Degenerate = 4,     // degenerate sample (discriminant hit, resample advised)
    Internal = 5,       // numeric failure, shape failure after retries, bugs
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline Error input_error(const std::string& msg) { return Error(ErrorCode::Input, msg); }
inline Error budget_error(const std::string& msg) { return Error(ErrorCode::Budget, msg); }
inline Error degenerate_error(const std::string& msg) { return Error(ErrorCode::Degenerate, msg); }
inline Error internal_error(const std::string& msg) { return Error(ErrorCode::Internal, msg); }

} // namespace hermdeg

#endif
