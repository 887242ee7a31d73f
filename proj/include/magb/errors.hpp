#pragma once

#include <stdexcept>
#include <string>

namespace magb {

// Error taxonomy mirrored by the CLI exit codes:
//   parse_error    -> 2
//   resource_limit -> 3
//   domain_error   -> 4 (and subclasses)
class error : public std::runtime_error {
  public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class parse_error : public error {
  public:
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), pos(pos) {}
    std::size_t pos;
};

class invalid_parameter : public error {
  public:
    using error::error;
};

class resource_limit : public error {
  public:
    using error::error;
};

class domain_error : public error {
  public:
    using error::error;
};

class division_by_zero : public domain_error {
  public:
    division_by_zero() : domain_error("division by zero") {}
};

class invalid_cocycle : public domain_error {
  public:
    invalid_cocycle(const std::string& msg) : domain_error(msg) {}
};

class not_projective : public domain_error {
  public:
    not_projective(const std::string& msg) : domain_error(msg) {}
};

class unsupported_scalar : public domain_error {
  public:
    unsupported_scalar(const std::string& msg) : domain_error(msg) {}
};

class invalid_action : public domain_error {
  public:
    invalid_action(const std::string& msg) : domain_error(msg) {}
};

class not_division_algebra : public domain_error {
  public:
    not_division_algebra(const std::string& msg) : domain_error(msg) {}
};

class invalid_symmetry_data : public domain_error {
  public:
    invalid_symmetry_data(const std::string& msg) : domain_error(msg) {}
};

class invalid_antiunitary : public domain_error {
  public:
    invalid_antiunitary(const std::string& msg) : domain_error(msg) {}
};

}  // namespace magb
