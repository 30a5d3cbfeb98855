#pragma once

#include <stdexcept>
#include <string>

namespace bnls {

// Error taxonomy; the CLI maps these to exit codes
// (0 ok, 2 config, 3 contraction failure, 4 verification failure).

struct pole_error : std::domain_error {
    explicit pole_error(const std::string& msg) : std::domain_error(msg) {}
};

struct config_error : std::invalid_argument {
    explicit config_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct window_error : config_error {
    explicit window_error(const std::string& msg) : config_error(msg) {}
};

struct singular_matrix_error : config_error {
    explicit singular_matrix_error(const std::string& msg) : config_error(msg) {}
};

struct contraction_error : std::runtime_error {
    explicit contraction_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct quadrature_error : std::runtime_error {
    explicit quadrature_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bnls
