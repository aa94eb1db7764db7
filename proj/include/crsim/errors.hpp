/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_ERRORS_HPP
#define CRSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crsim {

// Bad experiment configuration (unknown id, inconsistent fields). The CLI
// maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical breakdown (singular matrix, non-convergent quadrature,
// bracketing failure). The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace crsim

#endif
