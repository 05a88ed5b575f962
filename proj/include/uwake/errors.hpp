// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace uwake {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside the physical domain of a model (negative distance, f <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Range solver bracket does not contain the sensitivity crossing.
class NoSolution : public Error {
public:
    using Error::Error;
};

class PolicyError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed scenario document. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0) : Error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed scenario that violates a model invariant.
class ValidationError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

}  // namespace uwake
