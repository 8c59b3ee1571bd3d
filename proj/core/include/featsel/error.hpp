#pragma once

#include <stdexcept>
#include <string>

namespace featsel {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller passed an out-of-contract argument (bad k, bad fraction, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Malformed input text (non-numeric cell, broken matrix file, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally invalid data (missing cells, duplicate names, too few rows).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// File system failure; message carries the offending path.
class IoError : public Error {
public:
    using Error::Error;
};

/// Invalid experiment or CLI configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace featsel
