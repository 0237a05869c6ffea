#pragma once

#include <stdexcept>
#include <string>

namespace dimred {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed CSV content (bad arity, unparsable cell).
class IngestionError : public Error {
public:
    using Error::Error;
};

/// Header-level problems such as duplicate column names.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// An argument violates an operation's precondition.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A metric is undefined for the given input (e.g. silhouette of one cluster).
class MetricError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace dimred
