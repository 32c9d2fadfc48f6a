#pragma once

#include <stdexcept>
#include <string>

namespace crosswalk {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Input bytes do not parse under their declared syntax (JSON, XML, Turtle).
class MalformedDocumentError : public Error {
public:
    using Error::Error;
};

/// Document parses but breaks the schema contract (unknown property name,
/// duplicate Title/Identifier, qualifier on a property that takes none, ...).
class SchemaViolationError : public Error {
public:
    using Error::Error;
};

/// An assertion value is empty where a non-empty value is required.
class EmptyValueError : public Error {
public:
    using Error::Error;
};

/// A qualified assertion reached a role resolver that has no route for it.
class UnknownQualifierError : public Error {
public:
    using Error::Error;
};

/// An element path is not part of the target standard's vocabulary.
class InvalidPathError : public Error {
public:
    using Error::Error;
};

/// A document's root element or required context does not match the
/// standard it was declared as.
class WrongStandardError : public Error {
public:
    using Error::Error;
};

/// The base URI handed to the URI minter is not an absolute URI ending in '/'.
class InvalidBaseError : public Error {
public:
    using Error::Error;
};

} // namespace crosswalk
