#pragma once

#include <stdexcept>
#include <string>

namespace pgt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed caller input: bad edges, vertices outside the graph, partial
// maps, improper colorings, unparsable files. Maps to CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// A guarded exponential sweep was asked to exceed its size ceiling.
// Maps to CLI exit code 3.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

class SelfLoopError : public InputError {
public:
    using InputError::InputError;
};

class InvalidEdgeError : public InputError {
public:
    using InputError::InputError;
};

class UnknownVertexError : public InputError {
public:
    using InputError::InputError;
};

class NotASubsetError : public InputError {
public:
    using InputError::InputError;
};

class VertexCollisionError : public InputError {
public:
    using InputError::InputError;
};

class PartialColoringError : public InputError {
public:
    using InputError::InputError;
};

class PartialMapError : public InputError {
public:
    using InputError::InputError;
};

class ZeroMultiplicityError : public InputError {
public:
    using InputError::InputError;
};

class ImproperInputError : public InputError {
public:
    using InputError::InputError;
};

class SyntaxError : public InputError {
public:
    SyntaxError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace pgt
