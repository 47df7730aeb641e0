#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weakhopf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NotIdempotent : public Error {
public:
    NotIdempotent(std::size_t column)
        : Error("map is not idempotent (first failing column " + std::to_string(column) + ")"),
          column(column) {}
    std::size_t column;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t line, std::size_t col)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    std::size_t line;
    std::size_t col;
};

class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& name)
        : Error("unknown name '" + name + "'"), name(name) {}
    std::string name;
};

class TypeError : public Error {
public:
    TypeError(const std::string& expected, const std::string& found, const std::string& path)
        : Error("type error at " + path + ": expected " + expected + ", found " + found),
          expected(expected), found(found), path(path) {}
    std::string expected;
    std::string found;
    std::string path;
};

class RegularityPreconditionFailed : public Error {
public:
    RegularityPreconditionFailed() : Error("g * u != g") {}
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

}  // namespace weakhopf
