#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wireclass {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One rejected input row: the 1-based line it started on and why it failed.
struct MalformedRow {
    std::size_t line = 0;
    std::string reason;
};

class MalformedInput : public Error {
public:
    explicit MalformedInput(std::vector<MalformedRow> rows)
        : Error(describe(rows)), rows_(std::move(rows)) {}
    const std::vector<MalformedRow>& rows() const { return rows_; }

private:
    static std::string describe(const std::vector<MalformedRow>& rows);
    std::vector<MalformedRow> rows_;
};

class EmptyInput : public Error {
public:
    EmptyInput() : Error("empty input") {}
};

class IoError : public Error {
public:
    using Error::Error;
};

class ArffSyntaxError : public Error {
public:
    ArffSyntaxError(std::size_t line, const std::string& reason)
        : Error("ARFF syntax error at line " + std::to_string(line) + ": " + reason),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnsupportedFeatureError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class UnknownAttributeError : public Error {
public:
    using Error::Error;
};

class NotNominalError : public Error {
public:
    using Error::Error;
};

class NotNumericError : public Error {
public:
    using Error::Error;
};

class AllMissingError : public Error {
public:
    using Error::Error;
};

class NotNominalClassError : public Error {
public:
    using Error::Error;
};

class EmptyDatasetError : public Error {
public:
    EmptyDatasetError() : Error("dataset has no instances") {}
};

class UnseenNominalError : public Error {
public:
    UnseenNominalError(const std::string& attribute, const std::string& value)
        : Error("unseen nominal value '" + value + "' for attribute '" + attribute + "'"),
          attribute_(attribute), value_(value) {}
    const std::string& attribute() const { return attribute_; }
    const std::string& value() const { return value_; }

private:
    std::string attribute_;
    std::string value_;
};

class SchemaMismatchError : public Error {
public:
    using Error::Error;
};

class DegenerateSplitError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class EmptyClassError : public Error {
public:
    using Error::Error;
};

class SingleClassError : public Error {
public:
    SingleClassError() : Error("training data contains a single class") {}
};

class VersionMismatchError : public Error {
public:
    using Error::Error;
};

class CorruptModelError : public Error {
public:
    CorruptModelError(std::size_t line, const std::string& reason)
        : Error("corrupt model file at line " + std::to_string(line) + ": " + reason),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class LengthMismatchError : public Error {
public:
    using Error::Error;
};

class UnknownLabelError : public Error {
public:
    using Error::Error;
};

class EmptyMatrixError : public Error {
public:
    EmptyMatrixError() : Error("confusion matrix has no entries") {}
};

}  // namespace wireclass
