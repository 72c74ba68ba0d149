#pragma once

#include <stdexcept>
#include <string>

namespace loxo {

// Shape mismatch: non-square matrix, vector length vs rank, sequence lengths.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Symmetric form with det = 0.
class DegenerateFormError : public std::domain_error {
public:
    explicit DegenerateFormError(const std::string& what) : std::domain_error(what) {}
};

// M^T G M != G; carries the first violating entry.
class NotAnIsometryError : public std::domain_error {
public:
    NotAnIsometryError(const std::string& what, int row, int col)
        : std::domain_error(what), row_(row), col_(col) {}
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

// Operation called on a classification of the wrong kind.
class KindError : public std::logic_error {
public:
    explicit KindError(const std::string& what) : std::logic_error(what) {}
};

// Symmetric-power basis would exceed the configured size cap.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// A stated precondition does not hold (e.g. non-log-concave candidate sequence).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace loxo
