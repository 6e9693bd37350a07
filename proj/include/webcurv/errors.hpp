#pragma once

#include <stdexcept>
#include <string>

namespace webcurv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct DegreeError : Error {
    explicit DegreeError(const std::string& what) : Error(what) {}
};

struct CoefficientCountError : Error {
    explicit CoefficientCountError(const std::string& what) : Error(what) {}
};

struct DuplicateSlopes : Error {
    DuplicateSlopes() : Error("slopes are not pairwise distinct") {}
};

struct NoValidPivotRow : Error {
    NoValidPivotRow() : Error("no row deletion leaves an invertible matrix") {}
};

struct WrongDegree : Error {
    explicit WrongDegree(const std::string& what) : Error(what) {}
};

// Entry indices are 1-based; (0, 0) means "not tied to a matrix entry".
struct PoleAtPoint : Error {
    int row = 0;
    int col = 0;
    explicit PoleAtPoint(const std::string& what, int r = 0, int c = 0)
        : Error(what), row(r), col(c) {}
};

struct JetDivisionByZero : Error {
    JetDivisionByZero() : Error("jet with vanishing leading coefficient; point too special") {}
    explicit JetDivisionByZero(const std::string& what) : Error(what) {}
};

}  // namespace webcurv
