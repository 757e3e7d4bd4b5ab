#pragma once

#include <stdexcept>
#include <string>

namespace fangcheng {

// Base class for every recoverable toolkit error. Subclasses carry whatever
// context the failure site had (positions are 1-based where present).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::string msg, int line, int column)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + std::move(msg)),
          line(line), column(column) {}
    int line;
    int column;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DivideByZero : public Error {
public:
    DivideByZero() : Error("division by zero") {}
};

// A fraction-free division that left a remainder. Reported, never truncated.
class InexactDivision : public Error {
public:
    InexactDivision(std::string dividend, std::string divisor)
        : Error("inexact division: " + dividend + " / " + divisor),
          dividend(std::move(dividend)), divisor(std::move(divisor)) {}
    InexactDivision(const InexactDivision& inner, int row, int col)
        : Error("inexact division at row " + std::to_string(row) + ", column " +
                std::to_string(col) + ": " + inner.dividend + " / " + inner.divisor),
          dividend(inner.dividend), divisor(inner.divisor), row(row), col(col) {}
    std::string dividend;
    std::string divisor;
    int row = 0;   // 0 = not attached to a tableau position
    int col = 0;
};

class ZeroPivot : public Error {
public:
    explicit ZeroPivot(int column)
        : Error("zero pivot in column " + std::to_string(column) +
                " (strict policy; a nonzero candidate exists below)"),
          column(column) {}
    int column;
};

class RankDeficient : public Error {
public:
    explicit RankDeficient(int column)
        : Error("rank deficient: column " + std::to_string(column) +
                " is zero from the diagonal down"),
          column(column) {}
    int column;
};

class SingularLeadingMinor : public Error {
public:
    explicit SingularLeadingMinor(int order)
        : Error("leading principal minor of order " + std::to_string(order) + " is zero"),
          order(order) {}
    int order;
};

class SingularDiagonal : public Error {
public:
    explicit SingularDiagonal(int row)
        : Error("zero diagonal entry in row " + std::to_string(row)), row(row) {}
    int row;
};

class SizeLimit : public Error {
public:
    SizeLimit(int n, int limit)
        : Error("matrix order " + std::to_string(n) + " exceeds the oracle guard (" +
                std::to_string(limit) + ")") {}
};

class TooSmall : public Error {
public:
    using Error::Error;
};

class UnderDetermined : public Error {
public:
    using Error::Error;
};

class OverDetermined : public Error {
public:
    using Error::Error;
};

class UnsupportedIndeterminate : public Error {
public:
    using Error::Error;
};

// Strategy/ring mismatches and broken call contracts (e.g. FieldGauss over an
// integer tableau, a finish phase fed a non-echelon tableau).
class ContractViolation : public Error {
public:
    using Error::Error;
};

} // namespace fangcheng
