#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lctr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed token in partition text. index() is the zero-based token number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t index) : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// A part sequence that increases somewhere. index() is the zero-based part
// index of the first part larger than its predecessor (or the first
// non-positive part).
class NotAPartition : public Error {
public:
    NotAPartition(const std::string& what, std::size_t index) : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class InvalidFamilyParam : public Error { using Error::Error; };
class InvalidShape : public Error { using Error::Error; };
class EmptyBoard : public Error { using Error::Error; };
class BudgetExceeded : public Error { using Error::Error; };
class ArithmeticOverflow : public Error { using Error::Error; };
class StartIsTerminal : public Error { using Error::Error; };
class UnsupportedQuery : public Error { using Error::Error; };
class TerminalPosition : public Error { using Error::Error; };
class IllegalMove : public Error { using Error::Error; };
class SessionFinished : public Error { using Error::Error; };
class WrongTurn : public Error { using Error::Error; };
class UnknownSession : public Error { using Error::Error; };

}  // namespace lctr
