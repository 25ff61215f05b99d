#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int line_no) : Error(msg), line(line_no) {}
};

struct BadShape : Error { using Error::Error; };
struct NotLatinSquare : Error { using Error::Error; };
struct NoIdentity : Error { using Error::Error; };
struct NotAssociative : Error { using Error::Error; };
struct NotIP : Error { using Error::Error; };
struct SampleRequired : Error { using Error::Error; };
struct OracleInconsistent : Error { using Error::Error; };
struct NotFaithful : Error { using Error::Error; };
struct NotIntegral : Error { using Error::Error; };
struct NoIntegral : Error { using Error::Error; };
struct NotDiscreteType : Error { using Error::Error; };
struct InconsistentTau : Error { using Error::Error; };

}  // namespace qhopf
