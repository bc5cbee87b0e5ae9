#pragma once

#include <stdexcept>
#include <string>

namespace freecomm {

// Base class for everything the library throws on bad input or a violated
// precondition. The message names the violated invariant.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

class NotInSubgroup : public Error {
 public:
  using Error::Error;
};

class InfiniteIndex : public Error {
 public:
  using Error::Error;
};

class IndexCapExceeded : public Error {
 public:
  using Error::Error;
};

// A partial isomorphism (or automorphism) failed validation.
class InvalidIso : public Error {
 public:
  enum class Reason {
    kInfiniteIndex,
    kBasisCount,
    kImageOutsideCodomain,
    kRankDrop,
    kImageMismatch,
    kNotAutomorphism,
    kHypothesis,
  };

  InvalidIso(Reason reason, std::string const& what)
      : Error(what), reason_(reason) {}

  [[nodiscard]] Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace freecomm
