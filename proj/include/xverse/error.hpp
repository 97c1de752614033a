#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xverse {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (braid words, polynomial text, flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but outside an operation's domain
/// (links instead of knots, zero scalars, composite primes, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// The index-2 polynomial pipeline could not reduce the presentation to a
/// single eliminant.
class EliminationFailed : public Error {
 public:
  explicit EliminationFailed(const std::string& why) : Error("elimination failed: " + why) {}
};

/// A counting job exceeded its evaluation budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t budget, std::uint64_t spent)
      : Error("budget exceeded: " + std::to_string(spent) + " evaluations > budget " +
              std::to_string(budget)),
        budget_(budget),
        spent_(spent) {}

  std::uint64_t budget() const noexcept { return budget_; }
  std::uint64_t spent() const noexcept { return spent_; }

 private:
  std::uint64_t budget_;
  std::uint64_t spent_;
};

}  // namespace xverse
