#ifndef COARSE_ERRORS_HPP
#define COARSE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coarse
{

// Base of every error raised by the toolkit. The CLI maps all of these to
// exit status 2.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Malformed or mismatched arguments (window mismatch, unlabeled window, bad
// document syntax).
class InputError : public Error
{
  public:
    using Error::Error;
};

// A generator rule failed to enumerate phi(n).
class GeneratorError : public Error
{
  public:
    using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error
{
  public:
    using Error::Error;
};

// Exhaustive search refused because the window exceeds the configured cap.
class CapExceeded : public Error
{
  public:
    using Error::Error;
};

class SearchBudgetExceeded : public Error
{
  public:
    SearchBudgetExceeded(const std::string& what, std::int64_t best_exponent)
        : Error(what), best_exponent_(best_exponent)
    {
    }

    // Exponent with the smallest distance seen during the failed step.
    std::int64_t best_exponent() const { return best_exponent_; }

  private:
    std::int64_t best_exponent_;
};

} // namespace coarse

#endif
