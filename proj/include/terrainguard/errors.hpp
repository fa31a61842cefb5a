#pragma once

#include <stdexcept>
#include <string>

namespace terrainguard {

// Malformed input text (rational strings, JSON documents, solution files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally invalid data: non-monotone terrain, out-of-range coordinates,
// non-positive weights, mismatched list lengths.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point that cannot be covered under the instance's rules. `subject` names
// the uncoverable point (its x coordinate) or constraint row.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(std::string subject, const std::string& what)
      : std::runtime_error(what), subject_(std::move(subject)) {}
  const std::string& subject() const { return subject_; }

 private:
  std::string subject_;
};

// Brute-force enumeration refused: ground set larger than the configured cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::size_t size, std::size_t cap)
      : std::runtime_error("ground set of size " + std::to_string(size) +
                           " exceeds enumeration cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

}  // namespace terrainguard
