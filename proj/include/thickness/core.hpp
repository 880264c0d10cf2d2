#ifndef THICKNESS_CORE_HPP
#define THICKNESS_CORE_HPP

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace thickness {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Failure categories; the CLI maps them onto exit codes 1, 2 and 3.
enum class ErrorKind { InvalidInput, Failure, Timeout };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error invalid_input(const std::string& what) {
  return Error(ErrorKind::InvalidInput, what);
}
inline Error failure(const std::string& what) {
  return Error(ErrorKind::Failure, what);
}
inline Error timeout(const std::string& what) {
  return Error(ErrorKind::Timeout, what);
}

/// Wall-clock budget passed by value into every search routine.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline never() { return Deadline(); }
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = Clock::now() +
            std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }
  static Deadline after_seconds(double seconds) {
    return after(std::chrono::duration<double>(seconds));
  }

  bool unlimited() const { return !at_.has_value(); }
  bool expired() const { return at_.has_value() && Clock::now() >= *at_; }

 private:
  std::optional<Clock::time_point> at_;
};

/// One end of an edge. End 0 is the `u` end as written in the edge list.
struct Dart {
  EdgeId edge = 0;
  int end = 0;

  Dart opposite() const { return Dart{edge, 1 - end}; }
  auto operator<=>(const Dart&) const = default;
};

}  // namespace thickness

#endif  // THICKNESS_CORE_HPP
