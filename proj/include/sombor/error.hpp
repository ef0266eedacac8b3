#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sombor {

enum class ErrorKind {
  not_a_tree,
  degree_bound,
  bad_label,
  duplicate_edge,
  unsupported_format,
  parse_error,
  resource_limit,
  order_too_large,
  order_too_small,
  invalid_argument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::not_a_tree: return "NotATree";
    case ErrorKind::degree_bound: return "DegreeBound";
    case ErrorKind::bad_label: return "BadLabel";
    case ErrorKind::duplicate_edge: return "DuplicateEdge";
    case ErrorKind::unsupported_format: return "UnsupportedFormat";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::resource_limit: return "ResourceLimit";
    case ErrorKind::order_too_large: return "OrderTooLarge";
    case ErrorKind::order_too_small: return "OrderTooSmall";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require_order_at_least(int n, int minimum, const char* what) {
  if (n < minimum)
    throw Error(ErrorKind::order_too_small,
                std::string(what) + " needs n >= " + std::to_string(minimum) +
                    ", got " + std::to_string(n));
}

}  // namespace sombor
