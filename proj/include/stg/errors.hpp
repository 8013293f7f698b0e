#pragma once

#include <stdexcept>
#include <string>

namespace stg {

// Malformed input data (bad schema, dangling edge, broken table).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input outside an operation's domain.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration or truncation exceeded a configured cap.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified-by-construction step failed to re-verify. Must never happen.
struct InternalInconsistency : std::logic_error {
  explicit InternalInconsistency(const std::string& msg) : std::logic_error(msg) {}
};

// Resource caps, overridable through environment variables.
long long max_enumeration_size();   // STG_MAX_ENUM
long long max_truncation_depth();   // STG_MAX_DEPTH

}  // namespace stg
