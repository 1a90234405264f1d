#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orbimod {

/// A mathematical precondition failed (bad isotropy, reducible bundle, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input document does not match the published schema. Carries the field path.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace orbimod
