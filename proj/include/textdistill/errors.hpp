#pragma once

#include <stdexcept>
#include <string>

namespace textdistill {

// Invalid configuration, bad flags, precondition violations. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (bad JSONL line, unknown label, duplicate id, ...).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// File system / serialization failures, including model-file integrity.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Training aborted (non-finite loss and similar runtime failures).
class TrainError : public std::runtime_error {
 public:
  explicit TrainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace textdistill
