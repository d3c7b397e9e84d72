#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fstag {

/// Malformed resource file. `line` is 1-based; 0 means "whole file".
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string source, std::size_t line, const std::string& what)
      : std::runtime_error(render(source, line, what)), source_(std::move(source)), line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  static std::string render(const std::string& source, std::size_t line, const std::string& what) {
    return line ? source + ":" + std::to_string(line) + ": " + what : source + ": " + what;
  }

  std::string source_;
  std::size_t line_;
};

}  // namespace fstag
