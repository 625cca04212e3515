#pragma once

#include <stdexcept>
#include <string>

namespace integdistill {

/// Base of every diagnostic the toolchain raises. Carries the source position
/// (line/column are 1-based; 0 means "not applicable").
class Error : public std::runtime_error {
 public:
  Error(std::string message, std::string path, int line, int column)
      : std::runtime_error(format(message, path, line, column)),
        message_(std::move(message)),
        path_(std::move(path)),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  const std::string& path() const noexcept { return path_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, const std::string& path,
                            int line, int column) {
    std::string out = path.empty() ? std::string("<input>") : path;
    if (line > 0) {
      out += ':' + std::to_string(line);
      if (column > 0) out += ':' + std::to_string(column);
    }
    return out + ": " + message;
  }

  std::string message_;
  std::string path_;
  int line_;
  int column_;
};

class LexError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SemanticError : public Error {
 public:
  using Error::Error;
};

class InstrumentError : public Error {
 public:
  using Error::Error;
};

/// No constructor chain can build the objects a test path needs.
class UnconstructibleDependency : public Error {
 public:
  explicit UnconstructibleDependency(std::string message)
      : Error(std::move(message), "", 0, 0) {}
};

}  // namespace integdistill
