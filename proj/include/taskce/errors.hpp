#ifndef TASKCE_ERRORS_HPP
#define TASKCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace taskce {

/// Base class for every error raised by the library. CLI maps these to
/// exit code 2 (data error); anything else is a usage bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, long row) : Error(what), row_(row) {}
  long row() const { return row_; }

 private:
  long row_;
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what) : Error(what) {}
};

class MissingLabel : public Error {
 public:
  MissingLabel(const std::string& what, long row, std::string column)
      : Error(what), row_(row), column_(std::move(column)) {}
  long row() const { return row_; }
  const std::string& column() const { return column_; }

 private:
  long row_;
  std::string column_;
};

class AlignmentError : public Error {
 public:
  explicit AlignmentError(const std::string& what) : Error(what) {}
};

class UnknownTask : public Error {
 public:
  explicit UnknownTask(const std::string& what) : Error(what) {}
};

class ZeroMarginal : public Error {
 public:
  explicit ZeroMarginal(const std::string& what) : Error(what) {}
};

class TrainingDiverged : public Error {
 public:
  TrainingDiverged(const std::string& what, int iteration)
      : Error(what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

class CorrelationUndefined : public Error {
 public:
  explicit CorrelationUndefined(const std::string& what) : Error(what) {}
};

class TooFewPoints : public Error {
 public:
  explicit TooFewPoints(const std::string& what) : Error(what) {}
};

class BadSize : public Error {
 public:
  explicit BadSize(const std::string& what) : Error(what) {}
};

class EmptyPlot : public Error {
 public:
  explicit EmptyPlot(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace taskce

#endif  // TASKCE_ERRORS_HPP
