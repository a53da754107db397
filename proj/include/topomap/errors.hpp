#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topomap {

// Error families map onto the CLI exit codes: usage 1, data 2, numeric 3.
enum class ErrorKind : int { kUsage = 1, kData = 2, kNumeric = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Caller passed a parameter outside its documented domain.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& m) : Error(ErrorKind::kUsage, m) {}
};

// Regular-graph request that no simple graph can satisfy (n*r odd, r out of range).
struct InfeasibleDegree : Error {
  explicit InfeasibleDegree(const std::string& m) : Error(ErrorKind::kUsage, m) {}
};

// The restart cap of a rejection-sampling generator was exhausted.
struct GenerationExhausted : Error {
  explicit GenerationExhausted(const std::string& m) : Error(ErrorKind::kNumeric, m) {}
};

struct InvalidPermutation : Error {
  explicit InvalidPermutation(const std::string& m) : Error(ErrorKind::kData, m) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m) : Error(ErrorKind::kData, m) {}
};

// Graph order differs from the dimension a model was trained on.
struct NodeCountMismatch : Error {
  explicit NodeCountMismatch(const std::string& m) : Error(ErrorKind::kData, m) {}
};

struct EmptyDataset : Error {
  explicit EmptyDataset(const std::string& m) : Error(ErrorKind::kData, m) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& m) : Error(ErrorKind::kData, m) {}
};

struct NoLabeledNeurons : Error {
  explicit NoLabeledNeurons(const std::string& m) : Error(ErrorKind::kData, m) {}
};

// Eigensolver failed to reach tolerance within its sweep budget.
struct NotConverged : Error {
  explicit NotConverged(const std::string& m) : Error(ErrorKind::kNumeric, m) {}
};

// Covariance carries no usable 2-D structure (top eigenvalues ~ 0).
struct DegenerateCovariance : Error {
  explicit DegenerateCovariance(const std::string& m) : Error(ErrorKind::kNumeric, m) {}
};

// The brute-force oracle refuses matrices it cannot handle exactly.
struct DimensionTooLarge : Error {
  explicit DimensionTooLarge(const std::string& m) : Error(ErrorKind::kData, m) {}
};

struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorKind::kData, m) {}
};

// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
  ParseError(const std::string& file, std::size_t line_no, const std::string& m)
      : Error(ErrorKind::kData, file + ":" + std::to_string(line_no) + ": " + m),
        line(line_no) {}

  std::size_t line;
};

}  // namespace topomap
