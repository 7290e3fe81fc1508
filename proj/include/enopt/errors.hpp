#pragma once

#include <stdexcept>
#include <string>

namespace enopt {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The regression design matrix is (numerically) rank-deficient.
class RankDeficientDesign : public Error {
  public:
    explicit RankDeficientDesign(const std::string& msg) : Error(msg) {}
};

class EmptyInput : public Error {
  public:
    explicit EmptyInput(const std::string& msg) : Error(msg) {}
};

class ZeroActualValue : public Error {
  public:
    explicit ZeroActualValue(const std::string& msg) : Error(msg) {}
};

class TooFewSamples : public Error {
  public:
    explicit TooFewSamples(const std::string& msg) : Error(msg) {}
};

class NonMonotoneTimestamps : public Error {
  public:
    explicit NonMonotoneTimestamps(const std::string& msg) : Error(msg) {}
};

/// The SMO solver hit its iteration cap before reaching the KKT tolerance.
class NoConvergence : public Error {
  public:
    NoConvergence(const std::string& msg, long long iterations, double kkt_gap)
        : Error(msg), iterations(iterations), kkt_gap(kkt_gap) {}
    long long iterations;
    double kkt_gap;
};

class AllGridPointsFailed : public Error {
  public:
    explicit AllGridPointsFailed(const std::string& msg) : Error(msg) {}
};

/// No configuration satisfies the active constraints.
class Infeasible : public Error {
  public:
    explicit Infeasible(const std::string& msg) : Error(msg) {}
};

/// A malformed input file; carries the 1-based line number.
class ParseError : public Error {
  public:
    ParseError(const std::string& file, long long line, const std::string& reason)
        : Error(file + ":" + std::to_string(line) + ": " + reason), line(line) {}
    long long line;
};

class SchemaMismatch : public Error {
  public:
    explicit SchemaMismatch(const std::string& msg) : Error(msg) {}
};

class VersionMismatch : public Error {
  public:
    explicit VersionMismatch(const std::string& msg) : Error(msg) {}
};

}  // namespace enopt
