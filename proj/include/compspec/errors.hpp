#pragma once

#include <stdexcept>
#include <string>

namespace compspec {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
 public:
  int vertex;
  explicit SelfLoopError(int u)
      : Error("self-loop at vertex " + std::to_string(u)), vertex(u) {}
};

class VertexOutOfRangeError : public Error {
 public:
  int vertex;
  int vertex_count;
  VertexOutOfRangeError(int u, int n)
      : Error("vertex " + std::to_string(u) + " out of range [0, " +
              std::to_string(n) + ")"),
        vertex(u),
        vertex_count(n) {}
};

class EmptyGraphError : public Error {
 public:
  EmptyGraphError() : Error("operation undefined on the empty digraph") {}
};

class NotStronglyConnectedError : public Error {
 public:
  NotStronglyConnectedError()
      : Error("digraph is not strongly connected") {}
};

class DidNotConvergeError : public Error {
 public:
  long iterations;
  double gap;
  DidNotConvergeError(long iters, double bracket_gap)
      : Error("power iteration did not reach the requested tolerance after " +
              std::to_string(iters) + " steps (bracket gap " +
              std::to_string(bracket_gap) + "); tolerance too tight"),
        iterations(iters),
        gap(bracket_gap) {}
};

class WitnessInvalidError : public Error {
 public:
  int component;  // offending vertex, or -1 for a scalar check
  double residual;
  WitnessInvalidError(const std::string& what, int comp, double res)
      : Error("invalid complementarity witness: " + what + " (component " +
              std::to_string(comp) + ", residual " + std::to_string(res) +
              ")"),
        component(comp),
        residual(res) {}
};

class TooLargeError : public Error {
 public:
  int vertex_count;
  int cap;
  TooLargeError(int n, int cap_)
      : Error("digraph has " + std::to_string(n) +
              " vertices, above the enumeration cap " + std::to_string(cap_)),
        vertex_count(n),
        cap(cap_) {}
};

class BadParamsError : public Error {
  using Error::Error;
};

class IsCycleError : public Error {
 public:
  IsCycleError() : Error("digraph is a cycle") {}
};

class ParseError : public Error {
 public:
  int line;
  ParseError(const std::string& what, int line_no)
      : Error("parse error at line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

/// Raised when two enumerated spectral radii land in the unsafe band
/// (dedup_tol, 10*dedup_tol]: too far apart to merge, too close to trust
/// as distinct. Aborting beats silently merging.
class DedupAmbiguousError : public Error {
 public:
  double gap;
  double dedup_tol;
  DedupAmbiguousError(double g, double tol)
      : Error("spectrum values separated by " + std::to_string(g) +
              " fall inside the ambiguous dedup band (tol " +
              std::to_string(tol) + ")"),
        gap(g),
        dedup_tol(tol) {}
};

/// Internal consistency failure (a bug trap, not a user error).
class InternalError : public Error {
  using Error::Error;
};

}  // namespace compspec
