#pragma once

#include <stdexcept>
#include <string>

namespace flagwitt {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidRank : Error {
  InvalidRank(char letter, int rank)
      : Error("invalid rank: " + std::string(1, letter) + std::to_string(rank)),
        letter(letter), rank(rank) {}
  char letter;
  int rank;
};

struct VertexOutOfRange : Error {
  VertexOutOfRange(int vertex, int rank)
      : Error("vertex " + std::to_string(vertex) + " out of range 1.." +
              std::to_string(rank)),
        vertex(vertex) {}
  int vertex;
};

struct DiagramMismatch : Error {
  DiagramMismatch() : Error("operands live on different diagrams") {}
};

struct AlphaInTheta : Error {
  explicit AlphaInTheta(int alpha)
      : Error("vertex " + std::to_string(alpha) + " lies in theta"),
        alpha(alpha) {}
  int alpha;
};

struct NotInPicard : Error {
  explicit NotInPicard(int beta)
      : Error("weight has nonzero coefficient at theta vertex " +
              std::to_string(beta)),
        beta(beta) {}
  int beta;
};

struct LambdaMeetsTheta : Error {
  explicit LambdaMeetsTheta(int vertex)
      : Error("lambda meets theta at vertex " + std::to_string(vertex)),
        vertex(vertex) {}
  int vertex;
};

struct ThetaLambdaOverlap : Error {
  explicit ThetaLambdaOverlap(int vertex)
      : Error("theta and lambda overlap at vertex " + std::to_string(vertex)),
        vertex(vertex) {}
  int vertex;
};

struct NotOrthogonal : Error {
  NotOrthogonal(int alpha, int beta)
      : Error("vertex " + std::to_string(alpha) + " is adjacent to theta vertex " +
              std::to_string(beta)),
        alpha(alpha), beta(beta) {}
  int alpha;
  int beta;
};

struct NotBorel : Error {
  NotBorel() : Error("operation requires theta to be empty") {}
};

struct RankLimitExceeded : Error {
  RankLimitExceeded(int rank, int limit)
      : Error("rank " + std::to_string(rank) + " exceeds enumeration limit " +
              std::to_string(limit)),
        rank(rank), limit(limit) {}
  int rank;
  int limit;
};

struct Overflow : Error {
  Overflow() : Error("integer overflow in weight arithmetic") {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace flagwitt
