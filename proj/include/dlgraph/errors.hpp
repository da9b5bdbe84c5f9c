#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dlg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidVertex : Error {
  explicit InvalidVertex(int id)
      : Error("unknown vertex id " + std::to_string(id)), id(id) {}
  int id;
};

struct TooLarge : Error {
  TooLarge(const std::string& what, long cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap(cap) {}
  long cap;
};

struct InvalidSpec : Error {
  using Error::Error;
};

struct Degenerate : Error {
  using Error::Error;
};

struct NotBipartite : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

struct OrderingFailed : Error {
  using Error::Error;
};

// Thrown when an H-graph component matches no G(m,n) core; carries the
// offending component's vertex ids.
struct NotDecomposable : Error {
  NotDecomposable(const std::string& what, std::vector<int> component)
      : Error(what), component(std::move(component)) {}
  std::vector<int> component;
};

struct NotChordalBipartite : Error {
  NotChordalBipartite(const std::string& what, std::vector<int> witness_cycle)
      : Error(what), witness_cycle(std::move(witness_cycle)) {}
  std::vector<int> witness_cycle;
};

struct NotK33eFree : Error {
  NotK33eFree(const std::string& what, std::vector<int> witness)
      : Error(what), witness(std::move(witness)) {}
  std::vector<int> witness;
};

}  // namespace dlg
