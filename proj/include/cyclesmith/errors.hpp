#pragma once

#include <stdexcept>
#include <string>

namespace cyclesmith {

// Input that is not a valid graph6 record. CLI exit code 3.
struct Graph6Error : std::runtime_error {
  explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

// An exact-search or capacity limit was exceeded. CLI exit code 4.
struct SizeCapError : std::runtime_error {
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

// A certified conclusion failed to materialize: the engine produced ends with
// qualifying degrees but no cycle of the promised length exists, or a
// violation witness surfaced on a hypothesis-passing graph. This must never
// pass silently. CLI exit code 2.
struct CounterexampleError : std::runtime_error {
  explicit CounterexampleError(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke a documented precondition in a way that is only detectable
// mid-computation (e.g. the supplied path was not a longest path).
struct PreconditionError : std::logic_error {
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cyclesmith
