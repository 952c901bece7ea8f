#pragma once

#include <stdexcept>
#include <string>

namespace lfgadmm {

// Error taxonomy. Configuration problems are caught before a run starts;
// the runtime errors below abort a run with a diagnostic.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ScheduleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chain group of a worker. Neighbors in the chain always belong to opposite
// groups; heads update first within an iteration, tails consume their fresh
// values.
enum class Group { Head, Tail };

inline const char* to_string(Group g) { return g == Group::Head ? "head" : "tail"; }

}  // namespace lfgadmm
