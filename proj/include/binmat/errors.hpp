#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binmat {

// Precondition or argument violation (bad element, bad functional, size
// mismatch, ...).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation is valid but not implemented at this rank / scale.
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A move sequence failed validation while being replayed.
struct replay_error : std::runtime_error {
    std::size_t move_index;
    replay_error(std::size_t index, const std::string& what)
        : std::runtime_error("move " + std::to_string(index) + ": " + what),
          move_index(index) {}
};

// A search ran out of its visit budget without resolving the query.
struct indeterminate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certificate sub-check failed; the message names the counterexample.
struct certificate_refused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_number(line) {}
    std::size_t line_number;
};

}  // namespace binmat
