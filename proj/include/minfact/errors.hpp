#pragma once

#include <stdexcept>
#include <string>

namespace minfact {

// Thrown when a structural guarantee that the library itself is supposed to
// maintain turns out to be violated (free group action, integral division,
// closure of an orbit, ...).  Distinct from std::invalid_argument, which is
// reserved for bad caller input.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minfact
