#pragma once

#include <stdexcept>
#include <string>

namespace qmcstab {

// Thrown when a computation refuses to produce a silently wrong answer
// (singular Gram, eigensolver non-convergence, scenario cap exceeded, ...).
// Precondition violations use std::invalid_argument instead.
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qmcstab
