#ifndef toric_errors_hpp
#define toric_errors_hpp

#include <stdexcept>
#include <string>

namespace toric {

/// Raised when a caller violates a documented precondition (bad labels,
/// malformed input files, sets that are not permutations, ...).
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an enumeration exceeds a configured cap (flip-class BFS,
/// recursion node budget).  Callers may retry with a larger cap.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal invariant that is guaranteed by theory fails at
/// runtime (e.g. the blocks of a partition overlap, or the randomized
/// equality pre-check disagrees with the exact check).  Always a bug.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace toric

#endif
