#ifndef NECKLACE_ERRORS_HPP
#define NECKLACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace necklace {

// Invalid argument supplied by a caller (bad letter, length mismatch, ...).
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// A configured cap (enumeration size, sequence length, subset count) was hit.
class resource_limit : public std::runtime_error {
public:
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed (e.g. an exact division left a remainder).
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace necklace

#endif
