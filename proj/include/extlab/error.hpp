#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extlab {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad tables, non-cocycles, mismatched bases, unknown presets.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A search or enumeration refused to run because a configured bound was hit.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t cap)
        : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

// Search and construction bounds. Searches refuse rather than degrade.
struct Limits {
    // automorphism / isomorphism / hom-set searches
    std::size_t max_group_order = 64;
    // explicit Cayley tables we are willing to build
    std::size_t max_table_order = 4096;
    // brute-force enumeration bound (oracles)
    std::size_t oracle_bound = 1'000'000;
};

}  // namespace extlab
