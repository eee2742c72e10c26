#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace posettop {

using Integer = mpz_class;
using Rational = mpq_class;
using Element = std::size_t;

inline constexpr Element kNoElement = static_cast<Element>(-1);

// Bad input: malformed data, violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation whose size exceeds the configured guard.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// Maximum number of chain-space columns any single computation may build.
// Reads POSETTOP_MAX_ELEMENTS once per call; defaults to 200000.
std::size_t chain_space_limit();

// Throws Infeasible when count exceeds chain_space_limit().
void check_chain_space(std::size_t count, const char* what);

std::string to_string(const Integer& value);

}  // namespace posettop
