#include "posettop/common.hpp"

#include <cstdlib>

namespace posettop {

std::size_t chain_space_limit() {
  const char* env = std::getenv("POSETTOP_MAX_ELEMENTS");
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

void check_chain_space(std::size_t count, const char* what) {
  std::size_t limit = chain_space_limit();
  if (count > limit) {
    throw Infeasible(std::string(what) + ": " + std::to_string(count) +
                     " columns exceeds limit " + std::to_string(limit) +
                     " (set POSETTOP_MAX_ELEMENTS to raise it)");
  }
}

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace posettop
