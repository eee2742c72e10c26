#pragma once

#include <map>
#include <vector>

#include "posettop/poset.hpp"

namespace posettop {

// Labels compare lexicographically.
using Label = std::vector<std::int64_t>;
using EdgeLabeling = std::map<Cover, Label>;

}  // namespace posettop
