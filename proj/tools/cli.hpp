#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "posettop/arrangements.hpp"
#include "posettop/complex.hpp"
#include "posettop/labeling.hpp"
#include "posettop/poset.hpp"

namespace posettop::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kInfeasible = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class ObjectKind { poset, complex, arrangement };

struct FamilyObject {
  ObjectKind kind = ObjectKind::poset;
  std::string name;
  Poset poset;
  SimplicialComplex complex;
  Arrangement arrangement;
  // Built-in labelings by name; the first is the default.
  std::vector<std::pair<std::string, std::function<EdgeLabeling()>>> labelings;
};

// spec = {name, params...}.  Arrangement-only names resolve first when
// prefer_arrangement is set ("k-equal" then means the subspace arrangement).
FamilyObject build_family(const std::vector<std::string>& spec, bool prefer_arrangement = false);
std::vector<std::string> family_names();

}  // namespace posettop::cli
