#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "posettop/checks.hpp"
#include "posettop/families.hpp"
#include "posettop/homology.hpp"
#include "posettop/identities.hpp"
#include "posettop/io.hpp"
#include "posettop/oracles.hpp"
#include "posettop/series.hpp"
#include "posettop/shelling.hpp"

namespace posettop::cli {

namespace {

using nlohmann::json;

class CheckFailed : public std::runtime_error {
 public:
  explicit CheckFailed(json payload) : std::runtime_error("check failed"), payload(std::move(payload)) {}
  json payload;
};

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json betti_json(const std::map<long, Integer>& m) {
  json out = json::object();
  for (const auto& [i, v] : m)
    if (v != 0) out[std::to_string(i)] = integer_json(v);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void flatten(const std::string& prefix, const json& j, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    if (j.empty()) rows.emplace_back(prefix, "{}");
    for (const auto& [k, v] : j.items()) flatten(prefix.empty() ? k : prefix + "." + k, v, rows);
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); });
    if (scalars) {
      std::string s;
      for (const auto& v : j) s += (s.empty() ? "" : " ") + (v.is_string() ? v.get<std::string>() : v.dump());
      rows.emplace_back(prefix, j.empty() ? "[]" : s);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(prefix + "[" + std::to_string(i) + "]", j[i], rows);
    }
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string render(const json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten("", j, rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

struct InputOptions {
  std::vector<std::string> family;
  std::string input;
};

FamilyObject load(const InputOptions& in, bool prefer_arrangement) {
  if (!in.family.empty() && !in.input.empty()) throw Error("give either --family or --input, not both");
  if (!in.family.empty()) return build_family(in.family, prefer_arrangement);
  if (in.input.empty()) throw Error("missing input: use --family NAME PARAMS... or --input FILE");
  std::string text = read_file(in.input);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("input: " + std::string(e.what()));
  }
  FamilyObject o;
  o.name = in.input;
  if (j.is_object() && j.contains("labels")) {
    o.kind = ObjectKind::poset;
    o.poset = poset_from_json(text);
  } else if (j.is_object() && j.contains("facets")) {
    o.kind = ObjectKind::complex;
    o.complex = complex_from_json(text);
  } else if (j.is_object() && j.contains("subspaces")) {
    o.kind = ObjectKind::arrangement;
    o.arrangement = arrangement_from_json(text);
  } else {
    throw Error("input: not a poset, complex or arrangement document");
  }
  return o;
}

const Poset& need_poset(const FamilyObject& o, const std::string& kind) {
  if (o.kind != ObjectKind::poset) throw Error(kind + " needs a poset input");
  return o.poset;
}

const Arrangement& need_arrangement(const FamilyObject& o, const std::string& kind) {
  if (o.kind != ObjectKind::arrangement) throw Error(kind + " needs an arrangement input");
  return o.arrangement;
}

json object_json(const FamilyObject& o) {
  switch (o.kind) {
    case ObjectKind::poset: return json::parse(poset_to_json(o.poset));
    case ObjectKind::complex: return json::parse(complex_to_json(o.complex));
    case ObjectKind::arrangement: return json::parse(arrangement_to_json(o.arrangement));
  }
  return {};
}

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::indeterminate: return "indeterminate";
  }
  return "";
}

struct ComputeOptions {
  InputOptions in;
  bool proper = false;
  bool cohomology = false;
  bool rational = false;
  bool dual = false;
  bool no_verify = false;
  std::string labeling;
  std::string labeling_file;
  std::string convention = "strict";
  std::string matrices;
  std::size_t max_facets = 24;
};

json compute(const std::string& kind, const ComputeOptions& opt) {
  bool arrangement_kind = kind == "zaslavsky" || kind == "os" || kind == "gm" || kind == "lattice";
  FamilyObject o = load(opt.in, arrangement_kind);
  if (kind == "mobius") {
    const Poset& p = need_poset(o, kind);
    bool bounded = is_bounded(p);
    Integer mu = bounded ? mobius_invariant(p) : mobius_invariant(bounded_extension(p).poset);
    return json{{"bounded", bounded}, {"elements", p.size()}, {"mobius", integer_json(mu)}};
  }
  if (kind == "homology") {
    SimplicialComplex c;
    if (o.kind == ObjectKind::poset) {
      c = order_complex(opt.proper ? proper_part(o.poset).poset : o.poset);
    } else if (o.kind == ObjectKind::complex) {
      c = o.complex;
    } else {
      throw Error("homology needs a poset or complex input");
    }
    HomologyResult h = opt.rational ? rational_homology(c) : opt.cohomology ? cohomology(c) : homology(c);
    if (!opt.matrices.empty()) {
      std::filesystem::create_directories(opt.matrices);
      auto cc = chain_complex(c);
      for (long i = 0; i <= cc.top; ++i) {
        std::ofstream f(std::filesystem::path(opt.matrices) / ("boundary_" + std::to_string(i) + ".txt"));
        const auto& m = cc.boundary(i);
        f << m.rows << " " << m.cols << "\n" << to_triplets(m);
      }
    }
    return json::parse(homology_to_json(h));
  }
  if (kind == "betti-el") {
    const Poset& p = need_poset(o, kind);
    EdgeLabeling lambda;
    std::string used;
    if (!opt.labeling_file.empty()) {
      lambda = labeling_from_json(read_file(opt.labeling_file));
      used = opt.labeling_file;
    } else {
      if (o.labelings.empty()) throw Error("no built-in labeling for this input; use --labeling-file");
      auto it = o.labelings.begin();
      if (!opt.labeling.empty()) {
        it = std::find_if(o.labelings.begin(), o.labelings.end(), [&](const auto& l) { return l.first == opt.labeling; });
        if (it == o.labelings.end()) throw Error("unknown labeling '" + opt.labeling + "' for this family");
      }
      lambda = it->second();
      used = it->first;
    }
    ElConvention conv = opt.convention == "weak" ? ElConvention::weak_increasing : ElConvention::strict_increasing;
    auto check = verify_el_labeling(p, lambda, conv);
    if (!check.ok) {
      json fail{{"el", false}, {"labeling", used}, {"reason", check.reason}};
      if (check.interval) fail["interval"] = {check.interval->first, check.interval->second};
      throw CheckFailed(fail);
    }
    return json{{"el", true}, {"labeling", used}, {"betti", betti_json(betti_from_el(p, lambda, conv))}};
  }
  if (kind == "zaslavsky") {
    auto z = zaslavsky(need_arrangement(o, kind));
    return json{{"regions", integer_json(z.regions)}, {"bounded", integer_json(z.bounded)}};
  }
  if (kind == "os") return json{{"betti", betti_json(orlik_solomon_betti(need_arrangement(o, kind)))}};
  if (kind == "gm") return json{{"reduced_cohomology_ranks", betti_json(goresky_macpherson_betti(need_arrangement(o, kind)))}};
  if (kind == "lattice") {
    auto l = intersection_semilattice(need_arrangement(o, kind));
    json j = json::parse(poset_to_json(l.poset));
    j["dims"] = l.dims;
    return j;
  }
  if (kind == "whitney") {
    const Poset& p = need_poset(o, kind);
    Poset target = opt.dual ? dual(p).poset : p;
    return json{{"betti", betti_json(whitney_betti(target, !opt.no_verify))}};
  }
  if (kind == "shelling") {
    SimplicialComplex c;
    if (o.kind == ObjectKind::poset) {
      c = order_complex(opt.proper ? proper_part(o.poset).poset : o.poset);
    } else if (o.kind == ObjectKind::complex) {
      c = o.complex;
    } else {
      throw Error("shelling needs a poset or complex input");
    }
    auto s = find_shelling(c, opt.max_facets);
    json out{{"status", status_name(s.status)}, {"nodes", s.nodes}};
    if (s.status == SearchStatus::found) {
      out["order"] = s.order;
      json counts = json::object();
      for (const auto& [d, n] : s.homology_facet_counts) counts[std::to_string(d)] = n;
      out["homology_facets"] = counts;
    }
    return out;
  }
  if (kind == "rao") {
    auto s = search_recursive_atom_ordering(need_poset(o, kind));
    json out{{"status", status_name(s.status)}, {"nodes", s.nodes}};
    if (s.certificate) out["certificate"] = json::parse(certificate_to_json(*s.certificate));
    return out;
  }
  throw Error("unknown compute kind '" + kind + "'");
}

long arg_long(const std::vector<std::string>& a, std::size_t i, const std::string& name) {
  if (i >= a.size()) throw Error("oracle " + name + ": missing argument " + std::to_string(i + 1));
  try {
    std::size_t used = 0;
    long v = std::stol(a[i], &used);
    if (used != a[i].size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error("oracle " + name + ": '" + a[i] + "' is not an integer");
  }
}

std::vector<long> arg_list(const std::string& s, const std::string& name) {
  std::vector<long> out;
  if (s.empty() || s == "-") return out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(arg_long({part}, 0, name));
  return out;
}

void oracle_arity(const std::vector<std::string>& a, std::size_t n, const std::string& name) {
  if (a.size() != n) throw Error("oracle " + name + " takes " + std::to_string(n) + " argument(s)");
}

int small_arg(long v, const std::string& name, long hi) {
  if (v < 0 || v > hi) throw Error("oracle " + name + ": argument out of range [0, " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

json oracle(const std::string& name, const std::vector<std::string>& a) {
  json value;
  if (name == "bouc") {
    oracle_arity(a, 2, name);
    value = integer_json(bouc_betti(small_arg(arg_long(a, 0, name), name, 40), small_arg(arg_long(a, 1, name), name, 40)));
  } else if (name == "factorial") {
    oracle_arity(a, 1, name);
    value = integer_json(factorial(small_arg(arg_long(a, 0, name), name, 10000)));
  } else if (name == "double-factorial") {
    oracle_arity(a, 1, name);
    value = integer_json(double_factorial(small_arg(arg_long(a, 0, name), name, 10000)));
  } else if (name == "binomial") {
    oracle_arity(a, 2, name);
    value = integer_json(binomial(arg_long(a, 0, name), arg_long(a, 1, name)));
  } else if (name == "gaussian-binomial") {
    oracle_arity(a, 3, name);
    value = integer_json(gaussian_binomial(small_arg(arg_long(a, 0, name), name, 200), arg_long(a, 1, name), arg_long(a, 2, name)));
  } else if (name == "derangements") {
    oracle_arity(a, 1, name);
    value = integer_json(derangements(small_arg(arg_long(a, 0, name), name, 1000)));
  } else if (name == "catalan") {
    oracle_arity(a, 1, name);
    value = integer_json(catalan(small_arg(arg_long(a, 0, name), name, 1000)));
  } else if (name == "euler") {
    oracle_arity(a, 1, name);
    value = integer_json(euler_from_series(small_arg(arg_long(a, 0, name), name, 200)));
  } else if (name == "euler-d") {
    oracle_arity(a, 2, name);
    value = integer_json(euler_d(small_arg(arg_long(a, 0, name), name, 5), small_arg(arg_long(a, 1, name), name, 5)));
  } else if (name == "descent-class") {
    if (a.empty() || a.size() > 2) throw Error("oracle descent-class takes n and a comma list R");
    int n = small_arg(arg_long(a, 0, name), name, 10);
    std::set<int> r;
    for (long v : arg_list(a.size() > 1 ? a[1] : "", name)) r.insert(static_cast<int>(v));
    value = integer_json(descent_class_formula(n, r));
  } else if (name == "kequal-betti") {
    oracle_arity(a, 2, name);
    value = betti_json(kequal_betti(small_arg(arg_long(a, 0, name), name, 40), small_arg(arg_long(a, 1, name), name, 40)));
  } else if (name == "betti-gf") {
    if (a.empty()) throw Error("oracle betti-gf needs a family: at-least-k n k | zero-mod-d n d | one-mod-d n d | k-mod-d n d k");
    BettiGfRequest req;
    std::vector<std::string> rest(a.begin() + 1, a.end());
    if (a[0] == "at-least-k") {
      oracle_arity(rest, 2, name);
      req.family = BlockFamily::at_least_k;
      req.n = small_arg(arg_long(rest, 0, name), name, 30);
      req.k = small_arg(arg_long(rest, 1, name), name, 30);
    } else if (a[0] == "zero-mod-d" || a[0] == "one-mod-d") {
      oracle_arity(rest, 2, name);
      req.family = a[0] == "zero-mod-d" ? BlockFamily::zero_mod_d : BlockFamily::one_mod_d;
      req.n = small_arg(arg_long(rest, 0, name), name, 30);
      req.d = small_arg(arg_long(rest, 1, name), name, 30);
    } else if (a[0] == "k-mod-d") {
      oracle_arity(rest, 3, name);
      req.family = BlockFamily::k_mod_d;
      req.n = small_arg(arg_long(rest, 0, name), name, 30);
      req.d = small_arg(arg_long(rest, 1, name), name, 30);
      req.k = small_arg(arg_long(rest, 2, name), name, 30);
    } else {
      throw Error("oracle betti-gf: unknown family '" + a[0] + "'");
    }
    value = json{{"ground_set", betti_gf_ground_size(req)}, {"betti", betti_json(betti_gf(req))}};
  } else if (name == "partition") {
    if (a.empty()) throw Error("oracle partition needs parts (comma list)");
    IntegerPartition lambda;
    for (long v : arg_list(a[0], name)) lambda.push_back(static_cast<int>(v));
    auto info = partition_tools(lambda);
    value = json{{"conjugate", info.conjugate},     {"self_conjugate", info.self_conjugate},
                 {"rank", info.durfee_rank},        {"alpha", info.alpha},
                 {"beta", info.beta},               {"hooks", info.hook_lengths},
                 {"dim_specht", integer_json(info.dim_specht)}, {"content", integer_json(laplacian_eigenvalue(lambda))}};
  } else if (name == "laplacian-candidates") {
    oracle_arity(a, 1, name);
    json list = json::array();
    for (const auto& v : laplacian_eigenvalue_candidates(small_arg(arg_long(a, 0, name), name, 20))) list.push_back(integer_json(v));
    value = list;
  } else {
    throw Error("unknown oracle '" + name + "'");
  }
  return json{{"oracle", name}, {"args", a}, {"value", value}};
}

std::string check_table(const std::vector<checks::CriterionResult>& results) {
  std::string out;
  for (const auto& r : results) {
    std::string status = r.skipped() ? "SKIP" : r.passed() ? "PASS" : "FAIL";
    out += "criterion " + std::to_string(r.id) + ": " + status + "  " + r.title + " (" + std::to_string(r.ran() - r.failed()) +
           "/" + std::to_string(r.ran()) + " cases)\n";
    for (const auto& c : r.cases)
      if (!c.skipped && !c.ok) out += "  FAIL " + c.name + ": " + c.detail + "\n    repro: " + c.repro + "\n";
  }
  return out;
}

const std::vector<std::string>& compute_kinds() {
  static const std::vector<std::string> k{"mobius", "homology", "betti-el", "zaslavsky", "os", "gm",
                                          "lattice", "whitney", "shelling", "rao"};
  return k;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = raw_args;
  if (!args.empty() && args[0] == "compute") args.erase(args.begin());

  CLI::App app{"Topology of finite posets: homology, Moebius functions, shellings, arrangements", "posettop"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool report = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--report", report, "Wrap output in a run report with wall time");

  auto* family = app.add_subcommand("family", "Build a named family and print it as JSON");
  std::vector<std::string> family_spec;
  std::string out_file;
  family->add_option("spec", family_spec, "NAME PARAMS...")->required();
  family->add_option("--out", out_file, "Write to file instead of stdout");

  std::map<std::string, CLI::App*> compute_cmds;
  ComputeOptions copt;
  for (const auto& kind : compute_kinds()) {
    auto* c = app.add_subcommand(kind, "Compute " + kind);
    c->add_option("--family", copt.in.family, "NAME PARAMS...")->expected(1, -1);
    c->add_option("--input", copt.in.input, "JSON input file");
    c->add_flag("--proper", copt.proper, "Use the proper part of a poset");
    if (kind == "homology") {
      c->add_flag("--cohomology", copt.cohomology, "Integral cohomology");
      c->add_flag("--rational", copt.rational, "Rational Betti numbers only");
      c->add_option("--matrices", copt.matrices, "Directory for boundary matrices as triplets");
    }
    if (kind == "betti-el") {
      c->add_option("--labeling", copt.labeling, "Built-in labeling name");
      c->add_option("--labeling-file", copt.labeling_file, "Labeling JSON file");
      c->add_option("--convention", copt.convention)->check(CLI::IsMember({"strict", "weak"}));
    }
    if (kind == "whitney") {
      c->add_flag("--dual", copt.dual, "Apply to the dual poset");
      c->add_flag("--no-verify", copt.no_verify, "Skip the sequentially Cohen-Macaulay check");
    }
    if (kind == "shelling") c->add_option("--max-facets", copt.max_facets, "Search limit");
    compute_cmds[kind] = c;
  }

  auto* oracle_cmd = app.add_subcommand("oracle", "Evaluate an independent combinatorial oracle");
  std::string oracle_name;
  std::vector<std::string> oracle_args;
  oracle_cmd->add_option("name", oracle_name)->required();
  oracle_cmd->add_option("args", oracle_args);

  auto* check = app.add_subcommand("check", "Run verification suites");
  std::string suite = "all";
  checks::Options chk;
  check->add_option("suite", suite)->check(CLI::IsMember(checks::suite_names()));
  check->add_option("--max-size", chk.max_size, "Skip instances above this size");
  check->add_option("--jobs", chk.jobs, "Worker threads");
  check->add_option("--case", chk.filter, "Only cases whose name contains this text");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  auto start = std::chrono::steady_clock::now();
  auto emit = [&](const json& payload) {
    json j = payload;
    if (report) {
      j = json{{"command", args.empty() ? "" : args[0]},
               {"parameters", args},
               {"outputs", payload},
               {"exact", true},
               {"wall_time_s", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    }
    out << render(j, format);
  };

  try {
    if (*family) {
      auto o = build_family(family_spec);
      json j = object_json(o);
      if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw Error("cannot write '" + out_file + "'");
        f << j.dump() << "\n";
        emit(json{{"written", out_file}});
      } else {
        emit(j);
      }
      return kOk;
    }
    for (const auto& [kind, cmd] : compute_cmds) {
      if (*cmd) {
        emit(compute(kind, copt));
        return kOk;
      }
    }
    if (*oracle_cmd) {
      emit(oracle(oracle_name, oracle_args));
      return kOk;
    }
    if (*check) {
      auto results = checks::run_suite(suite, chk);
      bool failed = std::any_of(results.begin(), results.end(), [](const auto& r) { return r.failed() > 0; });
      if (format == "table" && !report) {
        out << check_table(results);
      } else {
        emit(json::parse(checks::scoreboard_json(suite, chk, results)));
      }
      return failed ? kCheckFailed : kOk;
    }
  } catch (const CheckFailed& f) {
    emit(f.payload);
    return kCheckFailed;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace posettop::cli
