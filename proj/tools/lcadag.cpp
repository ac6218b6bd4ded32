// Copyright 2026 The lcadag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lcadag command-line front end.
//
// Exit status: 0 when every requested property holds (or validation is
// clean), 1 when a property fails or a discrepancy is found, 2 on usage and
// input errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcadag.hpp"

namespace {

using namespace lcadag;
using json = nlohmann::ordered_json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

// Thrown for input and usage problems; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::optional<int> k;
  std::string props;
  std::string format = "text";
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string bounds;
  std::string output;
  bool implicit_t3 = false;
  bool timing = false;
  std::string of;
  std::vector<std::string> theorems;
  // gen
  std::string gen_kind;
  int vertices = 6;
  double density = 0.3;
  int n = 4;
  std::uint64_t members = 6;
  bool clustering = false;
};

std::size_t max_leaves() {
  const char* env = std::getenv("LCADAG_MAX_LEAVES");
  if (env == nullptr || *env == '\0') return kDefaultMaxLeaves;
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError("LCADAG_MAX_LEAVES must be a non-negative integer");
  }
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad value '" + s + "' for " + what);
}

// "n=4,v=6,k=2..3,r=1000,rv=12,m=8,scope=all"
Bounds parse_bounds(const std::string& spec, std::uint64_t seed) {
  Bounds b;
  b.seed = seed;
  for (const auto& item : split_csv(spec)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("bad bounds entry '" + item + "'");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "n") {
      b.n = parse_int(value, "n");
    } else if (key == "v") {
      b.max_vertices = parse_int(value, "v");
    } else if (key == "k") {
      auto dots = value.find("..");
      if (dots == std::string::npos) {
        b.k_lo = b.k_hi = parse_int(value, "k");
      } else {
        b.k_lo = parse_int(value.substr(0, dots), "k");
        b.k_hi = parse_int(value.substr(dots + 2), "k");
      }
    } else if (key == "r") {
      b.random_dags = static_cast<std::uint64_t>(parse_int(value, "r"));
    } else if (key == "rv") {
      b.random_vertices = parse_int(value, "rv");
    } else if (key == "m") {
      b.member_cap = parse_int(value, "m");
    } else if (key == "scope") {
      if (value == "all")
        b.scope = SetScope::all;
      else if (value == "clustering")
        b.scope = SetScope::clustering;
      else
        throw UsageError("scope must be all or clustering");
    } else {
      throw UsageError("unknown bounds key '" + key + "'");
    }
  }
  return b;
}

ReportFormat report_format(const Options& o) {
  if (o.format == "json") return ReportFormat::json;
  if (o.format == "text") return ReportFormat::text;
  throw UsageError("--format must be text or json");
}

// Reading and parsing errors are input errors.
template <typename F>
auto load(const std::string& path, F&& parse) {
  try {
    return parse(read_file(path));
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Dag load_dag(const Options& o) { return load(o.input, [](const std::string& t) { return parse_dag(t); }); }
SetSystem load_sets(const Options& o) {
  return load(o.input, [](const std::string& t) { return parse_set_system(t); });
}
TransitFunction load_transit(const Options& o) {
  TransitParseOptions p{o.implicit_t3};
  return load(o.input, [&](const std::string& t) { return parse_transit(t, p); });
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void write(const Options& o, const std::string& text) {
  Output out(o.output);
  out.stream() << text;
  if (!text.empty() && text.back() != '\n') out.stream() << '\n';
}

int emit_checks(const Options& o, const std::vector<PropertyReport>& reports) {
  write(o, emit_report(reports, report_format(o)));
  for (const auto& r : reports)
    if (!r.holds) return kFails;
  return kHolds;
}

json set_system_json(const SetSystem& sys) {
  json j;
  j["ground"] = sys.ground().labels();
  json members = json::array();
  for (const auto& m : sys.members()) members.push_back(sys.labels_of(m));
  j["members"] = std::move(members);
  return j;
}

json transit_json(const TransitFunction& r) {
  json j;
  j["ground"] = r.ground().labels();
  j["arity"] = r.arity();
  json table = json::array();
  for (const auto& [u, v] : r.entries())
    table.push_back({{"U", r.ground().labels_of(u)}, {"R", r.ground().labels_of(v)}});
  j["table"] = std::move(table);
  return j;
}

int require_k(const Options& o) {
  if (!o.k) throw Error(ErrorCode::MissingK, "this command requires --k");
  return *o.k;
}

// ---------------------------------------------------------------------------

int cmd_check_dag(const Options& o) {
  Dag g = load_dag(o);
  return emit_checks(o, evaluate_dag(g, split_csv(o.props), o.k, max_leaves()));
}

int cmd_check_sets(const Options& o) {
  SetSystem s = load_sets(o);
  return emit_checks(o, evaluate_sets(s, split_csv(o.props), o.k, max_leaves()));
}

int cmd_check_transit(const Options& o) {
  TransitFunction r = load_transit(o);
  return emit_checks(o, evaluate_transit(r, split_csv(o.props), o.k));
}

int cmd_clusters(const Options& o) {
  SetSystem c = cluster_system(load_dag(o));
  write(o, report_format(o) == ReportFormat::json ? set_system_json(c).dump() : emit_set_system(c));
  return kHolds;
}

int cmd_closure(const Options& o) {
  SetSystem s = load_sets(o);
  std::vector<std::string> of = split_csv(o.of);
  auto cl = s.closure(s.ground().subset(of));
  if (report_format(o) == ReportFormat::json) {
    json j;
    j["of"] = s.labels_of(s.ground().subset(of));
    j["defined"] = cl.has_value();
    j["closure"] = cl ? json(s.labels_of(*cl)) : json(nullptr);
    write(o, j.dump());
  } else {
    write(o, cl ? render_value(WitnessValue{s.labels_of(*cl)}) : std::string("undefined"));
  }
  return kHolds;
}

int cmd_canonical(const Options& o) {
  SetSystem s = load_sets(o);
  TransitFunction r = canonical_of_setsystem(s, require_k(o));
  write(o, report_format(o) == ReportFormat::json ? transit_json(r).dump() : emit_transit(r));
  return kHolds;
}

int cmd_rg(const Options& o) {
  Dag g = load_dag(o);
  TransitFunction r = r_g_of_dag(g, require_k(o));
  write(o, report_format(o) == ReportFormat::json ? transit_json(r).dump() : emit_transit(r));
  return kHolds;
}

// The input is a set system, or a transit function (Hasse of its transit
// sets), or a DAG (Hasse of its cluster system), by file extension.
int cmd_hasse(const Options& o) {
  auto ends_with = [&](std::string_view suffix) {
    return o.input.size() >= suffix.size() && o.input.compare(o.input.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  SetSystem s = ends_with(".transit") ? transit_sets(load_transit(o))
                : ends_with(".dag")   ? cluster_system(load_dag(o))
                                      : load_sets(o);
  HasseDiagram h = build_hasse(s);
  if (o.format == "dot")
    write(o, to_dot(h.dag, "hasse"));
  else if (o.format == "dag" || o.format == "text")
    write(o, emit_dag(h.dag));
  else
    throw UsageError("hasse --format must be dag or dot");
  return kHolds;
}

int cmd_validate(const Options& o) {
  std::vector<TheoremId> ids;
  for (const auto& t : o.theorems) {
    if (t == "all") {
      ids.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
      continue;
    }
    ids.push_back(parse_theorem_id(t));
  }
  if (ids.empty()) ids.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  Bounds b = parse_bounds(o.bounds, o.seed);
  ValidateOptions vo;
  vo.jobs = o.jobs;
  vo.max_leaves = max_leaves();
  auto reports = cross_validate(ids, b, vo);
  bool clean = true;
  for (const auto& r : reports) clean &= r.passed();
  if (report_format(o) == ReportFormat::json) {
    if (reports.size() == 1) {
      write(o, to_json(reports.front(), o.timing).dump());
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(r, o.timing));
      write(o, arr.dump());
    }
  } else {
    std::string text;
    for (const auto& r : reports) {
      text += std::string(to_string(r.theorem)) + ": " + (r.passed() ? "PASS" : "FAIL") +
              " instances=" + std::to_string(r.instances_checked) +
              " discrepancies=" + std::to_string(r.discrepancy_count) +
              " reading_divergences=" + std::to_string(r.divergence_count) + "\n";
      for (const auto& d : r.discrepancies) {
        text += "  " + d.kind + (d.k ? " k=" + std::to_string(*d.k) : std::string()) + " " + d.clause +
                ": left=" + (d.left ? "true" : "false") + " right=" + (d.right ? "true" : "false") + "\n";
        std::istringstream lines(d.instance);
        for (std::string line; std::getline(lines, line);) text += "    " + line + "\n";
      }
    }
    write(o, text);
    if (o.timing && !reports.empty()) std::cerr << "elapsed_ms=" << reports.front().elapsed_ms << "\n";
  }
  return clean ? kHolds : kFails;
}

int cmd_catalog(const Options& o) {
  auto entries = counterexample_catalog();
  if (report_format(o) == ReportFormat::json) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back(to_json(e));
    write(o, arr.dump());
  } else {
    std::string text;
    for (const auto& e : entries) {
      text += e.claim + ": " + e.instance + " (";
      bool first = true;
      for (const auto& s : e.separation) {
        text += (first ? "" : "; ") + describe(s);
        first = false;
      }
      for (const auto& c : e.claims) {
        text += (first ? "" : "; ") + c.statement;
        first = false;
      }
      text += ")\n";
    }
    write(o, text);
  }
  return kHolds;
}

int cmd_gen(const Options& o) {
  if (o.gen_kind == "dag") {
    write(o, emit_dag(random_dag(o.seed, o.vertices, o.density)));
  } else if (o.gen_kind == "sets") {
    write(o, emit_set_system(random_set_system(o.seed, o.n, o.members, o.clustering)));
  } else if (o.gen_kind == "transit") {
    write(o, emit_transit(random_transit(o.seed, o.n, require_k(o), o.density)));
  } else {
    throw UsageError("gen expects dag, sets or transit");
  }
  return kHolds;
}

bool is_usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownProperty:
    case ErrorCode::UnknownTheorem:
    case ErrorCode::MissingK:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidArity:
    case ErrorCode::BoundExceeded:
    case ErrorCode::LeafSetTooLarge:
    case ErrorCode::TooManyMembers:
    case ErrorCode::ElementNotInGround:
    case ErrorCode::NotALeaf:
    case ErrorCode::UnknownVertex:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clusters, closures, transit functions and lca-properties of DAGs"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json");
    sub->add_option("-o,--output", o.output, "write to a file instead of stdout");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", o.timing, "report elapsed time");
  };
  auto with_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what)->required();
    common(sub);
  };
  auto with_k = [&](CLI::App* sub) { sub->add_option("--k", o.k, "parameter k"); };
  auto with_props = [&](CLI::App* sub) { sub->add_option("--props", o.props, "comma-separated property names"); };

  auto* check_dag = app.add_subcommand("check-dag", "evaluate DAG properties");
  with_input(check_dag, "DAG file");
  with_k(check_dag);
  with_props(check_dag);
  auto* check_sets = app.add_subcommand("check-sets", "evaluate set-system properties");
  with_input(check_sets, "set-system file");
  with_k(check_sets);
  with_props(check_sets);
  auto* check_transit = app.add_subcommand("check-transit", "evaluate transit-function axioms");
  with_input(check_transit, "transit-function file");
  with_k(check_transit);
  with_props(check_transit);
  check_transit->add_flag("--implicit-t3", o.implicit_t3, "omitted singletons map to themselves");
  auto* clusters = app.add_subcommand("clusters", "print the cluster system of a DAG");
  with_input(clusters, "DAG file");
  auto* closure = app.add_subcommand("closure", "closure of a set in a set system");
  with_input(closure, "set-system file");
  closure->add_option("--of", o.of, "comma-separated elements")->required();
  auto* canonical = app.add_subcommand("canonical", "canonical k-ary transit function of a set system");
  with_input(canonical, "set-system file");
  with_k(canonical);
  auto* rg = app.add_subcommand("rg", "the transit function U -> C(lca(U)) of a DAG");
  with_input(rg, "DAG file");
  with_k(rg);
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of a set system");
  with_input(hasse, "set-system, transit or DAG file");
  hasse->add_flag("--implicit-t3", o.implicit_t3, "omitted singletons map to themselves");
  auto* validate = app.add_subcommand("validate", "cross-validate theorems on enumerated instances");
  validate->add_option("theorems", o.theorems, "theorem ids, or all");
  validate->add_option("--bounds", o.bounds, "n=..,v=..,k=lo..hi,r=..,rv=..,m=..,scope=all|clustering");
  validate->add_option("--seed", o.seed, "seed for random instances");
  common(validate);
  auto* catalog = app.add_subcommand("catalog", "re-verify the counterexample catalog");
  common(catalog);
  auto* gen = app.add_subcommand("gen", "emit a random instance");
  gen->add_option("kind", o.gen_kind, "dag, sets or transit")->required();
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--vertices", o.vertices, "vertex count (dag)");
  gen->add_option("--density", o.density, "edge or element probability");
  gen->add_option("--n", o.n, "ground-set size (sets, transit)");
  gen->add_option("--members", o.members, "member count (sets)");
  gen->add_flag("--clustering", o.clustering, "add singletons and X (sets)");
  with_k(gen);
  common(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    int status = kUsage;
    if (*check_dag) status = cmd_check_dag(o);
    else if (*check_sets) status = cmd_check_sets(o);
    else if (*check_transit) status = cmd_check_transit(o);
    else if (*clusters) status = cmd_clusters(o);
    else if (*closure) status = cmd_closure(o);
    else if (*canonical) status = cmd_canonical(o);
    else if (*rg) status = cmd_rg(o);
    else if (*hasse) status = cmd_hasse(o);
    else if (*validate) status = cmd_validate(o);
    else if (*catalog) status = cmd_catalog(o);
    else if (*gen) status = cmd_gen(o);
    if (o.timing && !*validate) {
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::cerr << "elapsed_ms=" << ms << "\n";
    }
    return status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_code(e.code()) ? kUsage : kFails;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
