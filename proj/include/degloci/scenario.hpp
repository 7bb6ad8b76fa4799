#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "degloci/connectedness.hpp"

namespace degloci {

using Json = nlohmann::ordered_json;

struct TaskSpec {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> params;
  int line = 0;

  bool has(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback = "") const;
  int get_int(const std::string& key, int fallback) const;
};

/// Ideal declared by generators or by an operation on other declared ideals.
/// Operations are evaluated when a task needs them.
struct IdealDecl {
  std::string ring;  // "A", a symalg name or a lift name
  std::string op;    // gens vars irrelevant positive lift sum intersect saturate quotient locus
  std::vector<std::string> args;
  PolyVector gens;
};

struct ElementDecl {
  std::string module;
  PolyVector values;
};

struct FunctionalsDecl {
  std::string module;
  std::vector<PolyVector> rows;
};

struct PairingDecl {
  std::string module;
  Pairing pairing;
};

struct SymAlgDecl {
  std::string module;
  SymAlgebra algebra;
};

struct LiftDecl {
  std::string functional;
  std::string duals;
  std::string symalg;
  std::string ideal;
  LiftedMap lift;
};

struct ScenarioOptions {
  std::optional<std::uint32_t> characteristic;
  std::optional<OrderKind> order;
  std::optional<std::uint64_t> seed;
};

/// A parsed and validated scenario file. Every object has been constructed
/// (modules, maps, pairings, symmetric algebras and lifts); ideal operations
/// are evaluated at run time.
struct Scenario {
  std::string name;
  std::vector<std::string> notes;
  Field field = Field::rationals();
  OrderKind order = OrderKind::Grevlex;
  RingPtr ring;
  std::uint64_t seed = 0;
  bool parallel = false;

  std::map<std::string, FPModule> modules;
  std::map<std::string, ModuleMap> maps;
  std::map<std::string, std::pair<std::string, std::string>> map_ends;
  std::map<std::string, ElementDecl> elements;
  std::map<std::string, ElementDecl> functionals;
  std::map<std::string, FunctionalsDecl> functional_lists;
  std::map<std::string, PairingDecl> pairings;
  std::map<std::string, SymAlgDecl> symalgs;
  std::map<std::string, LiftDecl> lifts;
  std::map<std::string, IdealDecl> ideals;
  /// Declaration kinds and names in source order, for printing.
  std::vector<std::pair<std::string, std::string>> declarations;
  std::vector<TaskSpec> tasks;

  RingPtr ring_named(const std::string& name) const;
  /// Canonical text; parsing it yields an equal scenario.
  std::string to_text() const;
};

/// Throws ParseError carrying line and column.
Scenario parse_scenario(std::string_view text, const ScenarioOptions& opts = {});
Scenario load_scenario(const std::string& path, const ScenarioOptions& opts = {});

struct RunOptions {
  int a_max = 3;
  bool dry_run = false;
};

struct Report {
  std::string scenario;
  std::vector<Json> records;
  Json summary;
  int exit_code = 0;

  std::string jsonl() const;
  std::string text() const;
};

/// Runs the tasks (concurrently when the scenario says `parallel`); records
/// keep declaration order. Exit code: 0 success, 1 a violated verdict or
/// failed task, 3 a resource guard was hit.
Report run_scenario(const Scenario& s, const RunOptions& opts = {});

/// Scenario files (*.scn) of a directory, sorted by name.
std::vector<std::string> corpus_files(const std::string& dir);

}  // namespace degloci
