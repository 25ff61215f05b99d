#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qhopf/quasigroup.hpp"
#include "qhopf/structure.hpp"

namespace qhopf {

struct CheckResult {
  std::string id;
  std::string status;  // "pass" | "fail" | "skipped"
  std::optional<std::string> witness;
};

struct RunReport {
  std::string instance;
  std::vector<CheckResult> checks;
  std::optional<int> integral_dim;
  std::optional<std::string> tau;
  std::optional<bool> delta_is_unit;
  std::optional<std::string> nonassoc_witness;
  std::optional<std::uint64_t> seed;  // recorded when sampling
  double elapsed_seconds = 0.0;       // human output only, never serialized

  bool pass() const;
  void add_check(const std::string& id, const AxiomReport& rep);
  void add_pass(const std::string& id);
  void add_fail(const std::string& id, const std::string& witness);
  void add_bool(const std::string& id, bool ok, const std::string& witness_if_fail);

  nlohmann::ordered_json to_json() const;
};

struct SuiteOptions {
  bool exhaustive = true;
  int sample = 0;
  std::uint64_t seed = 0;
};

/// The full check suite for one loop: loop validation and IP, kG axioms and
/// integrals, k(G) golden structure and axioms, integral identities, modular
/// data with the Prop 3.7 suite, the §4 dual with Thm 4.7, and both §5
/// biduality isomorphisms.
RunReport run_full_suite(const std::string& name, const FiniteLoop& loop,
                         const SuiteOptions& opts = {});

nlohmann::ordered_json reports_to_json(const std::vector<RunReport>& reports);
void print_human(const RunReport& report, bool verbose);

}  // namespace qhopf
