#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "qhopf/catalog.hpp"
#include "qhopf/duality.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/hopf_quasigroup.hpp"
#include "qhopf/mhc.hpp"
#include "qhopf/report.hpp"

namespace {

using namespace qhopf;

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotLatin = 3;
constexpr int kExitNoIdentity = 4;

void print_usage() {
  std::cout <<
      R"(qhopf - exact verification of Hopf quasigroups and multiplier Hopf
coquasigroups, their integrals and duality.

Usage: qhopf <command> [options]

Commands:
  catalog               run the full suite on the built-in instance catalog
                        (C2..C8, S3, M(C3,2), M(S3,2))
  verify FILE           verify a Cayley-table file
  dualize FILE          build k(G), its dual Hopf quasigroup and the
                        biduality isomorphisms

Options:
  --json                machine-readable report on stdout
  --only NAME           catalog: run a single instance
  --kind loop|hq|mhc    verify: which structure to check (default loop)
  --exhaustive          force exhaustive checks regardless of size
  --sample N            sample size for large inputs (default for n > 24)
  --seed S              RNG seed for sampling (recorded in the report)
  --emit-dual PATH      dualize: write the materialized dual tensors as JSON
  -v, --verbose         list passing checks too
  -h, --help            this message

File format: line 1 = n; line 2 = n labels; then n rows of n labels
(identity first), or JSON {"labels", "table", "identity"}.

Exit codes: 0 all checks pass, 1 check failure, 2 parse error,
3 not a Latin square, 4 no identity element.
)";
}

struct Options {
  std::string command;
  std::string file;
  bool json = false;
  bool verbose = false;
  std::optional<std::string> only;
  std::string kind = "loop";
  bool exhaustive_flag = false;
  int sample = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> emit_dual;
};

int parse_args(int argc, char** argv, Options& opt) {
  std::vector<std::string> args(argv + 1, argv + argc);
  size_t i = 0;
  auto need_value = [&](const std::string& flag) -> std::string {
    if (i + 1 >= args.size()) {
      std::cerr << "qhopf: " << flag << " needs a value\n";
      exit(kExitParse);
    }
    return args[++i];
  };
  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "-h" || a == "--help") {
      print_usage();
      exit(0);
    } else if (a == "--json") {
      opt.json = true;
    } else if (a == "-v" || a == "--verbose") {
      opt.verbose = true;
    } else if (a == "--only") {
      opt.only = need_value(a);
    } else if (a == "--kind") {
      opt.kind = need_value(a);
    } else if (a == "--exhaustive") {
      opt.exhaustive_flag = true;
    } else if (a == "--sample") {
      opt.sample = std::stoi(need_value(a));
    } else if (a == "--seed") {
      opt.seed = std::stoull(need_value(a));
    } else if (a == "--emit-dual") {
      opt.emit_dual = need_value(a);
    } else if (a.size() && a[0] == '-') {
      std::cerr << "qhopf: unknown option " << a << "\n";
      return kExitParse;
    } else if (opt.command.empty()) {
      opt.command = a;
    } else if (opt.file.empty()) {
      opt.file = a;
    } else {
      std::cerr << "qhopf: unexpected argument " << a << "\n";
      return kExitParse;
    }
  }
  return 0;
}

SuiteOptions suite_options(const Options& opt, int order) {
  SuiteOptions s;
  s.seed = opt.seed;
  if (opt.exhaustive_flag || (order <= 24 && opt.sample == 0)) {
    s.exhaustive = true;
  } else {
    s.exhaustive = false;
    s.sample = opt.sample > 0 ? opt.sample : 24;
  }
  return s;
}

std::vector<Elem> make_sample(int order, const SuiteOptions& s) {
  std::vector<Elem> sample;
  if (!s.exhaustive && s.sample > 0 && s.sample < order) {
    std::mt19937_64 rng(s.seed);
    std::uniform_int_distribution<int> dist(0, order - 1);
    for (int i = 0; i < s.sample; ++i) sample.push_back(dist(rng));
  }
  return sample;
}

int emit(const Options& opt, std::vector<RunReport>& reports) {
  if (opt.json) {
    std::cout << reports_to_json(reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_human(r, opt.verbose);
  }
  for (const auto& r : reports)
    if (!r.pass()) return kExitFail;
  return 0;
}

int cmd_catalog(const Options& opt) {
  std::vector<RunReport> reports;
  bool matched = false;
  for (const auto& entry : builtin_catalog()) {
    if (opt.only && entry.name != *opt.only) continue;
    matched = true;
    reports.push_back(run_full_suite(entry.name, entry.loop, suite_options(opt, entry.loop.order())));
  }
  if (opt.only && !matched) {
    std::cerr << "qhopf: no catalog instance named '" << *opt.only << "'\n";
    return kExitFail;
  }
  return emit(opt, reports);
}

int cmd_verify(const Options& opt) {
  if (opt.file.empty()) {
    std::cerr << "qhopf: verify needs a file\n";
    return kExitParse;
  }
  FiniteLoop loop = load_loop_file(opt.file);
  SuiteOptions sopts = suite_options(opt, loop.order());
  std::vector<Elem> sample_store = make_sample(loop.order(), sopts);
  const std::vector<Elem>* sample = sample_store.empty() ? nullptr : &sample_store;

  RunReport r;
  r.instance = opt.file;
  if (sample) r.seed = sopts.seed;
  r.add_pass("loop_valid");
  QuasigroupHandle q(loop);
  IpReport ip = check_ip(q);
  r.add_bool("loop_ip", ip.pass(),
             ip.pass() ? "" : "violated at (" + q.label(ip.violations[0].u) + "," +
                                  q.label(ip.violations[0].v) + ")");

  if (opt.kind == "hq") {
    FinDimHopfQuasigroup kg = group_algebra(loop);
    r.add_check("kg_hopf_quasigroup_axioms", verify_hopf_quasigroup(kg));
    auto li = integral_space(kg.t, Side::Left);
    auto ri = integral_space(kg.t, Side::Right);
    r.integral_dim = static_cast<int>(li.size());
    r.add_bool("kg_integral_unique", li.size() == 1 && ri.size() == 1,
               std::to_string(li.size()) + "," + std::to_string(ri.size()));
    if (li.size() == 1)
      r.add_bool("kg_faithful", is_faithful(kg.t, normalized_left_integral(kg.t)), "");
  } else if (opt.kind == "mhc") {
    auto fa = function_algebra(QuasigroupHandle(loop));
    r.add_check("kq_mhc_axioms", verify_mhc(*fa, sample));
    MhcIntegrals ints = integrals(*fa);
    r.add_check("kq_integral_identities",
                verify_integral_identities(*fa, ints.phi, ints.psi, sample));
    ModularData md = modular_data(*fa, ints.phi, sample);
    r.tau = md.tau.str();
    r.delta_is_unit = md.delta_is_unit;
  } else if (opt.kind != "loop") {
    std::cerr << "qhopf: unknown --kind '" << opt.kind << "'\n";
    return kExitParse;
  }

  std::vector<RunReport> reports{std::move(r)};
  return emit(opt, reports);
}

nlohmann::ordered_json tensors_to_json(const StructureTensors& t) {
  const int n = t.dim();
  nlohmann::ordered_json j;
  j["dim"] = n;
  j["basis"] = t.basis;
  auto scal = [](const Scalar& s) { return s.str(); };
  {
    nlohmann::ordered_json m = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int jj = 0; jj < n; ++jj) {
        nlohmann::ordered_json cell = nlohmann::ordered_json::array();
        for (int k = 0; k < n; ++k) cell.push_back(scal(t.mult.at(i, jj, k)));
        row.push_back(std::move(cell));
      }
      m.push_back(std::move(row));
    }
    j["mult"] = std::move(m);
  }
  {
    nlohmann::ordered_json u = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) u.push_back(scal(t.unit[i]));
    j["unit"] = std::move(u);
  }
  {
    nlohmann::ordered_json m = nlohmann::ordered_json::array();
    for (int k = 0; k < n; ++k) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int i = 0; i < n; ++i) {
        nlohmann::ordered_json cell = nlohmann::ordered_json::array();
        for (int jj = 0; jj < n; ++jj) cell.push_back(scal(t.comult.at(k, i, jj)));
        row.push_back(std::move(cell));
      }
      m.push_back(std::move(row));
    }
    j["comult"] = std::move(m);
  }
  {
    nlohmann::ordered_json c = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) c.push_back(scal(t.counit[i]));
    j["counit"] = std::move(c);
  }
  {
    nlohmann::ordered_json s = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int jj = 0; jj < n; ++jj) row.push_back(scal(t.antipode.at(i, jj)));
      s.push_back(std::move(row));
    }
    j["antipode"] = std::move(s);
  }
  return j;
}

int cmd_dualize(const Options& opt) {
  if (opt.file.empty()) {
    std::cerr << "qhopf: dualize needs a file\n";
    return kExitParse;
  }
  FiniteLoop loop = load_loop_file(opt.file);
  const int n = loop.order();

  RunReport r;
  r.instance = opt.file;
  r.add_pass("loop_valid");
  IpReport ip = check_ip(QuasigroupHandle(loop));
  r.add_bool("loop_ip", ip.pass(), "");

  auto fa = function_algebra(QuasigroupHandle(loop));
  DualityContext ctx = DualityContext::make(*fa);
  MaterializedDual dual = materialize_dual(ctx);
  r.add_check("dual_construction_consistency", dual.consistency);
  AxiomReport dual_rep = verify_hopf_quasigroup(dual.hq);
  r.add_check("dual_hopf_quasigroup_axioms", dual_rep);
  for (const auto& [k, v] : dual_rep.probes)
    if (k == "nonassoc_witness") r.nonassoc_witness = v;

  StructureTensors kq_t = materialize_tensors(*fa);
  Vec ones(n, Scalar(1));
  Gamma gmhc = gamma_mhc(FinDimMHC{kq_t}, ones);
  r.add_check("gamma_mhc", gmhc.checks);

  FinDimHopfQuasigroup kg = group_algebra(loop);
  Gamma ghq = gamma_hq(kg, normalized_left_integral(kg.t));
  r.add_check("gamma_hq", ghq.checks);
  r.add_bool("gamma_golden_identifications",
             ghq.forward == Matrix::identity(n) && gmhc.forward == Matrix::identity(n),
             "Γ is not the identity relabeling");

  {
    auto li = integral_space(dual.hq.t, Side::Left);
    r.integral_dim = static_cast<int>(li.size());
    r.add_bool("dual_integral_unique", li.size() == 1, std::to_string(li.size()));
  }

  if (opt.emit_dual) {
    std::ofstream out(*opt.emit_dual);
    if (!out) {
      std::cerr << "qhopf: cannot write " << *opt.emit_dual << "\n";
      return kExitFail;
    }
    out << tensors_to_json(dual.hq.t).dump(2) << "\n";
  }

  std::vector<RunReport> reports{std::move(r)};
  return emit(opt, reports);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  int rc = parse_args(argc, argv, opt);
  if (rc != 0) return rc;
  if (opt.command.empty()) {
    print_usage();
    return kExitParse;
  }
  try {
    if (opt.command == "catalog") return cmd_catalog(opt);
    if (opt.command == "verify") return cmd_verify(opt);
    if (opt.command == "dualize") return cmd_dualize(opt);
    std::cerr << "qhopf: unknown command '" << opt.command << "'\n";
    print_usage();
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "qhopf: parse error";
    if (e.line > 0) std::cerr << " (line " << e.line << ")";
    std::cerr << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const NotLatinSquare& e) {
    std::cerr << "qhopf: not a Latin square: " << e.what() << "\n";
    return kExitNotLatin;
  } catch (const NoIdentity& e) {
    std::cerr << "qhopf: no identity: " << e.what() << "\n";
    return kExitNoIdentity;
  } catch (const Error& e) {
    std::cerr << "qhopf: " << e.what() << "\n";
    return kExitFail;
  }
}
