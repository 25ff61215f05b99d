// Drives the qhopf binary end to end: exit codes, JSON shape, determinism.
// argv[1] = path to the qhopf executable. Scratch files go to the cwd.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qhopf/catalog.hpp"
#include "qhopf/hopf_quasigroup.hpp"

namespace {

std::string g_qhopf;
int g_failures = 0;

void expect(bool cond, const std::string& what) {
  if (!cond) {
    std::cerr << "FAIL: " << what << "\n";
    ++g_failures;
  }
}

int run(const std::string& args, const std::string& out_file) {
  std::string cmd = g_qhopf + " " + args + " >" + out_file + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_loop_file(const std::string& path, const qhopf::FiniteLoop& q) {
  std::ofstream out(path);
  out << q.order() << "\n";
  for (int i = 0; i < q.order(); ++i) out << (i ? " " : "") << q.label(i);
  out << "\n";
  for (int i = 0; i < q.order(); ++i) {
    for (int j = 0; j < q.order(); ++j) out << (j ? " " : "") << q.label(q.product(i, j));
    out << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-qhopf>\n";
    return 2;
  }
  g_qhopf = argv[1];

  using namespace qhopf;
  write_loop_file("cli_c2.txt", cyclic_group(2));
  write_loop_file("cli_s3.txt", symmetric_group_s3());
  write_loop_file("cli_m12.txt", chein_double(symmetric_group_s3()));
  write_loop_file("cli_nonip.txt", non_ip_loop_order5());
  {
    std::ofstream out("cli_bad_latin.txt");
    out << "2\ne g\ne e\ng g\n";
  }
  {
    std::ofstream out("cli_no_identity.txt");
    out << "2\na b\nb a\na b\n";  // "a" is first but not an identity
  }
  {
    std::ofstream out("cli_garbage.txt");
    out << "not a table\n";
  }
  {
    std::ofstream out("cli_c2.json");
    out << R"({"labels": ["e", "g"], "table": [[0, 1], [1, 0]], "identity": "e"})";
  }

  expect(run("catalog --only C2", "out_c2.txt") == 0, "catalog --only C2 exits 0");
  expect(run("catalog --only NOPE", "out_nope.txt") == 1, "unknown --only exits 1");
  expect(run("catalog --json", "out_catalog.json") == 0, "full catalog exits 0");
  {
    nlohmann::json j = nlohmann::json::parse(slurp("out_catalog.json"));
    expect(j.is_array() && j.size() == 10, "catalog reports all ten instances");
  }

  expect(run("verify cli_s3.txt --kind loop", "out_s3.txt") == 0, "verify loop exits 0");
  expect(run("verify cli_m12.txt --kind mhc", "out_m12.txt") == 0, "verify mhc exits 0");
  expect(run("verify cli_c2.json --kind hq", "out_json.txt") == 0, "verify JSON input exits 0");
  expect(run("verify cli_bad_latin.txt", "out_bad.txt") == 3, "non-Latin table exits 3");
  expect(run("verify cli_no_identity.txt", "out_noid.txt") == 4, "no identity exits 4");
  expect(run("verify cli_garbage.txt", "out_garbage.txt") == 2, "garbage exits 2");
  expect(run("verify cli_missing.txt", "out_missing.txt") == 2, "missing file exits 2");
  expect(run("verify cli_nonip.txt --kind mhc", "out_nonip.txt") == 1,
         "non-IP carrier rejected with exit 1");
  expect(run("verify cli_nonip.txt --kind loop --json", "out_nonip2.txt") == 1,
         "non-IP loop check fails with exit 1");

  // dualize + emitted tensors match the group algebra up to relabeling
  expect(run("dualize cli_c2.txt --emit-dual cli_dual.json", "out_dual.txt") == 0,
         "dualize exits 0");
  {
    nlohmann::json j = nlohmann::json::parse(slurp("cli_dual.json"));
    expect(j["dim"] == 2, "emitted dual has dim 2");
    FinDimHopfQuasigroup kg = group_algebra(cyclic_group(2));
    bool match = true;
    for (int i = 0; i < 2 && match; ++i)
      for (int jj = 0; jj < 2 && match; ++jj)
        for (int k = 0; k < 2 && match; ++k)
          match = j["mult"][i][jj][k].get<std::string>() == kg.t.mult.at(i, jj, k).str();
    for (int i = 0; i < 2 && match; ++i)
      match = j["unit"][i].get<std::string>() == kg.t.unit[i].str() &&
              j["counit"][i].get<std::string>() == kg.t.counit[i].str();
    expect(match, "emitted dual tensors equal kC2 under relabeling");
  }

  expect(run("dualize cli_m12.txt --json", "out_m12_dual.json") == 0, "dualize M(S3,2) exits 0");
  {
    nlohmann::json j = nlohmann::json::parse(slurp("out_m12_dual.json"));
    expect(j.is_array() && j.size() == 1, "dualize --json is a one-element array");
    expect(!j[0]["stats"]["nonassoc_witness"].is_null(),
           "nonassociativity witness reported for M(S3,2)");
    expect(j[0]["stats"]["integral_dim"] == 1, "dual integral dimension 1");
  }

  // sampling kicks in for orders above 24 and records the seed
  write_loop_file("cli_c26.txt", cyclic_group(26));
  expect(run("verify cli_c26.txt --kind mhc --sample 8 --seed 5 --json", "out_c26.json") == 0,
         "sampled verify exits 0");
  {
    nlohmann::json j = nlohmann::json::parse(slurp("out_c26.json"));
    expect(j[0]["stats"]["seed"] == 5, "seed recorded in the report");
  }

  // byte-identical reports across runs
  expect(run("catalog --only C3 --json", "out_det1.json") == 0, "determinism run 1");
  expect(run("catalog --only C3 --json", "out_det2.json") == 0, "determinism run 2");
  expect(slurp("out_det1.json") == slurp("out_det2.json"), "JSON reports byte-identical");
  {
    nlohmann::json j = nlohmann::json::parse(slurp("out_det1.json"));
    expect(j[0]["instance"] == "C3", "instance name in JSON");
    expect(j[0]["checks"].size() > 0, "checks array nonempty");
    for (const auto& c : j[0]["checks"])
      expect(c.contains("id") && c.contains("status") && c.contains("witness"),
             "check entries carry id/status/witness");
    expect(j[0]["stats"]["tau"] == "1", "tau stat");
    expect(j[0]["stats"]["delta_is_unit"] == true, "delta_is_unit stat");
  }

  if (g_failures == 0) std::cout << "test_cli: all checks passed\n";
  return g_failures == 0 ? 0 : 1;
}
