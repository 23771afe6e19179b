// End-to-end checks of the command-line tool. Takes the binary path as
// argv[1] and drives it through /bin/sh, checking output and exit codes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "hypermat/io.hpp"
#include "hypermat/tensor.hpp"

namespace {

int g_failures = 0;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {127, ""};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : 128, out};
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_smoke <hypermat-binary>\n";
    return 1;
  }
  const std::string bin = argv[1];
  const std::string dir = "cli_smoke_tmp";
  if (std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) != 0) {
    std::cerr << "cannot set up temp dir\n";
    return 1;
  }

  // generator piped straight into the solver
  auto piped = run(bin + " gen star --n 4 | " + bin + " norm --p 2");
  expect(piped.exit_code == 0, "piped norm exit code");
  expect(contains(piped.out, "value       2"), "piped norm prints 2");

  // all generators write loadable documents
  for (const std::string gen :
       {" gen star --n 3", " gen beta-star --r 3 --k 2", " gen all-ones --r 2 --n 3",
        " gen cycle --n 5", " gen random --r 2 --n 5 --density 0.7 --seed 3 --weighted"}) {
    auto res = run(bin + gen);
    expect(res.exit_code == 0, "generator exit:" + gen);
    expect(contains(res.out, "\"format\""), "generator emits a format field:" + gen);
  }

  // file round trip: graph -> adjacency tensor -> bounds
  expect(run(bin + " gen star --n 3 -o " + dir + "/star.json").exit_code == 0, "gen -o");
  expect(run(bin + " graph tensor " + dir + "/star.json -o " + dir + "/star_t.json").exit_code ==
             0,
         "graph tensor");
  auto bounds = run(bin + " bounds " + dir + "/star_t.json --p 2 --with-estimate --json");
  expect(bounds.exit_code == 0, "bounds exit code");
  expect(contains(bounds.out, "\"schur\":3"), "bounds schur field");
  expect(contains(bounds.out, "\"sandwich_ok\":true"), "bounds sandwich field");

  // symmetrant output is a valid symmetric tensor document
  expect(run(bin + " gen all-ones --r 2 --n 2 -o " + dir + "/j.json").exit_code == 0, "gen j");
  expect(run(bin + " symmetrant " + dir + "/j.json -o " + dir + "/sym.json").exit_code == 0,
         "symmetrant");
  {
    const auto sym = hypermat::load_tensor_file(dir + "/sym.json");
    expect(sym.dims() == hypermat::Dims{4, 4}, "symmetrant dims");
    expect(hypermat::is_symmetric(sym, 0.0), "symmetrant symmetry");
  }

  // graph-level bounds
  auto gb = run(bin + " graph bounds " + dir + "/star.json --p 2 --with-estimate --json");
  expect(gb.exit_code == 0, "graph bounds exit");
  expect(contains(gb.out, "\"degree_product\""), "graph bounds fields");

  // byte-identical output for identical argv and seed
  const std::string eta_cmd =
      bin + " eta " + dir + "/star_t.json --p 2.5 --seed 41 --json";
  auto e1 = run(eta_cmd);
  auto e2 = run(eta_cmd);
  expect(e1.exit_code == 0 && e1.out == e2.out, "deterministic json output");

  // verification suite: csv log, exit 0
  auto ver = run(bin + " verify --suite gradient --trials 4 --seed 5");
  expect(ver.exit_code == 0, "verify exit code");
  expect(contains(ver.out, "trial,seed,quantity,lhs,rhs,gap,pass"), "verify csv header");

  // error paths surface as exit 2
  expect(run(bin + " norm " + dir + "/nope.json --p 2").exit_code == 2, "missing file is 2");
  expect(run(bin + " norm " + dir + "/star_t.json --p 0.5").exit_code == 2, "bad p is 2");
  expect(run(bin + " eta " + dir + "/star.json --p 2 --starts 2").exit_code == 0,
         "graphs feed the symmetric solver");
  {
    std::ofstream bad(dir + "/bad.json");
    bad << "{\"format\":\"rtensor-v1\",\"order\":2,\"dims\":[2,2],\"entries\":"
           "[{\"idx\":[0,0],\"val\":1},{\"idx\":[0,0],\"val\":2}]}";
  }
  expect(run(bin + " norm " + dir + "/bad.json --p 2").exit_code == 2, "duplicate idx is 2");

  if (std::system(("rm -rf " + dir).c_str()) != 0)
    std::cerr << "warning: temp dir not removed\n";
  if (g_failures == 0) std::cout << "cli_smoke: all checks passed\n";
  return g_failures == 0 ? 0 : 1;
}
