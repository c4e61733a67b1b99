#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Shell-level checks of the command line tool. The binary path arrives via
// LOCDOM_CLI (set by ctest); the cases skip when it is absent so the test
// binary stays runnable on its own.

namespace {

const char* cli_path() { return std::getenv("LOCDOM_CLI"); }

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli end to end") {
  if (!cli_path()) {
    MESSAGE("LOCDOM_CLI not set; skipping CLI checks");
    return;
  }

  SUBCASE("families gen piped into compute") {
    RunResult gen = run("families gen G_r 6");
    CHECK(gen.exit_code == 0);

    std::string g6file = "/tmp/locdom_cli_test_g6.g6";
    std::ofstream(g6file) << gen.out;
    RunResult lambda = run("compute lambda " + g6file);
    CHECK(lambda.exit_code == 0);
    CHECK(lambda.out.find("\"value\":7") != std::string::npos);

    RunResult tsv = run("--format tsv compute dim " + g6file);
    CHECK(tsv.exit_code == 0);
    CHECK(tsv.out.find("dim\t") != std::string::npos);
    std::remove(g6file.c_str());
  }

  SUBCASE("edge list input") {
    std::string elfile = "/tmp/locdom_cli_test.el";
    std::ofstream(elfile) << "# tiny path\n4\n0 1\n1 2\n2 3\n";
    RunResult dim = run("compute dim " + elfile);
    CHECK(dim.exit_code == 0);
    CHECK(dim.out.find("\"value\":1") != std::string::npos);
    std::remove(elfile.c_str());
  }

  SUBCASE("exit codes") {
    std::string broken = "/tmp/locdom_cli_broken.g6";
    std::ofstream(broken) << "B~\n";  // nonzero padding
    CHECK(run("compute dim " + broken).exit_code == 2);
    std::remove(broken.c_str());

    std::string split = "/tmp/locdom_cli_split.el";
    std::ofstream(split) << "4\n0 1\n2 3\n";
    CHECK(run("compute dim " + split).exit_code == 3);  // disconnected
    CHECK(run("compute lambda " + split).exit_code == 3);
    std::remove(split.c_str());

    std::string path30 = "/tmp/locdom_cli_p30.el";
    std::ofstream ef(path30);
    ef << "30\n";
    for (int i = 0; i + 1 < 30; ++i) ef << i << " " << i + 1 << "\n";
    ef.close();
    CHECK(run("compute lambda " + path30).exit_code == 4);  // over the cap
    CHECK(run("--cap 30 --time-budget-ms 1 compute lambda " + path30).exit_code == 4);  // timeout
    std::remove(path30.c_str());

    CHECK(run("verify lemma-9.9").exit_code == 3);
  }

  SUBCASE("verify and corpus sweeps") {
    RunResult v = run("verify lemma-2.1 --r 6");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("\"fail\":0") != std::string::npos);

    CHECK(run("verify --list").out.find("thm-5.3") != std::string::npos);

    RunResult gen = run("families gen complete 4");
    std::string corpus = "/tmp/locdom_cli_corpus.g6";
    std::ofstream(corpus) << gen.out << gen.out;  // two copies of K4
    RunResult ce = run("corpus-extremes " + corpus);
    CHECK(ce.exit_code == 0);
    CHECK(ce.out.find("\"max_dim_minus_det\":0") != std::string::npos);
    std::remove(corpus.c_str());

    RunResult ore = run("find-ore-witness --max-n 5");
    CHECK(ore.exit_code == 0);

    std::string own = "/tmp/locdom_cli_own.g6";
    std::ofstream(own) << run("families gen G_r 6").out;
    RunResult vexternal = run("verify thm-4.2 --corpus-file " + own);
    CHECK(vexternal.exit_code == 0);
    CHECK(vexternal.out.find("\"corpus\":\"supplied:1\"") != std::string::npos);
    std::remove(own.c_str());
  }
}
