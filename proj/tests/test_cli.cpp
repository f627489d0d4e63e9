// End-to-end checks of the command line tool. argv[1] is the binary path.
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string g_bin;
int g_failures = 0;

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = g_bin + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void check(bool ok, const std::string& what) {
  if (!ok) {
    std::fprintf(stderr, "FAIL: %s\n", what.c_str());
    ++g_failures;
  }
}

void check_eq(const Run& r, int code, const std::string& expect,
              const std::string& what) {
  check(r.exit_code == code,
        what + " exit code " + std::to_string(r.exit_code) + " != " +
            std::to_string(code));
  check(r.out == expect, what + " output mismatch:\n got: " + r.out +
                             " want: " + expect);
}

void check_contains(const Run& r, int code, const std::string& needle,
                    const std::string& what) {
  check(r.exit_code == code,
        what + " exit code " + std::to_string(r.exit_code) + " != " +
            std::to_string(code));
  check(r.out.find(needle) != std::string::npos,
        what + " output missing '" + needle + "': " + r.out);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-binary>\n");
    return 2;
  }
  g_bin = argv[1];

  check_eq(run("mesh hom --family A --rank 2 --from \"0,1\""), 0,
           "0\t1\t1\n0\t2\t1\n", "mesh hom tsv");
  check_eq(run("mesh hom --family A --rank 2 --from \"0,1\" --oracle"), 0,
           "0\t1\t1\n0\t2\t1\n", "mesh hom oracle tsv");
  check_eq(
      run("classify --family E --rank 8 --gen \"tau^14\""), 0,
      "{\"schema_version\":\"1\",\"by_table\":true,\"by_hom_condition\":true,"
      "\"by_vertex_count\":false,\"cy_dimension\":14,\"vertex_count\":112,"
      "\"root_count\":120}\n",
      "classify json");
  check_eq(run("orbit --family A --rank 2 --gen \"rho\" --format dot"), 0,
           "digraph orbit {\n  v0 [label=\"(0,1)\"];\n  v0 -> v0;\n"
           "  v0 -> v0 [style=dashed, constraint=false];\n}\n",
           "orbit dot");
  check_eq(run("dynkin --family A --rank 3 --format json"), 0,
           "{\"schema_version\":\"1\",\"family\":\"A\",\"rank\":3,"
           "\"arrows\":[[1,2],[2,3]],\"loop_vertices\":[]}\n",
           "dynkin json");

  check_contains(run("auto --family A --rank 3 --enumerate 2 --format text"),
                 0, "{1->(-1,1), 2->(-1,2), 3->(-1,3)}", "auto enumerate");
  check_contains(run("mesh total --family A --rank 3 --gen \"tau^2\""), 0,
                 "\t", "mesh total tsv");
  check_contains(run("mesh total --family A --rank 3 --gen \"tau^2\" "
                     "--jobs 1"),
                 0, "\t", "mesh total serial");
  check_contains(run("ppa build --family A --rank 2 --char 2"), 0,
                 "\"dim\":4", "ppa build A_2");
  check_contains(run("ppa build --family D --rank 4 --char 2 --f \"x*y\""), 0,
                 "\"dim\":28", "ppa build deformed D_4");

  // domain errors: exit 2 and a JSON error object on stderr
  check_contains(run("orbit --family D --rank 3 --gen tau", true), 2,
                 "\"error\":\"RankOutOfRange\"", "rank error");
  check_contains(run("orbit --family A --rank 3 --gen \"tau^\"", true), 2,
                 "\"error\":\"ParseError\"", "parse error");
  check_contains(run("classify --family A --rank 3 --gen \"phi\"", true), 2,
                 "\"error\":\"NotWeaklyAdmissible\"", "weak adm error");
  // usage errors: exit 1
  check(run("mesh hom --family A --rank 2 --from \"0,1\" --badflag", true)
            .exit_code == 1,
        "unknown flag exit code");
  check(run("nosuchcommand", true).exit_code == 1, "unknown command");
  // help: exit 0
  check(run("--help").exit_code == 0, "help exit code");

  if (g_failures) {
    std::fprintf(stderr, "%d CLI checks failed\n", g_failures);
    return 1;
  }
  std::printf("all CLI checks passed\n");
  return 0;
}
