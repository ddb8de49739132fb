#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dynmatch/script.hpp"

using namespace dynmatch;

namespace {

const char* kFigureScript =
    "link 0 2\n"
    "link 1 2\n"
    "link 2 3\n"
    "link 3 4\n";

}  // namespace

TEST_CASE("figure script reports cardinality 2") {
  ScriptResult r = run_script(std::string(kFigureScript) + "card 3\n");
  CHECK(r.output == "2\n");
  CHECK(!r.failed);
}

TEST_CASE("duplicate link reports an error line and continues") {
  ScriptResult r = run_script("link 0 1\nlink 0 1\ncard 0\n");
  CHECK(r.output == "error 2 DuplicateEdge\n1\n");
  CHECK(r.failed);
}

TEST_CASE("cycle and missing-edge errors") {
  ScriptResult r = run_script("link 0 1\nlink 1 2\nlink 0 2\ncut 5 6\nlink 3 3\n");
  CHECK(r.output ==
        "error 3 WouldCreateCycle\n"
        "error 4 NoSuchEdge\n"
        "error 5 SelfLoop\n");
  CHECK(r.failed);
}

TEST_CASE("figure plus pendant keeps cardinality 2") {
  ScriptResult r = run_script(std::string(kFigureScript) + "link 3 5\ncard 0\n");
  CHECK(r.output == "2\n");
}

TEST_CASE("matched and matchedif answers") {
  std::string s = std::string(kFigureScript) +
                  "matched 3 4\n"
                  "matched 2 3\n"
                  "matchedif (0 2 m) 3 4\n"
                  "matchedif (0 2 m; 1 2 m) 3 4\n"
                  "matchedif (0 2 m) 1 2\n";
  ScriptResult r = run_script(s);
  CHECK(r.output == "yes\nno\nyes\ninfeasible\nno\n");
  CHECK(!r.failed);
}

TEST_CASE("matchedif parse failures") {
  CHECK(run_script("matchedif (0 1 x) 0 1\n").output == "error 1 ParseError\n");
  CHECK(run_script("matchedif 0 1\n").output == "error 1 ParseError\n");
  CHECK(run_script("link 0 1\nmatchedif (0 1 m; 0 1 m; 0 1 m; 0 1 m; 0 1 m; 0 1 m; 0 1 m; 0 1 m; "
                   "0 1 m) 0 1\n")
            .output == "error 2 TooManyConstraints\n");
}

TEST_CASE("cross component matchedif") {
  ScriptResult r = run_script("link 0 1\nlink 2 3\nmatchedif (2 3 m) 0 1\n");
  CHECK(r.output == "error 3 CrossComponent\n");
}

TEST_CASE("total and check") {
  ScriptResult r = run_script("link 0 1\nlink 2 3\ntotal\ncheck\ncut 0 1\ntotal\ncheck\n");
  CHECK(r.output == "2\nok\n1\nok\n");
  CHECK(!r.failed);
}

TEST_CASE("weighted script uses weights") {
  ScriptResult r = run_script("link 0 1 1\nlink 1 2 10\nlink 2 3 1\ncard 0\ncheck\n", true);
  CHECK(r.output == "10\nok\n");
}

TEST_CASE("vertex names are arbitrary non-negative integers") {
  ScriptResult r = run_script("link 1000000 7\ncard 1000000\ncard 31337\n");
  CHECK(r.output == "1\n0\n");
}

TEST_CASE("replaying a script is byte-identical") {
  std::string s = std::string(kFigureScript) +
                  "link 3 5\ncut 3 5\ncard 0\ntotal\nmatched 0 2\ncheck\n";
  ScriptResult a = run_script(s);
  ScriptResult b = run_script(s);
  CHECK(a.output == b.output);
  CHECK(!a.failed);
}
