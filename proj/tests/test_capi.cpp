#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "fdtc/fdtc.h"

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { fdtc_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("parse and run") {
  fdtc_problem* p = nullptr;
  Owned err;
  REQUIRE(fdtc_problem_parse(R"({"surface": {"genus": 1, "boundary": 1}, "word": "T_a T_b"})", &p, &err.s) == FDTC_OK);
  Owned report;
  CHECK(fdtc_run(p, R"({"command": "fdtc exact"})", &report.s) == FDTC_OK);
  CHECK(report.str().find("\"1/6\"") != std::string::npos);
  Owned text;
  CHECK(fdtc_run(p, R"({"command": "fdtc exact", "format": "text"})", &text.s) == FDTC_OK);
  CHECK(text.str().find("result.value: 1/6") != std::string::npos);
  fdtc_problem_free(p);
}

TEST_CASE("status codes") {
  fdtc_problem* p = nullptr;
  Owned e1;
  CHECK(fdtc_problem_parse(R"({"surface": {"genus": 1, "boundary": 1}, "word": "T_z"})", &p, &e1.s) ==
        FDTC_PARSE_ERROR);
  CHECK(p == nullptr);
  CHECK(e1.str().find("unresolved curve z") != std::string::npos);
  Owned e2;
  CHECK(fdtc_problem_parse("not json", &p, &e2.s) == FDTC_PARSE_ERROR);
  Owned e3;
  CHECK(fdtc_problem_load("/nonexistent/problem.json", &p, &e3.s) == FDTC_ARGUMENT_ERROR);

  // A half twist permutes the punctures, so the exact computation refuses it.
  REQUIRE(fdtc_problem_parse(R"({"surface": {"genus": 0, "boundary": 1, "punctures": 2}, "word": "s1"})", &p,
                             &e1.s) == FDTC_OK);
  Owned r1;
  CHECK(fdtc_run(p, R"({"command": "fdtc exact"})", &r1.s) == FDTC_ARGUMENT_ERROR);
  Owned r2;
  CHECK(fdtc_run(p, R"({"command": "fdtc exact", "format": "yaml"})", &r2.s) == FDTC_ARGUMENT_ERROR);
  Owned r3;
  CHECK(fdtc_run(p, "{", &r3.s) == FDTC_PARSE_ERROR);
  fdtc_problem_free(p);

  REQUIRE(fdtc_problem_parse(
              R"({"surface": {"genus": 1, "boundary": 1},
                  "coefficients": {"mode": "monodromy", "connected": true, "values": {"C1": "1/2"}}})",
              &p, &e1.s) == FDTC_OK);
  Owned r4;
  CHECK(fdtc_run(p, R"({"command": "classify"})", &r4.s) == FDTC_INCONCLUSIVE);
  CHECK(r4.str().find("\"inconclusive\": true") != std::string::npos);
  fdtc_problem_free(p);

  Owned r5;
  CHECK(fdtc_run(nullptr, R"({"command": "topology genus", "chi": -1, "k": 0, "braid_index": 2})", &r5.s) ==
        FDTC_ARGUMENT_ERROR);
  CHECK(std::string(fdtc_version()) == "1.0.0");
}
