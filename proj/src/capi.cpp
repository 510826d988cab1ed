#include <cstdlib>
#include <cstring>
#include <memory>

#include "fdtc/fdtc.h"
#include "fdtc/problem.hpp"

struct fdtc_problem {
  fdtc::ProblemFile file;
};

namespace {

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
fdtc_status guarded(char** message, F&& f) {
  try {
    return f();
  } catch (const fdtc::ParseError& e) {
    if (message) *message = dup(std::string("parse error: ") + e.what());
    return FDTC_PARSE_ERROR;
  } catch (const fdtc::ojson::exception& e) {
    if (message) *message = dup(std::string("parse error: ") + e.what());
    return FDTC_PARSE_ERROR;
  } catch (const fdtc::PreconditionError& e) {
    if (message) *message = dup(std::string("argument error: ") + e.what());
    return FDTC_ARGUMENT_ERROR;
  } catch (const std::exception& e) {
    if (message) *message = dup(std::string("computation error: ") + e.what());
    return FDTC_COMPUTE_ERROR;
  } catch (...) {
    if (message) *message = dup("computation error: unknown failure");
    return FDTC_COMPUTE_ERROR;
  }
}

fdtc_status store(fdtc::ProblemFile file, fdtc_problem** out) {
  *out = new fdtc_problem{std::move(file)};
  return FDTC_OK;
}

}  // namespace

extern "C" {

fdtc_status fdtc_problem_parse(const char* json, fdtc_problem** out, char** error) {
  if (error) *error = nullptr;
  if (!json || !out) return FDTC_ARGUMENT_ERROR;
  *out = nullptr;
  return guarded(error, [&] { return store(fdtc::parse_problem(json), out); });
}

fdtc_status fdtc_problem_load(const char* path, fdtc_problem** out, char** error) {
  if (error) *error = nullptr;
  if (!path || !out) return FDTC_ARGUMENT_ERROR;
  *out = nullptr;
  return guarded(error, [&] { return store(fdtc::load_problem(path), out); });
}

void fdtc_problem_free(fdtc_problem* problem) { delete problem; }

fdtc_status fdtc_run(const fdtc_problem* problem, const char* command_json, char** report) {
  if (report) *report = nullptr;
  if (!command_json || !report) return FDTC_ARGUMENT_ERROR;
  return guarded(report, [&] {
    const fdtc::ojson j = fdtc::ojson::parse(command_json);
    const fdtc::Command c = fdtc::command_from_json(j);
    const std::string format = j.contains("format") ? j["format"].get<std::string>() : "json";
    const fdtc::Report r = problem ? fdtc::run(problem->file, c) : fdtc::run(c);
    const std::string text = fdtc::emit_report(r, format);
    *report = dup(text);
    return r.inconclusive ? FDTC_INCONCLUSIVE : FDTC_OK;
  });
}

void fdtc_string_free(char* s) { std::free(s); }

const char* fdtc_version(void) { return "1.0.0"; }
}
