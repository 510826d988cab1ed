#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "fdtc/fdtc.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string format = "json";
  std::string word, word2, boundary, graph, mode = "monodromy";
  std::vector<std::string> points;
  long n = 0, n_max = 0;
  int weight_bound = 0;
  std::string nt_type;
  bool tight = false, braid_mode = false, timing = false, upper_bound = false, connected = false;
  std::optional<long> genus, n_half, chi, k, braid_index;
  std::string min_abs_c;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A bare foliation graph or coefficient table is accepted in place of a problem file.
std::string as_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    return text;
  }
  if (j.is_object() && (j.contains("elliptic") || j.contains("hyperbolic"))) return json{{"foliation", j}}.dump();
  if (j.is_object() && j.contains("values") && !j.contains("coefficients")) return json{{"coefficients", j}}.dump();
  return text;
}

int execute(const std::string& name, const Options& o, bool needs_file) {
  json c;
  c["command"] = name;
  c["format"] = o.format;
  if (!o.word.empty()) c["word"] = o.word;
  if (!o.word2.empty()) c["word2"] = o.word2;
  if (!o.boundary.empty()) c["boundary"] = o.boundary;
  if (!o.graph.empty()) c["graph"] = o.graph;
  if (!o.points.empty()) c["points"] = o.points;
  c["mode"] = o.mode;
  if (o.n) c["n"] = o.n;
  if (o.n_max) c["n_max"] = o.n_max;
  if (o.weight_bound) c["weight_bound"] = o.weight_bound;
  if (!o.nt_type.empty()) c["nt_type"] = o.nt_type;
  if (o.tight) c["tight"] = true;
  if (o.braid_mode) c["braid_mode"] = true;
  if (o.timing) c["timing"] = true;
  if (o.upper_bound) c["upper_bound"] = true;
  if (o.connected) c["connected"] = true;
  for (auto [key, v] : {std::pair{"genus", o.genus}, std::pair{"n_half", o.n_half}, std::pair{"chi", o.chi},
                        std::pair{"k", o.k}, std::pair{"braid_index", o.braid_index}})
    if (v) c[key] = *v;
  if (!o.min_abs_c.empty()) c["min_abs_c"] = o.min_abs_c;

  fdtc_problem* problem = nullptr;
  if (needs_file) {
    std::string text;
    try {
      text = o.file == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_file(o.file);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return FDTC_ARGUMENT_ERROR;
    }
    char* err = nullptr;
    const fdtc_status st = fdtc_problem_parse(as_problem(text).c_str(), &problem, &err);
    if (st != FDTC_OK) {
      std::cerr << "error: " << (err ? err : "invalid problem") << "\n";
      fdtc_string_free(err);
      return st;
    }
  }
  char* out = nullptr;
  const fdtc_status st = fdtc_run(problem, c.dump().c_str(), &out);
  fdtc_problem_free(problem);
  if (st == FDTC_OK || st == FDTC_INCONCLUSIVE) {
    std::cout << (out ? out : "");
  } else {
    std::cerr << "error: " << (out ? out : "failure") << "\n";
  }
  fdtc_string_free(out);
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional Dehn twist coefficients, open book foliations and topology certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fdtc_version()));
  Options o;
  std::string chosen;
  bool needs_file = true;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& full, const std::string& help,
                  bool file) {
    CLI::App* s = parent->add_subcommand(name, help);
    if (file) s->add_option("file", o.file, "problem file (JSON), or - for stdin")->required();
    s->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    s->add_flag("--timing", o.timing, "include wall time in the report");
    s->callback([&, full, file] {
      chosen = full;
      needs_file = file;
    });
    return s;
  };
  auto word_opts = [&](CLI::App* s) {
    s->add_option("--word", o.word, "name of the word in the problem file (default: first)");
    s->add_option("--boundary", o.boundary, "boundary component label");
  };

  CLI::App* f = app.add_subcommand("fdtc", "fractional Dehn twist coefficient");
  f->require_subcommand(1);
  for (auto [name, full, help] : {std::tuple{"exact", "fdtc exact", "exact value via the Key Lemma"},
                                  std::tuple{"braid", "fdtc braid", "braid value, dividing a pure power"}}) {
    CLI::App* s = leaf(f, name, full, help, true);
    word_opts(s);
    s->add_option("--n", o.n, "starting power N (default D(D-1)+1)")->check(CLI::PositiveNumber);
    s->add_option("--max-n", o.n_max, "cap on N when doubling (default FDTC_MAX_N or 4096)")->check(CLI::PositiveNumber);
    s->add_option("--weight-bound", o.weight_bound, "probe arc weight bound (default 4)")->check(CLI::PositiveNumber);
  }
  {
    CLI::App* s = leaf(f, "interval", "fdtc interval", "Key Lemma interval for a fixed N", true);
    word_opts(s);
    s->add_option("--n", o.n, "power N (default D(D-1)+1)")->check(CLI::PositiveNumber);
  }
  {
    CLI::App* s = leaf(f, "translation", "fdtc translation", "translation number estimates for N = 1..n_max", true);
    word_opts(s);
    s->add_option("--n-max", o.n_max, "largest N (default 10)")->check(CLI::PositiveNumber);
  }
  {
    CLI::App* s = leaf(f, "veering", "fdtc veering", "right-veering test", true);
    word_opts(s);
    s->add_option("--weight-bound", o.weight_bound, "largest arc weight searched (default 4)")
        ->check(CLI::PositiveNumber);
    s->add_option("--nt-type", o.nt_type, "asserted Nielsen-Thurston type");
  }
  {
    CLI::App* s = leaf(f, "audit", "fdtc audit", "quasimorphism defect and conjugation audit", true);
    word_opts(s);
    s->add_option("--word2", o.word2, "second word (default: second in file)");
  }

  CLI::App* fo = app.add_subcommand("foliation", "open book foliation graphs");
  fo->require_subcommand(1);
  leaf(fo, "check", "foliation check", "validate a graph, report counts and sl", true)
      ->add_option("--graph", o.graph, "graph name");
  {
    CLI::App* s = leaf(fo, "bounds", "foliation bounds", "FDTC bounds from elliptic points", true);
    s->add_option("--graph", o.graph, "graph name");
    s->add_option("--points", o.points, "elliptic point ids")->delimiter(',');
    s->add_option("--mode", o.mode, "monodromy or braid")->check(CLI::IsMember({"monodromy", "braid"}));
  }
  leaf(fo, "otdisc", "foliation otdisc", "transverse overtwisted disc check", true)
      ->add_option("--graph", o.graph, "graph name");
  {
    CLI::App* s = leaf(fo, "ot-complexity", "foliation ot-complexity", "interpret an overtwisted complexity", false);
    s->add_option("--n", o.n, "complexity value")->required();
    s->add_flag("--upper-bound", o.upper_bound, "the value is only an upper bound");
  }

  {
    CLI::App* s = app.add_subcommand("classify", "topology verdicts from boundary coefficients");
    s->add_option("--coeffs", o.file, "coefficient or problem file")->required();
    s->add_option("--nt-type", o.nt_type, "asserted Nielsen-Thurston type");
    s->add_flag("--tight", o.tight, "assert the contact structure is tight");
    s->add_flag("--braid-mode", o.braid_mode, "coefficients come from a braid");
    s->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    s->add_flag("--timing", o.timing, "include wall time in the report");
    s->callback([&] { chosen = "classify"; });
  }

  CLI::App* su = app.add_subcommand("surface", "surface data");
  su->require_subcommand(1);
  leaf(su, "info", "surface info", "generators, faces and denominator bounds", true);

  CLI::App* t = app.add_subcommand("topology", "bounds from incompressible surfaces");
  t->require_subcommand(1);
  {
    CLI::App* s = leaf(t, "bounds", "topology bounds", "FDTC bound from a closed surface", false);
    s->add_option("--genus", o.genus, "genus of the surface")->required();
    s->add_option("--n-half", o.n_half, "half the number of binding intersections")->required();
    s->add_flag("--connected", o.connected, "the binding is connected");
  }
  {
    CLI::App* s = leaf(t, "genus", "topology genus", "genus and Seifert surface bounds", false);
    s->add_option("--chi", o.chi, "Euler characteristic of a maximal Seifert surface");
    s->add_option("--k", o.k, "intersections with the binding");
    s->add_option("--braid-index", o.braid_index, "braid index");
    s->add_option("--min-abs-c", o.min_abs_c, "smallest |c| over boundary components");
    s->add_flag("--connected", o.connected, "the binding is connected");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : FDTC_ARGUMENT_ERROR;
  }
  return execute(chosen, o, needs_file);
}
