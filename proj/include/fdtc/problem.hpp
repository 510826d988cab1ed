#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdtc/fdtc.hpp"
#include "fdtc/foliation.hpp"
#include "fdtc/topology.hpp"
#include "json.hpp"

namespace fdtc {

using ojson = nlohmann::ordered_json;

/// Malformed problem or command input; `field` is a JSON pointer style path.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct NamedWord {
  std::string name;
  std::string text;
  MappingClassWord word;
};

struct ProblemFile {
  SurfaceSpec surface;
  std::vector<std::pair<std::string, Word>> curves;
  std::vector<NamedWord> words;
  std::vector<std::pair<std::string, FoliationGraph>> foliations;
  std::optional<CoefficientAssignment> coefficients;
  NTType nt_type = NTType::Unknown;
  bool tight = false;
  std::string boundary;  // default target boundary component
};

ProblemFile parse_problem(const std::string& json_text);
ProblemFile load_problem(const std::string& path);

// Word syntax: factors "T_<curve>^k" (twist about a named curve or boundary
// label) and "s<i>^k" (half twist), applied right to left; "id" or "" is the identity.
MappingClassWord parse_mapping_class_word(const SurfaceSpec& surface,
                                          const std::vector<std::pair<std::string, Word>>& curves,
                                          const std::string& text);

FoliationGraph graph_from_json(const ojson& j, const std::string& where = "foliation");
ojson graph_to_json(const FoliationGraph& g);

struct Command {
  std::string name;  // e.g. "fdtc exact", "foliation bounds", "classify", "surface info"
  std::string word;
  std::string word2;
  std::string boundary;
  std::string graph;
  std::vector<std::string> points;
  std::string mode = "monodromy";
  long n = 0;
  long n_max = 0;
  int weight_bound = 0;
  std::optional<std::string> nt_type;
  std::optional<bool> tight;
  std::optional<bool> braid_mode;
  bool timing = false;
  bool upper_bound = false;  // ot-complexity value is only an upper bound
  // Topology bounds without a problem file.
  std::optional<long> genus, n_half, chi, k, braid_index;
  std::optional<std::string> min_abs_c;
  std::optional<bool> connected;
};

Command command_from_json(const ojson& j);

struct Report {
  ojson body;
  std::vector<std::string> warnings;
  bool inconclusive = false;
};

Report run(const ProblemFile& problem, const Command& command);
// Commands that need no problem file ("topology bounds", "topology genus", "foliation ot-complexity").
Report run(const Command& command);
std::string emit_report(const Report& r, const std::string& format);

}  // namespace fdtc
