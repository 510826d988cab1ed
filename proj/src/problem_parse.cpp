#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "fdtc/problem.hpp"

namespace fdtc {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }

const ojson& require_object(const ojson& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  return j;
}

long get_long(const ojson& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<long>();
}

bool get_bool(const ojson& j, const std::string& path) {
  if (!j.is_boolean()) throw ParseError(path, "expected true or false");
  return j.get<bool>();
}

std::string get_string(const ojson& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

Rational get_rational(const ojson& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(path, "expected a rational such as \"3/2\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(path, e.what());
  }
}

int get_sign(const ojson& j, const std::string& path) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+" || s == "+1") return 1;
    if (s == "-" || s == "-1") return -1;
  } else if (j.is_number_integer() && (j.get<long>() == 1 || j.get<long>() == -1)) {
    return static_cast<int>(j.get<long>());
  }
  throw ParseError(path, "sign must be +1 or -1");
}

void reject_unknown(const ojson& j, const std::string& path, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ParseError(child(path, it.key()), "unknown field");
  }
}

SurfaceSpec parse_surface(const ojson& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"genus", "boundary", "punctures"});
  SurfaceSpec s;
  if (j.contains("genus")) s.genus = static_cast<int>(get_long(j["genus"], child(path, "genus")));
  if (j.contains("punctures")) s.puncture_count = static_cast<int>(get_long(j["punctures"], child(path, "punctures")));
  if (j.contains("boundary")) {
    const ojson& b = j["boundary"];
    s.boundary_labels.clear();
    if (b.is_number_integer()) {
      const long d = b.get<long>();
      if (d < 1 || d > 64) throw ParseError(child(path, "boundary"), "boundary count must be between 1 and 64");
      for (long i = 1; i <= d; ++i) s.boundary_labels.push_back("C" + std::to_string(i));
    } else if (b.is_array()) {
      for (std::size_t i = 0; i < b.size(); ++i)
        s.boundary_labels.push_back(get_string(b[i], child(child(path, "boundary"), std::to_string(i))));
    } else {
      throw ParseError(child(path, "boundary"), "expected a count or a list of labels");
    }
  }
  if (s.genus > 16 || s.puncture_count > 64) throw ParseError(path, "surface too large");
  try {
    s.check();
  } catch (const std::exception& e) {
    throw ParseError(path, e.what());
  }
  return s;
}

std::pair<std::string, long> split_power(const std::string& tok) {
  const auto caret = tok.find('^');
  if (caret == std::string::npos) return {tok, 1};
  std::string exp = tok.substr(caret + 1);
  if (exp.size() >= 2 && exp.front() == '{' && exp.back() == '}') exp = exp.substr(1, exp.size() - 2);
  std::size_t used = 0;
  long p = 0;
  try {
    p = std::stol(exp, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != exp.size()) throw PreconditionError("bad exponent in '" + tok + "'");
  return {tok.substr(0, caret), p};
}

}  // namespace

MappingClassWord parse_mapping_class_word(const SurfaceSpec& surface,
                                          const std::vector<std::pair<std::string, Word>>& curves,
                                          const std::string& text) {
  const Spine spine(surface);
  MappingClassWord w(surface);
  std::string cleaned = text;
  for (auto& ch : cleaned)
    if (ch == '*' || ch == ',') ch = ' ';
  std::istringstream in(cleaned);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  // Factors are written left to right and applied right to left.
  for (const auto& tok : tokens) {
    if (tok == "id") continue;
    const auto [head, p] = split_power(tok);
    if (head.rfind("T_", 0) == 0) {
      const std::string name = head.substr(2);
      auto it = std::find_if(curves.begin(), curves.end(), [&](const auto& c) { return c.first == name; });
      if (it != curves.end()) {
        w.push_back(twist_generator(spine, name, it->second, p));
      } else if (surface.boundary_index(name) >= 0) {
        w.push_back(boundary_generator(spine, name, p));
      } else {
        throw PreconditionError("unresolved curve " + name);
      }
    } else if (head.size() >= 2 && head[0] == 's' &&
               std::all_of(head.begin() + 1, head.end(), [](unsigned char c) { return std::isdigit(c); })) {
      w.push_back(braid_generator(spine, std::stoi(head.substr(1)), p));
    } else {
      throw PreconditionError("bad factor '" + tok + "' (expected T_<curve>^k or s<i>^k)");
    }
  }
  return w;
}

FoliationGraph graph_from_json(const ojson& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"surface", "elliptic", "hyperbolic", "c_circles", "c_circles_essential", "counts"});
  FoliationGraph g;
  if (j.contains("surface")) {
    const std::string sp = child(path, "surface");
    const ojson& s = require_object(j["surface"], sp);
    reject_unknown(s, sp, {"genus", "boundary", "closed"});
    if (s.contains("genus")) g.surface.genus = static_cast<int>(get_long(s["genus"], child(sp, "genus")));
    if (s.contains("closed")) g.surface.closed = get_bool(s["closed"], child(sp, "closed"));
    g.surface.boundary_count = g.surface.closed ? 0 : 1;
    if (s.contains("boundary"))
      g.surface.boundary_count = static_cast<int>(get_long(s["boundary"], child(sp, "boundary")));
  }
  auto list = [&](const char* key) -> const ojson& {
    static const ojson empty = ojson::array();
    if (!j.contains(key)) return empty;
    if (!j[key].is_array()) throw ParseError(child(path, key), "expected a list");
    return j[key];
  };
  const ojson& ell = list("elliptic");
  for (std::size_t i = 0; i < ell.size(); ++i) {
    const std::string p = child(child(path, "elliptic"), std::to_string(i));
    const ojson& e = require_object(ell[i], p);
    reject_unknown(e, p, {"id", "sign", "binding", "essential", "strongly_essential", "a_arcs"});
    EllipticPoint v;
    if (!e.contains("id")) throw ParseError(p, "missing id");
    v.id = get_string(e["id"], child(p, "id"));
    if (!e.contains("sign")) throw ParseError(p, "missing sign");
    v.sign = get_sign(e["sign"], child(p, "sign"));
    v.binding = e.contains("binding") ? get_string(e["binding"], child(p, "binding")) : "C1";
    if (e.contains("essential")) v.essential = get_bool(e["essential"], child(p, "essential"));
    if (e.contains("strongly_essential"))
      v.strongly_essential = get_bool(e["strongly_essential"], child(p, "strongly_essential"));
    if (e.contains("a_arcs")) v.a_arcs = get_bool(e["a_arcs"], child(p, "a_arcs"));
    g.elliptic.push_back(std::move(v));
  }
  const ojson& hyp = list("hyperbolic");
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    const std::string p = child(child(path, "hyperbolic"), std::to_string(i));
    const ojson& h = require_object(hyp[i], p);
    reject_unknown(h, p, {"id", "sign", "region", "degenerated", "elliptic"});
    HyperbolicPoint x;
    if (!h.contains("id")) throw ParseError(p, "missing id");
    x.id = get_string(h["id"], child(p, "id"));
    if (!h.contains("sign")) throw ParseError(p, "missing sign");
    x.sign = get_sign(h["sign"], child(p, "sign"));
    if (!h.contains("region")) throw ParseError(p, "missing region");
    try {
      x.region = parse_region_type(get_string(h["region"], child(p, "region")));
    } catch (const PreconditionError& err) {
      throw ParseError(child(p, "region"), err.what());
    }
    if (h.contains("degenerated")) x.degenerated = get_bool(h["degenerated"], child(p, "degenerated"));
    if (h.contains("elliptic")) {
      const std::string ep = child(p, "elliptic");
      if (!h["elliptic"].is_array()) throw ParseError(ep, "expected a list of elliptic ids");
      for (std::size_t k = 0; k < h["elliptic"].size(); ++k)
        x.elliptic.push_back(get_string(h["elliptic"][k], child(ep, std::to_string(k))));
    }
    g.hyperbolic.push_back(std::move(x));
  }
  if (j.contains("c_circles")) g.c_circles = get_bool(j["c_circles"], child(path, "c_circles"));
  if (j.contains("c_circles_essential"))
    g.c_circles_essential = get_bool(j["c_circles_essential"], child(path, "c_circles_essential"));
  if (j.contains("counts")) {
    const std::string cp = child(path, "counts");
    const ojson& c = require_object(j["counts"], cp);
    reject_unknown(c, cp, {"e_plus", "e_minus", "h_plus", "h_minus"});
    SingularityCounts sc;
    for (auto [key, slot] : {std::pair{"e_plus", &sc.e_plus}, std::pair{"e_minus", &sc.e_minus},
                             std::pair{"h_plus", &sc.h_plus}, std::pair{"h_minus", &sc.h_minus}}) {
      if (!c.contains(key)) throw ParseError(cp, std::string("missing ") + key);
      *slot = get_long(c[key], child(cp, key));
    }
    g.declared_counts = sc;
  }
  return g;
}

ojson graph_to_json(const FoliationGraph& g) {
  ojson j;
  j["surface"] = {{"genus", g.surface.genus}, {"boundary", g.surface.boundary_count}, {"closed", g.surface.closed}};
  j["elliptic"] = ojson::array();
  for (const auto& e : g.elliptic)
    j["elliptic"].push_back({{"id", e.id},
                             {"sign", e.sign},
                             {"binding", e.binding},
                             {"essential", e.essential},
                             {"strongly_essential", e.strongly_essential},
                             {"a_arcs", e.a_arcs}});
  j["hyperbolic"] = ojson::array();
  for (const auto& h : g.hyperbolic)
    j["hyperbolic"].push_back({{"id", h.id},
                               {"sign", h.sign},
                               {"region", to_string(h.region)},
                               {"degenerated", h.degenerated},
                               {"elliptic", h.elliptic}});
  j["c_circles"] = g.c_circles;
  j["c_circles_essential"] = g.c_circles_essential;
  if (g.declared_counts) {
    const auto& c = *g.declared_counts;
    j["counts"] = {{"e_plus", c.e_plus}, {"e_minus", c.e_minus}, {"h_plus", c.h_plus}, {"h_minus", c.h_minus}};
  }
  return j;
}

ProblemFile parse_problem(const std::string& json_text) {
  ojson j;
  try {
    j = ojson::parse(json_text);
  } catch (const ojson::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  require_object(j, "");
  reject_unknown(j, "", {"description", "surface", "curves", "word", "words", "foliation", "foliations",
                         "coefficients", "nt_type", "tight", "boundary"});
  ProblemFile p;
  if (j.contains("surface")) p.surface = parse_surface(j["surface"], "/surface");
  const Spine spine(p.surface);

  for (int i = 1; i <= p.surface.genus; ++i) {
    p.curves.emplace_back("a" + std::to_string(i), spine.parse_word("a" + std::to_string(i)));
    p.curves.emplace_back("b" + std::to_string(i), spine.parse_word("b" + std::to_string(i)));
  }
  if (p.surface.genus == 1) {
    p.curves.emplace_back("a", spine.parse_word("a1"));
    p.curves.emplace_back("b", spine.parse_word("b1"));
  }
  if (j.contains("curves")) {
    const ojson& c = require_object(j["curves"], "/curves");
    for (auto it = c.begin(); it != c.end(); ++it) {
      const std::string path = child("/curves", it.key());
      if (p.surface.boundary_index(it.key()) >= 0) throw ParseError(path, "curve name clashes with a boundary label");
      Word w;
      try {
        w = spine.parse_word(get_string(it.value(), path));
        require_twist_curve(spine, canonical_curve(w));
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(path, e.what());
      }
      auto existing = std::find_if(p.curves.begin(), p.curves.end(), [&](const auto& x) { return x.first == it.key(); });
      if (existing != p.curves.end())
        existing->second = w;
      else
        p.curves.emplace_back(it.key(), w);
    }
  }

  auto add_word = [&](const std::string& name, const ojson& value, const std::string& path) {
    NamedWord nw;
    nw.name = name;
    nw.text = get_string(value, path);
    try {
      nw.word = parse_mapping_class_word(p.surface, p.curves, nw.text);
    } catch (const std::exception& e) {
      throw ParseError(path, e.what());
    }
    for (const auto& existing : p.words)
      if (existing.name == name) throw ParseError(path, "word name '" + name + "' used twice");
    p.words.push_back(std::move(nw));
  };
  if (j.contains("word")) add_word("phi", j["word"], "/word");
  if (j.contains("words")) {
    const ojson& ws = j["words"];
    if (ws.is_object()) {
      for (auto it = ws.begin(); it != ws.end(); ++it) add_word(it.key(), it.value(), child("/words", it.key()));
    } else if (ws.is_array()) {
      for (std::size_t i = 0; i < ws.size(); ++i)
        add_word("w" + std::to_string(i + 1), ws[i], child("/words", std::to_string(i)));
    } else {
      throw ParseError("/words", "expected an object or a list of words");
    }
  }

  if (j.contains("foliation")) p.foliations.emplace_back("F", graph_from_json(j["foliation"], "/foliation"));
  if (j.contains("foliations")) {
    const ojson& fs = require_object(j["foliations"], "/foliations");
    for (auto it = fs.begin(); it != fs.end(); ++it)
      p.foliations.emplace_back(it.key(), graph_from_json(it.value(), child("/foliations", it.key())));
  }

  if (j.contains("coefficients")) {
    const ojson& c = require_object(j["coefficients"], "/coefficients");
    reject_unknown(c, "/coefficients", {"mode", "connected", "values"});
    CoefficientAssignment a;
    if (c.contains("mode")) {
      try {
        a.mode = parse_bound_mode(get_string(c["mode"], "/coefficients/mode"));
      } catch (const PreconditionError& e) {
        throw ParseError("/coefficients/mode", e.what());
      }
    }
    if (c.contains("connected")) a.connected_boundary = get_bool(c["connected"], "/coefficients/connected");
    if (!c.contains("values")) throw ParseError("/coefficients", "missing values");
    const ojson& v = require_object(c["values"], "/coefficients/values");
    for (auto it = v.begin(); it != v.end(); ++it)
      a.coefficients.emplace_back(it.key(), get_rational(it.value(), child("/coefficients/values", it.key())));
    try {
      a.check();
    } catch (const std::exception& e) {
      throw ParseError("/coefficients", e.what());
    }
    p.coefficients = std::move(a);
  }
  if (j.contains("nt_type")) {
    try {
      p.nt_type = parse_nt_type(get_string(j["nt_type"], "/nt_type"));
    } catch (const PreconditionError& e) {
      throw ParseError("/nt_type", e.what());
    }
  }
  if (j.contains("tight")) p.tight = get_bool(j["tight"], "/tight");
  p.boundary = p.surface.boundary_labels.front();
  if (j.contains("boundary")) {
    p.boundary = get_string(j["boundary"], "/boundary");
    if (p.surface.boundary_index(p.boundary) < 0) throw ParseError("/boundary", "unknown boundary label " + p.boundary);
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

Command command_from_json(const ojson& j) {
  require_object(j, "command");
  reject_unknown(j, "command",
                 {"command", "format", "word", "word2", "boundary", "graph", "points", "mode", "n", "n_max",
                  "weight_bound", "nt_type", "tight", "braid_mode", "timing", "upper_bound", "genus", "n_half",
                  "chi", "k", "braid_index", "min_abs_c", "connected"});
  Command c;
  if (!j.contains("command")) throw ParseError("command", "missing command name");
  c.name = get_string(j["command"], "command/command");
  auto str = [&](const char* key, std::string& out) {
    if (j.contains(key)) out = get_string(j[key], child("command", key));
  };
  str("word", c.word);
  str("word2", c.word2);
  str("boundary", c.boundary);
  str("graph", c.graph);
  str("mode", c.mode);
  if (j.contains("points")) {
    if (!j["points"].is_array()) throw ParseError("command/points", "expected a list of elliptic ids");
    for (std::size_t i = 0; i < j["points"].size(); ++i)
      c.points.push_back(get_string(j["points"][i], "command/points/" + std::to_string(i)));
  }
  if (j.contains("n")) c.n = get_long(j["n"], "command/n");
  if (j.contains("n_max")) c.n_max = get_long(j["n_max"], "command/n_max");
  if (j.contains("weight_bound")) c.weight_bound = static_cast<int>(get_long(j["weight_bound"], "command/weight_bound"));
  if (j.contains("nt_type")) c.nt_type = get_string(j["nt_type"], "command/nt_type");
  if (j.contains("tight")) c.tight = get_bool(j["tight"], "command/tight");
  if (j.contains("braid_mode")) c.braid_mode = get_bool(j["braid_mode"], "command/braid_mode");
  if (j.contains("timing")) c.timing = get_bool(j["timing"], "command/timing");
  if (j.contains("upper_bound")) c.upper_bound = get_bool(j["upper_bound"], "command/upper_bound");
  if (j.contains("connected")) c.connected = get_bool(j["connected"], "command/connected");
  for (auto [key, slot] : {std::pair{"genus", &c.genus}, std::pair{"n_half", &c.n_half}, std::pair{"chi", &c.chi},
                           std::pair{"k", &c.k}, std::pair{"braid_index", &c.braid_index}})
    if (j.contains(key)) *slot = get_long(j[key], child("command", key));
  if (j.contains("min_abs_c")) {
    const ojson& m = j["min_abs_c"];
    c.min_abs_c = m.is_number_integer() ? std::to_string(m.get<long>()) : get_string(m, "command/min_abs_c");
  }
  return c;
}

}  // namespace fdtc
