#include <chrono>
#include <sstream>

#include "fdtc/problem.hpp"

namespace fdtc {

namespace {

const char* kEssentialityWarning = "essentiality flags are caller-asserted";

ojson rational_or_null(const std::optional<Rational>& r) { return r ? ojson(r->str()) : ojson(nullptr); }

ojson interval_json(const RationalInterval& i) {
  return {{"lo", i.lo.str()}, {"hi", i.hi.str()}, {"lo_closed", i.lo_closed}, {"hi_closed", i.hi_closed}};
}

ojson bound_json(const BoundReport& b) {
  return {{"lower", rational_or_null(b.lower)},
          {"upper", rational_or_null(b.upper)},
          {"source", b.source},
          {"assumptions", b.assumptions}};
}

ojson verdict_json(const Verdict& v) {
  return {{"conclusion", to_string(v.conclusion)},
          {"criterion", v.criterion.empty() ? ojson(nullptr) : ojson(v.criterion)},
          {"subject", v.subject},
          {"hypotheses", v.hypotheses},
          {"failed", v.failed}};
}

ojson arc_json(const Spine& spine, const ArcClass& a) {
  return {{"start", spine.face(a.start_face).label},
          {"end", spine.face(a.end_face).label},
          {"path", a.path.empty() ? std::string("1") : spine.word_name(a.path)}};
}

ojson fdtc_json(const Spine& spine, const FDTCResult& r) {
  ojson j;
  j["value"] = rational_or_null(r.value);
  j["interval"] = r.interval ? interval_json(*r.interval) : ojson(nullptr);
  j["provenance"] = to_string(r.provenance);
  j["N"] = r.N;
  j["M"] = r.M;
  j["D"] = r.D;
  j["probe"] = r.probe ? arc_json(spine, *r.probe) : ojson(nullptr);
  return j;
}

const NamedWord& select_word(const ProblemFile& p, const std::string& name, std::size_t fallback_index,
                             NamedWord& identity) {
  if (!name.empty()) {
    for (const auto& w : p.words)
      if (w.name == name) return w;
    throw PreconditionError("no word named '" + name + "'");
  }
  if (fallback_index < p.words.size()) return p.words[fallback_index];
  identity = {"id", "id", MappingClassWord(p.surface)};
  return identity;
}

const FoliationGraph& select_graph(const ProblemFile& p, const std::string& name) {
  if (p.foliations.empty()) throw PreconditionError("problem has no foliation graph");
  if (name.empty()) return p.foliations.front().second;
  for (const auto& [n, g] : p.foliations)
    if (n == name) return g;
  throw PreconditionError("no foliation graph named '" + name + "'");
}

std::string graph_name(const ProblemFile& p, const std::string& name) {
  return name.empty() ? p.foliations.front().first : name;
}

NTType command_nt(const ProblemFile* p, const Command& c) {
  if (c.nt_type) return parse_nt_type(*c.nt_type);
  return p ? p->nt_type : NTType::Unknown;
}

ojson word_json(const NamedWord& w) { return {{"name", w.name}, {"text", w.text}, {"normalized", w.word.str()}}; }

Report run_fdtc(const ProblemFile& p, const Command& c, const std::string& sub) {
  Report r;
  const Spine spine(p.surface);
  const std::string boundary = c.boundary.empty() ? p.boundary : c.boundary;
  NamedWord identity;
  const NamedWord& w = select_word(p, c.word, 0, identity);
  ojson& b = r.body;
  b["command"] = "fdtc " + sub;
  b["word"] = word_json(w);
  b["boundary"] = boundary;
  if (sub == "exact" || sub == "braid") {
    ExactOptions opt;
    opt.initial_N = c.n;
    opt.max_N = c.n_max;
    if (c.weight_bound > 0) opt.probe_weight = c.weight_bound;
    const FDTCResult res = sub == "exact" ? fdtc_exact(w.word, boundary, opt) : braid_fdtc(w.word, boundary, opt);
    if (sub == "braid") b["permutation_order"] = puncture_permutation_order(w.word);
    b["result"] = fdtc_json(spine, res);
    r.inconclusive = !res.value;
    if (!res.value) r.warnings.push_back("denominator search stayed ambiguous; only the interval is certified");
  } else if (sub == "interval") {
    const long D = admissible_values(p.surface.punctures_to_boundary(), NTType::Unknown).max_denominator;
    const long N = c.n > 0 ? c.n : D * (D - 1) + 1;
    const ArcClass probe = default_probe(spine, boundary);
    const KeyLemmaBracket br = key_lemma_bracket(w.word, boundary, probe, N);
    b["result"] = {{"interval", interval_json(br.interval())},
                   {"provenance", br.equality ? "PeriodicityCorollary" : "KeyLemma"},
                   {"N", N},
                   {"M", br.M},
                   {"probe", arc_json(spine, probe)}};
  } else if (sub == "translation") {
    const long n_max = c.n_max > 0 ? c.n_max : 10;
    ojson list = ojson::array();
    long N = 1;
    for (const auto& i : translation_estimate(w.word, boundary, n_max)) list.push_back({{"N", N++}, {"interval", interval_json(i)}});
    b["result"] = {{"provenance", "TranslationEstimate"}, {"intervals", list}};
  } else if (sub == "veering") {
    const int bound = c.weight_bound > 0 ? c.weight_bound : 4;
    const RightVeeringReport v = right_veering_test(w.word, boundary, bound, command_nt(&p, c));
    ojson res = {{"verdict", to_string(v.verdict)}, {"fdtc", rational_or_null(v.fdtc)}, {"weight_bound", bound},
                 {"arcs_checked", v.arcs_checked}};
    res["witness"] = v.witness ? arc_json(spine, *v.witness) : ojson(nullptr);
    res["witness_image"] = v.witness_image ? arc_json(spine, *v.witness_image) : ojson(nullptr);
    res["provenance"] = v.verdict == RightVeeringReport::Verdict::NonRightVeering ? "ExactTheorem.SignOfCoefficient"
                        : v.verdict == RightVeeringReport::Verdict::RightVeering  ? "ExactTheorem.PseudoAnosovSign"
                                                                                  : "ArcSearch";
    if (v.verdict == RightVeeringReport::Verdict::NoWitnessUpToBound)
      r.warnings.push_back("no left-moving arc up to the weight bound; this is not a proof of right-veering");
    b["result"] = res;
  } else if (sub == "audit") {
    NamedWord identity2;
    const NamedWord& w2 = select_word(p, c.word2, 1, identity2);
    b["word2"] = word_json(w2);
    const QuasimorphismAudit a = quasimorphism_audit(w.word, w2.word, boundary);
    b["result"] = {{"c1", a.c1.str()},
                   {"c2", a.c2.str()},
                   {"c12", a.c12.str()},
                   {"defect", a.defect.str()},
                   {"within_bound", a.within_bound},
                   {"conjugate", a.conjugate.str()},
                   {"conjugation_invariant", a.conjugation_invariant},
                   {"provenance", "ExactTheorem"},
                   {"criterion", "QuasimorphismDefectOne"}};
  } else {
    throw PreconditionError("unknown fdtc subcommand '" + sub + "'");
  }
  return r;
}

Report run_foliation(const ProblemFile& p, const Command& c, const std::string& sub) {
  Report r;
  ojson& b = r.body;
  b["command"] = "foliation " + sub;
  const FoliationGraph& g = select_graph(p, c.graph);
  b["graph"] = graph_name(p, c.graph);
  r.warnings.push_back(kEssentialityWarning);
  if (sub == "check") {
    const auto diags = validate_graph(g);
    ojson d = ojson::array();
    for (const auto& x : diags) d.push_back({{"code", x.code}, {"location", x.location}, {"message", x.message}});
    const SingularityCounts k = g.counts();
    b["result"] = {{"valid", diags.empty()},
                   {"diagnostics", d},
                   {"counts", {{"e_plus", k.e_plus}, {"e_minus", k.e_minus}, {"h_plus", k.h_plus}, {"h_minus", k.h_minus}}},
                   {"euler_characteristic", (k.e_plus + k.e_minus) - (k.h_plus + k.h_minus)},
                   {"self_linking", g.surface.closed ? ojson(nullptr) : ojson(self_linking(k))},
                   {"provenance", "EulerAndSelfLinkingFormulas"}};
  } else if (sub == "bounds") {
    const BoundMode mode = parse_bound_mode(c.mode);
    std::vector<std::string> pts = c.points;
    if (pts.empty())
      for (const auto& e : g.elliptic) pts.push_back(e.id);
    ojson per = ojson::object();
    for (const auto& v : pts) per[v] = bound_json(elliptic_point_bounds(v, g, mode));
    ojson res = {{"mode", c.mode}, {"points", pts}, {"per_point", per}};
    res["combined"] = bound_json(multi_point_bounds(pts, g, mode));
    try {
      res["aggregate"] = bound_json(aggregate_bounds(pts, g, mode));
    } catch (const PreconditionError& e) {
      res["aggregate"] = nullptr;
      r.warnings.push_back(std::string("aggregate estimate skipped: ") + e.what());
    }
    b["result"] = res;
  } else if (sub == "otdisc") {
    const OTDiscReport ot = transverse_ot_disc_check(g);
    const auto w = bc_annulus_witness_check(g);
    b["result"] = {{"transverse_overtwisted_disc", ot.valid},
                   {"violations", ot.violations},
                   {"certifies_non_right_veering", ot.certifies_non_right_veering},
                   {"criterion", ot.certifies_non_right_veering ? ojson("OneNegativeEllipticDisc") : ojson(nullptr)},
                   {"bc_annulus_witness", w ? ojson({{"hyperbolic", w->hyperbolic_id}, {"conclusion", w->conclusion},
                                                     {"criterion", "DegeneratedBCAnnulus"}})
                                            : ojson(nullptr)}};
  } else {
    throw PreconditionError("unknown foliation subcommand '" + sub + "'");
  }
  return r;
}

Report run_classify(const ProblemFile& p, const Command& c) {
  if (!p.coefficients) throw PreconditionError("problem has no coefficients");
  CoefficientAssignment a = *p.coefficients;
  if (c.braid_mode) a.mode = *c.braid_mode ? BoundMode::Braid : BoundMode::Monodromy;
  const NTType nt = command_nt(&p, c);
  const bool tight = c.tight.value_or(p.tight);
  Report r;
  ojson& b = r.body;
  b["command"] = "classify";
  ojson coeffs = ojson::object();
  for (const auto& [label, v] : a.coefficients) coeffs[label] = v.str();
  b["coefficients"] = coeffs;
  b["mode"] = a.mode == BoundMode::Braid ? "braid" : "monodromy";
  b["connected_boundary"] = a.connected_boundary;
  b["nt_type"] = to_string(nt);
  b["tight"] = tight;
  const std::vector<std::pair<const char*, Verdict>> verdicts = {
      {"irreducibility", irreducibility_verdict(a)},
      {"atoroidality", atoroidality_verdict(a, nt, tight)},
      {"geometry", geometry_verdict(a, nt)},
      {"stabilization", stabilization_obstruction(a)}};
  ojson res = ojson::object();
  bool any = false;
  for (const auto& [name, v] : verdicts) {
    res[name] = verdict_json(v);
    any = any || v.conclusion != Conclusion::Inconclusive;
  }
  b["result"] = res;
  r.inconclusive = !any;
  if (nt != NTType::Unknown) r.warnings.push_back("Nielsen-Thurston type is caller-asserted");
  if (tight) r.warnings.push_back("tightness is caller-asserted");
  return r;
}

Report run_surface(const ProblemFile& p) {
  Report r;
  const Spine spine(p.surface);
  ojson& b = r.body;
  b["command"] = "surface info";
  b["genus"] = p.surface.genus;
  b["boundary"] = p.surface.boundary_labels;
  b["punctures"] = p.surface.puncture_count;
  b["euler_characteristic"] = p.surface.euler_characteristic();
  b["rank"] = spine.rank();
  ojson gens = ojson::array();
  for (int i = 0; i < spine.rank(); ++i) gens.push_back(spine.letter_name(2 * i));
  b["generators"] = gens;
  ojson faces = ojson::array();
  for (int f = 0; f < spine.face_count(); ++f)
    faces.push_back({{"label", spine.face(f).label}, {"word", spine.word_name(spine.face(f).letters)}});
  b["faces"] = faces;
  ojson curves = ojson::object();
  for (const auto& [name, w] : p.curves) curves[name] = spine.word_name(w);
  b["curves"] = curves;
  const SurfaceSpec conv = p.surface.punctures_to_boundary();
  const DenominatorBound db = denominator_bound(conv);
  b["denominator_bound"] = {{"D", db.value}, {"degenerate", db.degenerate}};
  ojson adm = {{"periodic", admissible_values(conv, NTType::Periodic).max_denominator}};
  try {
    adm["pseudoAnosov"] = admissible_values(conv, NTType::PseudoAnosov).max_denominator;
  } catch (const PreconditionError&) {
    adm["pseudoAnosov"] = nullptr;
  }
  b["admissible_max_denominator"] = adm;
  ojson words = ojson::array();
  for (const auto& w : p.words) words.push_back(word_json(w));
  b["words"] = words;
  return r;
}

template <class F>
Report timed(const Command& c, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r = f();
  if (c.timing)
    r.body["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

Report run(const ProblemFile& p, const Command& c) {
  return timed(c, [&] {
    const std::string& n = c.name;
    if (n.rfind("fdtc ", 0) == 0) return run_fdtc(p, c, n.substr(5));
    if (n.rfind("foliation ", 0) == 0 && n != "foliation ot-complexity") return run_foliation(p, c, n.substr(10));
    if (n == "classify") return run_classify(p, c);
    if (n == "surface info") return run_surface(p);
    return run(c);
  });
}

Report run(const Command& c) {
  return timed(c, [&] {
    Report r;
    ojson& b = r.body;
    b["command"] = c.name;
    if (c.name == "topology bounds") {
      if (!c.genus || !c.n_half) throw PreconditionError("topology bounds needs genus and n_half");
      b["result"] = bound_json(closed_surface_fdtc_bound(static_cast<int>(*c.genus), *c.n_half, c.connected.value_or(false)));
      r.warnings.push_back("incompressible surface and essential foliation are caller-asserted");
    } else if (c.name == "topology genus") {
      ojson res = ojson::object();
      if (c.chi) {
        BraidGenusInputs in;
        in.chi_F = *c.chi;
        in.k_intersections = c.k.value_or(0);
        in.braid_index = c.braid_index.value_or(1);
        in.connected_boundary = c.connected.value_or(false);
        res["coefficient_bound"] = bound_json(braid_genus_bounds(in));
      }
      if (c.min_abs_c)
        res["genus_lower_bound"] = genus_lower_bound(Rational::parse(*c.min_abs_c), c.connected.value_or(false));
      if (res.empty()) throw PreconditionError("topology genus needs chi or min_abs_c");
      b["result"] = res;
    } else if (c.name == "foliation ot-complexity") {
      b["result"] = {{"n", c.n}, {"upper_bound_only", c.upper_bound},
                     {"interpretation", ot_complexity_interpret(c.n, c.upper_bound)},
                     {"criterion", "OvertwistedComplexityTrichotomy"}};
    } else if (c.name.rfind("fdtc ", 0) == 0 || c.name.rfind("foliation ", 0) == 0 || c.name == "classify" ||
               c.name == "surface info") {
      throw PreconditionError("command '" + c.name + "' needs a problem file");
    } else {
      throw PreconditionError("unknown command '" + c.name + "'");
    }
    return r;
  });
}

namespace {

void text_lines(const ojson& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      text_lines(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) text_lines(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string emit_report(const Report& r, const std::string& format) {
  ojson j = r.body;
  j["warnings"] = r.warnings;
  j["inconclusive"] = r.inconclusive;
  if (format == "json") return j.dump(2) + "\n";
  if (format == "text") {
    std::ostringstream out;
    text_lines(j, "", out);
    return out.str();
  }
  throw PreconditionError("unknown format '" + format + "'");
}

}  // namespace fdtc
