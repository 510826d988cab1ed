#include "fdtc/fdtc.hpp"

#include <cstdlib>
#include <numeric>

namespace fdtc {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::KeyLemma: return "KeyLemma";
    case Provenance::ExactTheorem: return "ExactTheorem";
    case Provenance::PeriodicityCorollary: return "PeriodicityCorollary";
    case Provenance::TranslationEstimate: return "TranslationEstimate";
    case Provenance::Degenerate: return "Degenerate";
  }
  return "KeyLemma";
}

RationalInterval KeyLemmaBracket::interval() const {
  if (equality) return RationalInterval::point(Rational(M, N));
  return RationalInterval::closed(Rational(M, N), Rational(M + 1, N));
}

namespace {

int boundary_face_of(const Spine& spine, const std::string& boundary) {
  const int f = spine.face_index(boundary);
  if (f < 0) throw PreconditionError("unknown boundary label '" + boundary + "'");
  if (spine.face(f).puncture) throw PreconditionError("'" + boundary + "' is a puncture, not a boundary component");
  return f;
}

struct Undecided {};

constexpr long kSearchLimit = 1L << 40;

// The orbit point, kept exactly while short and otherwise as an open cone
// (lo, hi) of the boundary line; an empty hi is the top end.
struct OrbitState {
  bool exact = true;
  CornerPoint lo;
  std::optional<CornerPoint> hi;
};

class ConeTracker {
 public:
  ConeTracker(const Spine& spine, const TreeOrder& order, std::size_t cap)
      : spine_(spine), order_(order), cap_(cap), corners_(2 * spine.rank()) {}

  OrbitState start(const CornerPoint& z) const { return settle({true, z, std::nullopt}); }

  OrbitState step(const LiftedAction& f, const OrbitState& s) const {
    OrbitState out;
    out.exact = s.exact;
    out.lo = f.apply(s.lo);
    if (!s.exact && s.hi) out.hi = f.apply(*s.hi);
    return settle(std::move(out));
  }

  // Sign of p - z, or Undecided when p falls inside the cone.
  int compare(const CornerPoint& p, const OrbitState& s) const {
    if (s.exact) return order_.compare(p, s.lo);
    if (order_.compare(p, s.lo) <= 0) return -1;
    if (s.hi && order_.compare(p, *s.hi) >= 0) return 1;
    throw Undecided{};
  }

 private:
  const Spine& spine_;
  const TreeOrder& order_;
  std::size_t cap_;
  int corners_;

  CornerPoint lower_flank(const Word& g) const {
    Word parent(g.begin(), g.begin() + static_cast<long>(cap_) - 1);
    const int k = (spine_.position(g[cap_ - 1]) - 1 + corners_) % corners_;
    return {std::move(parent), k};
  }

  std::optional<CornerPoint> upper_flank(const Word& g) const {
    Word parent(g.begin(), g.begin() + static_cast<long>(cap_) - 1);
    const int k = spine_.position(g[cap_ - 1]);
    if (parent.empty() && k == order_.base_corner()) return std::nullopt;
    return CornerPoint{std::move(parent), k};
  }

  OrbitState settle(OrbitState s) const {
    if (s.exact) {
      if (s.lo.vertex.size() <= cap_) return s;
      OrbitState out;
      out.exact = false;
      out.hi = upper_flank(s.lo.vertex);
      out.lo = lower_flank(s.lo.vertex);
      return out;
    }
    if (s.lo.vertex.size() > cap_) s.lo = lower_flank(s.lo.vertex);
    if (s.hi && s.hi->vertex.size() > cap_) s.hi = upper_flank(s.hi->vertex);
    return s;
  }
};

KeyLemmaBracket bracket_with_cap(const Spine& spine, const TreeOrder& order, const LiftedAction& f,
                                 const Word& boundary_curve, const CornerPoint& probe, long N, std::size_t cap) {
  const ConeTracker tracker(spine, order, cap);
  OrbitState s = tracker.start(probe);
  for (long i = 0; i < N; ++i) s = tracker.step(f, s);

  // sign(T^m(probe) - phi^N(probe)), nondecreasing in m.
  auto sign_at = [&](long m) { return tracker.compare(shear(order, boundary_curve, m, probe), s); };

  KeyLemmaBracket out;
  out.N = N;
  long below, above;  // sign_at(below) <= 0 < sign_at(above)
  int sb = sign_at(0);
  if (sb == 0) {
    out.equality = true;
    return out;
  }
  if (sb < 0) {
    below = 0;
    above = 1;
    for (;;) {
      const int sa = sign_at(above);
      if (sa == 0) {
        out.M = above;
        out.equality = true;
        return out;
      }
      if (sa > 0) break;
      below = above;
      above *= 2;
      if (above > kSearchLimit) throw ComputationError("twist exponent search diverged");
    }
  } else {
    above = 0;
    below = -1;
    for (;;) {
      const int sl = sign_at(below);
      if (sl == 0) {
        out.M = below;
        out.equality = true;
        return out;
      }
      if (sl < 0) break;
      above = below;
      below *= 2;
      if (below < -kSearchLimit) throw ComputationError("twist exponent search diverged");
    }
  }
  while (above - below > 1) {
    const long mid = below + (above - below) / 2;
    const int sm = sign_at(mid);
    if (sm == 0) {
      out.M = mid;
      out.equality = true;
      return out;
    }
    (sm < 0 ? below : above) = mid;
  }
  out.M = below;
  return out;
}

long env_limit(const char* name, long fallback) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    const long x = std::strtol(v, &end, 10);
    if (end != v && x > 0) return x;
  }
  return fallback;
}

bool permutes_punctures(const MappingClassWord& w) {
  const auto p = w.permutation();
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] != static_cast<int>(j)) return true;
  return false;
}

}  // namespace

KeyLemmaBracket key_lemma_bracket(const MappingClassWord& w, const std::string& boundary, const ArcClass& probe,
                                  long N, const KeyLemmaOptions& options) {
  if (N < 1) throw PreconditionError("N must be positive");
  const Spine spine(w.surface());
  const int face = boundary_face_of(spine, boundary);
  if (probe.start_face != face) throw PreconditionError("probe arc must start on " + boundary);
  if (!is_essential(spine, probe)) throw PreconditionError("Key Lemma requires essential arc");

  ActionEngine at_base(w.surface(), face);
  const LiftedAction f = at_base.full_action(w);
  const TreeOrder order(spine, spine.face(face).base_corner);
  const Word curve = boundary_generator(spine, boundary, 1).curve.word;
  const CornerPoint z = arc_endpoint(spine, probe);
  for (std::size_t cap = options.initial_cap;; cap *= 2) {
    try {
      return bracket_with_cap(spine, order, f, curve, z, N, cap);
    } catch (const Undecided&) {
      if (cap * 2 > options.max_cap)
        throw ComputationError("orbit comparison undecided at word length " + std::to_string(cap));
    }
  }
}

RationalInterval key_lemma_interval(const MappingClassWord& w, const std::string& boundary, const ArcClass& probe,
                                    long N) {
  return key_lemma_bracket(w, boundary, probe, N).interval();
}

std::string DenominatorSearch::message() const {
  switch (status) {
    case Status::Unique: return "unique";
    case Status::Empty: return "no admissible rational";
    case Status::Ambiguous: {
      std::string s = "ambiguous:";
      for (const auto& c : candidates) s += " " + c.str();
      return s;
    }
  }
  return "";
}

DenominatorSearch unique_bounded_denominator(const RationalInterval& interval, long D) {
  if (D < 1) throw PreconditionError("denominator bound must be positive");
  DenominatorSearch out;
  out.candidates = bounded_denominator_rationals(interval, D).candidates;
  out.status = out.candidates.empty()       ? DenominatorSearch::Status::Empty
               : out.candidates.size() == 1 ? DenominatorSearch::Status::Unique
                                            : DenominatorSearch::Status::Ambiguous;
  return out;
}

ArcClass default_probe(const Spine& spine, const std::string& boundary, int weight_bound) {
  const int face = boundary_face_of(spine, boundary);
  if (weight_bound < 1) throw PreconditionError("probe weight bound must be positive");
  const auto arcs = enumerate_arcs(spine, face, weight_bound);
  if (arcs.empty())
    throw ComputationError("no essential arc from " + boundary + " within weight " + std::to_string(weight_bound));
  return arcs.front();
}

FDTCResult fdtc_exact(const MappingClassWord& w, const std::string& boundary, const ExactOptions& opt) {
  const Spine spine(w.surface());
  boundary_face_of(spine, boundary);
  if (permutes_punctures(w))
    throw PreconditionError("word permutes punctures; use the braid coefficient instead");
  FDTCResult out;
  if (spine.rank() == 0) {
    out.value = Rational(0);
    out.interval = RationalInterval::point(Rational(0));
    out.provenance = Provenance::Degenerate;
    out.D = 1;
    return out;
  }
  const long D = admissible_values(w.surface().punctures_to_boundary(), NTType::Unknown).max_denominator;
  if (opt.initial_N < 0 || opt.max_N < 0) throw PreconditionError("N must be positive");
  const long max_N = opt.max_N > 0 ? opt.max_N : env_limit("FDTC_MAX_N", 4096);
  out.D = D;
  out.probe = default_probe(spine, boundary, opt.probe_weight);
  for (long N = opt.initial_N > 0 ? opt.initial_N : D * (D - 1) + 1;; N *= 2) {
    const KeyLemmaBracket b = key_lemma_bracket(w, boundary, *out.probe, N);
    out.N = N;
    out.M = b.M;
    out.interval = b.interval();
    if (b.equality) {
      out.value = Rational(b.M, N);
      out.provenance = Provenance::PeriodicityCorollary;
      return out;
    }
    const DenominatorSearch s = unique_bounded_denominator(*out.interval, D);
    if (s.status == DenominatorSearch::Status::Unique) {
      out.value = s.candidates.front();
      out.provenance = Provenance::ExactTheorem;
      return out;
    }
    if (s.status == DenominatorSearch::Status::Empty)
      throw ComputationError("no admissible rational in " + out.interval->str());
    if (N * 2 > max_N) {
      out.provenance = Provenance::KeyLemma;
      return out;
    }
  }
}

FDTCResult braid_fdtc(const MappingClassWord& w, const std::string& boundary, const ExactOptions& opt) {
  const SurfaceSpec& spec = w.surface();
  if (spec.puncture_count < 1) throw PreconditionError("braid coefficient needs a punctured surface");
  boundary_face_of(Spine(spec), boundary);
  const long m = puncture_permutation_order(w);
  const SurfaceSpec converted = spec.punctures_to_boundary();
  FDTCResult r = fdtc_exact(power(w, m).retarget(converted), boundary, opt);
  const Rational scale(1, m);
  if (r.value) r.value = *r.value * scale;
  if (r.interval) {
    r.interval->lo = r.interval->lo * scale;
    r.interval->hi = r.interval->hi * scale;
  }
  return r;
}

std::vector<RationalInterval> translation_estimate(const MappingClassWord& w, const std::string& boundary,
                                                   long N_max) {
  if (N_max < 1) throw PreconditionError("N_max must be positive");
  const Spine spine(w.surface());
  if (spine.rank() == 0) return std::vector<RationalInterval>(static_cast<std::size_t>(N_max), RationalInterval::point(0));
  const ArcClass probe = default_probe(spine, boundary);
  std::vector<RationalInterval> out;
  for (long N = 1; N <= N_max; ++N) out.push_back(key_lemma_interval(w, boundary, probe, N));
  return out;
}

std::string to_string(RightVeeringReport::Verdict v) {
  switch (v) {
    case RightVeeringReport::Verdict::RightVeering: return "right-veering";
    case RightVeeringReport::Verdict::NonRightVeering: return "non-right-veering";
    case RightVeeringReport::Verdict::Witness: return "witness";
    case RightVeeringReport::Verdict::NoWitnessUpToBound: return "no-witness-up-to-bound";
  }
  return "";
}

RightVeeringReport right_veering_test(const MappingClassWord& w, const std::string& boundary, int weight_bound,
                                      NTType asserted) {
  if (weight_bound < 1) throw PreconditionError("weight bound must be positive");
  RightVeeringReport out;
  const FDTCResult c = permutes_punctures(w) ? braid_fdtc(w, boundary) : fdtc_exact(w, boundary);
  out.fdtc = c.value;
  if (c.value && *c.value < Rational(0)) {
    out.verdict = RightVeeringReport::Verdict::NonRightVeering;
    return out;
  }
  if (c.value && *c.value > Rational(0) && asserted == NTType::PseudoAnosov) {
    out.verdict = RightVeeringReport::Verdict::RightVeering;
    return out;
  }
  const Spine spine(w.surface());
  const int face = boundary_face_of(spine, boundary);
  ActionEngine engine(w.surface(), face);
  for (const auto& arc : enumerate_arcs(spine, face, weight_bound)) {
    ++out.arcs_checked;
    const CornerPoint z = engine.apply(w, arc_endpoint(spine, arc));
    const ArcClass image = normalize_arc(spine, {face, spine.face_of_corner(z.corner), z.vertex});
    if (compare_at_base(spine, arc, image, face) == Ordering::LeftOf) {
      out.verdict = RightVeeringReport::Verdict::Witness;
      out.witness = arc;
      out.witness_image = image;
      return out;
    }
  }
  out.verdict = RightVeeringReport::Verdict::NoWitnessUpToBound;
  return out;
}

namespace {
Rational value_of(const MappingClassWord& w, const std::string& boundary) {
  const FDTCResult r = fdtc_exact(w, boundary);
  if (!r.value) throw ComputationError("coefficient not determined: " + r.interval->str());
  return *r.value;
}
}  // namespace

QuasimorphismAudit quasimorphism_audit(const MappingClassWord& w1, const MappingClassWord& w2,
                                       const std::string& boundary) {
  if (!(w1.surface() == w2.surface())) throw PreconditionError("words live on different surfaces");
  QuasimorphismAudit out;
  out.c1 = value_of(w1, boundary);
  out.c2 = value_of(w2, boundary);
  out.c12 = value_of(compose(w1, w2), boundary);
  out.defect = (out.c12 - out.c1 - out.c2).abs();
  out.within_bound = out.defect <= Rational(1);
  out.conjugate = value_of(compose(compose(w2, w1), invert(w2)), boundary);
  out.conjugation_invariant = out.conjugate == out.c1;
  return out;
}

}  // namespace fdtc
