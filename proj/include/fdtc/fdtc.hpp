#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdtc/mcg.hpp"
#include "fdtc/rational.hpp"

namespace fdtc {

enum class Provenance { KeyLemma, ExactTheorem, PeriodicityCorollary, TranslationEstimate, Degenerate };
std::string to_string(Provenance p);

struct FDTCResult {
  std::optional<Rational> value;
  std::optional<RationalInterval> interval;
  Provenance provenance = Provenance::ExactTheorem;
  std::optional<ArcClass> probe;
  long N = 0;
  long M = 0;
  long D = 0;
};

/// Bracket T_C^M(g) <= phi^N(g) < T_C^(M+1)(g) in the order at the base of C.
struct KeyLemmaBracket {
  long M = 0;
  bool equality = false;  // phi^N(g) = T_C^M(g)
  RationalInterval interval() const;
  long N = 1;
};

struct KeyLemmaOptions {
  std::size_t initial_cap = 1024;  // word length kept exactly before switching to cones
  std::size_t max_cap = std::size_t{1} << 17;
};

KeyLemmaBracket key_lemma_bracket(const MappingClassWord& w, const std::string& boundary, const ArcClass& probe,
                                  long N, const KeyLemmaOptions& options = {});
RationalInterval key_lemma_interval(const MappingClassWord& w, const std::string& boundary, const ArcClass& probe,
                                    long N);

struct DenominatorSearch {
  enum class Status { Unique, Ambiguous, Empty };
  Status status = Status::Empty;
  std::vector<Rational> candidates;
  std::string message() const;
};
DenominatorSearch unique_bounded_denominator(const RationalInterval& interval, long D);

// Default probe: first essential arc from the base point of the boundary face.
ArcClass default_probe(const Spine& spine, const std::string& boundary, int weight_bound = 4);

struct ExactOptions {
  long initial_N = 0;     // 0: D(D-1)+1
  long max_N = 0;         // 0: FDTC_MAX_N, default 4096
  int probe_weight = 4;   // weight bound when searching for the probe arc
};

FDTCResult fdtc_exact(const MappingClassWord& w, const std::string& boundary, const ExactOptions& opt = {});
FDTCResult braid_fdtc(const MappingClassWord& w, const std::string& boundary, const ExactOptions& opt = {});

std::vector<RationalInterval> translation_estimate(const MappingClassWord& w, const std::string& boundary,
                                                   long N_max);

struct RightVeeringReport {
  enum class Verdict { RightVeering, NonRightVeering, Witness, NoWitnessUpToBound };
  Verdict verdict = Verdict::NoWitnessUpToBound;
  std::optional<Rational> fdtc;
  std::optional<ArcClass> witness;
  std::optional<ArcClass> witness_image;
  long arcs_checked = 0;
};
std::string to_string(RightVeeringReport::Verdict v);
RightVeeringReport right_veering_test(const MappingClassWord& w, const std::string& boundary, int weight_bound,
                                      NTType asserted = NTType::Unknown);

struct QuasimorphismAudit {
  Rational c1, c2, c12;
  Rational defect;
  bool within_bound = false;
  Rational conjugate;  // c(w2 w1 w2^-1)
  bool conjugation_invariant = false;
};
QuasimorphismAudit quasimorphism_audit(const MappingClassWord& w1, const MappingClassWord& w2,
                                       const std::string& boundary);

}  // namespace fdtc
