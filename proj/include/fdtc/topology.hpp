#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fdtc/foliation.hpp"
#include "fdtc/rational.hpp"
#include "fdtc/surface.hpp"

namespace fdtc {

struct CoefficientAssignment {
  std::vector<std::pair<std::string, Rational>> coefficients;  // boundary label -> c
  BoundMode mode = BoundMode::Monodromy;
  bool connected_boundary = false;
  void check() const;
};

enum class Conclusion {
  Irreducible,
  IrreducibleAndAtoroidal,
  Atoroidal,
  Toroidal,
  Hyperbolic,
  SeifertFibered,
  NotAStabilization,
  Inconclusive
};
std::string to_string(Conclusion c);

struct Verdict {
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string criterion;                // citation tag of the criterion that fired
  std::string subject;                  // "M" or "M - N(L)"
  std::vector<std::string> hypotheses;  // inputs taken on trust
  std::vector<std::string> failed;      // hypotheses that did not hold
};

BoundReport closed_surface_fdtc_bound(int genus, long n_half, bool connected_boundary);

Verdict irreducibility_verdict(const CoefficientAssignment& a);
Verdict atoroidality_verdict(const CoefficientAssignment& a, NTType nt_type, bool tight);
Verdict geometry_verdict(const CoefficientAssignment& a, NTType nt_type);
Verdict stabilization_obstruction(const CoefficientAssignment& a);

struct BraidGenusInputs {
  long chi_F = 1;
  long k_intersections = 0;
  long braid_index = 1;
  bool connected_boundary = false;
};
BoundReport braid_genus_bounds(const BraidGenusInputs& in);
long genus_lower_bound(const Rational& min_abs_c, bool connected_boundary = false);

}  // namespace fdtc
