#include "fdtc/topology.hpp"

#include <algorithm>
#include <set>

namespace fdtc {

void CoefficientAssignment::check() const {
  if (coefficients.empty()) throw PreconditionError("coefficient assignment is empty");
  if (connected_boundary && coefficients.size() != 1)
    throw PreconditionError("connected boundary needs exactly one coefficient");
  std::set<std::string> labels;
  for (const auto& [label, c] : coefficients)
    if (!labels.insert(label).second) throw PreconditionError("boundary label '" + label + "' given twice");
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Irreducible: return "Irreducible";
    case Conclusion::IrreducibleAndAtoroidal: return "IrreducibleAndAtoroidal";
    case Conclusion::Atoroidal: return "Atoroidal";
    case Conclusion::Toroidal: return "Toroidal";
    case Conclusion::Hyperbolic: return "Hyperbolic";
    case Conclusion::SeifertFibered: return "SeifertFibered";
    case Conclusion::NotAStabilization: return "NotAStabilization";
    case Conclusion::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

bool braid(const CoefficientAssignment& a) { return a.mode == BoundMode::Braid; }

Verdict start(const CoefficientAssignment& a) {
  a.check();
  Verdict v;
  v.subject = braid(a) ? "M - N(L)" : "M";
  return v;
}

std::string tag(const CoefficientAssignment& a, const std::string& base) { return braid(a) ? base + ".Braid" : base; }

bool all_abs_above(const CoefficientAssignment& a, const Rational& t) {
  return std::all_of(a.coefficients.begin(), a.coefficients.end(),
                     [&](const auto& e) { return e.second.abs() > t; });
}

bool all_above(const CoefficientAssignment& a, const Rational& t) {
  return std::all_of(a.coefficients.begin(), a.coefficients.end(), [&](const auto& e) { return e.second > t; });
}

bool all_nonzero(const CoefficientAssignment& a) {
  return std::all_of(a.coefficients.begin(), a.coefficients.end(),
                     [](const auto& e) { return !(e.second == Rational(0)); });
}

bool connected_above(const CoefficientAssignment& a, const Rational& t) {
  return a.connected_boundary && a.coefficients.front().second.abs() > t;
}

bool irreducible_type(NTType t) { return t == NTType::Periodic || t == NTType::PseudoAnosov; }

}  // namespace

BoundReport closed_surface_fdtc_bound(int genus, long n_half, bool connected_boundary) {
  if (genus < 0) throw PreconditionError("genus must be nonnegative");
  if (n_half < 1) throw PreconditionError("the surface must meet the binding (n >= 1)");
  Rational bound;
  BoundReport r;
  if (connected_boundary) {
    const Rational simple = genus == 0 ? Rational(1) : Rational(genus);
    bound = std::min(simple, f_infimum(genus - 1 + n_half, n_half));
    r.source = "connected binding surface bound on |c(phi,dS)|";
  } else {
    bound = genus == 0 ? Rational(3) : Rational(4 + (4L * genus - 4) / n_half);
    r.source = "surface bound on |c(phi,C)| for some boundary component C";
  }
  r.lower = -bound;
  r.upper = bound;
  r.assumptions = {"closed incompressible genus " + std::to_string(genus) + " surface meeting the binding in " +
                   std::to_string(2 * n_half) + " points"};
  return r;
}

Verdict irreducibility_verdict(const CoefficientAssignment& a) {
  Verdict v = start(a);
  if (all_abs_above(a, 3)) {
    v.conclusion = Conclusion::Irreducible;
    v.criterion = tag(a, "IrreducibilityCriterion.AllComponents");
  } else if (connected_above(a, 1)) {
    v.conclusion = Conclusion::Irreducible;
    v.criterion = tag(a, "IrreducibilityCriterion.ConnectedBoundary");
  } else {
    v.failed = {"|c| > 3 on every boundary component", "connected boundary with |c| > 1"};
  }
  return v;
}

Verdict atoroidality_verdict(const CoefficientAssignment& a, NTType nt_type, bool tight) {
  Verdict v = start(a);
  v.hypotheses.push_back("Nielsen-Thurston type " + to_string(nt_type) + " (asserted)");
  if (tight) v.hypotheses.push_back("supported contact structure is tight (asserted)");
  if (!irreducible_type(nt_type)) {
    v.failed.push_back("monodromy of irreducible type");
    return v;
  }
  if (all_abs_above(a, 4)) {
    v.conclusion = Conclusion::IrreducibleAndAtoroidal;
    v.criterion = tag(a, "FirstAtoroidalCriterion.AllComponents");
    return v;
  }
  if (connected_above(a, 1)) {
    v.conclusion = Conclusion::IrreducibleAndAtoroidal;
    v.criterion = tag(a, "FirstAtoroidalCriterion.ConnectedBoundary");
    return v;
  }
  v.failed = {"|c| > 4 on every boundary component", "connected boundary with |c| > 1"};
  if (braid(a)) {
    v.failed.push_back("tight criterion applies to the monodromy only");
  } else if (!tight) {
    v.failed.push_back("tight contact structure");
  } else if (all_above(a, 2)) {
    v.conclusion = Conclusion::Atoroidal;
    v.criterion = "TightAtoroidalCriterion";
    v.failed.clear();
  } else {
    v.failed.push_back("c > 2 on every boundary component");
  }
  return v;
}

Verdict geometry_verdict(const CoefficientAssignment& a, NTType nt_type) {
  Verdict v = start(a);
  v.hypotheses.push_back("Nielsen-Thurston type " + to_string(nt_type) + " (asserted)");
  if (connected_above(a, 1) || all_abs_above(a, 4)) {
    v.criterion = tag(a, "GeometryTheorem");
    switch (nt_type) {
      case NTType::Reducible: v.conclusion = Conclusion::Toroidal; return v;
      case NTType::PseudoAnosov: v.conclusion = Conclusion::Hyperbolic; return v;
      case NTType::Periodic: v.conclusion = Conclusion::SeifertFibered; return v;
      case NTType::Unknown: break;
    }
    v.criterion.clear();
    v.failed.push_back("Nielsen-Thurston type known");
    return v;
  }
  v.failed.push_back("connected boundary with |c| > 1, or |c| > 4 on every boundary component");
  if (nt_type == NTType::Periodic && !braid(a)) {
    if (all_nonzero(a)) {
      v.conclusion = Conclusion::SeifertFibered;
      v.criterion = "PeriodicSeifertProposition";
      v.failed.clear();
      return v;
    }
    v.failed.push_back("c != 0 on every boundary component");
  }
  return v;
}

Verdict stabilization_obstruction(const CoefficientAssignment& a) {
  Verdict v = start(a);
  if (braid(a)) {
    v.failed.push_back("monodromy coefficients required");
    return v;
  }
  if (connected_above(a, Rational(1, 2))) {
    v.conclusion = Conclusion::NotAStabilization;
    v.criterion = "StabilizationObstruction.ConnectedBoundary";
  } else if (all_abs_above(a, 1)) {
    v.conclusion = Conclusion::NotAStabilization;
    v.criterion = "StabilizationObstruction.AllComponents";
  } else {
    v.failed = {"connected boundary with |c| > 1/2", "|c| > 1 on every boundary component"};
  }
  return v;
}

BoundReport braid_genus_bounds(const BraidGenusInputs& in) {
  if (in.braid_index < 1) throw PreconditionError("braid index must be positive");
  if (in.chi_F > 1) throw PreconditionError("a Seifert surface has chi <= 1");
  if (in.chi_F < 0 && in.k_intersections < 1)
    throw PreconditionError("a Seifert surface with chi < 0 must meet the binding (k >= 1)");
  if (in.k_intersections < 0) throw PreconditionError("intersection count must be nonnegative");
  BoundReport r;
  r.assumptions = {"Seifert surface of maximal Euler characteristic " + std::to_string(in.chi_F)};
  std::optional<Rational> bound;
  if (in.chi_F > 0) {
    bound = Rational(3);
    r.source = "maximal Seifert surface bound (chi > 0) for some boundary component";
  } else if (in.chi_F < 0) {
    const long chi = in.chi_F, k = in.k_intersections;
    bound = Rational(std::min((-4 * chi) / k + 4, -chi + k));
    r.source = "maximal Seifert surface bound (chi < 0) for some boundary component";
  }
  if (in.connected_boundary && in.chi_F <= 0) {
    const Rational b(in.braid_index - in.chi_F, in.braid_index);
    if (!bound || b < *bound) {
      bound = b;
      r.source = "maximal Seifert surface bound for connected binding";
    }
  }
  if (!bound) {
    r.source = "no bound applies";
    return r;
  }
  r.lower = -*bound;
  r.upper = *bound;
  return r;
}

long genus_lower_bound(const Rational& min_abs_c, bool connected_boundary) {
  const Rational m = min_abs_c.abs();
  mpz_class g = ((m - Rational(3)) / Rational(2)).ceil();
  if (g < 0) g = 0;
  if (connected_boundary && m >= Rational(1)) {
    const mpz_class half = (m / Rational(2)).ceil();
    g = std::max<mpz_class>(g, std::max<mpz_class>(1, half));
  }
  return g.get_si();
}

}  // namespace fdtc
