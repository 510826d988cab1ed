#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdtc/rational.hpp"

namespace fdtc {

enum class RegionType { AA, AB, BB, AC, BC, CC };
std::string to_string(RegionType t);
RegionType parse_region_type(const std::string& s);

struct SurfaceTopology {
  int genus = 0;
  int boundary_count = 1;
  bool closed = false;
  long euler_characteristic() const { return 2 - 2L * genus - boundary_count; }
};

struct EllipticPoint {
  std::string id;
  int sign = 1;
  std::string binding;  // binding component label
  bool essential = false;
  bool strongly_essential = false;
  bool a_arcs = false;  // some regular leaf at the point is an a-arc
};

struct HyperbolicPoint {
  std::string id;
  int sign = 1;
  RegionType region = RegionType::BB;
  bool degenerated = false;
  std::vector<std::string> elliptic;  // elliptic endpoints of singular leaves, with multiplicity
};

struct SingularityCounts {
  long e_plus = 0, e_minus = 0, h_plus = 0, h_minus = 0;
  friend bool operator==(const SingularityCounts&, const SingularityCounts&) = default;
};

struct FoliationGraph {
  SurfaceTopology surface;
  std::vector<EllipticPoint> elliptic;
  std::vector<HyperbolicPoint> hyperbolic;
  bool c_circles = false;
  bool c_circles_essential = false;
  std::optional<SingularityCounts> declared_counts;

  SingularityCounts counts() const;
  const EllipticPoint* find_elliptic(const std::string& id) const;
  // Distinct (elliptic, hyperbolic) pairs joined by a singular leaf.
  std::vector<std::pair<std::string, std::string>> incidence() const;
};

struct FoliationDiagnostic {
  std::string code;
  std::string location;
  std::string message;
};

std::vector<FoliationDiagnostic> validate_graph(const FoliationGraph& g);

long euler_characteristic(const SingularityCounts& c);
long self_linking(const SingularityCounts& c);
long self_linking(const FoliationGraph& g);  // throws on closed surfaces

/// Closed interval of bounds on a coefficient; an absent end is infinite.
struct BoundReport {
  std::optional<Rational> lower, upper;
  std::string source;
  std::vector<std::string> assumptions;
  bool contains(const Rational& c) const;
  std::string str() const;
};

enum class BoundMode { Monodromy, Braid };
BoundMode parse_bound_mode(const std::string& s);

BoundReport elliptic_point_bounds(const std::string& v, const FoliationGraph& g, BoundMode mode);
BoundReport multi_point_bounds(const std::vector<std::string>& vs, const FoliationGraph& g, BoundMode mode);
BoundReport aggregate_bounds(const std::vector<std::string>& vs, const FoliationGraph& g, BoundMode mode);

// inf over m >= 1 of ceil(X m / n - delta(n)) / m.
Rational f_infimum(long X, long n);
Rational f_value(long X, long n, long m);

/// Graph with possibly fake vertices; edges may be loops.
struct SignGraph {
  std::vector<std::string> vertices;
  std::vector<bool> fake;
  std::vector<std::pair<int, int>> edges;
  bool is_tree() const;
  bool is_circle() const;
  bool has_fake_vertex() const;
};
SignGraph positivity_graph(const FoliationGraph& g);
SignGraph negativity_graph(const FoliationGraph& g);

struct OTDiscReport {
  bool valid = false;
  std::vector<std::string> violations;
  bool certifies_non_right_veering = false;
};
OTDiscReport transverse_ot_disc_check(const FoliationGraph& g);

struct BCAnnulusWitness {
  std::string hyperbolic_id;
  std::string conclusion;
};
std::optional<BCAnnulusWitness> bc_annulus_witness_check(const FoliationGraph& g);

std::string ot_complexity_interpret(long n_value, bool upper_bound_only = false);

// The transverse overtwisted disc with one negative elliptic point.
FoliationGraph one_negative_elliptic_ot_disc();

}  // namespace fdtc
