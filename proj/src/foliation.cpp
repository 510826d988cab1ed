#include "fdtc/foliation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fdtc/surface.hpp"

namespace fdtc {

std::string to_string(RegionType t) {
  switch (t) {
    case RegionType::AA: return "aa";
    case RegionType::AB: return "ab";
    case RegionType::BB: return "bb";
    case RegionType::AC: return "ac";
    case RegionType::BC: return "bc";
    case RegionType::CC: return "cc";
  }
  return "bb";
}

RegionType parse_region_type(const std::string& s) {
  for (RegionType t : {RegionType::AA, RegionType::AB, RegionType::BB, RegionType::AC, RegionType::BC, RegionType::CC})
    if (to_string(t) == s) return t;
  throw PreconditionError("unknown region type '" + s + "'");
}

namespace {

// Elliptic endpoints of each region type: (positive, negative).
std::pair<int, int> sign_pattern(RegionType t) {
  switch (t) {
    case RegionType::AA: return {2, 0};
    case RegionType::AB: return {2, 1};
    case RegionType::BB: return {2, 2};
    case RegionType::AC: return {1, 0};
    case RegionType::BC: return {1, 1};
    case RegionType::CC: return {0, 0};
  }
  return {0, 0};
}

bool is_tile(RegionType t) { return t == RegionType::AA || t == RegionType::AB || t == RegionType::BB; }
bool has_c_circles(RegionType t) { return t == RegionType::AC || t == RegionType::BC || t == RegionType::CC; }
bool has_a_arcs(RegionType t) { return t == RegionType::AA || t == RegionType::AB || t == RegionType::AC; }

}  // namespace

SingularityCounts FoliationGraph::counts() const {
  SingularityCounts c;
  for (const auto& e : elliptic) (e.sign > 0 ? c.e_plus : c.e_minus)++;
  for (const auto& h : hyperbolic) (h.sign > 0 ? c.h_plus : c.h_minus)++;
  return c;
}

const EllipticPoint* FoliationGraph::find_elliptic(const std::string& id) const {
  for (const auto& e : elliptic)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<std::pair<std::string, std::string>> FoliationGraph::incidence() const {
  std::set<std::pair<std::string, std::string>> s;
  for (const auto& h : hyperbolic)
    for (const auto& e : h.elliptic) s.emplace(e, h.id);
  return {s.begin(), s.end()};
}

std::vector<FoliationDiagnostic> validate_graph(const FoliationGraph& g) {
  std::vector<FoliationDiagnostic> out;
  auto report = [&](std::string code, std::string where, std::string msg) {
    out.push_back({std::move(code), std::move(where), std::move(msg)});
  };
  const SurfaceTopology& s = g.surface;
  if (s.genus < 0) report("topology", "surface", "negative genus");
  if (s.closed && s.boundary_count != 0) report("topology", "surface", "closed surface with boundary components");
  if (!s.closed && s.boundary_count < 1) report("topology", "surface", "surface with boundary needs a boundary component");

  std::set<std::string> ids;
  for (const auto& e : g.elliptic) {
    if (!ids.insert(e.id).second) report("duplicate id", e.id, "id used twice");
    if (e.sign != 1 && e.sign != -1) report("sign", e.id, "sign must be +1 or -1");
    if (e.binding.empty()) report("binding", e.id, "elliptic point without binding component");
    if (e.strongly_essential && !e.essential) report("essentiality", e.id, "strongly essential but not essential");
    if (e.a_arcs && e.sign < 0) report("a-arc", e.id, "a-arcs emanate from positive elliptic points only");
    if (e.a_arcs && s.closed) report("a-arc", e.id, "a-arcs on a closed surface");
  }
  for (const auto& h : g.hyperbolic) {
    if (!ids.insert(h.id).second) report("duplicate id", h.id, "id used twice");
    if (h.sign != 1 && h.sign != -1) report("sign", h.id, "sign must be +1 or -1");
    int pos = 0, neg = 0;
    bool known = true;
    for (const auto& id : h.elliptic) {
      const EllipticPoint* e = g.find_elliptic(id);
      if (!e) {
        report("unknown elliptic", h.id, "no elliptic point '" + id + "'");
        known = false;
        continue;
      }
      (e->sign > 0 ? pos : neg)++;
      if ((h.region == RegionType::AA || h.region == RegionType::AC) && !e->a_arcs)
        report("a-arc", h.id, "elliptic point '" + id + "' in an " + to_string(h.region) + " region must carry a-arcs");
    }
    const auto [want_pos, want_neg] = sign_pattern(h.region);
    if (known && (pos != want_pos || neg != want_neg))
      report("region incidence", h.id,
             to_string(h.region) + " region needs " + std::to_string(want_pos) + " positive and " +
                 std::to_string(want_neg) + " negative elliptic endpoints, found " + std::to_string(pos) + " and " +
                 std::to_string(neg));
    if (s.closed && has_a_arcs(h.region)) report("a-arc", h.id, "region with a-arcs on a closed surface");
    if (has_c_circles(h.region) && !g.c_circles) report("c-circle", h.id, "region with c-circles but none declared");
    if (h.degenerated && (h.region == RegionType::AB || h.region == RegionType::BB))
      report("degenerate region", h.id, to_string(h.region) + "-tiles cannot be degenerated");
  }
  if (g.c_circles_essential && !g.c_circles) report("c-circle", "graph", "essential c-circles declared without c-circles");
  if (g.c_circles && std::none_of(g.hyperbolic.begin(), g.hyperbolic.end(),
                                  [](const HyperbolicPoint& h) { return has_c_circles(h.region); }))
    report("c-circle", "graph", "c-circles declared but no ac, bc or cc region");

  const SingularityCounts c = g.counts();
  const long chi = euler_characteristic(c);
  if (chi != s.euler_characteristic())
    report("euler", "graph",
           "singularities give chi = " + std::to_string(chi) + " but the surface has chi = " +
               std::to_string(s.euler_characteristic()));
  if (s.closed && c.e_plus != c.e_minus) report("algebraic intersection nonzero", "graph", "closed surface needs e+ = e-");
  if (g.declared_counts && !(*g.declared_counts == c))
    report("counts", "graph", "declared singularity counts differ from the points listed");
  return out;
}

long euler_characteristic(const SingularityCounts& c) { return (c.e_plus + c.e_minus) - (c.h_plus + c.h_minus); }

long self_linking(const SingularityCounts& c) { return -(c.e_plus - c.e_minus) + (c.h_plus - c.h_minus); }

long self_linking(const FoliationGraph& g) {
  if (g.surface.closed) throw PreconditionError("sl undefined for a closed surface");
  return self_linking(g.counts());
}

// ---------------------------------------------------------------------------

bool BoundReport::contains(const Rational& c) const {
  return (!lower || *lower <= c) && (!upper || c <= *upper);
}

std::string BoundReport::str() const {
  return "[" + (lower ? lower->str() : "-inf") + ", " + (upper ? upper->str() : "inf") + "]";
}

BoundMode parse_bound_mode(const std::string& s) {
  if (s == "monodromy") return BoundMode::Monodromy;
  if (s == "braid") return BoundMode::Braid;
  throw PreconditionError("unknown bound mode '" + s + "'");
}

namespace {

void require_valid(const FoliationGraph& g) {
  const auto d = validate_graph(g);
  if (!d.empty()) throw PreconditionError("invalid foliation graph: " + d.front().location + ": " + d.front().message);
}

const EllipticPoint& checked_point(const std::string& v, const FoliationGraph& g, BoundMode mode,
                                   std::vector<std::string>& assumptions) {
  const EllipticPoint* e = g.find_elliptic(v);
  if (!e) throw PreconditionError("no elliptic point '" + v + "'");
  if (mode == BoundMode::Monodromy) {
    if (!e->strongly_essential) throw PreconditionError("elliptic point '" + v + "' is not strongly essential");
    if (e->a_arcs) throw PreconditionError("elliptic point '" + v + "' has a-arcs around it");
    assumptions.push_back(v + " strongly essential (asserted)");
    assumptions.push_back(v + " has only b-arcs (asserted)");
  } else {
    if (!e->essential) throw PreconditionError("elliptic point '" + v + "' is not essential");
    assumptions.push_back(v + " essential (asserted)");
  }
  return *e;
}

// Hyperbolic points of the given sign joined to any of the points.
long joined_hyperbolic(const FoliationGraph& g, const std::set<std::string>& vs, int sign) {
  long count = 0;
  for (const auto& h : g.hyperbolic) {
    if (h.sign != sign) continue;
    if (std::any_of(h.elliptic.begin(), h.elliptic.end(), [&](const std::string& e) { return vs.count(e) > 0; }))
      ++count;
  }
  return count;
}

std::string coefficient_name(BoundMode mode) { return mode == BoundMode::Monodromy ? "c(phi,C)" : "c(phi_L,C)"; }

}  // namespace

BoundReport elliptic_point_bounds(const std::string& v, const FoliationGraph& g, BoundMode mode) {
  require_valid(g);
  BoundReport r;
  const EllipticPoint& e = checked_point(v, g, mode, r.assumptions);
  const long p = joined_hyperbolic(g, {v}, 1), n = joined_hyperbolic(g, {v}, -1);
  if (e.sign > 0) {
    r.lower = Rational(-n);
    r.upper = Rational(p);
  } else {
    r.lower = Rational(-p);
    r.upper = Rational(n);
  }
  r.source = "single elliptic point estimate for " + coefficient_name(mode) + " on " + e.binding;
  return r;
}

BoundReport multi_point_bounds(const std::vector<std::string>& vs, const FoliationGraph& g, BoundMode mode) {
  if (vs.empty()) throw PreconditionError("empty list of elliptic points");
  BoundReport out;
  std::string binding;
  for (const auto& v : vs) {
    const BoundReport r = elliptic_point_bounds(v, g, mode);
    const std::string& b = g.find_elliptic(v)->binding;
    if (binding.empty()) binding = b;
    if (b != binding) throw PreconditionError("elliptic points lie on different binding components");
    if (!out.lower || *out.lower < *r.lower) out.lower = r.lower;
    if (!out.upper || *r.upper < *out.upper) out.upper = r.upper;
    out.assumptions.insert(out.assumptions.end(), r.assumptions.begin(), r.assumptions.end());
  }
  if (*out.upper < *out.lower) throw ComputationError("inconsistent foliation data");
  out.source = "max of lower and min of upper elliptic point bounds on " + binding;
  return out;
}

Rational f_value(long X, long n, long m) {
  if (n < 1 || m < 1) throw PreconditionError("f needs n >= 1 and m >= 1");
  const Rational delta = n % 2 == 1 ? Rational((n - 1) * (n - 1), 4 * n * n) : Rational(n - 2, 4 * n);
  const Rational x = Rational(X * m, n) - delta;
  return Rational(x.ceil(), mpz_class(m));
}

Rational f_infimum(long X, long n) {
  // f(m + q) is a mediant of f(m) and f(q) = X/n when q = n/gcd(X, n), so one period suffices.
  const long q = n / std::gcd(X, n);
  Rational best = f_value(X, n, 1);
  for (long m = 2; m <= q; ++m) best = std::min(best, f_value(X, n, m));
  return best;
}

BoundReport aggregate_bounds(const std::vector<std::string>& vs, const FoliationGraph& g, BoundMode mode) {
  if (vs.empty()) throw PreconditionError("empty list of elliptic points");
  require_valid(g);
  BoundReport r;
  const std::set<std::string> set(vs.begin(), vs.end());
  if (set.size() != vs.size()) throw PreconditionError("elliptic point listed twice");
  int sign = 0;
  std::string binding;
  for (const auto& v : vs) {
    const EllipticPoint& e = checked_point(v, g, mode, r.assumptions);
    if (sign == 0) {
      sign = e.sign;
      binding = e.binding;
    }
    if (e.sign != sign) throw PreconditionError("elliptic points have mixed signs");
    if (e.binding != binding) throw PreconditionError("elliptic points lie on different binding components");
  }
  const long n = static_cast<long>(vs.size());
  const long N = joined_hyperbolic(g, set, -1), P = joined_hyperbolic(g, set, 1);
  const Rational inf_minus = f_infimum(N, n), inf_plus = f_infimum(P, n);
  if (sign < 0) {
    r.lower = -inf_plus;
    r.upper = inf_minus;
  } else {
    r.lower = -inf_minus;
    r.upper = inf_plus;
  }
  r.source = "aggregate estimate over " + std::to_string(n) + " elliptic points for " + coefficient_name(mode) +
             " on " + binding + " (N = " + std::to_string(N) + ", P = " + std::to_string(P) + ")";
  return r;
}

// ---------------------------------------------------------------------------

bool SignGraph::has_fake_vertex() const { return std::find(fake.begin(), fake.end(), true) != fake.end(); }

namespace {

bool connected(const SignGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& [a, b] : g.edges) {
    const std::size_t ra = find(static_cast<std::size_t>(a)), rb = find(static_cast<std::size_t>(b));
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

SignGraph sign_graph(const FoliationGraph& g, int sign) {
  SignGraph out;
  std::map<std::string, int> index;
  auto vertex = [&](const std::string& id) {
    auto it = index.find(id);
    if (it != index.end()) return it->second;
    const int k = static_cast<int>(out.vertices.size());
    out.vertices.push_back(id);
    out.fake.push_back(false);
    index.emplace(id, k);
    return k;
  };
  auto fake_vertex = [&](const std::string& at) {
    out.vertices.push_back("fake@" + at);
    out.fake.push_back(true);
    return static_cast<int>(out.vertices.size()) - 1;
  };
  for (const auto& h : g.hyperbolic) {
    if (!is_tile(h.region)) continue;
    for (const auto& id : h.elliptic) {
      const EllipticPoint* e = g.find_elliptic(id);
      if (!e || e->sign != sign) continue;
      vertex(id);
    }
  }
  for (const auto& h : g.hyperbolic) {
    if (!is_tile(h.region) || h.sign != sign) continue;
    std::vector<int> ends;
    for (const auto& id : h.elliptic) {
      const EllipticPoint* e = g.find_elliptic(id);
      if (e && e->sign == sign && ends.size() < 2) ends.push_back(vertex(id));
    }
    while (ends.size() < 2) ends.push_back(fake_vertex(h.id));
    out.edges.emplace_back(ends[0], ends[1]);
  }
  return out;
}

}  // namespace

bool SignGraph::is_tree() const { return connected(*this) && edges.size() + 1 == vertices.size(); }

bool SignGraph::is_circle() const {
  if (!connected(*this)) return false;
  std::vector<int> degree(vertices.size(), 0);
  for (const auto& [a, b] : edges) {
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
  }
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
}

SignGraph positivity_graph(const FoliationGraph& g) { return sign_graph(g, 1); }
SignGraph negativity_graph(const FoliationGraph& g) { return sign_graph(g, -1); }

OTDiscReport transverse_ot_disc_check(const FoliationGraph& g) {
  OTDiscReport r;
  const SurfaceTopology& s = g.surface;
  if (s.closed || s.genus != 0 || s.boundary_count != 1) r.violations.push_back("surface is not a disc");
  for (const auto& d : validate_graph(g)) r.violations.push_back("invalid graph: " + d.location + ": " + d.message);
  const SignGraph neg = negativity_graph(g), pos = positivity_graph(g);
  if (!neg.is_tree()) r.violations.push_back("condition 1: G-- is not a tree");
  if (neg.has_fake_vertex()) r.violations.push_back("condition 1: G-- has fake vertices");
  const bool c_regions = std::any_of(g.hyperbolic.begin(), g.hyperbolic.end(),
                                     [](const HyperbolicPoint& h) { return has_c_circles(h.region); });
  if (g.c_circles || c_regions) r.violations.push_back("condition 2: foliation contains c-circles");
  if (!pos.is_circle()) r.violations.push_back("condition 3: G++ is not a circle");
  r.valid = r.violations.empty();
  r.certifies_non_right_veering = r.valid && g.counts().e_minus == 1;
  return r;
}

std::optional<BCAnnulusWitness> bc_annulus_witness_check(const FoliationGraph& g) {
  if (!g.c_circles_essential) return std::nullopt;
  for (const auto& h : g.hyperbolic)
    if (h.region == RegionType::BC && h.degenerated)
      return BCAnnulusWitness{h.id, "non-right-veering: degenerated bc-annulus with essential c-circles"};
  return std::nullopt;
}

std::string ot_complexity_interpret(long n_value, bool upper_bound_only) {
  if (n_value < 0) throw PreconditionError("overtwisted complexity is nonnegative");
  static const char* cases[] = {"tight, right-veering", "overtwisted, not right-veering",
                                "overtwisted, right-veering"};
  if (!upper_bound_only) return cases[std::min<long>(n_value, 2)];
  std::string out;
  for (long k = 0; k <= std::min<long>(n_value, 2); ++k) out += (k ? " or " : "") + std::string(cases[k]);
  return out;
}

FoliationGraph one_negative_elliptic_ot_disc() {
  FoliationGraph g;
  g.surface = {0, 1, false};
  g.elliptic.push_back({"v", -1, "C1", false, false, false});
  for (int i = 1; i <= 3; ++i) g.elliptic.push_back({"w" + std::to_string(i), 1, "C1", false, false, true});
  for (int i = 1; i <= 3; ++i)
    g.hyperbolic.push_back(
        {"h" + std::to_string(i), 1, RegionType::AB, false, {"w" + std::to_string(i), "w" + std::to_string(i % 3 + 1), "v"}});
  g.declared_counts = SingularityCounts{3, 1, 3, 0};
  return g;
}

}  // namespace fdtc
