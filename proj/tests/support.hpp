#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "fdtc/fdtc.hpp"
#include "fdtc/foliation.hpp"

namespace fdtc::testing {

inline SurfaceSpec one_holed_torus() {
  SurfaceSpec s;
  s.genus = 1;
  return s;
}

inline SurfaceSpec torus_two_holes() {
  SurfaceSpec s;
  s.genus = 1;
  s.boundary_labels = {"C1", "C2"};
  return s;
}

inline SurfaceSpec punctured_disc(int n) {
  SurfaceSpec s;
  s.puncture_count = n;
  return s;
}

inline unsigned seed_from_env(unsigned fallback) {
  const char* s = std::getenv("FDTC_TEST_SEED");
  return s ? static_cast<unsigned>(std::strtoul(s, nullptr, 10)) : fallback;
}

// Product of T_a^{+-1}, T_b^{+-1} with `length` factors, adjacent equal twists merged.
inline MappingClassWord random_torus_word(std::mt19937& rng, int length) {
  const SurfaceSpec s = one_holed_torus();
  const Spine spine(s);
  MappingClassWord w(s);
  for (int i = 0; i < length; ++i) {
    const bool a = rng() % 2 == 0;
    const long p = rng() % 2 == 0 ? 1 : -1;
    w.push_back(twist_generator(spine, a ? "a" : "b", spine.parse_word(a ? "a1" : "b1"), p));
  }
  return w;
}

inline MappingClassWord boundary_word(const SurfaceSpec& s, const std::string& label, long k) {
  const Spine spine(s);
  MappingClassWord w(s);
  if (k != 0) w.push_back(boundary_generator(spine, label, k));
  return w;
}

// Homology class (a-exponent, b-exponent) of a word on the one-holed torus.
inline std::array<long, 2> torus_homology(const Word& w) {
  std::array<long, 2> h{0, 0};
  for (Letter l : w) h[l / 2] += (l % 2 == 0) ? 1 : -1;
  return h;
}

// Right-handed twists act on H_1 of the torus by T_x(y) = y + (x.y) x, where
// `ab` is the algebraic intersection a.b (so b.a = -ab).
inline std::array<long, 2> torus_twist(std::array<long, 2> v, bool about_a, long power, long ab) {
  for (long i = 0; i < std::labs(power); ++i) {
    const long s = power > 0 ? 1 : -1;
    if (about_a) v[0] += s * ab * v[1];
    else v[1] -= s * ab * v[0];
  }
  return v;
}

// Unknot disc: two positive elliptic points joined by one positive aa-tile.
inline FoliationGraph unknot_disc() {
  FoliationGraph g;
  g.surface = {0, 1, false};
  g.elliptic = {{"v1", 1, "C1", true, false, true}, {"v2", 1, "C1", true, false, true}};
  g.hyperbolic = {{"h1", 1, RegionType::AA, false, {"v1", "v2"}}};
  g.declared_counts = SingularityCounts{2, 0, 1, 0};
  return g;
}

// Genus one surface with one boundary component, two positive strongly essential points.
inline FoliationGraph two_point_graph() {
  FoliationGraph g;
  g.surface = {1, 1, false};
  g.elliptic = {{"v1", 1, "C1", true, true, false},
                {"v2", 1, "C1", true, true, false},
                {"u1", -1, "C1", true, false, false},
                {"u2", -1, "C1", true, false, false}};
  g.hyperbolic = {{"h1", 1, RegionType::BB, false, {"v1", "v2", "u1", "u2"}},
                  {"h2", 1, RegionType::BB, false, {"v1", "v2", "u1", "u2"}},
                  {"h3", 1, RegionType::BB, false, {"v1", "v1", "u1", "u2"}},
                  {"h4", -1, RegionType::BB, false, {"v1", "v2", "u1", "u2"}},
                  {"h5", -1, RegionType::BB, false, {"v2", "v2", "u1", "u2"}}};
  g.declared_counts = SingularityCounts{2, 2, 3, 2};
  return g;
}

// Ten graphs that pass validation, spread over region types and topologies.
inline std::vector<FoliationGraph> valid_graphs() {
  std::vector<FoliationGraph> out{unknot_disc(), two_point_graph(), one_negative_elliptic_ot_disc()};
  {
    // Sphere: one positive and one negative point, no hyperbolic points.
    FoliationGraph g;
    g.surface = {0, 0, true};
    g.elliptic = {{"p", 1, "C1", true, false, false}, {"n", -1, "C1", true, false, false}};
    g.declared_counts = SingularityCounts{1, 1, 0, 0};
    out.push_back(g);
  }
  {
    // Torus: a bb-tile pair with e = h.
    FoliationGraph g;
    g.surface = {1, 0, true};
    g.elliptic = {{"p", 1, "C1", true, true, false}, {"n", -1, "C1", true, true, false}};
    g.hyperbolic = {{"h1", 1, RegionType::BB, false, {"p", "p", "n", "n"}},
                    {"h2", -1, RegionType::BB, false, {"p", "p", "n", "n"}}};
    g.declared_counts = SingularityCounts{1, 1, 1, 1};
    out.push_back(g);
  }
  {
    // Disc with an ab-tile.
    FoliationGraph g;
    g.surface = {0, 1, false};
    g.elliptic = {{"w1", 1, "C1", true, false, true}, {"w2", 1, "C1", true, false, true},
                  {"v", -1, "C1", true, false, false}};
    g.hyperbolic = {{"h", -1, RegionType::AB, false, {"w1", "w2", "v"}}, {"k", 1, RegionType::AA, false, {"w1", "w2"}}};
    g.declared_counts = SingularityCounts{2, 1, 1, 1};
    out.push_back(g);
  }
  {
    // Annulus: one bc-annulus, degenerated, with essential c-circles.
    FoliationGraph g;
    g.surface = {0, 2, false};
    g.elliptic = {{"p", 1, "C1", true, false, false}, {"n", -1, "C1", true, false, false}};
    g.hyperbolic = {{"h1", 1, RegionType::BC, true, {"p", "n"}}, {"h2", -1, RegionType::BC, false, {"p", "n"}}};
    g.c_circles = true;
    g.c_circles_essential = true;
    g.declared_counts = SingularityCounts{1, 1, 1, 1};
    out.push_back(g);
  }
  {
    // Pair of pants from one cc-region plus an ac-annulus.
    FoliationGraph g;
    g.surface = {0, 3, false};
    g.elliptic = {{"w", 1, "C1", true, false, true}};
    g.hyperbolic = {{"h1", 1, RegionType::CC, false, {}},
                    {"h2", -1, RegionType::AC, false, {"w"}}};
    g.c_circles = true;
    g.declared_counts = SingularityCounts{1, 0, 1, 1};
    out.push_back(g);
  }
  {
    // Genus two closed surface.
    FoliationGraph g;
    g.surface = {2, 0, true};
    g.elliptic = {{"p", 1, "C1", true, true, false}, {"n", -1, "C1", true, true, false}};
    for (int i = 0; i < 4; ++i)
      g.hyperbolic.push_back({"h" + std::to_string(i), i % 2 ? -1 : 1, RegionType::BB, false, {"p", "p", "n", "n"}});
    g.declared_counts = SingularityCounts{1, 1, 2, 2};
    out.push_back(g);
  }
  {
    // Disc with two negative points on a second binding component.
    FoliationGraph g;
    g.surface = {0, 1, false};
    g.elliptic = {{"w1", 1, "C1", true, false, true}, {"w2", 1, "C1", true, false, true},
                  {"v1", -1, "C2", true, false, false}, {"v2", -1, "C2", true, false, false},
                  {"w3", 1, "C1", true, false, true}};
    g.hyperbolic = {{"h1", 1, RegionType::AB, false, {"w1", "w2", "v1"}},
                    {"h2", 1, RegionType::AB, false, {"w2", "w3", "v2"}},
                    {"h3", -1, RegionType::BB, false, {"w1", "w3", "v1", "v2"}},
                    {"h4", 1, RegionType::AA, false, {"w1", "w3"}}};
    g.declared_counts = SingularityCounts{3, 2, 3, 1};
    out.push_back(g);
  }
  return out;
}

struct Corruption {
  std::string what;
  FoliationGraph graph;
};

// Single-field edits that break an invariant every listed graph carries.
inline std::vector<Corruption> corruptions(const FoliationGraph& g) {
  std::vector<Corruption> out;
  auto add = [&](std::string what, auto&& edit) {
    FoliationGraph c = g;
    edit(c);
    out.push_back({std::move(what), std::move(c)});
  };
  const RegionType regions[] = {RegionType::AA, RegionType::AB, RegionType::BB,
                                RegionType::AC, RegionType::BC, RegionType::CC};
  for (std::size_t i = 0; i < g.elliptic.size(); ++i) {
    const auto& e = g.elliptic[i];
    add("flip sign of " + e.id, [&](FoliationGraph& c) { c.elliptic[i].sign = -e.sign; });
    add("clear binding of " + e.id, [&](FoliationGraph& c) { c.elliptic[i].binding.clear(); });
    if (!e.essential) add("strongly essential " + e.id, [&](FoliationGraph& c) { c.elliptic[i].strongly_essential = true; });
    if (e.strongly_essential) add("inessential " + e.id, [&](FoliationGraph& c) { c.elliptic[i].essential = false; });
    if (e.sign < 0) add("a-arcs at " + e.id, [&](FoliationGraph& c) { c.elliptic[i].a_arcs = true; });
    if (g.surface.closed) add("a-arcs at " + e.id, [&](FoliationGraph& c) { c.elliptic[i].a_arcs = true; });
    for (const auto& h : g.hyperbolic)
      if ((h.region == RegionType::AA || h.region == RegionType::AC) &&
          std::find(h.elliptic.begin(), h.elliptic.end(), e.id) != h.elliptic.end()) {
        add("drop a-arcs at " + e.id, [&](FoliationGraph& c) { c.elliptic[i].a_arcs = false; });
        break;
      }
    if (i > 0) add("duplicate id " + e.id, [&](FoliationGraph& c) { c.elliptic[i].id = g.elliptic[0].id; });
  }
  for (std::size_t i = 0; i < g.hyperbolic.size(); ++i) {
    const auto& h = g.hyperbolic[i];
    add("flip sign of " + h.id, [&](FoliationGraph& c) { c.hyperbolic[i].sign = -h.sign; });
    for (RegionType t : regions)
      if (t != h.region)
        add("region of " + h.id + " to " + to_string(t), [&](FoliationGraph& c) { c.hyperbolic[i].region = t; });
    if (h.region == RegionType::AB || h.region == RegionType::BB)
      add("degenerate " + h.id, [&](FoliationGraph& c) { c.hyperbolic[i].degenerated = true; });
    add("duplicate id " + h.id, [&](FoliationGraph& c) { c.hyperbolic[i].id = g.elliptic.empty() ? "x" : g.elliptic[0].id; });
    for (std::size_t k = 0; k < h.elliptic.size(); ++k) {
      add("unknown endpoint of " + h.id, [&](FoliationGraph& c) { c.hyperbolic[i].elliptic[k] = "missing"; });
      const EllipticPoint* e = g.find_elliptic(h.elliptic[k]);
      for (const auto& other : g.elliptic)
        if (e && other.sign != e->sign) {
          add("endpoint of " + h.id + " to " + other.id, [&](FoliationGraph& c) { c.hyperbolic[i].elliptic[k] = other.id; });
          break;
        }
    }
    add("extra endpoint on " + h.id, [&](FoliationGraph& c) {
      if (!g.elliptic.empty()) c.hyperbolic[i].elliptic.push_back(g.elliptic[0].id);
      else c.hyperbolic[i].elliptic.push_back("missing");
    });
  }
  add("genus + 1", [](FoliationGraph& c) { ++c.surface.genus; });
  add("genus - 1", [](FoliationGraph& c) { --c.surface.genus; });
  add("boundary + 1", [](FoliationGraph& c) { ++c.surface.boundary_count; });
  add("boundary - 1", [](FoliationGraph& c) { --c.surface.boundary_count; });
  add("closed flag", [](FoliationGraph& c) { c.surface.closed = !c.surface.closed; });
  add("c-circle flag", [](FoliationGraph& c) { c.c_circles = !c.c_circles; });
  if (!g.c_circles) add("essential c-circle flag", [](FoliationGraph& c) { c.c_circles_essential = true; });
  for (int f = 0; f < 4; ++f)
    for (int d : {-1, 1})
      add("declared count " + std::to_string(f) + (d > 0 ? " + 1" : " - 1"), [&](FoliationGraph& c) {
        SingularityCounts k = c.declared_counts.value_or(c.counts());
        long* fields[] = {&k.e_plus, &k.e_minus, &k.h_plus, &k.h_minus};
        *fields[f] += d;
        c.declared_counts = k;
      });
  return out;
}

// The three single-condition mutations of the one-negative-elliptic disc.
inline FoliationGraph ot_mutation_tree() {
  FoliationGraph g = one_negative_elliptic_ot_disc();
  g.elliptic.push_back({"u", -1, "C1", false, false, false});
  g.hyperbolic.push_back({"h4", -1, RegionType::BB, false, {"w1", "w2", "v", "v"}});
  g.declared_counts = SingularityCounts{3, 2, 3, 1};
  return g;
}

inline FoliationGraph ot_mutation_c_circles() {
  FoliationGraph g = one_negative_elliptic_ot_disc();
  g.elliptic.push_back({"w4", 1, "C1", false, false, true});
  g.hyperbolic.push_back({"h4", 1, RegionType::CC, false, {}});
  g.c_circles = true;
  g.declared_counts = SingularityCounts{4, 1, 4, 0};
  return g;
}

inline FoliationGraph ot_mutation_circle() {
  FoliationGraph g = one_negative_elliptic_ot_disc();
  g.hyperbolic[2].elliptic = {"w3", "w3", "v"};
  return g;
}

}  // namespace fdtc::testing
