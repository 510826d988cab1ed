#include <algorithm>
#include <functional>
#include <numeric>

#include "fdtc/surface.hpp"

namespace fdtc {

std::string to_string(VertexRole r) {
  switch (r) {
    case VertexRole::BoundaryBase: return "base";
    case VertexRole::BoundaryAuxiliary: return "auxiliary";
    case VertexRole::Puncture: return "puncture";
    case VertexRole::Interior: return "interior";
  }
  return "interior";
}

int Triangulation::slot_start(int t, int s) const {
  const TriSlot& sl = triangles[static_cast<std::size_t>(t)].slot[s];
  const TriEdge& e = edges[static_cast<std::size_t>(sl.edge)];
  return sl.reversed ? e.v1 : e.v0;
}

namespace {

Triangulation disc_triangulation(const SurfaceSpec& spec) {
  Triangulation t;
  t.surface = spec;
  const std::string& label = spec.boundary_labels[0];
  t.vertices = {{VertexRole::BoundaryBase, label}, {VertexRole::BoundaryAuxiliary, label},
                {VertexRole::BoundaryAuxiliary, label}};
  t.edges = {{0, 1, true, {}}, {1, 2, true, {}}, {2, 0, true, {}}};
  t.triangles.push_back(Triangle{{{0, false}, {1, false}, {2, false}}});
  t.base_point_of[label] = 0;
  return t;
}

}  // namespace

Triangulation standard_triangulation(const SurfaceSpec& spec) {
  spec.check();
  if (spec.genus == 0 && spec.boundary_count() == 1 && spec.puncture_count == 0) return disc_triangulation(spec);

  const Spine spine(spec);
  const int corners = spine.half_edge_count();
  Triangulation t;
  t.surface = spec;

  // One vertex per corner (the start of its boundary segment).
  for (int k = 0; k < corners; ++k) {
    const Face& f = spine.face(spine.face_of_corner(k));
    VertexRole role = f.puncture ? VertexRole::Interior
                                 : (f.base_corner == k ? VertexRole::BoundaryBase : VertexRole::BoundaryAuxiliary);
    t.vertices.push_back({role, f.label});
  }
  auto corner_vertex = [](int k) { return k; };

  struct Side {
    int edge;
    bool reversed;
  };
  std::vector<int> poly;    // vertex ids around the cut polygon
  std::vector<Side> sides;  // side s runs poly[s] -> poly[s+1]

  // A-edges, one per petal, oriented along the side of its positive half-edge.
  for (int i = 0; i < spine.rank(); ++i) {
    const int k = spine.position(2 * i);
    const int v0 = corner_vertex(spine.position(inverse_letter(spine.order(k))));
    t.edges.push_back({v0, corner_vertex(k), false, 2 * i});
  }

  struct Cone {
    int corner, mid, apex, half1, half2;
  };
  std::vector<Cone> cones;
  for (int k = 0; k < corners; ++k) {
    const Letter h = spine.order(k);
    poly.push_back(corner_vertex(spine.position(inverse_letter(h))));
    sides.push_back({h / 2, (h % 2) != 0});
    poly.push_back(corner_vertex(k));
    const Face& f = spine.face(spine.face_of_corner(k));
    if (!f.puncture) {
      t.edges.push_back({corner_vertex(k), corner_vertex(spine.next_corner(k)), true, {}});
      sides.push_back({static_cast<int>(t.edges.size()) - 1, false});
      continue;
    }
    Cone c{k, static_cast<int>(t.vertices.size()), static_cast<int>(t.vertices.size()) + 1, 0, 0};
    t.vertices.push_back({VertexRole::Interior, f.label});
    t.vertices.push_back({VertexRole::Puncture, f.label});
    t.edges.push_back({corner_vertex(k), c.mid, false, {}});
    c.half1 = static_cast<int>(t.edges.size()) - 1;
    sides.push_back({c.half1, false});
    poly.push_back(c.mid);
    t.edges.push_back({c.mid, corner_vertex(k), false, {}});
    c.half2 = static_cast<int>(t.edges.size()) - 1;
    sides.push_back({c.half2, false});
    cones.push_back(c);
  }

  // Fan from poly[0].
  const int m = static_cast<int>(poly.size());
  std::vector<int> diag(static_cast<std::size_t>(m), -1);
  for (int j = 2; j <= m - 2; ++j) {
    t.edges.push_back({poly[0], poly[static_cast<std::size_t>(j)], false, {}});
    diag[static_cast<std::size_t>(j)] = static_cast<int>(t.edges.size()) - 1;
  }
  for (int j = 1; j <= m - 2; ++j) {
    Triangle tri;
    const auto& s0 = sides[0];
    tri.slot[0] = j == 1 ? TriSlot{s0.edge, s0.reversed} : TriSlot{diag[static_cast<std::size_t>(j)], false};
    const auto& sj = sides[static_cast<std::size_t>(j)];
    tri.slot[1] = TriSlot{sj.edge, sj.reversed};
    const auto& sl = sides[static_cast<std::size_t>(m - 1)];
    tri.slot[2] = j + 1 == m - 1 ? TriSlot{sl.edge, sl.reversed} : TriSlot{diag[static_cast<std::size_t>(j + 1)], true};
    t.triangles.push_back(tri);
  }

  // Cone each puncture boundary to its apex.
  for (const Cone& c : cones) {
    const int cv = corner_vertex(c.corner);
    t.edges.push_back({c.apex, cv, false, spine.corner_exit(c.corner)});
    const int spoke_c = static_cast<int>(t.edges.size()) - 1;
    t.edges.push_back({c.apex, c.mid, false, {}});
    const int spoke_m = static_cast<int>(t.edges.size()) - 1;
    t.triangles.push_back(Triangle{{{c.half1, true}, {spoke_c, true}, {spoke_m, false}}});
    t.triangles.push_back(Triangle{{{c.half2, true}, {spoke_m, true}, {spoke_c, false}}});
  }

  for (int f = 0; f < spec.boundary_count(); ++f) {
    const Face& face = spine.face(f);
    t.base_point_of[face.label] = corner_vertex(face.base_corner);
  }
  return t;
}

std::vector<Diagnostic> validate_triangulation(const Triangulation& t) {
  std::vector<Diagnostic> out;
  auto report = [&](std::string code, std::string where, std::string msg) {
    out.push_back({std::move(code), std::move(where), std::move(msg)});
  };
  const int V = static_cast<int>(t.vertices.size()), E = static_cast<int>(t.edges.size()),
            F = static_cast<int>(t.triangles.size());
  for (int e = 0; e < E; ++e) {
    const auto& ed = t.edges[static_cast<std::size_t>(e)];
    if (ed.v0 < 0 || ed.v0 >= V || ed.v1 < 0 || ed.v1 >= V)
      report("bad vertex", "edge " + std::to_string(e), "edge endpoint out of range");
  }
  if (!out.empty()) return out;

  std::vector<int> forward(static_cast<std::size_t>(E), 0), backward(static_cast<std::size_t>(E), 0);
  for (int i = 0; i < F; ++i) {
    const auto& tri = t.triangles[static_cast<std::size_t>(i)];
    const std::string where = "triangle " + std::to_string(i);
    bool in_range = true;
    for (const auto& s : tri.slot) in_range = in_range && s.edge >= 0 && s.edge < E;
    if (!in_range) {
      report("bad edge", where, "slot refers to a missing edge");
      continue;
    }
    if (tri.slot[0].edge == tri.slot[1].edge || tri.slot[1].edge == tri.slot[2].edge ||
        tri.slot[0].edge == tri.slot[2].edge)
      report("repeated edge", where, "triangle slots are not three distinct edges");
    for (int s = 0; s < 3; ++s) {
      const auto& sl = tri.slot[s];
      const auto& ed = t.edges[static_cast<std::size_t>(sl.edge)];
      const int end = sl.reversed ? ed.v0 : ed.v1;
      if (end != t.slot_start(i, (s + 1) % 3))
        report("broken triangle", where, "slot " + std::to_string(s) + " does not close up");
      (sl.reversed ? backward : forward)[static_cast<std::size_t>(sl.edge)]++;
    }
  }

  std::vector<int> out_next(static_cast<std::size_t>(V), -1), in_count(static_cast<std::size_t>(V), 0);
  std::vector<bool> on_boundary(static_cast<std::size_t>(V), false);
  for (int e = 0; e < E; ++e) {
    const auto& ed = t.edges[static_cast<std::size_t>(e)];
    const int uses = forward[static_cast<std::size_t>(e)] + backward[static_cast<std::size_t>(e)];
    const std::string where = "edge " + std::to_string(e);
    if (uses > 2) report("non-manifold edge", where, "edge glued to " + std::to_string(uses) + " triangles");
    else if (ed.boundary && uses != 1) report("boundary edge", where, "boundary edge must lie on one triangle");
    else if (!ed.boundary && uses != 2) report("unglued edge", where, "interior edge must lie on two triangles");
    else if (!ed.boundary && forward[static_cast<std::size_t>(e)] != 1)
      report("orientation", where, "adjacent triangles induce the same direction");
    if (ed.boundary) {
      // Traverse the boundary in the direction of its triangle.
      const bool rev = backward[static_cast<std::size_t>(e)] > 0;
      const int a = rev ? ed.v1 : ed.v0, b = rev ? ed.v0 : ed.v1;
      if (out_next[static_cast<std::size_t>(a)] != -1) report("boundary trace", where, "boundary branches");
      out_next[static_cast<std::size_t>(a)] = b;
      in_count[static_cast<std::size_t>(b)]++;
      on_boundary[static_cast<std::size_t>(a)] = on_boundary[static_cast<std::size_t>(b)] = true;
    }
  }

  const int chi = V - E + F;
  const int expected = 2 - 2 * t.surface.genus - t.surface.boundary_count();
  if (chi != expected)
    report("chi mismatch", "surface",
           "V-E+F = " + std::to_string(chi) + " but the surface has chi " + std::to_string(expected));

  int cycles = 0;
  std::vector<bool> seen(static_cast<std::size_t>(V), false);
  for (int v = 0; v < V; ++v) {
    if (!on_boundary[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)]) continue;
    if (out_next[static_cast<std::size_t>(v)] == -1 || in_count[static_cast<std::size_t>(v)] != 1) {
      report("boundary trace", "vertex " + std::to_string(v), "boundary does not close into circles");
      seen[static_cast<std::size_t>(v)] = true;
      continue;
    }
    ++cycles;
    int bases = 0, w = v;
    std::string label = t.vertices[static_cast<std::size_t>(v)].label;
    do {
      seen[static_cast<std::size_t>(w)] = true;
      if (t.vertices[static_cast<std::size_t>(w)].role == VertexRole::BoundaryBase) ++bases;
      w = out_next[static_cast<std::size_t>(w)];
    } while (w != -1 && w != v && !seen[static_cast<std::size_t>(w)]);
    if (bases != 1)
      report("base point", "boundary " + label, "boundary component carries " + std::to_string(bases) + " base points");
  }
  if (cycles != t.surface.boundary_count())
    report("boundary count", "surface",
           std::to_string(cycles) + " boundary circles but " + std::to_string(t.surface.boundary_count()) + " declared");

  int punctures = 0;
  for (int v = 0; v < V; ++v) {
    const auto role = t.vertices[static_cast<std::size_t>(v)].role;
    const bool bdry_role = role == VertexRole::BoundaryBase || role == VertexRole::BoundaryAuxiliary;
    if (bdry_role != on_boundary[static_cast<std::size_t>(v)])
      report("vertex role", "vertex " + std::to_string(v), "role disagrees with boundary incidence");
    if (role == VertexRole::Puncture) ++punctures;
  }
  if (punctures != t.surface.puncture_count)
    report("puncture count", "surface",
           std::to_string(punctures) + " puncture vertices but " + std::to_string(t.surface.puncture_count) + " declared");

  for (const auto& label : t.surface.boundary_labels) {
    auto it = t.base_point_of.find(label);
    if (it == t.base_point_of.end() || it->second < 0 || it->second >= V ||
        t.vertices[static_cast<std::size_t>(it->second)].role != VertexRole::BoundaryBase)
      report("base point", "boundary " + label, "no base point vertex recorded");
  }

  // Vertex links: triangle corners at v glued across edges incident to v.
  if (out.empty()) {
    std::vector<int> parent(static_cast<std::size_t>(3 * F));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    // Corner s of triangle i touches slot s (leaving) and slot s-1 (arriving).
    std::map<std::pair<int, int>, std::vector<int>> by_edge_end;
    for (int i = 0; i < F; ++i)
      for (int s = 0; s < 3; ++s) {
        const int corner = 3 * i + s;
        const auto& leave = t.triangles[static_cast<std::size_t>(i)].slot[s];
        const auto& arrive = t.triangles[static_cast<std::size_t>(i)].slot[(s + 2) % 3];
        // Key by (edge, endpoint index) so that loop edges keep their two ends apart.
        by_edge_end[{leave.edge, leave.reversed ? 1 : 0}].push_back(corner);
        by_edge_end[{arrive.edge, arrive.reversed ? 0 : 1}].push_back(corner);
      }
    for (const auto& [key, cs] : by_edge_end)
      for (std::size_t j = 1; j < cs.size(); ++j) parent[static_cast<std::size_t>(find(cs[j]))] = find(cs[0]);
    std::vector<std::set<int>> classes(static_cast<std::size_t>(V));
    for (int i = 0; i < F; ++i)
      for (int s = 0; s < 3; ++s) classes[static_cast<std::size_t>(t.slot_start(i, s))].insert(find(3 * i + s));
    for (int v = 0; v < V; ++v) {
      if (classes[static_cast<std::size_t>(v)].size() > 1)
        report("vertex link", "vertex " + std::to_string(v), "link of the vertex is disconnected");
      if (classes[static_cast<std::size_t>(v)].empty())
        report("isolated vertex", "vertex " + std::to_string(v), "vertex lies on no triangle");
    }
  }
  return out;
}

}  // namespace fdtc
