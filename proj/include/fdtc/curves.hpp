#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fdtc/surface.hpp"
#include "fdtc/word.hpp"

namespace fdtc {

// Points on the ideal boundary of the universal cover: a corner of the
// thickened tree at a vertex, or an end of the tree given as prefix.period^inf.
struct CornerPoint {
  Word vertex;
  int corner = 0;
  friend bool operator==(const CornerPoint&, const CornerPoint&) = default;
};

struct EndPoint {
  Word prefix;
  Word period;  // cyclically reduced, nonempty
  friend bool operator==(const EndPoint&, const EndPoint&) = default;
};

using Point = std::variant<CornerPoint, EndPoint>;

// Reduced form of x.period^inf.
EndPoint make_end(const Word& x, const Word& period);

/// Linear order on boundary points of the cover, cut open at a base corner
/// sitting at the root vertex. Later points lie further to the right.
class TreeOrder {
 public:
  TreeOrder(const Spine& spine, int base_corner);
  const Spine& spine() const { return *spine_; }
  int base_corner() const { return base_; }
  int compare(const Point& a, const Point& b) const;  // -1, 0, 1
  bool less(const Point& a, const Point& b) const { return compare(a, b) < 0; }

 private:
  const Spine* spine_;
  int base_;
};

// A lift of a closed curve: ends lo < hi and the primitive deck element
// translating along it towards hi.
struct Line {
  EndPoint lo, hi;
  Word toward_hi;
  Word key;  // translation in the direction of the curve word
};

// Lifts of the curve (cyclically reduced primitive word) through vertex x.
std::vector<Line> lines_through(const TreeOrder& order, const Word& x, const Word& curve);
// Lifts separating the base corner from z, outermost first.
std::vector<Line> separating_lines(const TreeOrder& order, const Word& curve, const CornerPoint& z);

// ---------------------------------------------------------------------------
// Closed curves as conjugacy classes.

struct Curve {
  Word word;  // canonical: cyclically reduced, least rotation of w and w^-1
  friend bool operator==(const Curve&, const Curve&) = default;
};

Curve canonical_curve(const Word& w);
bool is_primitive(const Curve& c);
// Geometric intersection number of two closed curves (self-intersection when equal).
long geometric_intersection(const Spine& spine, const Curve& a, const Curve& b);
bool is_simple(const Spine& spine, const Curve& c);
// Simple, primitive, nontrivial, not around a single puncture.
void require_twist_curve(const Spine& spine, const Curve& c);

// ---------------------------------------------------------------------------
// Arcs from the base point of a boundary face to the base point of a face.

struct ArcClass {
  int start_face = 0;
  int end_face = 0;
  Word path;  // vertex of the far endpoint in the cover
  friend bool operator==(const ArcClass&, const ArcClass&) = default;
};

enum class Ordering { RightOf, LeftOf, Equal };
std::string to_string(Ordering o);

CornerPoint arc_endpoint(const Spine& spine, const ArcClass& a);
// An endpoint at a puncture may spin around it: drop trailing turns about the puncture.
ArcClass normalize_arc(const Spine& spine, ArcClass a);
bool is_essential(const Spine& spine, const ArcClass& a);
bool is_simple(const Spine& spine, const ArcClass& a);
Ordering compare_at_base(const Spine& spine, const ArcClass& a, const ArcClass& b, int face);
long geometric_intersection(const Spine& spine, const ArcClass& a, const ArcClass& b);
long geometric_intersection(const Spine& spine, const ArcClass& a, const Curve& c);
// Essential simple arcs from the base point of `face` with weight <= bound,
// ordered by (weight, path, end face).
std::vector<ArcClass> enumerate_arcs(const Spine& spine, int face, int weight_bound);
ArcClass parse_arc(const Spine& spine, const std::string& start, const std::string& end, const std::string& path);

// ---------------------------------------------------------------------------
// Normal coordinates on the standard triangulation.

struct NormalCoordinates {
  std::vector<mpz_class> weights;  // indexed by edge of standard_triangulation
  std::optional<std::pair<std::string, int>> start, end;  // arc endpoint slots
  friend bool operator==(const NormalCoordinates&, const NormalCoordinates&) = default;
};

class NormalModel {
 public:
  explicit NormalModel(const SurfaceSpec& spec);
  const Triangulation& triangulation() const { return tri_; }
  const Spine& spine() const { return spine_; }

  // Throws PreconditionError naming the triangle or edge that violates matching.
  void check(const NormalCoordinates& c) const;
  NormalCoordinates encode(const Curve& c) const;
  NormalCoordinates encode(const std::vector<Curve>& multicurve) const;
  NormalCoordinates encode(const ArcClass& a) const;
  // Components of a closed normal multicurve as (possibly trivial) conjugacy classes.
  std::vector<Word> trace(const NormalCoordinates& c, long max_weight = 2000000) const;
  // Essential components in canonical form.
  std::vector<Curve> decode(const NormalCoordinates& c) const;
  NormalCoordinates tighten(const NormalCoordinates& c) const;

 private:
  Spine spine_;
  Triangulation tri_;
  std::vector<int> poly_;            // polygon vertex ids
  std::vector<int> side_of_half_;    // polygon side of each half-edge
  std::vector<int> vertex_pos_of_corner_;  // polygon position of each corner vertex
  std::vector<int> diag_edge_;       // edge id of diagonal (0, j)
  void add_chord(std::vector<mpz_class>& w, double p, double q) const;
};

}  // namespace fdtc
