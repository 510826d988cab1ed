#include "fdtc/curves.hpp"

#include <algorithm>
#include <set>

namespace fdtc {

EndPoint make_end(const Word& x, const Word& period) {
  if (period.empty()) throw std::logic_error("end with empty period");
  EndPoint e{x, period};
  while (!e.prefix.empty() && e.prefix.back() == inverse_letter(e.period.front())) {
    e.prefix.pop_back();
    e.period = rotate(e.period, 1);
  }
  return e;
}

TreeOrder::TreeOrder(const Spine& spine, int base_corner) : spine_(&spine), base_(base_corner) {}

namespace {

struct Item {
  bool corner;
  int value;
};

Item item_at(const Point& p, std::size_t i) {
  if (const auto* c = std::get_if<CornerPoint>(&p)) {
    if (i < c->vertex.size()) return {false, c->vertex[i]};
    return {true, c->corner};
  }
  const auto& e = std::get<EndPoint>(p);
  if (i < e.prefix.size()) return {false, e.prefix[i]};
  return {false, e.period[(i - e.prefix.size()) % e.period.size()]};
}

}  // namespace

int TreeOrder::compare(const Point& a, const Point& b) const {
  const int r = spine_->rank();
  if (r == 0) return 0;
  const int slots = 4 * r;
  std::size_t cap = static_cast<std::size_t>(-1);
  if (const auto* ea = std::get_if<EndPoint>(&a))
    if (const auto* eb = std::get_if<EndPoint>(&b))
      cap = std::max(ea->prefix.size(), eb->prefix.size()) + 2 * (ea->period.size() + eb->period.size()) + 4;
  int in_slot = 2 * base_ + 1;
  for (std::size_t i = 0; i <= cap; ++i) {
    const Item x = item_at(a, i), y = item_at(b, i);
    if (x.corner == y.corner && x.value == y.value) {
      if (x.corner) return 0;
      in_slot = 2 * spine_->position(inverse_letter(x.value));
      continue;
    }
    const int sx = x.corner ? 2 * x.value + 1 : 2 * spine_->position(x.value);
    const int sy = y.corner ? 2 * y.value + 1 : 2 * spine_->position(y.value);
    const int rx = ((sx - in_slot) % slots + slots) % slots;
    const int ry = ((sy - in_slot) % slots + slots) % slots;
    return rx < ry ? -1 : 1;
  }
  return 0;
}

std::vector<Line> lines_through(const TreeOrder& order, const Word& x, const Word& curve) {
  std::vector<Line> out;
  out.reserve(curve.size());
  const Word xinv = inverse(x);
  for (std::size_t j = 0; j < curve.size(); ++j) {
    const Word w = rotate(curve, j);
    Line l;
    l.key = multiply(multiply(x, w), xinv);
    EndPoint fwd = make_end(x, w), bwd = make_end(x, inverse(w));
    if (order.compare(fwd, bwd) > 0) {
      l.lo = std::move(bwd);
      l.hi = std::move(fwd);
      l.toward_hi = l.key;
    } else {
      l.lo = std::move(fwd);
      l.hi = std::move(bwd);
      l.toward_hi = inverse(l.key);
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<Line> separating_lines(const TreeOrder& order, const Word& curve, const CornerPoint& z) {
  std::vector<Line> out;
  std::set<Word> seen;
  Word x;
  for (std::size_t i = 0; i <= z.vertex.size(); ++i) {
    for (auto& l : lines_through(order, x, curve)) {
      if (!seen.insert(l.key).second) continue;
      if (order.compare(l.lo, z) < 0 && order.compare(z, l.hi) < 0) out.push_back(std::move(l));
    }
    if (i < z.vertex.size()) x.push_back(z.vertex[i]);
  }
  std::sort(out.begin(), out.end(), [&](const Line& a, const Line& b) { return order.compare(a.lo, b.lo) < 0; });
  return out;
}

// ---------------------------------------------------------------------------

Curve canonical_curve(const Word& w) {
  const Word r = cyclic_reduce(w);
  if (r.empty()) return {};
  Word best = r;
  const Word ri = inverse(r);
  for (std::size_t j = 0; j < r.size(); ++j) {
    best = std::min(best, rotate(r, j));
    best = std::min(best, rotate(ri, j));
  }
  return {best};
}

bool is_primitive(const Curve& c) {
  long k = 0;
  primitive_root(c.word, &k);
  return k == 1;
}

namespace {

bool chords_cross(const TreeOrder& order, const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  int c = order.compare(p1, p2);
  if (c == 0) return false;
  const Point& lo = c < 0 ? p1 : p2;
  const Point& hi = c < 0 ? p2 : p1;
  auto inside = [&](const Point& q, bool* on_end) {
    const int a = order.compare(lo, q), b = order.compare(q, hi);
    if (a == 0 || b == 0) *on_end = true;
    return a < 0 && b < 0;
  };
  bool shared = false;
  const bool i1 = inside(q1, &shared), i2 = inside(q2, &shared);
  return !shared && i1 != i2;
}

}  // namespace

long geometric_intersection(const Spine& spine, const Curve& a, const Curve& b) {
  if (a.word.empty() || b.word.empty()) return 0;
  long ka = 0, kb = 0;
  const Word A = primitive_root(cyclic_reduce(a.word), &ka);
  const Word B = primitive_root(cyclic_reduce(b.word), &kb);
  const TreeOrder order(spine, 0);
  const EndPoint a_fwd = make_end({}, A), a_bwd = make_end({}, inverse(A));
  const std::size_t L = A.size();
  long count = 0;
  Word v;
  for (std::size_t i = 0; i < L; ++i) {
    const Letter in_a = inverse_letter(A[(i + L - 1) % L]);
    for (std::size_t j = 0; j < B.size(); ++j) {
      const Word w = rotate(B, j);
      const Letter out_b = w.front(), in_b = inverse_letter(w.back());
      if (in_a == out_b || in_a == in_b) continue;
      if (chords_cross(order, a_fwd, a_bwd, make_end(v, w), make_end(v, inverse(w)))) ++count;
    }
    v.push_back(A[i]);
  }
  if (canonical_curve(A) == canonical_curve(B)) count /= 2;
  return count * ka * kb;
}

bool is_simple(const Spine& spine, const Curve& c) {
  return geometric_intersection(spine, c, c) == 0;
}

void require_twist_curve(const Spine& spine, const Curve& c) {
  if (c.word.empty()) throw PreconditionError("twist curve is null-homotopic");
  if (!is_primitive(c)) throw PreconditionError("twist curve is a proper power");
  if (!is_simple(spine, c)) throw PreconditionError("twist curve is not simple");
  for (int f = 0; f < spine.face_count(); ++f)
    if (spine.face(f).puncture && canonical_curve(spine.face(f).letters) == c)
      throw PreconditionError("twist curve bounds a once-punctured disc");
}

// ---------------------------------------------------------------------------

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::RightOf: return "RightOf";
    case Ordering::LeftOf: return "LeftOf";
    case Ordering::Equal: return "Equal";
  }
  return "Equal";
}

CornerPoint arc_endpoint(const Spine& spine, const ArcClass& a) {
  return {a.path, spine.face(a.end_face).base_corner};
}

ArcClass normalize_arc(const Spine& spine, ArcClass a) {
  const Face& f = spine.face(a.end_face);
  if (!f.puncture) return a;
  const int petal = spine.order(f.base_corner) / 2;
  while (!a.path.empty() && a.path.back() / 2 == petal) a.path.pop_back();
  return a;
}

bool is_essential(const Spine& spine, const ArcClass& a) {
  if (a.end_face != a.start_face) return true;
  const Word& beta = spine.face(a.start_face).letters;
  if (beta.empty()) return false;
  if (a.path.size() % beta.size()) return true;
  const long j = static_cast<long>(a.path.size() / beta.size());
  return a.path != power(beta, j) && a.path != power(beta, -j);
}

namespace {

std::vector<Word> prefixes(const Word& w) {
  std::vector<Word> out;
  Word p;
  out.push_back(p);
  for (Letter h : w) {
    p.push_back(h);
    out.push_back(p);
  }
  return out;
}

// Number of deck translates h != 1 for which h.b crosses a (both arcs lifted from the root).
long crossing_translates(const Spine& spine, const ArcClass& a, const ArcClass& b) {
  const TreeOrder order(spine, spine.face(a.start_face).base_corner);
  const CornerPoint a0{{}, spine.face(a.start_face).base_corner};
  const CornerPoint a1 = arc_endpoint(spine, a);
  std::set<Word> seen;
  long count = 0;
  for (const Word& p : prefixes(a.path))
    for (const Word& q : prefixes(b.path)) {
      Word h = multiply(p, inverse(q));
      if (!seen.insert(h).second) continue;
      if (h.empty() && a == b) continue;
      const CornerPoint b0{h, spine.face(b.start_face).base_corner};
      const CornerPoint b1{multiply(h, b.path), spine.face(b.end_face).base_corner};
      if (chords_cross(order, a0, a1, b0, b1)) ++count;
    }
  return count;
}

}  // namespace

bool is_simple(const Spine& spine, const ArcClass& a) {
  return crossing_translates(spine, a, a) == 0;
}

Ordering compare_at_base(const Spine& spine, const ArcClass& a, const ArcClass& b, int face) {
  if (a.start_face != face || b.start_face != face)
    throw PreconditionError("arcs must start at the base point of " + spine.face(face).label);
  const ArcClass na = normalize_arc(spine, a), nb = normalize_arc(spine, b);
  if (na == nb) return Ordering::Equal;
  const TreeOrder order(spine, spine.face(face).base_corner);
  const int c = order.compare(arc_endpoint(spine, na), arc_endpoint(spine, nb));
  if (c == 0) return Ordering::Equal;
  return c < 0 ? Ordering::RightOf : Ordering::LeftOf;
}

long geometric_intersection(const Spine& spine, const ArcClass& a, const ArcClass& b) {
  return crossing_translates(spine, a, b);
}

long geometric_intersection(const Spine& spine, const ArcClass& a, const Curve& c) {
  if (c.word.empty()) return 0;
  long k = 0;
  const Word root = primitive_root(cyclic_reduce(c.word), &k);
  const TreeOrder order(spine, spine.face(a.start_face).base_corner);
  return static_cast<long>(separating_lines(order, root, arc_endpoint(spine, a)).size()) * k;
}

std::vector<ArcClass> enumerate_arcs(const Spine& spine, int face, int weight_bound) {
  if (weight_bound < 0) throw PreconditionError("weight bound must be nonnegative");
  if (face < 0 || face >= spine.face_count() || spine.face(face).puncture)
    throw PreconditionError("arcs start on a boundary component");
  std::vector<ArcClass> out;
  std::vector<Word> level{Word{}};
  const int letters = spine.half_edge_count();
  for (int len = 0; len <= weight_bound; ++len) {
    for (const Word& w : level)
      for (int f = 0; f < spine.face_count(); ++f) {
        ArcClass a{face, f, w};
        if (!(normalize_arc(spine, a) == a)) continue;
        if (is_essential(spine, a) && is_simple(spine, a)) out.push_back(std::move(a));
      }
    if (len == weight_bound) break;
    std::vector<Word> next;
    for (const Word& w : level)
      for (Letter h = 0; h < letters; ++h) {
        if (!w.empty() && w.back() == inverse_letter(h)) continue;
        Word x = w;
        x.push_back(h);
        next.push_back(std::move(x));
      }
    level = std::move(next);
  }
  return out;
}

ArcClass parse_arc(const Spine& spine, const std::string& start, const std::string& end, const std::string& path) {
  ArcClass a;
  a.start_face = spine.face_index(start);
  a.end_face = spine.face_index(end);
  if (a.start_face < 0 || spine.face(a.start_face).puncture)
    throw PreconditionError("unknown boundary label '" + start + "'");
  if (a.end_face < 0) throw PreconditionError("unknown boundary label '" + end + "'");
  a.path = spine.parse_word(path);
  return a;
}

}  // namespace fdtc
