#include <algorithm>
#include <map>

#include "fdtc/curves.hpp"

namespace fdtc {

NormalModel::NormalModel(const SurfaceSpec& spec) : spine_(spec), tri_(standard_triangulation(spec)) {
  const int corners = spine_.half_edge_count();
  side_of_half_.assign(static_cast<std::size_t>(corners), 0);
  vertex_pos_of_corner_.assign(static_cast<std::size_t>(corners), 0);
  int idx = 0;
  for (int k = 0; k < corners; ++k) {
    side_of_half_[static_cast<std::size_t>(spine_.order(k))] = idx;
    vertex_pos_of_corner_[static_cast<std::size_t>(k)] = idx + 1;
    idx += spine_.face(spine_.face_of_corner(k)).puncture ? 3 : 2;
  }
  poly_.assign(static_cast<std::size_t>(idx), 0);
  diag_edge_.assign(static_cast<std::size_t>(idx), -1);
  for (int j = 2; j <= idx - 2; ++j)
    diag_edge_[static_cast<std::size_t>(j)] = tri_.triangles[static_cast<std::size_t>(j - 1)].slot[0].edge;
}

void NormalModel::add_chord(std::vector<mpz_class>& w, double p, double q) const {
  const int m = static_cast<int>(poly_.size());
  for (int j = 2; j <= m - 2; ++j) {
    auto inside = [&](double x) { return x > 0 && x < j; };
    auto outside = [&](double x) { return x > j && x < m; };
    if ((inside(p) && outside(q)) || (outside(p) && inside(q))) w[static_cast<std::size_t>(diag_edge_[static_cast<std::size_t>(j)])] += 1;
  }
}

NormalCoordinates NormalModel::encode(const Curve& c) const {
  NormalCoordinates out;
  out.weights.assign(tri_.edges.size(), 0);
  const Word w = cyclic_reduce(c.word);
  const std::size_t L = w.size();
  for (std::size_t i = 0; i < L; ++i) {
    out.weights[static_cast<std::size_t>(w[i] / 2)] += 1;
    const double p = side_of_half_[static_cast<std::size_t>(inverse_letter(w[i]))] + 0.5;
    const double q = side_of_half_[static_cast<std::size_t>(w[(i + 1) % L])] + 0.5;
    add_chord(out.weights, p, q);
  }
  return out;
}

NormalCoordinates NormalModel::encode(const std::vector<Curve>& multicurve) const {
  NormalCoordinates out;
  out.weights.assign(tri_.edges.size(), 0);
  for (const auto& c : multicurve) {
    const auto one = encode(c);
    for (std::size_t e = 0; e < out.weights.size(); ++e) out.weights[e] += one.weights[e];
  }
  return out;
}

NormalCoordinates NormalModel::encode(const ArcClass& a) const {
  NormalCoordinates out;
  out.weights.assign(tri_.edges.size(), 0);
  out.start = std::make_pair(spine_.face(a.start_face).label, 0);
  out.end = std::make_pair(spine_.face(a.end_face).label, 0);
  if (spine_.rank() == 0) return out;
  double from = vertex_pos_of_corner_[static_cast<std::size_t>(spine_.face(a.start_face).base_corner)];
  for (Letter h : a.path) {
    out.weights[static_cast<std::size_t>(h / 2)] += 1;
    add_chord(out.weights, from, side_of_half_[static_cast<std::size_t>(h)] + 0.5);
    from = side_of_half_[static_cast<std::size_t>(inverse_letter(h))] + 0.5;
  }
  add_chord(out.weights, from, vertex_pos_of_corner_[static_cast<std::size_t>(spine_.face(a.end_face).base_corner)]);
  return out;
}

void NormalModel::check(const NormalCoordinates& c) const {
  if (c.weights.size() != tri_.edges.size())
    throw PreconditionError("expected " + std::to_string(tri_.edges.size()) + " edge weights, got " +
                            std::to_string(c.weights.size()));
  for (std::size_t e = 0; e < c.weights.size(); ++e) {
    if (c.weights[e] < 0) throw PreconditionError("negative weight on edge " + std::to_string(e));
    if (!c.start && tri_.edges[e].boundary && c.weights[e] != 0)
      throw PreconditionError("closed curve crosses boundary edge " + std::to_string(e));
  }
  if (c.start || c.end) return;
  for (std::size_t t = 0; t < tri_.triangles.size(); ++t) {
    mpz_class w[3];
    for (int s = 0; s < 3; ++s) w[s] = c.weights[static_cast<std::size_t>(tri_.triangles[t].slot[s].edge)];
    const std::string where = "triangle " + std::to_string(t);
    if ((w[0] + w[1] + w[2]) % 2 != 0) throw PreconditionError("matching violated at " + where + ": odd weight sum");
    for (int s = 0; s < 3; ++s)
      if (w[s] > w[(s + 1) % 3] + w[(s + 2) % 3])
        throw PreconditionError("matching violated at " + where + ": triangle inequality fails");
  }
}

std::vector<Word> NormalModel::trace(const NormalCoordinates& c, long max_weight) const {
  check(c);
  if (c.start || c.end) throw PreconditionError("arc coordinates cannot be traced; give arcs as paths");
  const std::size_t E = tri_.edges.size();
  std::vector<long> w(E);
  long total = 0;
  for (std::size_t e = 0; e < E; ++e) {
    if (!c.weights[e].fits_slong_p() || c.weights[e] > max_weight)
      throw ComputationError("weights too large to trace explicitly");
    w[e] = c.weights[e].get_si();
    total += w[e];
    if (total > max_weight) throw ComputationError("weights too large to trace explicitly");
  }
  struct Use {
    int tri, slot;
  };
  std::vector<std::vector<Use>> uses(E);
  for (std::size_t t = 0; t < tri_.triangles.size(); ++t)
    for (int s = 0; s < 3; ++s) uses[static_cast<std::size_t>(tri_.triangles[t].slot[s].edge)].push_back({static_cast<int>(t), s});

  std::vector<std::vector<char>> visited(E);
  for (std::size_t e = 0; e < E; ++e) visited[e].assign(static_cast<std::size_t>(w[e]), 0);

  auto slot_w = [&](int t, int s) { return w[static_cast<std::size_t>(tri_.triangles[static_cast<std::size_t>(t)].slot[s].edge)]; };
  std::vector<Word> out;
  for (std::size_t e0 = 0; e0 < E; ++e0) {
    for (long q0 = 0; q0 < w[e0]; ++q0) {
      if (visited[e0][static_cast<std::size_t>(q0)]) continue;
      if (uses[e0].size() != 2) throw PreconditionError("curve meets a boundary edge");
      Word word;
      visited[e0][static_cast<std::size_t>(q0)] = 1;
      int t = uses[e0][0].tri, s = uses[e0][0].slot;
      long q = q0;
      while (true) {
        const auto& tri = tri_.triangles[static_cast<std::size_t>(t)];
        const long ws = slot_w(t, s);
        const long i = tri.slot[s].reversed ? ws - 1 - q : q;
        const long n_s = (ws + slot_w(t, (s + 2) % 3) - slot_w(t, (s + 1) % 3)) / 2;
        int s2;
        long i2;
        if (i < n_s) {
          s2 = (s + 2) % 3;
          i2 = slot_w(t, s2) - 1 - i;
        } else {
          s2 = (s + 1) % 3;
          i2 = ws - 1 - i;
        }
        const TriSlot& out_slot = tri.slot[s2];
        const std::size_t e = static_cast<std::size_t>(out_slot.edge);
        const long q2 = out_slot.reversed ? w[e] - 1 - i2 : i2;
        if (const auto& letter = tri_.edges[e].letter)
          word.push_back(out_slot.reversed ? inverse_letter(*letter) : *letter);
        if (e == e0 && q2 == q0) break;
        if (visited[e][static_cast<std::size_t>(q2)]) throw std::logic_error("normal curve tracing revisited a point");
        visited[e][static_cast<std::size_t>(q2)] = 1;
        if (uses[e].size() != 2) throw PreconditionError("curve meets a boundary edge");
        const Use& next = (uses[e][0].tri == t && uses[e][0].slot == s2) ? uses[e][1] : uses[e][0];
        t = next.tri;
        s = next.slot;
        q = q2;
      }
      out.push_back(std::move(word));
    }
  }
  return out;
}

std::vector<Curve> NormalModel::decode(const NormalCoordinates& c) const {
  std::vector<Curve> out;
  for (const Word& w : trace(c)) {
    Curve k = canonical_curve(w);
    if (!k.word.empty()) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end(), [](const Curve& a, const Curve& b) { return a.word < b.word; });
  return out;
}

NormalCoordinates NormalModel::tighten(const NormalCoordinates& c) const {
  return encode(decode(c));
}

}  // namespace fdtc
