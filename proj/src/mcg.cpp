#include "fdtc/mcg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fdtc {

namespace {

void append_reduced(Word& out, const Word& w) {
  for (Letter x : w) {
    if (!out.empty() && out.back() == inverse_letter(x)) out.pop_back();
    else out.push_back(x);
  }
}

void append_image(Word& out, const Word& img, bool inverted) {
  if (!inverted) {
    append_reduced(out, img);
    return;
  }
  for (auto it = img.rbegin(); it != img.rend(); ++it) {
    const Letter x = inverse_letter(*it);
    if (!out.empty() && out.back() == inverse_letter(x)) out.pop_back();
    else out.push_back(x);
  }
}

int petal_of_loop_face(const Spine& spine, int f) {
  const Face& face = spine.face(f);
  if (face.corners.size() != 1) throw PreconditionError("face " + face.label + " is not a single-corner loop");
  return spine.order(face.base_corner) / 2;
}

std::string action_key(const Generator& g) {
  std::ostringstream os;
  os << static_cast<int>(g.kind) << '|' << g.label << '|' << g.braid_index << '|' << g.power << '|';
  for (Letter h : g.curve.word) os << h << ',';
  return os.str();
}

}  // namespace

LiftedAction LiftedAction::identity(const Spine& spine) {
  LiftedAction a;
  for (int i = 0; i < spine.rank(); ++i) a.images.push_back({2 * i});
  const int corners = std::max(1, spine.half_edge_count());
  for (int k = 0; k < corners; ++k) {
    a.corner_image.push_back(k);
    a.corner_shift.emplace_back();
  }
  return a;
}

Word LiftedAction::apply_word(const Word& g) const {
  Word out;
  out.reserve(g.size() * 2);
  for (Letter h : g) append_image(out, images[static_cast<std::size_t>(h / 2)], (h & 1) != 0);
  return out;
}

CornerPoint LiftedAction::apply(const CornerPoint& z) const {
  CornerPoint out{apply_word(z.vertex), corner_image[static_cast<std::size_t>(z.corner)]};
  append_reduced(out.vertex, corner_shift[static_cast<std::size_t>(z.corner)]);
  return out;
}

std::size_t LiftedAction::max_image_length() const {
  std::size_t m = 0;
  for (const auto& w : images) m = std::max(m, w.size());
  return m;
}

LiftedAction compose(const LiftedAction& f1, const LiftedAction& f2) {
  LiftedAction out;
  for (const auto& img : f2.images) out.images.push_back(f1.apply_word(img));
  for (std::size_t k = 0; k < f2.corner_image.size(); ++k) {
    const int mid = f2.corner_image[k];
    out.corner_image.push_back(f1.corner_image[static_cast<std::size_t>(mid)]);
    Word u = f1.apply_word(f2.corner_shift[k]);
    append_reduced(u, f1.corner_shift[static_cast<std::size_t>(mid)]);
    out.corner_shift.push_back(std::move(u));
  }
  return out;
}

CornerPoint shear(const TreeOrder& order, const Word& curve, long p, const CornerPoint& z) {
  Word t;
  for (const Line& l : separating_lines(order, curve, z)) t = multiply(t, power(l.toward_hi, p));
  return {multiply(t, z.vertex), z.corner};
}

LiftedAction twist_action(const Spine& spine, const Curve& curve, long p, int base_corner) {
  const TreeOrder order(spine, base_corner);
  const Word w = cyclic_reduce(curve.word);
  LiftedAction a = LiftedAction::identity(spine);
  if (p == 0 || w.empty()) return a;
  for (int i = 0; i < spine.rank(); ++i)
    a.images[static_cast<std::size_t>(i)] = shear(order, w, p, CornerPoint{{2 * i}, base_corner}).vertex;
  for (std::size_t k = 0; k < a.corner_shift.size(); ++k)
    a.corner_shift[k] = shear(order, w, p, CornerPoint{{}, static_cast<int>(k)}).vertex;
  return a;
}

namespace {

// Lift determined by an automorphism together with, for every face f, the
// face it goes to and the vertex v_f where the image of its base corner sits.
LiftedAction from_face_data(const Spine& spine, std::vector<Word> images, const std::vector<int>& face_to,
                            const std::vector<Word>& conj) {
  LiftedAction a = LiftedAction::identity(spine);
  a.images = std::move(images);
  for (int f = 0; f < spine.face_count(); ++f) {
    const Face& src = spine.face(f);
    const Face& dst = spine.face(face_to[static_cast<std::size_t>(f)]);
    if (src.corners.size() != dst.corners.size()) throw std::logic_error("face map changes face length");
    Word pre, pre_img;
    for (std::size_t o = 0; o < src.corners.size(); ++o) {
      const auto k = static_cast<std::size_t>(src.corners[o]);
      a.corner_image[k] = dst.corners[o];
      Word u = inverse(a.apply_word(pre));
      append_reduced(u, conj[static_cast<std::size_t>(f)]);
      append_reduced(u, pre_img);
      a.corner_shift[k] = std::move(u);
      if (o < src.letters.size()) {
        pre.push_back(src.letters[o]);
        pre_img.push_back(dst.letters[o]);
      }
    }
  }
  return a;
}

}  // namespace

LiftedAction braid_action(const Spine& spine, int i, long p) {
  const int n = spine.spec().puncture_count;
  const int fa = spine.face_index("p" + std::to_string(i));
  const int fb = spine.face_index("p" + std::to_string(i + 1));
  if (fa < 0 || fb < 0) throw PreconditionError("half twist s" + std::to_string(i) + " needs punctures " +
                                                 std::to_string(i) + " and " + std::to_string(i + 1) +
                                                 " (surface has " + std::to_string(n) + ")");
  const int a = petal_of_loop_face(spine, fa), b = petal_of_loop_face(spine, fb);
  if (b != a + 1) throw std::logic_error("punctures are not adjacent in the spine");
  const Letter xa = 2 * a, xb = 2 * b;

  auto single = [&](bool positive) {
    // positive: the right-handed half twist, whose square is the positive twist about p_i p_{i+1}
    std::vector<Word> images;
    for (int j = 0; j < spine.rank(); ++j) images.push_back({2 * j});
    std::vector<int> face_to(static_cast<std::size_t>(spine.face_count()));
    std::iota(face_to.begin(), face_to.end(), 0);
    std::vector<Word> conj(static_cast<std::size_t>(spine.face_count()));
    if (!positive) {
      images[static_cast<std::size_t>(a)] = {xa, xb, inverse_letter(xa)};
      images[static_cast<std::size_t>(b)] = {xa};
      face_to[static_cast<std::size_t>(fa)] = fb;
      face_to[static_cast<std::size_t>(fb)] = fa;
      conj[static_cast<std::size_t>(fa)] = {xa};
    } else {
      images[static_cast<std::size_t>(a)] = {xb};
      images[static_cast<std::size_t>(b)] = {inverse_letter(xb), xa, xb};
      face_to[static_cast<std::size_t>(fa)] = fb;
      face_to[static_cast<std::size_t>(fb)] = fa;
      conj[static_cast<std::size_t>(fb)] = {inverse_letter(xb)};
    }
    return from_face_data(spine, std::move(images), face_to, conj);
  };
  LiftedAction out = LiftedAction::identity(spine);
  const LiftedAction step = single(p > 0);
  for (long k = 0; k < (p < 0 ? -p : p); ++k) out = compose(step, out);
  return out;
}

// ---------------------------------------------------------------------------

std::string Generator::str() const {
  std::string base;
  switch (kind) {
    case Kind::Twist:
    case Kind::Boundary: base = "T_" + label; break;
    case Kind::Braid: base = "s" + std::to_string(braid_index); break;
  }
  return power == 1 ? base : base + "^" + std::to_string(power);
}

MappingClassWord::MappingClassWord(SurfaceSpec spec) : spec_(std::move(spec)) { spec_.check(); }

std::vector<int> MappingClassWord::permutation() const {
  std::vector<int> perm(static_cast<std::size_t>(spec_.puncture_count));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t j = 0; j < perm.size(); ++j) {
    int x = static_cast<int>(j);
    for (auto it = gens_.rbegin(); it != gens_.rend(); ++it)
      if (it->kind == Generator::Kind::Braid && (it->power % 2 != 0)) {
        if (x == it->braid_index - 1) x = it->braid_index;
        else if (x == it->braid_index) x = it->braid_index - 1;
      }
    perm[j] = x;
  }
  return perm;
}

long MappingClassWord::length() const {
  long n = 0;
  for (const auto& g : gens_) n += g.power < 0 ? -g.power : g.power;
  return n;
}

std::string MappingClassWord::str() const {
  if (gens_.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ' ';
    out += gens_[i].str();
  }
  return out;
}

MappingClassWord& MappingClassWord::push_back(Generator g) {
  if (g.power == 0) return *this;
  if (!gens_.empty() && gens_.back().same_generator(g)) {
    gens_.back().power += g.power;
    if (gens_.back().power == 0) gens_.pop_back();
    return *this;
  }
  gens_.push_back(std::move(g));
  return *this;
}

MappingClassWord MappingClassWord::retarget(const SurfaceSpec& spec) const {
  MappingClassWord out(spec);
  out.gens_ = gens_;
  return out;
}

Generator twist_generator(const Spine& spine, const std::string& label, const Word& curve, long power) {
  Generator g;
  g.kind = Generator::Kind::Twist;
  g.label = label;
  g.curve = canonical_curve(curve);
  require_twist_curve(spine, g.curve);
  g.power = power;
  return g;
}

Generator boundary_generator(const Spine& spine, const std::string& label, long power) {
  const int f = spine.face_index(label);
  if (f < 0 || spine.face(f).puncture) throw PreconditionError("unknown boundary label '" + label + "'");
  Generator g;
  g.kind = Generator::Kind::Boundary;
  g.label = label;
  g.curve = canonical_curve(spine.face(f).letters);
  g.power = power;
  return g;
}

Generator braid_generator(const Spine& spine, int i, long power) {
  if (spine.spec().puncture_count < 2) throw PreconditionError("half twists need at least two punctures");
  if (i < 1 || i >= spine.spec().puncture_count)
    throw PreconditionError("half twist index " + std::to_string(i) + " out of range");
  Generator g;
  g.kind = Generator::Kind::Braid;
  g.label = "s" + std::to_string(i);
  g.braid_index = i;
  g.power = power;
  return g;
}

MappingClassWord compose(const MappingClassWord& w1, const MappingClassWord& w2) {
  if (!(w1.surface() == w2.surface())) throw PreconditionError("words live on different surfaces");
  MappingClassWord out = w1;
  for (const auto& g : w2.generators()) out.push_back(g);
  return out;
}

MappingClassWord invert(const MappingClassWord& w) {
  MappingClassWord out(w.surface());
  for (auto it = w.generators().rbegin(); it != w.generators().rend(); ++it) {
    Generator g = *it;
    g.power = -g.power;
    out.push_back(std::move(g));
  }
  return out;
}

MappingClassWord power(const MappingClassWord& w, long k) {
  const MappingClassWord base = k < 0 ? invert(w) : w;
  MappingClassWord out(w.surface());
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = compose(out, base);
  return out;
}

int puncture_permutation_order(const MappingClassWord& w) {
  const auto perm = w.permutation();
  std::vector<bool> seen(perm.size(), false);
  long order = 1;
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (seen[j]) continue;
    long len = 0;
    for (std::size_t x = j; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

// ---------------------------------------------------------------------------

ActionEngine::ActionEngine(const SurfaceSpec& spec, int base_face)
    : spine_(std::make_shared<const Spine>(spec)), face_(base_face) {
  if (base_face < 0 || base_face >= spine_->face_count() || spine_->face(base_face).puncture)
    throw PreconditionError("base face must be a boundary component");
}

const LiftedAction& ActionEngine::action(const Generator& g) {
  const std::string key = action_key(g);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  LiftedAction a = g.kind == Generator::Kind::Braid ? braid_action(*spine_, g.braid_index, g.power)
                                                    : twist_action(*spine_, g.curve, g.power, base_corner());
  return cache_.emplace(key, std::move(a)).first->second;
}

CornerPoint ActionEngine::apply(const MappingClassWord& w, const CornerPoint& z) {
  CornerPoint out = z;
  for (auto it = w.generators().rbegin(); it != w.generators().rend(); ++it) out = action(*it).apply(out);
  return out;
}

LiftedAction ActionEngine::full_action(const MappingClassWord& w) {
  LiftedAction out = LiftedAction::identity(*spine_);
  for (const auto& g : w.generators()) out = compose(out, action(g));
  return out;
}

ArcClass apply(const MappingClassWord& w, const ArcClass& a) {
  ActionEngine engine(w.surface(), a.start_face);
  const CornerPoint z = engine.apply(w, arc_endpoint(engine.spine(), a));
  return normalize_arc(engine.spine(), {a.start_face, engine.spine().face_of_corner(z.corner), z.vertex});
}

Curve apply(const MappingClassWord& w, const Curve& c) {
  ActionEngine engine(w.surface(), 0);
  Word g = c.word;
  for (auto it = w.generators().rbegin(); it != w.generators().rend(); ++it) g = engine.action(*it).apply_word(g);
  return canonical_curve(g);
}

NormalCoordinates apply(const MappingClassWord& w, const NormalCoordinates& x) {
  const NormalModel model(w.surface());
  std::vector<Curve> images;
  for (const auto& c : model.decode(x)) images.push_back(apply(w, c));
  return model.encode(images);
}

IdentityProbe acts_identically(const MappingClassWord& w, int probe_bound) {
  if (probe_bound < 1) throw PreconditionError("probe bound must be >= 1");
  IdentityProbe out;
  for (int f = 0; f < w.surface().boundary_count(); ++f) {
    ActionEngine engine(w.surface(), f);
    for (const ArcClass& a : enumerate_arcs(engine.spine(), f, probe_bound)) {
      ++out.probes_checked;
      const CornerPoint z = engine.apply(w, arc_endpoint(engine.spine(), a));
      const ArcClass image =
          normalize_arc(engine.spine(), {a.start_face, engine.spine().face_of_corner(z.corner), z.vertex});
      if (!(image == a)) {
        out.identical_on_probes = false;
        out.witness = a;
        out.witness_image = image;
        return out;
      }
    }
  }
  return out;
}

}  // namespace fdtc
