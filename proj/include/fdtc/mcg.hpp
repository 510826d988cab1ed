#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fdtc/curves.hpp"

namespace fdtc {

// Lift of a mapping class to the universal cover fixing a base corner, stored
// as the induced automorphism of pi_1 plus the image of every corner at the root.
struct LiftedAction {
  std::vector<Word> images;      // psi(x_i)
  std::vector<int> corner_image;  // corner k goes to corner_image[k]
  std::vector<Word> corner_shift;  // ... at vertex corner_shift[k]

  static LiftedAction identity(const Spine& spine);
  Word apply_word(const Word& g) const;  // reduced psi(g)
  CornerPoint apply(const CornerPoint& z) const;
  std::size_t max_image_length() const;
};

// f1 after f2.
LiftedAction compose(const LiftedAction& f1, const LiftedAction& f2);

// Right-handed twist to the power p along a simple closed curve, lifted to fix the base corner.
LiftedAction twist_action(const Spine& spine, const Curve& curve, long p, int base_corner);
// Half twist exchanging punctures i and i+1 (1-based), to the power p.
LiftedAction braid_action(const Spine& spine, int i, long p);
// Image of a corner under the twist lift, computed directly from the separating lifts.
CornerPoint shear(const TreeOrder& order, const Word& curve, long p, const CornerPoint& z);

struct Generator {
  enum class Kind { Twist, Boundary, Braid };
  Kind kind = Kind::Twist;
  std::string label;  // curve name, boundary label, or "s<i>"
  Curve curve;        // twist curve; boundary-parallel curve for Boundary
  int braid_index = 0;
  long power = 1;

  bool same_generator(const Generator& o) const {
    return kind == o.kind && label == o.label && curve == o.curve && braid_index == o.braid_index;
  }
  std::string str() const;
};

/// Generators applied right to left, with the induced puncture permutation.
class MappingClassWord {
 public:
  MappingClassWord() = default;
  explicit MappingClassWord(SurfaceSpec spec);

  const SurfaceSpec& surface() const { return spec_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::vector<int> permutation() const;  // image of puncture j (0-based)
  bool empty() const { return gens_.empty(); }
  long length() const;  // sum of |power|
  std::string str() const;

  MappingClassWord& push_back(Generator g);  // appended on the right (applied first)
  // Same word on another surface with the same spine (punctures turned into boundary).
  MappingClassWord retarget(const SurfaceSpec& spec) const;

 private:
  SurfaceSpec spec_;
  std::vector<Generator> gens_;
};

Generator twist_generator(const Spine& spine, const std::string& label, const Word& curve, long power);
Generator boundary_generator(const Spine& spine, const std::string& label, long power);
Generator braid_generator(const Spine& spine, int i, long power);

MappingClassWord compose(const MappingClassWord& w1, const MappingClassWord& w2);
MappingClassWord invert(const MappingClassWord& w);
MappingClassWord power(const MappingClassWord& w, long k);

int puncture_permutation_order(const MappingClassWord& w);

/// Cached generator lifts for one surface and base corner.
class ActionEngine {
 public:
  ActionEngine(const SurfaceSpec& spec, int base_face);
  const Spine& spine() const { return *spine_; }
  int base_face() const { return face_; }
  int base_corner() const { return spine_->face(face_).base_corner; }
  const LiftedAction& action(const Generator& g);
  CornerPoint apply(const MappingClassWord& w, const CornerPoint& z);
  LiftedAction full_action(const MappingClassWord& w);

 private:
  std::shared_ptr<const Spine> spine_;
  int face_;
  std::map<std::string, LiftedAction> cache_;
};

ArcClass apply(const MappingClassWord& w, const ArcClass& a);
Curve apply(const MappingClassWord& w, const Curve& c);
NormalCoordinates apply(const MappingClassWord& w, const NormalCoordinates& x);

struct IdentityProbe {
  bool identical_on_probes = true;
  std::optional<ArcClass> witness;
  std::optional<ArcClass> witness_image;
  long probes_checked = 0;
};

IdentityProbe acts_identically(const MappingClassWord& w, int probe_bound);

}  // namespace fdtc
