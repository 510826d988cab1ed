#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdtc/word.hpp"

namespace fdtc {

/// Raised for invalid arguments that violate an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation cannot complete within its configured limits.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SurfaceSpec {
  int genus = 0;
  std::vector<std::string> boundary_labels{"C1"};
  int puncture_count = 0;

  int boundary_count() const { return static_cast<int>(boundary_labels.size()); }
  int euler_characteristic() const { return 2 - 2 * genus - boundary_count() - puncture_count; }
  // Throws PreconditionError unless d >= 1, labels distinct, counts nonnegative.
  void check() const;
  // Same surface with every puncture replaced by a boundary component p1..pn.
  SurfaceSpec punctures_to_boundary() const;
  int boundary_index(const std::string& label) const;  // -1 when absent
  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

struct DenominatorBound {
  long value = 1;
  bool degenerate = false;  // disc or annulus
};

DenominatorBound denominator_bound(const SurfaceSpec& spec);

enum class NTType { Periodic, PseudoAnosov, Reducible, Unknown };
NTType parse_nt_type(const std::string& s);
std::string to_string(NTType t);

/// Admissible denominators {1..max_denominator}.
struct AdmissibleDenominators {
  long max_denominator = 1;
  std::set<long> values() const;
};

AdmissibleDenominators admissible_values(const SurfaceSpec& spec, NTType nt_type);

// ---------------------------------------------------------------------------
// Spine: a one-vertex ribbon graph (rose) onto which the surface retracts.
// Punctures are faces just like boundary components.

struct Face {
  std::string label;
  bool puncture = false;
  int base_corner = 0;
  std::vector<int> corners;  // walk order starting at base_corner
  Word letters;              // letters[o] leads from corners[o] to corners[o+1]
};

class Spine {
 public:
  explicit Spine(const SurfaceSpec& spec);

  const SurfaceSpec& spec() const { return spec_; }
  int rank() const { return rank_; }
  int half_edge_count() const { return 2 * rank_; }
  // Half-edge sitting at cyclic position k, and its inverse map.
  Letter order(int k) const { return order_[static_cast<std::size_t>(k)]; }
  int position(Letter h) const { return pos_[static_cast<std::size_t>(h)]; }
  // Corner following corner k along its face.
  int next_corner(int k) const;
  Letter corner_exit(int k) const { return order((k + 1) % half_edge_count()); }

  int face_count() const { return static_cast<int>(faces_.size()); }
  const Face& face(int f) const { return faces_[static_cast<std::size_t>(f)]; }
  int face_of_corner(int k) const { return corner_face_[static_cast<std::size_t>(k)]; }
  int offset_in_face(int k) const { return corner_offset_[static_cast<std::size_t>(k)]; }
  int face_index(const std::string& label) const;  // -1 when absent
  // Boundary (non-puncture) faces; index 0 is C_1.
  int boundary_face(int i) const;
  int puncture_face(int j) const;  // 0-based puncture index

  std::string letter_name(Letter h) const;
  std::string word_name(const Word& w) const;
  // Accepts space or '*' separated generator names; uppercase or trailing "^-1" inverts.
  Word parse_word(const std::string& text) const;
  Letter generator(const std::string& name) const;  // letter x_i for a name

 private:
  SurfaceSpec spec_;
  int rank_ = 0;
  std::vector<Letter> order_;
  std::vector<int> pos_;
  std::vector<std::string> names_;
  std::vector<Face> faces_;
  std::vector<int> corner_face_, corner_offset_;
};

// ---------------------------------------------------------------------------
// Reference triangulation.

enum class VertexRole { BoundaryBase, BoundaryAuxiliary, Puncture, Interior };
std::string to_string(VertexRole r);

struct TriVertex {
  VertexRole role = VertexRole::BoundaryAuxiliary;
  std::string label;  // boundary or puncture label
  friend bool operator==(const TriVertex&, const TriVertex&) = default;
};

struct TriEdge {
  int v0 = 0, v1 = 0;
  bool boundary = false;
  std::optional<Letter> letter;  // read when leaving a triangle through a forward slot
  friend bool operator==(const TriEdge&, const TriEdge&) = default;
};

struct TriSlot {
  int edge = 0;
  bool reversed = false;  // true when the triangle traverses the edge as v1 -> v0
  friend bool operator==(const TriSlot&, const TriSlot&) = default;
};

struct Triangle {
  TriSlot slot[3];
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

struct Triangulation {
  SurfaceSpec surface;
  std::vector<TriVertex> vertices;
  std::vector<TriEdge> edges;
  std::vector<Triangle> triangles;
  std::map<std::string, int> base_point_of;

  int slot_start(int t, int s) const;  // vertex where slot s of triangle t starts
  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

Triangulation standard_triangulation(const SurfaceSpec& spec);

struct Diagnostic {
  std::string code;
  std::string location;
  std::string message;
};

std::vector<Diagnostic> validate_triangulation(const Triangulation& t);

}  // namespace fdtc
