#include "fdtc/surface.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fdtc {

void SurfaceSpec::check() const {
  if (genus < 0) throw PreconditionError("genus must be nonnegative");
  if (puncture_count < 0) throw PreconditionError("puncture count must be nonnegative");
  if (boundary_labels.empty()) throw PreconditionError("surface needs at least one boundary component");
  std::set<std::string> seen;
  for (const auto& l : boundary_labels) {
    if (l.empty()) throw PreconditionError("empty boundary label");
    if (!seen.insert(l).second) throw PreconditionError("duplicate boundary label '" + l + "'");
  }
}

SurfaceSpec SurfaceSpec::punctures_to_boundary() const {
  SurfaceSpec out = *this;
  for (int j = 1; j <= puncture_count; ++j) out.boundary_labels.push_back("p" + std::to_string(j));
  out.puncture_count = 0;
  out.check();
  return out;
}

int SurfaceSpec::boundary_index(const std::string& label) const {
  auto it = std::find(boundary_labels.begin(), boundary_labels.end(), label);
  return it == boundary_labels.end() ? -1 : static_cast<int>(it - boundary_labels.begin());
}

DenominatorBound denominator_bound(const SurfaceSpec& spec) {
  const int g = spec.genus, d = spec.boundary_count();
  if (g == 0 && d <= 2) return {1, true};
  return {std::max(4L * g + 2, 4L * g + d - 3), false};
}

NTType parse_nt_type(const std::string& s) {
  std::string t;
  for (char ch : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (t == "periodic") return NTType::Periodic;
  if (t == "pa" || t == "pseudoanosov" || t == "pseudo-anosov") return NTType::PseudoAnosov;
  if (t == "reducible") return NTType::Reducible;
  if (t == "unknown") return NTType::Unknown;
  throw PreconditionError("unknown Nielsen-Thurston type '" + s + "'");
}

std::string to_string(NTType t) {
  switch (t) {
    case NTType::Periodic: return "periodic";
    case NTType::PseudoAnosov: return "pseudoAnosov";
    case NTType::Reducible: return "reducible";
    case NTType::Unknown: return "unknown";
  }
  return "unknown";
}

std::set<long> AdmissibleDenominators::values() const {
  std::set<long> out;
  for (long q = 1; q <= max_denominator; ++q) out.insert(q);
  return out;
}

AdmissibleDenominators admissible_values(const SurfaceSpec& spec, NTType nt_type) {
  const long g = spec.genus, d = spec.boundary_count();
  const long periodic = 4 * g + 2, pa = 4 * g + d - 3;
  switch (nt_type) {
    case NTType::Periodic: return {periodic};
    case NTType::PseudoAnosov:
      if (pa < 1) throw PreconditionError("no pseudo-Anosov maps on this surface");
      return {pa};
    default: return {std::max(periodic, pa)};
  }
}

// ---------------------------------------------------------------------------

Spine::Spine(const SurfaceSpec& spec) : spec_(spec) {
  spec_.check();
  const int g = spec.genus, d = spec.boundary_count(), n = spec.puncture_count;
  rank_ = 2 * g + d - 1 + n;
  int petal = 0;
  for (int i = 1; i <= g; ++i) {
    const int a = petal++, b = petal++;
    names_.push_back("a" + std::to_string(i));
    names_.push_back("b" + std::to_string(i));
    for (Letter h : {2 * a, 2 * b, 2 * a + 1, 2 * b + 1}) order_.push_back(h);
  }
  std::vector<std::pair<std::string, int>> loops;  // face label, corner
  for (int j = 2; j <= d; ++j) {
    const int p = petal++;
    names_.push_back("c" + std::to_string(j));
    loops.emplace_back(spec.boundary_labels[static_cast<std::size_t>(j - 1)], static_cast<int>(order_.size()));
    order_.push_back(2 * p);
    order_.push_back(2 * p + 1);
  }
  for (int j = 1; j <= n; ++j) {
    const int p = petal++;
    names_.push_back("p" + std::to_string(j));
    loops.emplace_back("p" + std::to_string(j), static_cast<int>(order_.size()));
    order_.push_back(2 * p);
    order_.push_back(2 * p + 1);
  }
  pos_.assign(order_.size(), 0);
  for (std::size_t k = 0; k < order_.size(); ++k) pos_[static_cast<std::size_t>(order_[k])] = static_cast<int>(k);

  const int corners = std::max(1, 2 * rank_);
  corner_face_.assign(static_cast<std::size_t>(corners), -1);
  corner_offset_.assign(static_cast<std::size_t>(corners), 0);
  auto walk = [&](const std::string& label, bool puncture, int base) {
    Face f;
    f.label = label;
    f.puncture = puncture;
    f.base_corner = base;
    int k = base;
    do {
      if (corner_face_[static_cast<std::size_t>(k)] != -1) throw std::logic_error("spine faces overlap");
      corner_face_[static_cast<std::size_t>(k)] = static_cast<int>(faces_.size());
      corner_offset_[static_cast<std::size_t>(k)] = static_cast<int>(f.corners.size());
      f.corners.push_back(k);
      if (rank_ == 0) break;
      f.letters.push_back(corner_exit(k));
      k = next_corner(k);
    } while (k != base);
    faces_.push_back(std::move(f));
  };
  walk(spec.boundary_labels[0], false, corners - 1);
  for (std::size_t i = 0; i < loops.size(); ++i)
    walk(loops[i].first, static_cast<int>(i) >= d - 1, loops[i].second);
  for (int c : corner_face_)
    if (c == -1) throw std::logic_error("spine has a corner outside the declared faces");
  if (1 - rank_ != spec.euler_characteristic() || face_count() != d + n)
    throw std::logic_error("spine Euler characteristic mismatch");
}

int Spine::next_corner(int k) const {
  if (rank_ == 0) return 0;
  return position(inverse_letter(corner_exit(k)));
}

int Spine::face_index(const std::string& label) const {
  for (int f = 0; f < face_count(); ++f)
    if (faces_[static_cast<std::size_t>(f)].label == label) return f;
  return -1;
}

int Spine::boundary_face(int i) const {
  if (i < 0 || i >= spec_.boundary_count()) throw PreconditionError("boundary index out of range");
  return i;
}

int Spine::puncture_face(int j) const {
  if (j < 0 || j >= spec_.puncture_count) throw PreconditionError("puncture index out of range");
  return spec_.boundary_count() + j;
}

std::string Spine::letter_name(Letter h) const {
  std::string s = names_[static_cast<std::size_t>(h / 2)];
  if (h % 2) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string Spine::word_name(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter_name(w[i]);
  }
  return out;
}

Letter Spine::generator(const std::string& name) const {
  std::string lower = name;
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (spec_.genus == 1 && (lower == "a" || lower == "b")) lower += "1";
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == lower) return static_cast<Letter>(2 * i);
  throw PreconditionError("unknown generator '" + name + "'");
}

Word Spine::parse_word(const std::string& text) const {
  std::string cleaned = text;
  for (auto& ch : cleaned)
    if (ch == '*' || ch == '.' || ch == ',') ch = ' ';
  std::istringstream in(cleaned);
  Word w;
  std::string tok;
  while (in >> tok) {
    long exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      try {
        exp = std::stol(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw PreconditionError("bad exponent in '" + tok + "'");
      }
      tok = tok.substr(0, caret);
    }
    if (tok.empty()) throw PreconditionError("empty generator in word '" + text + "'");
    Letter h = generator(tok);
    if (std::isupper(static_cast<unsigned char>(tok[0]))) h = inverse_letter(h);
    if (exp < 0) {
      h = inverse_letter(h);
      exp = -exp;
    }
    for (long i = 0; i < exp; ++i) w.push_back(h);
  }
  return reduce(w);
}

}  // namespace fdtc
