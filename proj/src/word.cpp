#include "fdtc/word.hpp"

#include <algorithm>

namespace fdtc {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& h : out) h = inverse_letter(h);
  return out;
}

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter h : w) {
    if (!out.empty() && out.back() == inverse_letter(h)) out.pop_back();
    else out.push_back(h);
  }
  return out;
}

Word multiply(const Word& a, const Word& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == inverse_letter(b[k])) ++k;
  Word out;
  out.reserve(a.size() + b.size() - 2 * k);
  out.insert(out.end(), a.begin(), a.end() - static_cast<long>(k));
  out.insert(out.end(), b.begin() + static_cast<long>(k), b.end());
  return out;
}

Word multiply(const Word& a, const Word& b, const Word& c) { return multiply(multiply(a, b), c); }

Word power(const Word& w, long k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(out, base);
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse_letter(w[i - 1])) return false;
  return true;
}

Word cyclic_reduce(const Word& w, Word* conjugator) {
  Word r = reduce(w);
  std::size_t k = 0;
  while (2 * k + 1 < r.size() && r[k] == inverse_letter(r[r.size() - 1 - k])) ++k;
  if (conjugator) conjugator->assign(r.begin(), r.begin() + static_cast<long>(k));
  return Word(r.begin() + static_cast<long>(k), r.end() - static_cast<long>(k));
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word out(w.begin() + static_cast<long>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
  return out;
}

Word primitive_root(const Word& w, long* exponent) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) {
      if (exponent) *exponent = d ? static_cast<long>(n / d) : 0;
      return Word(w.begin(), w.begin() + static_cast<long>(d));
    }
  }
  if (exponent) *exponent = 0;
  return w;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

std::size_t common_prefix(const Word& a, const Word& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return k;
}

}  // namespace fdtc
