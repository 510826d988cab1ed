#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fdtc {

// A letter is a half-edge id of the spine: 2i reads x_i, 2i+1 reads x_i^-1.
using Letter = int;
using Word = std::vector<Letter>;

inline Letter inverse_letter(Letter h) { return h ^ 1; }

Word inverse(const Word& w);
Word reduce(const Word& w);
// Freely reduced product of two reduced words.
Word multiply(const Word& a, const Word& b);
Word multiply(const Word& a, const Word& b, const Word& c);
Word power(const Word& w, long k);
bool is_reduced(const Word& w);

// Conjugate to a cyclically reduced word; the conjugator c satisfies w = c r c^-1.
Word cyclic_reduce(const Word& w, Word* conjugator = nullptr);
Word rotate(const Word& w, std::size_t k);
// Primitive root p with w = p^k for a cyclically reduced w.
Word primitive_root(const Word& w, long* exponent = nullptr);
bool is_prefix(const Word& p, const Word& w);
std::size_t common_prefix(const Word& a, const Word& b);

}  // namespace fdtc
