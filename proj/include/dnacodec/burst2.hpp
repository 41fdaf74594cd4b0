#ifndef DNACODEC_BURST2_HPP
#define DNACODEC_BURST2_HPP

#include <cstdint>
#include <optional>

#include "dnacodec/words.hpp"

namespace dnacodec {

// Binary code correcting one burst of exactly two adjacent insertions or
// deletions: all x of length n with Rsyn(0x) = a (mod 2n).
bool burst2_member(const BinaryWord& x, uint64_t a);

// |y| in {n-2, n, n+2}. Candidate repairs are enumerated by insertion (or
// deletion) position and checked against the run syndrome; ball disjointness
// makes every consistent candidate the same word.
std::optional<BinaryWord> burst2_decode(const BinaryWord& y, size_t n, uint64_t a);

}  // namespace dnacodec

#endif
