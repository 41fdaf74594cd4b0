#ifndef DNACODEC_GC_BALANCED_HPP
#define DNACODEC_GC_BALANCED_HPP

#include <cstdint>
#include <optional>

#include "dnacodec/words.hpp"

namespace dnacodec {

// GC-balanced single-edit codec. The upper sequence is the Knuth-balanced
// first message half (GC balance equals upper balance); the lower sequence
// is a Levenshtein codeword carrying the second half plus the upper
// syndrome d (t+1 bits) and the balancing index (t bits, k mod 2^t with the
// zero value standing for k = n).
struct GcParams {
  size_t n = 0;
  uint64_t a = 0;  // lower-rail residue mod 2n

  GcParams(size_t n_, uint64_t a_);
  size_t t() const { return ceil_log2(n); }
  size_t message_length() const { return 2 * n - 3 * t() - 2; }
  static size_t message_length_for(size_t n) { return 2 * n - 3 * ceil_log2(n) - 2; }
};

DnaWord gc_encode(const BinaryWord& msg, const GcParams& params);
std::optional<BinaryWord> gc_decode(const DnaWord& s, const GcParams& params);

}  // namespace dnacodec

#endif
