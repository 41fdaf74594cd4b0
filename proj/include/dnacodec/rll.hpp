#ifndef DNACODEC_RLL_HPP
#define DNACODEC_RLL_HPP

#include <optional>

#include "dnacodec/words.hpp"

namespace dnacodec {

// One-redundant-bit runlength limiter: maps n-1 message bits to n bits whose
// longest run is at most ceil(log2 n) + 3.
//
// Record format (single-flag sequence replacement, length-preserving):
//   step 0   w := msg . 0                      (trailing 0 = no records)
//   step i   while w has a run longer than L = ceil(log2 n) + 3, take the
//            leftmost such run, excise its first L'+2 bits (all equal) at
//            start position p, and append the (L'+2)-bit record
//                [ p-1 as L' bits, msb first | run bit | 1 ]
//            where L' = ceil(log2 n). Length stays n throughout.
// Decoding pops records from the end while the last bit is 1: parse (p, s),
// reinsert L'+2 copies of s at position p. Each pop exactly inverts the last
// replacement, so records nest correctly even when later excisions cut into
// earlier records.
struct RllParams {
  size_t n = 0;
  explicit RllParams(size_t n_);
  size_t pointer_bits() const { return ceil_log2(n); }
  size_t record_bits() const { return pointer_bits() + 2; }
  size_t run_limit() const { return pointer_bits() + 3; }
};

BinaryWord rll_encode(const BinaryWord& msg, const RllParams& params);
std::optional<BinaryWord> rll_decode(const BinaryWord& w, const RllParams& params);

}  // namespace dnacodec

#endif
