#ifndef DNACODEC_DUAL_RAIL_HPP
#define DNACODEC_DUAL_RAIL_HPP

#include <cstdint>
#include <optional>

#include "dnacodec/words.hpp"

namespace dnacodec {

// Single-edit DNA codec from two independent Levenshtein rails: the upper
// and lower sequences each carry a Levenshtein codeword, and one edit on the
// strand induces at most one edit on each rail.
struct DualRailParams {
  size_t n = 0;
  uint64_t a1 = 0, a2 = 0;  // residues mod 2n for the upper and lower rails

  DualRailParams(size_t n_, uint64_t a1_, uint64_t a2_);
  size_t rail_message_length() const { return n - ceil_log2(n) - 1; }
  size_t message_length() const { return 2 * rail_message_length(); }
  static size_t message_length_for(size_t n) { return 2 * (n - ceil_log2(n) - 1); }
};

DnaWord dual_rail_encode(const BinaryWord& msg, const DualRailParams& params);
std::optional<BinaryWord> dual_rail_decode(const DnaWord& s, const DualRailParams& params);

}  // namespace dnacodec

#endif
