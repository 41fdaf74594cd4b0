#ifndef DNACODEC_LEVENSHTEIN_HPP
#define DNACODEC_LEVENSHTEIN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dnacodec/words.hpp"

namespace dnacodec {

// Single-edit binary code: all x of length n with Syn(x) = a (mod 2n).
// The systematic encoder writes the message on I = [n] \ S and tunes the
// syndrome on S = {2^{j-1} : j in [t]} u {n}, t = ceil(log2 n).
struct LevParams {
  size_t n = 0;
  uint64_t a = 0;  // residue mod 2n

  explicit LevParams(size_t n_, uint64_t a_);
  size_t t() const { return ceil_log2(n); }
  size_t message_length() const { return n - t() - 1; }
  static size_t message_length_for(size_t n) { return n - ceil_log2(n) - 1; }
  std::vector<size_t> syndrome_positions() const;  // S, 1-based, sorted
  std::vector<size_t> message_positions() const;   // I, 1-based, sorted
};

bool lev_member(const BinaryWord& x, size_t n, uint64_t a);

BinaryWord lev_encode(const BinaryWord& msg, const LevParams& params);

// Corrects one edit; |y| in {n-1, n, n+1}. Returns the codeword.
std::optional<BinaryWord> lev_decode_codeword(const BinaryWord& y, size_t n, uint64_t a);

// Codeword plus the 1-based interval of error positions consistent with the
// received word: for a deletion, the run of the codeword any of whose
// positions may have been deleted; for an insertion, the positions of the
// received word whose removal yields the codeword; for a substitution, the
// flipped position (or [0,0] when y was clean).
struct LevDecodeDetail {
  BinaryWord codeword;
  size_t error_lo = 0, error_hi = 0;
};
std::optional<LevDecodeDetail> lev_decode_detailed(const BinaryWord& y, size_t n, uint64_t a);

std::optional<BinaryWord> lev_decode_message(const BinaryWord& y, const LevParams& params);

}  // namespace dnacodec

#endif
