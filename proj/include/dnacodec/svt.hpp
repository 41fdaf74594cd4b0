#ifndef DNACODEC_SVT_HPP
#define DNACODEC_SVT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dnacodec/words.hpp"

namespace dnacodec {

// Shifted VT code: Syn(x) = c (mod P) together with a weight parity d.
// Corrects one indel whose position is known to within P consecutive
// positions, and one substitution at an exactly known position.
struct SvtParams {
  size_t n = 0;
  size_t P = 0;
  uint64_t c = 0;  // residue mod P
  uint8_t d = 0;   // parity

  SvtParams(size_t n_, size_t P_, uint64_t c_, uint8_t d_);
  size_t t() const { return ceil_log2(P); }
  size_t message_length() const { return n - t() - 1; }
  // Encoding writes the parity at position P, so it needs P <= n.
  bool encodable() const { return P <= n && n >= t() + 1; }
  std::vector<size_t> syndrome_positions() const;  // {2^{j-1}} u {P}
  std::vector<size_t> message_positions() const;
};

// 1-based inclusive interval of candidate error positions.
struct PositionWindow {
  size_t lo = 0, hi = 0;
  bool contains(size_t p) const { return lo <= p && p <= hi; }
};

bool svt_member(const BinaryWord& x, const SvtParams& params);

BinaryWord svt_encode(const BinaryWord& msg, const SvtParams& params);

// |y| = n-1: one deletion at a codeword position inside the window.
// |y| = n+1: one insertion; window positions refer to the received word.
// |y| = n:   at most one substitution at a position inside the window.
std::optional<BinaryWord> svt_decode(const BinaryWord& y, PositionWindow window,
                                     const SvtParams& params);

}  // namespace dnacodec

#endif
