#ifndef DNACODEC_QUAT_EDIT_HPP
#define DNACODEC_QUAT_EDIT_HPP

#include <cstdint>
#include <optional>

#include "dnacodec/sum_balance.hpp"
#include "dnacodec/words.hpp"

namespace dnacodec {

// Quaternary single-edit code over sum-balanced words: x is k-sum-balanced,
// Syn(x) = a (mod 4n+1), the signature of x is a shifted-VT codeword with
// window modulus P = 5k, and the symbol sum is d (mod 7).
struct QuatEditCodeParams {
  size_t n = 0;
  size_t k = 0;
  uint64_t a = 0;  // mod 4n+1
  uint64_t b = 0;  // mod P
  uint8_t c = 0;   // signature parity
  uint8_t d = 0;   // symbol sum mod 7

  QuatEditCodeParams(size_t n_, size_t k_, uint64_t a_, uint64_t b_, uint8_t c_, uint8_t d_);
  size_t P() const { return 5 * k; }
};

bool quat_edit_member(const QuaternaryWord& x, const QuatEditCodeParams& params);

// |y| = n: corrects at most one substitution (sum check, size mod 7,
// position from the syndrome gap mod 4n+1).
std::optional<QuaternaryWord> quat_edit_decode_substitution(const QuaternaryWord& y,
                                                            const QuatEditCodeParams& params);

// |y| = n-1 or n+1: corrects one deletion or insertion (deleted symbol from
// the mod-7 check, candidate positions from the syndrome equation, the
// signature repaired by the shifted-VT decoder inside a P-window, then the
// unique reinsertion consistent with the recovered signature).
std::optional<QuaternaryWord> quat_edit_decode_indel(const QuaternaryWord& y,
                                                     const QuatEditCodeParams& params);

// Dispatch on received length.
std::optional<QuaternaryWord> quat_edit_decode(const QuaternaryWord& y,
                                               const QuatEditCodeParams& params);

// Framed encoder: the message is made restricted-sum-balanced, then the four
// syndromes are appended behind a two-symbol marker (r,r) with r chosen
// different from the last payload symbol:
//   z = y | M | R1 (Syn mod 4n+1) | R2 (signature Syn mod P) | R3 (parity) |
//       R4 (sum mod 7, two symbols)
struct QuatEditEncoderParams {
  size_t n = 0;   // payload length; the message has n-1 symbols
  size_t k = 0;   // restricted-balance window (default 72*ceil(log2 n))
  RsbParams rsb;

  static QuatEditEncoderParams make(size_t n);
  static QuatEditEncoderParams make(size_t n, size_t k);
  size_t k_prime() const { return 4 * k; }
  size_t P() const { return 5 * k_prime(); }
  size_t r1_width() const { return ceil_log4(4 * n + 1); }
  size_t r2_width() const { return ceil_log4(P()); }
  size_t codeword_length() const { return n + r1_width() + r2_width() + 5; }
  size_t redundancy_bits() const { return 2 * (codeword_length() - (n - 1)); }
  static size_t default_k_for(size_t n) { return 72 * ceil_log2(n); }
  static size_t redundancy_bits_for(size_t n) {
    size_t P = 5 * 4 * default_k_for(n);
    return 2 * (1 + ceil_log4(4 * n + 1) + ceil_log4(P) + 5);
  }
};

QuaternaryWord quat_edit_encode(const QuaternaryWord& msg, const QuatEditEncoderParams& params);
std::optional<QuaternaryWord> quat_edit_decode_frame(const QuaternaryWord& z,
                                                     const QuatEditEncoderParams& params);

}  // namespace dnacodec

#endif
