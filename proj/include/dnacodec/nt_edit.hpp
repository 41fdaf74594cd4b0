#ifndef DNACODEC_NT_EDIT_HPP
#define DNACODEC_NT_EDIT_HPP

#include <cstdint>
#include <optional>

#include "dnacodec/words.hpp"

namespace dnacodec {

// Codec for the nucleotide-edit channel, where a substitution always flips
// the first bit of the two-bit symbol (A<->{C,G}, T<->{C,G}, C<->{A,T},
// G<->{A,T}). The upper sequence carries a runlength-limited Levenshtein
// codeword that both corrects its own edit and localizes the lower-sequence
// error; the lower sequence carries a shifted-VT codeword.
struct NtEditParams {
  size_t n = 0;
  uint64_t a = 0;  // Levenshtein residue mod 2n, upper rail
  uint64_t b = 0;  // SVT residue mod P, lower rail
  uint8_t c = 0;   // SVT parity

  NtEditParams(size_t n_, uint64_t a_, uint64_t b_, uint8_t c_);
  size_t r() const { return 2 * ceil_log2(n) + 4; }
  size_t P() const { return r() + 1; }
  size_t t() const { return ceil_log2(P()) + 1; }
  size_t upper_message_length() const { return n - ceil_log2(n) - 2; }
  size_t lower_message_length() const { return n - t(); }
  size_t message_length() const { return 2 * n - ceil_log2(n) - t() - 2; }
  static size_t P_for(size_t n) { return 2 * ceil_log2(n) + 5; }
  static size_t message_length_for(size_t n) {
    return 2 * n - ceil_log2(n) - (ceil_log2(P_for(n)) + 1) - 2;
  }
};

bool nt_edit_member(const DnaWord& s, const NtEditParams& params);

DnaWord nt_edit_encode(const BinaryWord& msg, const NtEditParams& params);

// |s| in {n-1, n, n+1}; corruption outside the nucleotide model is not
// detected and may mis-decode.
std::optional<BinaryWord> nt_edit_decode(const DnaWord& s, const NtEditParams& params);

}  // namespace dnacodec

#endif
