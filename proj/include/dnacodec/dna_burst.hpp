#ifndef DNACODEC_DNA_BURST_HPP
#define DNACODEC_DNA_BURST_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dnacodec/words.hpp"

namespace dnacodec {

// Column-major array view: row i of an r-row array over a word of length r*N
// is x_i, x_{r+i}, x_{2r+i}, ...; the word is the column-by-column readout.
std::vector<BinaryWord> array_rows(const BinaryWord& x, size_t rows);
BinaryWord array_unrows(const std::vector<BinaryWord>& rows);

// DNA code correcting one burst of exactly b inserted or deleted
// nucleotides. Under the two-bit map a b-burst becomes a 2b-burst, and the
// 2b rows of the binary array each suffer exactly one indel: row 1 carries a
// runlength-limited Levenshtein codeword (locating the error to a window),
// rows 2..2b carry shifted-VT codewords decoded inside that window. Any
// b >= 1 is accepted; the window bound is argued for constant b.
struct DnaBurstParams {
  size_t b = 0;   // burst length, in nucleotides
  size_t N = 0;   // columns; the strand has b*N nucleotides
  uint64_t a = 0; // Levenshtein residue mod 2N for row 1
  uint64_t c = 0; // SVT residue mod P
  uint8_t d = 0;  // SVT parity

  DnaBurstParams(size_t b_, size_t N_, uint64_t a_, uint64_t c_, uint8_t d_);
  size_t r() const { return 2 * ceil_log2(N) + 4; }
  size_t P() const { return r() + 1; }
  size_t t() const { return ceil_log2(P()); }
  size_t strand_length() const { return b * N; }
  size_t row1_message_length() const { return N - ceil_log2(N) - 2; }
  size_t svt_message_length() const { return N - t() - 1; }
  size_t message_length() const {
    return 2 * b * N - ceil_log2(N) - (2 * b - 1) * (t() + 1) - 2;
  }
};

bool dna_burst_member(const DnaWord& s, const DnaBurstParams& params);

DnaWord dna_burst_encode(const BinaryWord& msg, const DnaBurstParams& params);

// |s| in {bN-b, bN, bN+b}.
std::optional<BinaryWord> dna_burst_decode(const DnaWord& s, const DnaBurstParams& params);

}  // namespace dnacodec

#endif
