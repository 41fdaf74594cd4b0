#ifndef DNACODEC_DNA_INDEL_HPP
#define DNACODEC_DNA_INDEL_HPP

#include <cstdint>
#include <optional>

#include "dnacodec/words.hpp"

namespace dnacodec {

// DNA single-indel code: strands whose image under the two-bit map lies in
// the binary 2-burst code of length 2n, i.e. Rsyn(0.psi(s)) = a (mod 4n).
// The encoder routes a message through the length-2n Levenshtein encoder at
// residue -a, then pulls it back through phi^{-1} and psi^{-1}.
struct DnaIndelParams {
  size_t n = 0;
  uint64_t a = 0;  // residue mod 4n

  DnaIndelParams(size_t n_, uint64_t a_);
  size_t message_length() const { return 2 * n - ceil_log2(n) - 2; }
  static size_t message_length_for(size_t n) { return 2 * n - ceil_log2(n) - 2; }
};

bool dna_indel_member(const DnaWord& s, const DnaIndelParams& params);

DnaWord dna_indel_encode(const BinaryWord& msg, const DnaIndelParams& params);

// Message-level decode; |s| in {n-1, n, n+1}.
std::optional<BinaryWord> dna_indel_decode(const DnaWord& s, const DnaIndelParams& params);

// Codeword-level decode, for sweeps over membership-defined codewords.
std::optional<DnaWord> dna_indel_decode_codeword(const DnaWord& s, const DnaIndelParams& params);

}  // namespace dnacodec

#endif
