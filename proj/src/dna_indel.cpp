#include "dnacodec/dna_indel.hpp"

#include <stdexcept>

#include "dnacodec/burst2.hpp"
#include "dnacodec/levenshtein.hpp"

namespace dnacodec {

DnaIndelParams::DnaIndelParams(size_t n_, uint64_t a_) : n(n_), a(a_) {
  if (n < 2) throw std::invalid_argument("DnaIndelParams: n must be >= 2");
  if (a >= 4 * n) throw std::invalid_argument("DnaIndelParams: residue must be < 4n");
}

bool dna_indel_member(const DnaWord& s, const DnaIndelParams& params) {
  if (s.size() != params.n) throw std::invalid_argument("dna_indel_member: length mismatch");
  return burst2_member(psi(s), params.a);
}

DnaWord dna_indel_encode(const BinaryWord& msg, const DnaIndelParams& params) {
  const size_t n2 = 2 * params.n;
  // m = 2n - ceil(log n) - 2 = 2n - ceil(log 2n) - 1, the Levenshtein message
  // length at codeword length 2n.
  LevParams lev(n2, (4 * params.n - params.a) % (4 * params.n));
  if (msg.size() != params.message_length())
    throw std::invalid_argument("dna_indel_encode: bad message length");
  BinaryWord c = lev_encode(msg, lev);
  return psi_inverse(phi_inverse(c));
}

std::optional<BinaryWord> dna_indel_decode(const DnaWord& s, const DnaIndelParams& params) {
  auto cw = dna_indel_decode_codeword(s, params);
  if (!cw) return std::nullopt;
  BinaryWord c = phi(psi(*cw));
  LevParams lev(2 * params.n, (4 * params.n - params.a) % (4 * params.n));
  return c.restrict_to(lev.message_positions());
}

std::optional<DnaWord> dna_indel_decode_codeword(const DnaWord& s, const DnaIndelParams& params) {
  const size_t n = params.n;
  if (s.size() + 1 != n && s.size() != n && s.size() != n + 1)
    throw std::invalid_argument("dna_indel_decode: received length must be n-1, n, or n+1");
  auto c_prime = burst2_decode(psi(s), 2 * n, params.a);
  if (!c_prime) return std::nullopt;
  return psi_inverse(*c_prime);
}

}  // namespace dnacodec
