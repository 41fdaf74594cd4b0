#include "dnacodec/dual_rail.hpp"

#include <stdexcept>

#include "dnacodec/levenshtein.hpp"

namespace dnacodec {

DualRailParams::DualRailParams(size_t n_, uint64_t a1_, uint64_t a2_) : n(n_), a1(a1_), a2(a2_) {
  if (n < 2) throw std::invalid_argument("DualRailParams: n must be >= 2");
  if (a1 >= 2 * n || a2 >= 2 * n) throw std::invalid_argument("DualRailParams: residues must be < 2n");
}

DnaWord dual_rail_encode(const BinaryWord& msg, const DualRailParams& params) {
  if (msg.size() != params.message_length())
    throw std::invalid_argument("dual_rail_encode: bad message length");
  size_t half = params.rail_message_length();
  BinaryWord c1 = lev_encode(msg.slice(0, half), LevParams(params.n, params.a1));
  BinaryWord c2 = lev_encode(msg.slice(half, half), LevParams(params.n, params.a2));
  return psi_inverse(interleave(c1, c2));
}

std::optional<BinaryWord> dual_rail_decode(const DnaWord& s, const DualRailParams& params) {
  LevParams lev1(params.n, params.a1);
  LevParams lev2(params.n, params.a2);
  auto [u, l] = upper_lower(s);
  auto x1 = lev_decode_message(u, lev1);
  auto x2 = lev_decode_message(l, lev2);
  if (!x1 || !x2) return std::nullopt;
  return x1->concat(*x2);
}

}  // namespace dnacodec
