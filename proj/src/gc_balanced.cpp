#include "dnacodec/gc_balanced.hpp"

#include <stdexcept>

#include "dnacodec/knuth.hpp"
#include "dnacodec/levenshtein.hpp"

namespace dnacodec {

GcParams::GcParams(size_t n_, uint64_t a_) : n(n_), a(a_) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("GcParams: n must be even and >= 2");
  if (2 * n < 3 * t() + 2 + 1) throw std::invalid_argument("GcParams: n too small");
  if (a >= 2 * n) throw std::invalid_argument("GcParams: residue must be < 2n");
}

DnaWord gc_encode(const BinaryWord& msg, const GcParams& params) {
  const size_t n = params.n;
  const size_t t = params.t();
  if (msg.size() != params.message_length())
    throw std::invalid_argument("gc_encode: bad message length");

  BinaryWord x = msg.slice(0, n);
  BinaryWord y = msg.slice(n, msg.size() - n);
  auto [z, k] = knuth_balance(x);
  uint64_t d = vt_syndrome(z, 2 * n);
  BinaryWord dbits = to_bits(d, t + 1);
  // k in [1, n] with n <= 2^t; k mod 2^t is injective, 0 meaning k = n = 2^t.
  BinaryWord kbits = to_bits(k % (size_t{1} << t), t);

  LevParams lev(n, params.a);
  BinaryWord c = lev_encode(y.concat(dbits).concat(kbits), lev);
  return psi_inverse(interleave(z, c));
}

std::optional<BinaryWord> gc_decode(const DnaWord& s, const GcParams& params) {
  const size_t n = params.n;
  const size_t t = params.t();
  LevParams lev(n, params.a);

  auto [zhat, chat] = upper_lower(s);
  auto inner = lev_decode_message(chat, lev);
  if (!inner) return std::nullopt;

  size_t ylen = n - 3 * t - 2;
  BinaryWord y = inner->slice(0, ylen);
  uint64_t d = from_bits(inner->slice(ylen, t + 1));
  size_t k = static_cast<size_t>(from_bits(inner->slice(ylen + t + 1, t)));
  if (k == 0) k = size_t{1} << t;
  if (d >= 2 * n || k > n) return std::nullopt;

  auto z = lev_decode_codeword(zhat, n, d);
  if (!z) return std::nullopt;
  BinaryWord x = knuth_unbalance(*z, k);
  return x.concat(y);
}

}  // namespace dnacodec
