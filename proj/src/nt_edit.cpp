#include "dnacodec/nt_edit.hpp"

#include <stdexcept>

#include "dnacodec/levenshtein.hpp"
#include "dnacodec/rll.hpp"
#include "dnacodec/svt.hpp"

namespace dnacodec {

NtEditParams::NtEditParams(size_t n_, uint64_t a_, uint64_t b_, uint8_t c_)
    : n(n_), a(a_), b(b_), c(c_) {
  if (n < 2) throw std::invalid_argument("NtEditParams: n must be >= 2");
  if (P() > n) throw std::invalid_argument("NtEditParams: requires P = 2*ceil(log n)+5 <= n");
  if (a >= 2 * n) throw std::invalid_argument("NtEditParams: residue a must be < 2n");
  if (b >= P()) throw std::invalid_argument("NtEditParams: residue b must be < P");
  if (upper_message_length() < 8)
    throw std::invalid_argument("NtEditParams: n too small for the runlength limiter");
}

bool nt_edit_member(const DnaWord& s, const NtEditParams& params) {
  if (s.size() != params.n) throw std::invalid_argument("nt_edit_member: length mismatch");
  auto [u, l] = upper_lower(s);
  if (!lev_member(u, params.n, params.a)) return false;
  if (max_run(u) > params.r()) return false;
  return svt_member(l, SvtParams(params.n, params.P(), params.b, params.c));
}

DnaWord nt_edit_encode(const BinaryWord& msg, const NtEditParams& params) {
  if (msg.size() != params.message_length())
    throw std::invalid_argument("nt_edit_encode: bad message length");
  RllParams rll(params.n - ceil_log2(params.n) - 1);
  LevParams lev(params.n, params.a);
  SvtParams svt(params.n, params.P(), params.b, params.c);

  BinaryWord x1 = msg.slice(0, params.upper_message_length());
  BinaryWord x2 = msg.slice(params.upper_message_length(), params.lower_message_length());
  BinaryWord y1 = lev_encode(rll_encode(x1, rll), lev);
  BinaryWord y2 = svt_encode(x2, svt);
  return psi_inverse(interleave(y1, y2));
}

std::optional<BinaryWord> nt_edit_decode(const DnaWord& s, const NtEditParams& params) {
  const size_t n = params.n;
  RllParams rll(n - ceil_log2(n) - 1);
  LevParams lev(n, params.a);
  SvtParams svt(n, params.P(), params.b, params.c);

  auto [u, l] = upper_lower(s);
  auto detail = lev_decode_detailed(u, n, params.a);
  if (!detail) return std::nullopt;

  std::optional<BinaryWord> y2;
  if (s.size() == n) {
    if (detail->error_lo == 0) {
      // Clean upper sequence: in this model no substitution occurred at all.
      if (!svt_member(l, svt)) return std::nullopt;
      y2 = l;
    } else {
      y2 = svt_decode(l, PositionWindow{detail->error_lo, detail->error_hi}, svt);
    }
  } else {
    // The lower rail's indel sits at the same strand position as the upper
    // rail's, which the run interval confines to at most P candidates.
    y2 = svt_decode(l, PositionWindow{detail->error_lo, detail->error_hi}, svt);
  }
  if (!y2) return std::nullopt;

  auto x1 = rll_decode(detail->codeword.restrict_to(lev.message_positions()), rll);
  if (!x1) return std::nullopt;
  BinaryWord x2 = y2->restrict_to(svt.message_positions());
  return x1->concat(x2);
}

}  // namespace dnacodec
