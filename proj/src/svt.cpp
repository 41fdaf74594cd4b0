#include "dnacodec/svt.hpp"

#include <algorithm>
#include <stdexcept>

namespace dnacodec {

SvtParams::SvtParams(size_t n_, size_t P_, uint64_t c_, uint8_t d_)
    : n(n_), P(P_), c(c_), d(d_) {
  if (n == 0) throw std::invalid_argument("SvtParams: n must be positive");
  if (P < 2) throw std::invalid_argument("SvtParams: P must be >= 2");
  if (c >= P) throw std::invalid_argument("SvtParams: residue must be < P");
  if (d > 1) throw std::invalid_argument("SvtParams: parity must be 0 or 1");
}

std::vector<size_t> SvtParams::syndrome_positions() const {
  std::vector<size_t> s;
  for (size_t j = 1, p = 1; j <= t(); ++j, p <<= 1) s.push_back(p);
  s.push_back(P);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<size_t> SvtParams::message_positions() const {
  std::vector<size_t> s = syndrome_positions();
  std::vector<size_t> i;
  size_t si = 0;
  for (size_t p = 1; p <= n; ++p) {
    if (si < s.size() && s[si] == p) {
      ++si;
    } else {
      i.push_back(p);
    }
  }
  return i;
}

bool svt_member(const BinaryWord& x, const SvtParams& params) {
  if (x.size() != params.n) throw std::invalid_argument("svt_member: length mismatch");
  return vt_syndrome(x, params.P) == params.c && weight(x) % 2 == params.d;
}

BinaryWord svt_encode(const BinaryWord& msg, const SvtParams& params) {
  if (!params.encodable())
    throw std::invalid_argument("svt_encode: requires P <= n");
  if (msg.size() != params.message_length())
    throw std::invalid_argument("svt_encode: bad message length");
  const size_t t = params.t();
  BinaryWord x = BinaryWord::zeros(params.n);
  std::vector<size_t> ipos = params.message_positions();
  for (size_t i = 0; i < ipos.size(); ++i) x.set1(ipos[i], msg[i]);

  uint64_t dprime = (params.c + params.P - vt_syndrome(x, params.P)) % params.P;
  for (size_t j = 1, p = 1; j <= t; ++j, p <<= 1)
    x.set1(p, static_cast<uint8_t>((dprime >> (j - 1)) & 1));
  // Position P contributes 0 mod P to the syndrome, so it can carry parity.
  uint8_t par = static_cast<uint8_t>((weight(x) - x.at1(params.P)) % 2);
  x.set1(params.P, static_cast<uint8_t>((params.d + 2 - par) % 2));
  return x;
}

std::optional<BinaryWord> svt_decode(const BinaryWord& y, PositionWindow window,
                                     const SvtParams& params) {
  const size_t n = params.n;
  const uint64_t P = params.P;
  if (window.lo == 0 || window.lo > window.hi)
    throw std::invalid_argument("svt_decode: empty window");

  std::vector<size_t> suffix_ones(y.size() + 2, 0);
  for (size_t i = y.size(); i >= 1; --i) suffix_ones[i] = suffix_ones[i + 1] + y.at1(i);

  std::optional<BinaryWord> found;
  auto take = [&](BinaryWord cand) -> bool {
    if (found && *found != cand) {
      found.reset();
      return false;  // ambiguous
    }
    found = std::move(cand);
    return true;
  };

  if (y.size() + 1 == n) {
    uint8_t b = static_cast<uint8_t>((params.d + 2 - weight(y) % 2) % 2);
    uint64_t target = (params.c + P - vt_syndrome(y, P)) % P;
    for (size_t p = window.lo; p <= std::min<size_t>(window.hi, y.size() + 1); ++p) {
      uint64_t gap = (static_cast<uint64_t>(b) * p + suffix_ones[p]) % P;
      if (gap == target) {
        if (!take(y.inserted(p, b))) return std::nullopt;
      }
    }
    return found;
  }

  if (y.size() == n + 1) {
    uint8_t b = static_cast<uint8_t>((weight(y) + 2 - params.d) % 2);
    uint64_t target = (vt_syndrome(y, P) + P - params.c) % P;
    for (size_t p = window.lo; p <= std::min<size_t>(window.hi, y.size()); ++p) {
      if (y.at1(p) != b) continue;
      uint64_t gap = (static_cast<uint64_t>(b) * p + suffix_ones[p + 1]) % P;
      if (gap == target) {
        if (!take(y.erased(p))) return std::nullopt;
      }
    }
    return found;
  }

  if (y.size() == n) {
    bool parity_ok = weight(y) % 2 == params.d;
    bool syn_ok = vt_syndrome(y, P) == params.c;
    if (parity_ok) return syn_ok ? std::optional<BinaryWord>(y) : std::nullopt;
    // A binary substitution always flips the parity; find the flip in-window.
    uint64_t syn = vt_syndrome(y, P);
    for (size_t p = window.lo; p <= std::min<size_t>(window.hi, y.size()); ++p) {
      uint64_t flipped = y.at1(p) ? (syn + P - p % P) % P : (syn + p) % P;
      if (flipped == params.c) {
        BinaryWord cand = y;
        cand.set1(p, static_cast<uint8_t>(1 - y.at1(p)));
        if (!take(std::move(cand))) return std::nullopt;
      }
    }
    return found;
  }

  throw std::invalid_argument("svt_decode: received length must be n-1, n, or n+1");
}

}  // namespace dnacodec
