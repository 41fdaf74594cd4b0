#include "dnacodec/levenshtein.hpp"

#include <algorithm>
#include <stdexcept>

namespace dnacodec {

LevParams::LevParams(size_t n_, uint64_t a_) : n(n_), a(a_) {
  if (n < 2) throw std::invalid_argument("LevParams: n must be >= 2");
  if (a >= 2 * n) throw std::invalid_argument("LevParams: residue must be < 2n");
  if (n < t() + 1) throw std::invalid_argument("LevParams: n too small for t+1 redundancy positions");
  if (syndrome_positions().size() != t() + 1)
    throw std::invalid_argument("LevParams: redundancy positions collide");
}

std::vector<size_t> LevParams::syndrome_positions() const {
  std::vector<size_t> s;
  for (size_t j = 1, p = 1; j <= t(); ++j, p <<= 1) s.push_back(p);
  s.push_back(n);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<size_t> LevParams::message_positions() const {
  std::vector<size_t> s = syndrome_positions();
  std::vector<size_t> i;
  i.reserve(n - s.size());
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

bool lev_member(const BinaryWord& x, size_t n, uint64_t a) {
  if (x.size() != n) throw std::invalid_argument("lev_member: length mismatch");
  return vt_syndrome(x, 2 * n) == a % (2 * n);
}

BinaryWord lev_encode(const BinaryWord& msg, const LevParams& params) {
  const size_t n = params.n;
  const size_t t = params.t();
  if (msg.size() != params.message_length())
    throw std::invalid_argument("lev_encode: bad message length");

  BinaryWord c = BinaryWord::zeros(n);
  std::vector<size_t> ipos = params.message_positions();
  for (size_t i = 0; i < ipos.size(); ++i) c.set1(ipos[i], msg[i]);

  uint64_t mod = 2 * n;
  uint64_t dprime = (params.a + mod - vt_syndrome(c, mod)) % mod;
  uint64_t value = dprime;
  if (dprime >= n) {
    value = dprime - n;
    c.set1(n, 1);
  } else {
    c.set1(n, 0);
  }
  // value < n <= 2^t; bit j-1 of the value goes to position 2^{j-1}.
  for (size_t j = 1, p = 1; j <= t; ++j, p <<= 1)
    c.set1(p, static_cast<uint8_t>((value >> (j - 1)) & 1));
  return c;
}

namespace {

// Valid deletion positions of `word` that produce `shorter` form one run of
// `word`; returns it, or lo>hi when `shorter` is not a single deletion.
std::pair<size_t, size_t> deletion_interval(const BinaryWord& word, const BinaryWord& shorter) {
  if (word.size() != shorter.size() + 1) return {1, 0};
  size_t first = word.size();
  for (size_t i = 0; i < shorter.size(); ++i) {
    if (word[i] != shorter[i]) {
      first = i + 1;
      break;
    }
  }
  // Deleting any bit of the run containing `first` gives the same word;
  // verify the tail actually matches.
  for (size_t i = first; i < word.size(); ++i)
    if (shorter[i - 1] != word[i]) return {1, 0};
  size_t lo = first, hi = first;
  while (lo > 1 && word[lo - 2] == word[first - 1]) --lo;
  while (hi < word.size() && word[hi] == word[first - 1]) ++hi;
  return {lo, hi};
}

}  // namespace

std::optional<LevDecodeDetail> lev_decode_detailed(const BinaryWord& y, size_t n, uint64_t a) {
  if (n < 2) throw std::invalid_argument("lev_decode: n must be >= 2");
  const uint64_t mod = 2 * n;
  a %= mod;

  if (y.size() == n) {
    uint64_t delta = (a + mod - vt_syndrome(y, mod)) % mod;
    if (delta == 0) return LevDecodeDetail{y, 0, 0};
    BinaryWord c = y;
    size_t p;
    if (delta <= n) {
      p = static_cast<size_t>(delta);     // a one was cleared at p (or p=n either way)
      if (delta < n && y.at1(p) != 0) return std::nullopt;
      c.set1(p, static_cast<uint8_t>(1 - y.at1(p)));
    } else {
      p = static_cast<size_t>(mod - delta);  // a zero was set at p
      if (y.at1(p) != 1) return std::nullopt;
      c.set1(p, 0);
    }
    return LevDecodeDetail{c, p, p};
  }

  if (y.size() + 1 == n) {
    // One deletion. gap = b*p + (# ones of y at positions >= p) for the
    // deleted bit b reinserted at position p of the codeword.
    uint64_t delta = (a + mod - vt_syndrome(y, mod)) % mod;
    if (delta > n) return std::nullopt;
    size_t w = weight(y);
    std::vector<size_t> suffix_ones(y.size() + 2, 0);
    for (size_t i = y.size(); i >= 1; --i)
      suffix_ones[i] = suffix_ones[i + 1] + y.at1(i);
    if (delta <= w) {
      // A zero was deleted: insert 0 with exactly delta ones to its right.
      for (size_t p = 1; p <= y.size() + 1; ++p) {
        if (suffix_ones[p] == delta) {
          BinaryWord c = y.inserted(p, 0);
          auto [lo, hi] = deletion_interval(c, y);
          return LevDecodeDetail{c, lo, hi};
        }
      }
      return std::nullopt;
    }
    for (size_t p = 1; p <= y.size() + 1; ++p) {
      if (p + suffix_ones[p] == delta) {
        BinaryWord c = y.inserted(p, 1);
        auto [lo, hi] = deletion_interval(c, y);
        return LevDecodeDetail{c, lo, hi};
      }
    }
    return std::nullopt;
  }

  if (y.size() == n + 1) {
    // One insertion: remove the bit at position p; gap = y_p*p + ones after p.
    uint64_t delta = (vt_syndrome(y, mod) + mod - a) % mod;
    if (delta > n + 1) return std::nullopt;
    std::vector<size_t> suffix_ones(y.size() + 2, 0);
    for (size_t i = y.size(); i >= 1; --i)
      suffix_ones[i] = suffix_ones[i + 1] + y.at1(i);
    std::optional<BinaryWord> found;
    size_t found_pos = 0;
    for (size_t p = 1; p <= y.size(); ++p) {
      uint64_t gap = static_cast<uint64_t>(y.at1(p)) * p + suffix_ones[p + 1];
      if (gap != delta) continue;
      BinaryWord c = y.erased(p);
      if (found && *found != c) return std::nullopt;  // outside every edit ball
      if (!found) {
        found = c;
        found_pos = p;
      }
    }
    if (!found) return std::nullopt;
    // All removal positions of y yielding the codeword form a run of y.
    size_t lo = found_pos, hi = found_pos;
    while (lo > 1 && y.at1(lo - 1) == y.at1(found_pos)) --lo;
    while (hi < y.size() && y.at1(hi + 1) == y.at1(found_pos)) ++hi;
    return LevDecodeDetail{*found, lo, hi};
  }

  throw std::invalid_argument("lev_decode: received length must be n-1, n, or n+1");
}

std::optional<BinaryWord> lev_decode_codeword(const BinaryWord& y, size_t n, uint64_t a) {
  auto detail = lev_decode_detailed(y, n, a);
  if (!detail) return std::nullopt;
  return detail->codeword;
}

std::optional<BinaryWord> lev_decode_message(const BinaryWord& y, const LevParams& params) {
  auto c = lev_decode_codeword(y, params.n, params.a);
  if (!c) return std::nullopt;
  return c->restrict_to(params.message_positions());
}

}  // namespace dnacodec
