#include "dnacodec/burst2.hpp"

#include <optional>
#include <stdexcept>

namespace dnacodec {

bool burst2_member(const BinaryWord& x, uint64_t a) {
  if (x.empty()) throw std::invalid_argument("burst2_member: empty word");
  uint64_t mod = 2 * x.size();
  return run_syndrome_prefixed(x, mod) == a % mod;
}

std::optional<BinaryWord> burst2_decode(const BinaryWord& y, size_t n, uint64_t a) {
  if (n < 2) throw std::invalid_argument("burst2_decode: n must be >= 2");
  const uint64_t mod = 2 * n;
  a %= mod;

  if (y.size() == n)
    return burst2_member(y, a) ? std::optional<BinaryWord>(y) : std::nullopt;

  std::optional<BinaryWord> found;
  auto take = [&](BinaryWord cand) -> bool {
    if (found && *found != cand) return false;
    found = std::move(cand);
    return true;
  };

  if (y.size() + 2 == n) {
    for (size_t p = 1; p <= y.size() + 1; ++p) {
      for (uint8_t pair = 0; pair < 4; ++pair) {
        BinaryWord cand = y.inserted(p, static_cast<uint8_t>(pair >> 1))
                              .inserted(p + 1, static_cast<uint8_t>(pair & 1));
        if (run_syndrome_prefixed(cand, mod) == a) {
          if (!take(std::move(cand))) return std::nullopt;
        }
      }
    }
    return found;
  }

  if (y.size() == n + 2) {
    for (size_t p = 1; p + 1 <= y.size(); ++p) {
      BinaryWord cand = y.erased(p).erased(p);
      if (run_syndrome_prefixed(cand, mod) == a) {
        if (!take(std::move(cand))) return std::nullopt;
      }
    }
    return found;
  }

  throw std::invalid_argument("burst2_decode: received length must be n-2, n, or n+2");
}

}  // namespace dnacodec
