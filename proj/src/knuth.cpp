#include "dnacodec/knuth.hpp"

#include <stdexcept>

namespace dnacodec {

std::pair<BinaryWord, size_t> knuth_balance(const BinaryWord& x) {
  const size_t n = x.size();
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("knuth_balance: length must be even");
  ptrdiff_t w = static_cast<ptrdiff_t>(weight(x));
  // Flipping one more prefix bit moves the weight by +-1 and flipping all n
  // bits lands on n - w, so some k in [1, n] hits n/2.
  for (size_t k = 1; k <= n; ++k) {
    w += x[k - 1] ? -1 : 1;
    if (w == static_cast<ptrdiff_t>(n / 2)) {
      BinaryWord z = x;
      for (size_t i = 0; i < k; ++i) z.set(i, static_cast<uint8_t>(1 - x[i]));
      return {z, k};
    }
  }
  throw std::logic_error("knuth_balance: no balancing index");
}

BinaryWord knuth_unbalance(const BinaryWord& z, size_t k) {
  if (k > z.size()) throw std::invalid_argument("knuth_unbalance: index out of range");
  BinaryWord x = z;
  for (size_t i = 0; i < k; ++i) x.set(i, static_cast<uint8_t>(1 - z[i]));
  return x;
}

}  // namespace dnacodec
