#include "dnacodec/rll.hpp"

#include <stdexcept>

namespace dnacodec {

RllParams::RllParams(size_t n_) : n(n_) {
  if (n < 8) throw std::invalid_argument("RllParams: n must be >= 8");
}

namespace {

// Start of the leftmost run longer than `limit`, or 0 if none. 1-based.
size_t find_long_run(const std::vector<uint8_t>& w, size_t limit) {
  size_t start = 0, len = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w[i] == w[i - 1]) {
      ++len;
    } else {
      start = i;
      len = 1;
    }
    if (len > limit) return start + 1;
  }
  return 0;
}

}  // namespace

BinaryWord rll_encode(const BinaryWord& msg, const RllParams& params) {
  const size_t n = params.n;
  if (msg.size() != n - 1) throw std::invalid_argument("rll_encode: bad message length");
  const size_t lp = params.pointer_bits();
  const size_t rec = params.record_bits();
  const size_t limit = params.run_limit();

  std::vector<uint8_t> w = msg.data();
  w.push_back(0);

  const size_t max_iter = 8 * n + 64;
  for (size_t iter = 0;; ++iter) {
    size_t p = find_long_run(w, limit);
    if (p == 0) break;
    if (iter >= max_iter)
      throw std::runtime_error("rll_encode: replacement did not settle within the iteration bound");
    uint8_t s = w[p - 1];
    w.erase(w.begin() + (p - 1), w.begin() + (p - 1) + rec);
    for (size_t j = 0; j < lp; ++j)
      w.push_back(static_cast<uint8_t>(((p - 1) >> (lp - 1 - j)) & 1));
    w.push_back(s);
    w.push_back(1);
  }
  return BinaryWord(std::move(w));
}

std::optional<BinaryWord> rll_decode(const BinaryWord& word, const RllParams& params) {
  const size_t n = params.n;
  if (word.size() != n) return std::nullopt;
  const size_t lp = params.pointer_bits();
  const size_t rec = params.record_bits();

  std::vector<uint8_t> w = word.data();
  const size_t max_iter = 8 * n + 64;
  for (size_t iter = 0; iter < max_iter; ++iter) {
    if (w.back() == 0) {
      w.pop_back();
      return BinaryWord(std::move(w));
    }
    uint8_t s = w[w.size() - 2];
    size_t p = 0;
    for (size_t j = 0; j < lp; ++j) p = (p << 1) | w[w.size() - rec + j];
    ++p;
    w.resize(w.size() - rec);
    if (p > w.size() + 1) return std::nullopt;
    w.insert(w.begin() + (p - 1), rec, s);
  }
  return std::nullopt;
}

}  // namespace dnacodec
