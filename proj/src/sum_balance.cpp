#include "dnacodec/sum_balance.hpp"

#include <algorithm>
#include <stdexcept>

namespace dnacodec {

bool is_sum_balanced(const QuaternaryWord& x, size_t k) {
  if (k == 0) throw std::invalid_argument("is_sum_balanced: k must be >= 1");
  const size_t n = x.size();
  if (k > n) return true;
  std::vector<uint64_t> prefix(n + 1, 0);
  for (size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + x[i];
  const size_t hi_len = std::min(n, 2 * k - 1);
  for (size_t len = k; len <= hi_len; ++len) {
    for (size_t start = 0; start + len <= n; ++start) {
      uint64_t s = prefix[start + len] - prefix[start];
      if (s <= len || s >= 2 * len) return false;
    }
  }
  return true;
}

bool window_sum_restricted(uint64_t sum, size_t k) {
  return 4 * sum > 5 * k && 4 * sum < 7 * k;
}

bool is_restricted_sum_balanced(const QuaternaryWord& x, size_t k) {
  if (k == 0) throw std::invalid_argument("is_restricted_sum_balanced: k must be >= 1");
  const size_t n = x.size();
  if (k > n) return true;
  uint64_t sum = 0;
  for (size_t i = 0; i < k; ++i) sum += x[i];
  if (!window_sum_restricted(sum, k)) return false;
  for (size_t start = 1; start + k <= n; ++start) {
    sum += x[start + k - 1];
    sum -= x[start - 1];
    if (!window_sum_restricted(sum, k)) return false;
  }
  return true;
}

BigUint::BigUint(uint64_t v) {
  if (v != 0) limbs_.push_back(v);
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigUint::add(const BigUint& o) {
  if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    __uint128_t s = static_cast<__uint128_t>(limbs_[i]) + carry;
    if (i < o.limbs_.size()) s += o.limbs_[i];
    limbs_[i] = static_cast<uint64_t>(s);
    carry = static_cast<uint64_t>(s >> 64);
  }
  if (carry) limbs_.push_back(carry);
}

void BigUint::sub(const BigUint& o) {
  if (compare(o) < 0) throw std::invalid_argument("BigUint::sub: would underflow");
  uint64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t rhs = (i < o.limbs_.size() ? o.limbs_[i] : 0);
    uint64_t lhs = limbs_[i];
    uint64_t res = lhs - rhs - borrow;
    borrow = (lhs < rhs + borrow || (rhs == UINT64_MAX && borrow)) ? 1 : 0;
    limbs_[i] = res;
  }
  trim();
}

int BigUint::compare(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  }
  return 0;
}

size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  uint64_t top = limbs_.back();
  size_t bits = 0;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits + 64 * (limbs_.size() - 1);
}

uint64_t BigUint::to_u64() const {
  if (limbs_.size() > 1) throw std::invalid_argument("BigUint::to_u64: too large");
  return limbs_.empty() ? 0 : limbs_[0];
}

std::string BigUint::to_decimal() const {
  if (limbs_.empty()) return "0";
  std::vector<uint64_t> work = limbs_;
  std::string out;
  while (!work.empty()) {
    uint64_t rem = 0;
    for (size_t i = work.size(); i-- > 0;) {
      __uint128_t cur = (static_cast<__uint128_t>(rem) << 64) | work[i];
      work[i] = static_cast<uint64_t>(cur / 10);
      rem = static_cast<uint64_t>(cur % 10);
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    out.push_back(static_cast<char>('0' + rem));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

WindowRanker::WindowRanker(size_t k) : k_(k) {
  if (k == 0) throw std::invalid_argument("WindowRanker: k must be >= 1");
  // Rolling pass for the total only; the full table waits for rank/unrank.
  std::vector<BigUint> row(3 * k + 1);
  for (size_t s = 0; s <= 3 * k; ++s)
    if (!window_sum_restricted(s, k)) row[s] = BigUint(1);
  for (size_t i = k; i-- > 0;) {
    std::vector<BigUint> prev(3 * i + 1);
    for (size_t s = 0; s <= 3 * i; ++s) {
      BigUint acc;
      for (uint8_t d = 0; d < 4; ++d) acc.add(row[s + d]);
      prev[s] = std::move(acc);
    }
    row = std::move(prev);
  }
  total_ = row[0];
  if (total_.is_zero() || total_.bit_length() <= 1) {
    rank_width_ = 0;  // V_k <= 1: the empty representation suffices
  } else {
    BigUint less = total_;
    less.sub(BigUint(1));
    rank_width_ = (less.bit_length() + 1) / 2;
  }
}

void WindowRanker::ensure_table() const {
  std::call_once(table_once_, [&] {
    const size_t k = k_;
    // count(i, s): fill positions i..k-1 so that the total (s + rest)
    // violates.
    table_.assign((k + 1) * (3 * k + 1), BigUint());
    auto at = [&](size_t i, size_t s) -> BigUint& { return table_[i * (3 * k + 1) + s]; };
    for (size_t s = 0; s <= 3 * k; ++s)
      if (!window_sum_restricted(s, k)) at(k, s) = BigUint(1);
    for (size_t i = k; i-- > 0;) {
      for (size_t s = 0; s <= 3 * i; ++s) {
        BigUint acc;
        for (uint8_t d = 0; d < 4; ++d) acc.add(at(i + 1, s + d));
        at(i, s) = std::move(acc);
      }
    }
  });
}

const BigUint& WindowRanker::count(size_t i, uint64_t s) const {
  return table_[i * (3 * k_ + 1) + s];
}

BigUint WindowRanker::rank(const QuaternaryWord& w) const {
  if (w.size() != k_) throw std::invalid_argument("WindowRanker::rank: wrong length");
  if (window_sum_restricted(symbol_sum(w), k_))
    throw std::invalid_argument("WindowRanker::rank: window does not violate the constraint");
  ensure_table();
  BigUint r;
  uint64_t s = 0;
  for (size_t i = 0; i < k_; ++i) {
    for (uint8_t d = 0; d < w[i]; ++d) r.add(count(i + 1, s + d));
    s += w[i];
  }
  return r;
}

QuaternaryWord WindowRanker::unrank(const BigUint& idx) const {
  if (!(idx < total_)) throw std::invalid_argument("WindowRanker::unrank: index out of range");
  ensure_table();
  BigUint rem = idx;
  QuaternaryWord w;
  uint64_t s = 0;
  for (size_t i = 0; i < k_; ++i) {
    uint8_t d = 0;
    for (; d < 3; ++d) {
      const BigUint& c = count(i + 1, s + d);
      if (rem < c) break;
      rem.sub(c);
    }
    w.push_back(d);
    s += d;
  }
  return w;
}

RsbParams RsbParams::make(size_t n, size_t k) {
  if (n < 2) throw std::invalid_argument("RsbParams: n must be >= 2");
  if (k == 0) throw std::invalid_argument("RsbParams: k must be >= 1");
  RsbParams p;
  p.n = n;
  p.k = k;
  if (k > n) {
    p.mode = Mode::vacuous;
    return p;
  }
  auto ranker = std::make_shared<WindowRanker>(k);
  p.ptr_width = ceil_log4(n);
  p.rank_width = ranker->rank_width();
  size_t head = 1 + p.ptr_width + p.rank_width;  // flag + pointer + rank
  if (head < k) {
    p.mode = Mode::active;
    p.pad = k - head;
    p.ranker = std::move(ranker);
  } else {
    // The violating-window rank does not fit below k symbols; replacements
    // are impossible at these parameters and encoding falls back to the bare
    // flag append without the balance guarantee.
    p.mode = Mode::passthrough;
  }
  return p;
}

QuaternaryWord rsb_encode(const QuaternaryWord& msg, const RsbParams& params) {
  const size_t n = params.n;
  const size_t k = params.k;
  if (msg.size() != n - 1) throw std::invalid_argument("rsb_encode: bad message length");

  QuaternaryWord w = msg;
  w.push_back(0);
  if (params.mode != RsbParams::Mode::active) return w;

  // Powers of four for emitting rank digits, most significant first.
  std::vector<BigUint> pow4(params.rank_width);
  if (params.rank_width > 0) {
    pow4[params.rank_width - 1] = BigUint(1);
    for (size_t i = params.rank_width - 1; i-- > 0;) {
      BigUint q = pow4[i + 1];
      q.add(pow4[i + 1]);
      q.add(q);
      pow4[i] = std::move(q);
    }
  }

  const size_t max_iter = 8 * n + 64;
  for (size_t iter = 0;; ++iter) {
    // Leftmost violating window of length exactly k.
    size_t viol = 0;  // 1-based start, 0 = none
    uint64_t sum = 0;
    for (size_t i = 0; i < k; ++i) sum += w[i];
    if (!window_sum_restricted(sum, k)) {
      viol = 1;
    } else {
      for (size_t start = 1; start + k <= n; ++start) {
        sum += w[start + k - 1];
        sum -= w[start - 1];
        if (!window_sum_restricted(sum, k)) {
          viol = start + 1;
          break;
        }
      }
    }
    if (viol == 0) break;
    if (iter >= max_iter)
      throw std::runtime_error("rsb_encode: replacement did not settle within the iteration bound");

    QuaternaryWord window = w.slice(viol - 1, k);
    BigUint rem = params.ranker->rank(window);
    // Excise and append the fixed-length record.
    QuaternaryWord next = w.slice(0, viol - 1).concat(w.slice(viol - 1 + k, n - (viol - 1) - k));
    next = next.concat(to_quaternary(viol - 1, params.ptr_width));
    for (size_t i = 0; i < params.rank_width; ++i) {
      uint8_t d = 0;
      while (d < 3 && !(rem < pow4[i])) {
        rem.sub(pow4[i]);
        ++d;
      }
      next.push_back(d);
    }
    if (!rem.is_zero())
      throw std::runtime_error("rsb_encode: rank overflows its field");
    for (size_t i = 0; i < params.pad; ++i) next.push_back(2);
    next.push_back(1);
    w = std::move(next);
  }
  return w;
}

std::optional<QuaternaryWord> rsb_decode(const QuaternaryWord& word, const RsbParams& params) {
  const size_t n = params.n;
  if (word.size() != n) return std::nullopt;
  QuaternaryWord w = word;
  const size_t max_iter = 8 * n + 64;
  for (size_t iter = 0; iter < max_iter; ++iter) {
    uint8_t flag = w.back();
    if (flag == 0) return w.slice(0, n - 1);
    if (flag != 1 || params.mode != RsbParams::Mode::active) return std::nullopt;
    const size_t head = 1 + params.ptr_width + params.rank_width + params.pad;
    if (w.size() < head) return std::nullopt;
    size_t base = w.size() - head;
    uint64_t ptr = from_quaternary(w.slice(base, params.ptr_width));
    BigUint r;
    for (size_t i = 0; i < params.rank_width; ++i) {
      BigUint shifted = r;
      r.add(shifted);
      shifted = r;
      r.add(shifted);  // r *= 4
      r.add(BigUint(w[base + params.ptr_width + i]));
    }
    if (!(r < params.ranker->total())) return std::nullopt;
    QuaternaryWord window = params.ranker->unrank(r);
    QuaternaryWord rest = w.slice(0, base);
    if (ptr > rest.size()) return std::nullopt;
    QuaternaryWord rebuilt = rest.slice(0, ptr).concat(window).concat(rest.slice(ptr, rest.size() - ptr));
    w = std::move(rebuilt);
    if (w.size() != n) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace dnacodec
