#ifndef DNACODEC_SUM_BALANCE_HPP
#define DNACODEC_SUM_BALANCE_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dnacodec/words.hpp"

namespace dnacodec {

// k-sum-balanced: every window of length L >= k has symbol sum strictly
// between L and 2L. Checking window lengths in [k, 2k-1] suffices: a longer
// window splits into such pieces whose strict bounds add up.
bool is_sum_balanced(const QuaternaryWord& x, size_t k);

// Restricted variant: every window of length exactly k has sum strictly
// inside (5k/4, 7k/4).
bool is_restricted_sum_balanced(const QuaternaryWord& x, size_t k);
bool window_sum_restricted(uint64_t sum, size_t k);  // 4*sum in (5k, 7k)

// Unsigned big integer with just the arithmetic enumeration needs: compare,
// add, subtract, and base-4 width.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(uint64_t v);
  bool is_zero() const { return limbs_.empty(); }
  void add(const BigUint& o);
  void sub(const BigUint& o);             // requires *this >= o
  int compare(const BigUint& o) const;    // -1, 0, 1
  bool operator<(const BigUint& o) const { return compare(o) < 0; }
  bool operator==(const BigUint& o) const { return compare(o) == 0; }
  size_t bit_length() const;
  uint64_t to_u64() const;                // requires bit_length() <= 64
  std::string to_decimal() const;

 private:
  std::vector<uint64_t> limbs_;  // little-endian, no trailing zeros
  void trim();
};

// Lexicographic rank/unrank over the set of length-k quaternary windows that
// violate the restricted sum constraint, by dynamic programming over
// (position, running sum). Construction computes only the total with a
// rolling pass; the full table is materialized on first rank/unrank and is
// then shareable read-only.
class WindowRanker {
 public:
  explicit WindowRanker(size_t k);
  size_t k() const { return k_; }
  const BigUint& total() const { return total_; }          // V_k
  size_t rank_width() const { return rank_width_; }        // ceil(log4 V_k)
  BigUint rank(const QuaternaryWord& w) const;             // w must violate
  QuaternaryWord unrank(const BigUint& idx) const;         // idx < V_k

 private:
  size_t k_;
  BigUint total_;
  size_t rank_width_ = 0;
  // count(i, s) = completions of a length-i prefix with sum s into a
  // violating window.
  mutable std::once_flag table_once_;
  mutable std::vector<BigUint> table_;
  void ensure_table() const;
  const BigUint& count(size_t i, uint64_t s) const;
};

// One-symbol-redundancy encoder into the k-restricted-sum-balanced set by
// sequence replacement. Record format, fixed length k per replacement:
//   [ start-1 in ceil(log4 n) symbols | window rank | pad 2s | flag 1 ]
// appended after excising the leftmost violating window; the initial step
// appends a trailing 0 (= no records). Decoding pops records while the last
// symbol is 1. Feasibility requires the record head to be shorter than k;
// when it is not, the encoder degrades to the bare flag append and the
// balance guarantee is void (the round trip still holds).
struct RsbParams {
  enum class Mode { vacuous, active, passthrough };
  size_t n = 0;  // output length; message length is n-1
  size_t k = 0;
  Mode mode = Mode::vacuous;
  size_t ptr_width = 0, rank_width = 0, pad = 0;  // active mode only
  std::shared_ptr<const WindowRanker> ranker;     // active mode only

  static RsbParams make(size_t n, size_t k);
  bool balance_guaranteed() const { return mode != Mode::passthrough; }
};

QuaternaryWord rsb_encode(const QuaternaryWord& msg, const RsbParams& params);
std::optional<QuaternaryWord> rsb_decode(const QuaternaryWord& w, const RsbParams& params);

}  // namespace dnacodec

#endif
