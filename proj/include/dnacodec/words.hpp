#ifndef DNACODEC_WORDS_HPP
#define DNACODEC_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dnacodec {

// Finite word over {0,1}. Positions in all documented contracts are 1-based,
// matching the syndrome formulas; storage is 0-based.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<uint8_t> bits);
  static BinaryWord parse(std::string_view text);
  static BinaryWord zeros(size_t n);

  size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  uint8_t operator[](size_t i) const { return bits_[i]; }  // 0-based
  uint8_t at1(size_t pos) const { return bits_[pos - 1]; } // 1-based
  void set(size_t i, uint8_t v);
  void set1(size_t pos, uint8_t v) { set(pos - 1, v); }
  void push_back(uint8_t v);
  uint8_t back() const { return bits_.back(); }

  BinaryWord slice(size_t from, size_t len) const;  // 0-based offset
  BinaryWord concat(const BinaryWord& other) const;
  // Projection x|_I for a 1-based, increasing index set.
  BinaryWord restrict_to(const std::vector<size_t>& positions1) const;
  BinaryWord erased(size_t pos1) const;             // delete the bit at 1-based pos
  BinaryWord inserted(size_t pos1, uint8_t v) const;// v becomes the bit at 1-based pos

  std::string to_string() const;
  const std::vector<uint8_t>& data() const { return bits_; }

  bool operator==(const BinaryWord& o) const { return bits_ == o.bits_; }
  bool operator!=(const BinaryWord& o) const { return bits_ != o.bits_; }
  bool operator<(const BinaryWord& o) const { return bits_ < o.bits_; }

 private:
  std::vector<uint8_t> bits_;
};

// Finite word over {0,1,2,3} viewed as integers.
class QuaternaryWord {
 public:
  QuaternaryWord() = default;
  explicit QuaternaryWord(std::vector<uint8_t> symbols);
  static QuaternaryWord parse(std::string_view text);  // digits 0-3

  size_t size() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }
  uint8_t operator[](size_t i) const { return syms_[i]; }
  uint8_t at1(size_t pos) const { return syms_[pos - 1]; }
  void set(size_t i, uint8_t v);
  void push_back(uint8_t v);
  uint8_t back() const { return syms_.back(); }

  QuaternaryWord slice(size_t from, size_t len) const;
  QuaternaryWord concat(const QuaternaryWord& other) const;
  QuaternaryWord erased(size_t pos1) const;
  QuaternaryWord inserted(size_t pos1, uint8_t v) const;

  std::string to_string() const;
  const std::vector<uint8_t>& data() const { return syms_; }

  bool operator==(const QuaternaryWord& o) const { return syms_ == o.syms_; }
  bool operator!=(const QuaternaryWord& o) const { return syms_ != o.syms_; }
  bool operator<(const QuaternaryWord& o) const { return syms_ < o.syms_; }

 private:
  std::vector<uint8_t> syms_;
};

// DNA strand over {A,T,C,G}. Internally a nucleotide is stored as its two-bit
// value under the A=00, T=01, C=10, G=11 correspondence, so A=0,T=1,C=2,G=3.
class DnaWord {
 public:
  DnaWord() = default;
  explicit DnaWord(std::vector<uint8_t> nucleotides);
  static DnaWord parse(std::string_view text);  // "ACGT", uppercase

  size_t size() const { return nts_.size(); }
  bool empty() const { return nts_.empty(); }
  uint8_t operator[](size_t i) const { return nts_[i]; }
  void push_back(uint8_t v);

  DnaWord erased(size_t pos1) const;
  DnaWord inserted(size_t pos1, uint8_t v) const;

  std::string to_string() const;
  const std::vector<uint8_t>& data() const { return nts_; }

  bool operator==(const DnaWord& o) const { return nts_ == o.nts_; }
  bool operator!=(const DnaWord& o) const { return nts_ != o.nts_; }
  bool operator<(const DnaWord& o) const { return nts_ < o.nts_; }

 private:
  std::vector<uint8_t> nts_;
};

// ---- integer helpers ----

size_t ceil_log2(size_t n);   // smallest t with 2^t >= n; n >= 1
size_t ceil_log4(size_t n);   // smallest w with 4^w >= n; n >= 1

// ---- the two-bit correspondence ----

BinaryWord psi(const DnaWord& s);                 // |out| = 2|s|
DnaWord psi_inverse(const BinaryWord& x);         // |x| must be even
std::pair<BinaryWord, BinaryWord> upper_lower(const DnaWord& s);
BinaryWord interleave(const BinaryWord& u, const BinaryWord& l);  // u1 l1 u2 l2 ...
std::pair<BinaryWord, BinaryWord> deinterleave(const BinaryWord& x);

// ---- syndromes, runs, transforms ----

// Syn(x) = sum of i*x_i (1-based), reduced mod `modulus` (modulus >= 1).
uint64_t vt_syndrome(const BinaryWord& x, uint64_t modulus);
uint64_t vt_syndrome(const QuaternaryWord& x, uint64_t modulus);

// Maximal constant blocks r_0..r_{s-1}; word must be nonempty.
std::vector<size_t> run_decompose(const BinaryWord& x);
size_t max_run(const BinaryWord& x);   // 0 for the empty word

// Rsyn(w) = sum over i>=1 of i*r_i for the run lengths of w itself.
uint64_t run_syndrome(const BinaryWord& w);
// Rsyn(0x) mod `modulus`: the run syndrome of x with a zero prepended.
uint64_t run_syndrome_prefixed(const BinaryWord& x, uint64_t modulus);

// Adjacent-sum transform: phi(x)_i = x_i + x_{i+1} mod 2 for i<n, phi(x)_n = x_n.
BinaryWord phi(const BinaryWord& x);          // |x| >= 1
BinaryWord phi_inverse(const BinaryWord& y);  // suffix accumulation from the last bit

// Signature of a quaternary word: bit i is 1 iff x_{i+1} >= x_i. |x| >= 2.
BinaryWord signature(const QuaternaryWord& x);

// Fixed-width positional representations, most significant symbol first.
// Levenshtein-style encoders consume the bits of an integer directly
// (bit j-1 of the value goes to position 2^{j-1}), not through these.
BinaryWord to_bits(uint64_t v, size_t width);
uint64_t from_bits(const BinaryWord& w);
QuaternaryWord to_quaternary(uint64_t v, size_t width);
uint64_t from_quaternary(const QuaternaryWord& w);

// ---- weights and balance ----

size_t weight(const BinaryWord& x);
uint64_t symbol_sum(const QuaternaryWord& x);
bool is_balanced(const BinaryWord& x);     // exactly half ones; false for odd length
bool is_gc_balanced(const DnaWord& s);     // exactly half of the symbols in {C,G}

}  // namespace dnacodec

#endif
