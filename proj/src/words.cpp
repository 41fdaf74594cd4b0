#include "dnacodec/words.hpp"

#include <array>
#include <stdexcept>

namespace dnacodec {

namespace {

void check_symbol(uint8_t v, uint8_t max, const char* what) {
  if (v > max) throw std::invalid_argument(std::string(what) + ": symbol out of range");
}

constexpr std::array<char, 4> kNtChar = {'A', 'T', 'C', 'G'};

int nt_value(char c) {
  switch (c) {
    case 'A': return 0;
    case 'T': return 1;
    case 'C': return 2;
    case 'G': return 3;
    default: return -1;
  }
}

}  // namespace

BinaryWord::BinaryWord(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
  for (uint8_t b : bits_) check_symbol(b, 1, "BinaryWord");
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("BinaryWord::parse: expected 0/1");
    bits.push_back(static_cast<uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::zeros(size_t n) { return BinaryWord(std::vector<uint8_t>(n, 0)); }

void BinaryWord::set(size_t i, uint8_t v) {
  check_symbol(v, 1, "BinaryWord::set");
  bits_.at(i) = v;
}

void BinaryWord::push_back(uint8_t v) {
  check_symbol(v, 1, "BinaryWord::push_back");
  bits_.push_back(v);
}

BinaryWord BinaryWord::slice(size_t from, size_t len) const {
  if (from + len > bits_.size()) throw std::invalid_argument("BinaryWord::slice: out of range");
  return BinaryWord(std::vector<uint8_t>(bits_.begin() + from, bits_.begin() + from + len));
}

BinaryWord BinaryWord::concat(const BinaryWord& other) const {
  std::vector<uint8_t> out = bits_;
  out.insert(out.end(), other.bits_.begin(), other.bits_.end());
  return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::restrict_to(const std::vector<size_t>& positions1) const {
  std::vector<uint8_t> out;
  out.reserve(positions1.size());
  for (size_t p : positions1) {
    if (p == 0 || p > bits_.size()) throw std::invalid_argument("restrict_to: position out of range");
    out.push_back(bits_[p - 1]);
  }
  return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::erased(size_t pos1) const {
  if (pos1 == 0 || pos1 > bits_.size()) throw std::invalid_argument("erased: position out of range");
  std::vector<uint8_t> out = bits_;
  out.erase(out.begin() + (pos1 - 1));
  return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::inserted(size_t pos1, uint8_t v) const {
  check_symbol(v, 1, "inserted");
  if (pos1 == 0 || pos1 > bits_.size() + 1) throw std::invalid_argument("inserted: position out of range");
  std::vector<uint8_t> out = bits_;
  out.insert(out.begin() + (pos1 - 1), v);
  return BinaryWord(std::move(out));
}

std::string BinaryWord::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

QuaternaryWord::QuaternaryWord(std::vector<uint8_t> symbols) : syms_(std::move(symbols)) {
  for (uint8_t v : syms_) check_symbol(v, 3, "QuaternaryWord");
}

QuaternaryWord QuaternaryWord::parse(std::string_view text) {
  std::vector<uint8_t> syms;
  syms.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '3') throw std::invalid_argument("QuaternaryWord::parse: expected digits 0-3");
    syms.push_back(static_cast<uint8_t>(c - '0'));
  }
  return QuaternaryWord(std::move(syms));
}

void QuaternaryWord::set(size_t i, uint8_t v) {
  check_symbol(v, 3, "QuaternaryWord::set");
  syms_.at(i) = v;
}

void QuaternaryWord::push_back(uint8_t v) {
  check_symbol(v, 3, "QuaternaryWord::push_back");
  syms_.push_back(v);
}

QuaternaryWord QuaternaryWord::slice(size_t from, size_t len) const {
  if (from + len > syms_.size()) throw std::invalid_argument("QuaternaryWord::slice: out of range");
  return QuaternaryWord(std::vector<uint8_t>(syms_.begin() + from, syms_.begin() + from + len));
}

QuaternaryWord QuaternaryWord::concat(const QuaternaryWord& other) const {
  std::vector<uint8_t> out = syms_;
  out.insert(out.end(), other.syms_.begin(), other.syms_.end());
  return QuaternaryWord(std::move(out));
}

QuaternaryWord QuaternaryWord::erased(size_t pos1) const {
  if (pos1 == 0 || pos1 > syms_.size()) throw std::invalid_argument("erased: position out of range");
  std::vector<uint8_t> out = syms_;
  out.erase(out.begin() + (pos1 - 1));
  return QuaternaryWord(std::move(out));
}

QuaternaryWord QuaternaryWord::inserted(size_t pos1, uint8_t v) const {
  check_symbol(v, 3, "inserted");
  if (pos1 == 0 || pos1 > syms_.size() + 1) throw std::invalid_argument("inserted: position out of range");
  std::vector<uint8_t> out = syms_;
  out.insert(out.begin() + (pos1 - 1), v);
  return QuaternaryWord(std::move(out));
}

std::string QuaternaryWord::to_string() const {
  std::string s;
  s.reserve(syms_.size());
  for (uint8_t v : syms_) s.push_back(static_cast<char>('0' + v));
  return s;
}

DnaWord::DnaWord(std::vector<uint8_t> nucleotides) : nts_(std::move(nucleotides)) {
  for (uint8_t v : nts_) check_symbol(v, 3, "DnaWord");
}

DnaWord DnaWord::parse(std::string_view text) {
  std::vector<uint8_t> nts;
  nts.reserve(text.size());
  for (char c : text) {
    int v = nt_value(c);
    if (v < 0) throw std::invalid_argument("DnaWord::parse: expected A/T/C/G");
    nts.push_back(static_cast<uint8_t>(v));
  }
  return DnaWord(std::move(nts));
}

void DnaWord::push_back(uint8_t v) {
  check_symbol(v, 3, "DnaWord::push_back");
  nts_.push_back(v);
}

DnaWord DnaWord::erased(size_t pos1) const {
  if (pos1 == 0 || pos1 > nts_.size()) throw std::invalid_argument("erased: position out of range");
  std::vector<uint8_t> out = nts_;
  out.erase(out.begin() + (pos1 - 1));
  return DnaWord(std::move(out));
}

DnaWord DnaWord::inserted(size_t pos1, uint8_t v) const {
  check_symbol(v, 3, "inserted");
  if (pos1 == 0 || pos1 > nts_.size() + 1) throw std::invalid_argument("inserted: position out of range");
  std::vector<uint8_t> out = nts_;
  out.insert(out.begin() + (pos1 - 1), v);
  return DnaWord(std::move(out));
}

std::string DnaWord::to_string() const {
  std::string s;
  s.reserve(nts_.size());
  for (uint8_t v : nts_) s.push_back(kNtChar[v]);
  return s;
}

size_t ceil_log2(size_t n) {
  if (n == 0) throw std::invalid_argument("ceil_log2(0)");
  size_t t = 0;
  size_t pow = 1;
  while (pow < n) {
    pow <<= 1;
    ++t;
  }
  return t;
}

size_t ceil_log4(size_t n) {
  if (n == 0) throw std::invalid_argument("ceil_log4(0)");
  size_t w = 0;
  size_t pow = 1;
  while (pow < n) {
    pow <<= 2;
    ++w;
  }
  return w;
}

BinaryWord psi(const DnaWord& s) {
  std::vector<uint8_t> bits;
  bits.reserve(2 * s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    bits.push_back(static_cast<uint8_t>(s[i] >> 1));
    bits.push_back(static_cast<uint8_t>(s[i] & 1));
  }
  return BinaryWord(std::move(bits));
}

DnaWord psi_inverse(const BinaryWord& x) {
  if (x.size() % 2 != 0) throw std::invalid_argument("psi_inverse: odd length");
  std::vector<uint8_t> nts;
  nts.reserve(x.size() / 2);
  for (size_t i = 0; i < x.size(); i += 2)
    nts.push_back(static_cast<uint8_t>((x[i] << 1) | x[i + 1]));
  return DnaWord(std::move(nts));
}

std::pair<BinaryWord, BinaryWord> upper_lower(const DnaWord& s) {
  std::vector<uint8_t> u, l;
  u.reserve(s.size());
  l.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    u.push_back(static_cast<uint8_t>(s[i] >> 1));
    l.push_back(static_cast<uint8_t>(s[i] & 1));
  }
  return {BinaryWord(std::move(u)), BinaryWord(std::move(l))};
}

BinaryWord interleave(const BinaryWord& u, const BinaryWord& l) {
  if (u.size() != l.size()) throw std::invalid_argument("interleave: length mismatch");
  std::vector<uint8_t> out;
  out.reserve(2 * u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    out.push_back(u[i]);
    out.push_back(l[i]);
  }
  return BinaryWord(std::move(out));
}

std::pair<BinaryWord, BinaryWord> deinterleave(const BinaryWord& x) {
  if (x.size() % 2 != 0) throw std::invalid_argument("deinterleave: odd length");
  std::vector<uint8_t> u, l;
  u.reserve(x.size() / 2);
  l.reserve(x.size() / 2);
  for (size_t i = 0; i < x.size(); i += 2) {
    u.push_back(x[i]);
    l.push_back(x[i + 1]);
  }
  return {BinaryWord(std::move(u)), BinaryWord(std::move(l))};
}

uint64_t vt_syndrome(const BinaryWord& x, uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("vt_syndrome: modulus must be positive");
  uint64_t acc = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) acc = (acc + (i + 1)) % modulus;
  return acc;
}

uint64_t vt_syndrome(const QuaternaryWord& x, uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("vt_syndrome: modulus must be positive");
  uint64_t acc = 0;
  for (size_t i = 0; i < x.size(); ++i)
    acc = (acc + (i + 1) * static_cast<uint64_t>(x[i])) % modulus;
  return acc;
}

std::vector<size_t> run_decompose(const BinaryWord& x) {
  if (x.empty()) throw std::invalid_argument("run_decompose: empty word");
  std::vector<size_t> runs;
  size_t len = 1;
  for (size_t i = 1; i < x.size(); ++i) {
    if (x[i] == x[i - 1]) {
      ++len;
    } else {
      runs.push_back(len);
      len = 1;
    }
  }
  runs.push_back(len);
  return runs;
}

size_t max_run(const BinaryWord& x) {
  if (x.empty()) return 0;
  size_t best = 1, len = 1;
  for (size_t i = 1; i < x.size(); ++i) {
    len = (x[i] == x[i - 1]) ? len + 1 : 1;
    if (len > best) best = len;
  }
  return best;
}

uint64_t run_syndrome(const BinaryWord& w) {
  std::vector<size_t> runs = run_decompose(w);
  uint64_t acc = 0;
  for (size_t i = 1; i < runs.size(); ++i) acc += static_cast<uint64_t>(i) * runs[i];
  return acc;
}

uint64_t run_syndrome_prefixed(const BinaryWord& x, uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("run_syndrome_prefixed: modulus must be positive");
  BinaryWord prefixed = BinaryWord::zeros(1).concat(x);
  return run_syndrome(prefixed) % modulus;
}

BinaryWord phi(const BinaryWord& x) {
  if (x.empty()) throw std::invalid_argument("phi: empty word");
  std::vector<uint8_t> out(x.size());
  for (size_t i = 0; i + 1 < x.size(); ++i) out[i] = x[i] ^ x[i + 1];
  out[x.size() - 1] = x[x.size() - 1];
  return BinaryWord(std::move(out));
}

BinaryWord phi_inverse(const BinaryWord& y) {
  if (y.empty()) throw std::invalid_argument("phi_inverse: empty word");
  std::vector<uint8_t> out(y.size());
  out[y.size() - 1] = y[y.size() - 1];
  for (size_t i = y.size() - 1; i-- > 0;) out[i] = y[i] ^ out[i + 1];
  return BinaryWord(std::move(out));
}

BinaryWord signature(const QuaternaryWord& x) {
  if (x.size() < 2) throw std::invalid_argument("signature: need length >= 2");
  std::vector<uint8_t> out(x.size() - 1);
  for (size_t i = 0; i + 1 < x.size(); ++i) out[i] = (x[i + 1] >= x[i]) ? 1 : 0;
  return BinaryWord(std::move(out));
}

BinaryWord to_bits(uint64_t v, size_t width) {
  if (width < 64 && (v >> width) != 0) throw std::invalid_argument("to_bits: value overflows width");
  std::vector<uint8_t> out(width);
  for (size_t i = 0; i < width; ++i)
    out[width - 1 - i] = static_cast<uint8_t>((v >> i) & 1);
  return BinaryWord(std::move(out));
}

uint64_t from_bits(const BinaryWord& w) {
  if (w.size() > 64) throw std::invalid_argument("from_bits: too wide");
  uint64_t v = 0;
  for (size_t i = 0; i < w.size(); ++i) v = (v << 1) | w[i];
  return v;
}

QuaternaryWord to_quaternary(uint64_t v, size_t width) {
  if (width < 32 && (v >> (2 * width)) != 0)
    throw std::invalid_argument("to_quaternary: value overflows width");
  std::vector<uint8_t> out(width);
  for (size_t i = 0; i < width; ++i) {
    out[width - 1 - i] = static_cast<uint8_t>(v & 3);
    v >>= 2;
  }
  if (v != 0) throw std::invalid_argument("to_quaternary: value overflows width");
  return QuaternaryWord(std::move(out));
}

uint64_t from_quaternary(const QuaternaryWord& w) {
  if (w.size() > 32) throw std::invalid_argument("from_quaternary: too wide");
  uint64_t v = 0;
  for (size_t i = 0; i < w.size(); ++i) v = (v << 2) | w[i];
  return v;
}

size_t weight(const BinaryWord& x) {
  size_t w = 0;
  for (size_t i = 0; i < x.size(); ++i) w += x[i];
  return w;
}

uint64_t symbol_sum(const QuaternaryWord& x) {
  uint64_t s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i];
  return s;
}

bool is_balanced(const BinaryWord& x) {
  return x.size() % 2 == 0 && weight(x) == x.size() / 2;
}

bool is_gc_balanced(const DnaWord& s) {
  if (s.size() % 2 != 0) return false;
  size_t gc = 0;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] >= 2) ++gc;  // C=2, G=3
  return gc == s.size() / 2;
}

}  // namespace dnacodec
