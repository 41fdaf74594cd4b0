#include <random>

#include <stdexcept>

#include "doctest.h"

#include "dnacodec/channel.hpp"
#include "dnacodec/gc_balanced.hpp"
#include "dnacodec/knuth.hpp"
#include "dnacodec/levenshtein.hpp"

using namespace dnacodec;

namespace {

BinaryWord random_bits(size_t len, std::mt19937_64& rng) {
  BinaryWord w = BinaryWord::zeros(len);
  for (size_t i = 0; i < len; ++i) w.set(i, static_cast<uint8_t>(rng() & 1));
  return w;
}

BinaryWord bits_from_index(uint64_t v, size_t len) {
  std::vector<uint8_t> bits(len);
  for (size_t i = 0; i < len; ++i) {
    bits[len - 1 - i] = static_cast<uint8_t>(v & 1);
    v >>= 1;
  }
  return BinaryWord(std::move(bits));
}

}  // namespace

TEST_CASE("balancing flips the shortest positive prefix") {
  auto [z, k] = knuth_balance(BinaryWord::parse("1111111100001111"));
  CHECK(z.to_string() == "0000111100001111");
  CHECK(k == 4);
  CHECK(knuth_unbalance(z, k) == BinaryWord::parse("1111111100001111"));
}

TEST_CASE("balancing round trip, exhaustive at length 8") {
  for (uint64_t v = 0; v < 256; ++v) {
    BinaryWord x = bits_from_index(v, 8);
    auto [z, k] = knuth_balance(x);
    CHECK(is_balanced(z));
    CHECK(k >= 1);
    CHECK(k <= 8);
    CHECK(knuth_unbalance(z, k) == x);
    // Smallest positive index.
    for (size_t j = 1; j < k; ++j)
      CHECK(!is_balanced(knuth_unbalance(x, j)));
  }
}

TEST_CASE("worked GC encoding at n = 16") {
  GcParams params(16, 0);
  CHECK(params.message_length() == 18);
  BinaryWord msg = BinaryWord::parse("111111110000111101");
  DnaWord s = gc_encode(msg, params);
  CHECK(s.to_string() == "TTATGGCGTAAAGCCG");
  CHECK(is_gc_balanced(s));
  CHECK(gc_decode(s, params) == msg);
}

TEST_CASE("every single edit of the worked codeword decodes back") {
  GcParams params(16, 0);
  BinaryWord msg = BinaryWord::parse("111111110000111101");
  DnaWord s = gc_encode(msg, params);
  for (size_t p = 1; p <= s.size(); ++p) {
    CHECK(gc_decode(s.erased(p), params) == msg);
    for (uint8_t nt = 0; nt < 4; ++nt) {
      if (nt != s[p - 1]) {
        std::vector<uint8_t> raw = s.data();
        raw[p - 1] = nt;
        CHECK(gc_decode(DnaWord(raw), params) == msg);
      }
      CHECK(gc_decode(s.inserted(p, nt), params) == msg);
    }
  }
  for (uint8_t nt = 0; nt < 4; ++nt)
    CHECK(gc_decode(s.inserted(s.size() + 1, nt), params) == msg);
}

TEST_CASE("outputs are GC-balanced with a Levenshtein lower rail, n = 64") {
  GcParams params(64, 19);
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 500; ++trial) {
    BinaryWord msg = random_bits(params.message_length(), rng);
    DnaWord s = gc_encode(msg, params);
    CHECK(is_gc_balanced(s));
    auto [u, l] = upper_lower(s);
    CHECK(is_balanced(u));
    CHECK(lev_member(l, 64, 19));
    CHECK(gc_decode(s, params) == msg);
  }
}

TEST_CASE("redundancy identity") {
  for (size_t n : {16, 32, 64, 1024}) {
    GcParams params(n, 0);
    CHECK(2 * n - params.message_length() == 3 * ceil_log2(n) + 2);
  }
}

TEST_CASE("random edits at n = 16 across many codewords") {
  GcParams params(16, 0);
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    BinaryWord msg = random_bits(params.message_length(), rng);
    DnaWord s = gc_encode(msg, params);
    for (const Seq& y : error_ball(to_seq(s), ChannelKind::edit(), 4))
      CHECK(gc_decode(DnaWord(y), params) == msg);
  }
}
