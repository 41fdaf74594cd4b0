#include <random>

#include <stdexcept>

#include "doctest.h"

#include "dnacodec/channel.hpp"
#include "dnacodec/levenshtein.hpp"

using namespace dnacodec;

namespace {

BinaryWord bits_from_index(uint64_t v, size_t len) {
  std::vector<uint8_t> bits(len);
  for (size_t i = 0; i < len; ++i) {
    bits[len - 1 - i] = static_cast<uint8_t>(v & 1);
    v >>= 1;
  }
  return BinaryWord(std::move(bits));
}

}  // namespace

TEST_CASE("worked encoding at n = 10") {
  LevParams params(10, 0);
  CHECK(params.t() == 4);
  CHECK(params.message_length() == 5);
  CHECK(params.syndrome_positions() == std::vector<size_t>{1, 2, 4, 8, 10});
  BinaryWord c = lev_encode(BinaryWord::parse("11011"), params);
  CHECK(c.to_string() == "0111101011");
  CHECK(lev_member(c, 10, 0));
  CHECK(lev_decode_message(c, params) == BinaryWord::parse("11011"));
}

TEST_CASE("membership") {
  CHECK(lev_member(BinaryWord::parse("0111101011"), 10, 0));
  CHECK(lev_member(BinaryWord::zeros(12), 12, 0));
  uint64_t total = 0;
  for (uint64_t a = 0; a < 16; ++a) {
    for (uint64_t v = 0; v < 256; ++v) {
      if (lev_member(bits_from_index(v, 8), 8, a)) ++total;
    }
  }
  CHECK(total == 256);  // the residue classes partition all words
}

TEST_CASE("systematic projection over all messages at n = 10") {
  LevParams params(10, 0);
  for (uint64_t v = 0; v < 32; ++v) {
    BinaryWord msg = bits_from_index(v, 5);
    BinaryWord c = lev_encode(msg, params);
    CHECK(lev_member(c, 10, 0));
    CHECK(c.restrict_to(params.message_positions()) == msg);
  }
}

TEST_CASE("single edit correction, exhaustive at n = 8 for every residue") {
  for (uint64_t a = 0; a < 16; ++a) {
    auto in_code = [&](const Seq& w) { return vt_syndrome(BinaryWord(w), 16) == a; };
    for (uint64_t v = 0; v < 256; ++v) {
      BinaryWord c = bits_from_index(v, 8);
      if (!lev_member(c, 8, a)) continue;
      for (const Seq& y : error_ball(to_seq(c), ChannelKind::edit(), 2)) {
        auto decoded = lev_decode_codeword(BinaryWord(y), 8, a);
        REQUIRE(decoded.has_value());
        CHECK(*decoded == c);
        OracleResult oracle = brute_force_decode(y, in_code, ChannelKind::edit(), 2, 8);
        CHECK(oracle.outcome == OracleOutcome::unique);
        CHECK(oracle.word == to_seq(*decoded));
      }
    }
  }
}

TEST_CASE("worked single-deletion repair") {
  BinaryWord c = BinaryWord::parse("0111101011");
  BinaryWord y = c.erased(4);
  CHECK(y.to_string() == "011101011");
  CHECK(lev_decode_codeword(y, 10, 0) == c);
  CHECK(lev_decode_message(y, LevParams(10, 0)) == BinaryWord::parse("11011"));
  CHECK(lev_decode_message(c, LevParams(10, 0)) == BinaryWord::parse("11011"));
  // One substitution and one insertion.
  BinaryWord sub = c;
  sub.set1(6, 1);
  CHECK(lev_decode_message(sub, LevParams(10, 0)) == BinaryWord::parse("11011"));
  CHECK(lev_decode_message(c.inserted(3, 1), LevParams(10, 0)) == BinaryWord::parse("11011"));
}

TEST_CASE("decode failure outside every edit ball") {
  // 0101 has syndrome 6 mod 8; no single edit reaches residue class 0
  // (flipping positions 1..4 gives 7, 4, 1, 2).
  CHECK(!lev_decode_codeword(BinaryWord::parse("0101"), 4, 0).has_value());
}

TEST_CASE("deletion interval reported by the detailed decoder") {
  std::mt19937_64 rng(7);
  LevParams params(64, 11);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryWord msg = BinaryWord::zeros(params.message_length());
    for (size_t i = 0; i < msg.size(); ++i) msg.set(i, static_cast<uint8_t>(rng() & 1));
    BinaryWord c = lev_encode(msg, params);
    size_t p = 1 + static_cast<size_t>(rng() % c.size());
    auto detail = lev_decode_detailed(c.erased(p), 64, 11);
    REQUIRE(detail.has_value());
    CHECK(detail->codeword == c);
    CHECK(detail->error_lo <= p);
    CHECK(p <= detail->error_hi);
    for (size_t q = detail->error_lo; q <= detail->error_hi; ++q)
      CHECK(detail->codeword.erased(q) == c.erased(p));
  }
}
