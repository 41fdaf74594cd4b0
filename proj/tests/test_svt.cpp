#include <random>

#include <stdexcept>

#include "doctest.h"

#include "dnacodec/channel.hpp"
#include "dnacodec/svt.hpp"

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

TEST_CASE("membership") {
  CHECK(svt_member(BinaryWord::zeros(6), SvtParams(6, 3, 0, 0)));
  CHECK(svt_member(BinaryWord::parse("1000"), SvtParams(4, 3, 1, 1)));
  uint64_t total = 0;
  for (uint64_t c = 0; c < 3; ++c)
    for (uint8_t d = 0; d < 2; ++d)
      for (uint64_t v = 0; v < 64; ++v)
        if (svt_member(bits_from_index(v, 6), SvtParams(6, 3, c, d))) ++total;
  CHECK(total == 64);
}

TEST_CASE("systematic encoding, exhaustive at n = 12, P = 5") {
  SvtParams params(12, 5, 3, 1);
  CHECK(params.message_length() == 8);
  for (uint64_t v = 0; v < 256; ++v) {
    BinaryWord msg = bits_from_index(v, 8);
    BinaryWord x = svt_encode(msg, params);
    CHECK(svt_member(x, params));
    CHECK(x.restrict_to(params.message_positions()) == msg);
  }
  CHECK_THROWS_AS(svt_encode(BinaryWord::zeros(7), params), std::invalid_argument);
}

TEST_CASE("random encodes are members at n = 64, P = 21") {
  std::mt19937_64 rng(21);
  SvtParams params(64, 21, 13, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    BinaryWord msg = BinaryWord::zeros(params.message_length());
    for (size_t i = 0; i < msg.size(); ++i) msg.set(i, static_cast<uint8_t>(rng() & 1));
    CHECK(svt_member(svt_encode(msg, params), params));
  }
}

TEST_CASE("windowed deletion repair, exhaustive at n = 10, P = 5") {
  for (uint64_t c = 0; c < 5; ++c) {
    for (uint8_t d = 0; d < 2; ++d) {
      SvtParams params(10, 5, c, d);
      auto in_code = [&](const Seq& w) { return svt_member(BinaryWord(w), params); };
      for (uint64_t v = 0; v < 1024; ++v) {
        BinaryWord x = bits_from_index(v, 10);
        if (!svt_member(x, params)) continue;
        for (size_t p = 1; p <= 10; ++p) {
          size_t lo = p > 2 ? p - 2 : 1;
          size_t hi = std::min<size_t>(p + 2, 10);
          PositionWindow window{lo, hi};
          auto decoded = svt_decode(x.erased(p), window, params);
          REQUIRE(decoded.has_value());
          CHECK(*decoded == x);
          OracleResult oracle = brute_force_decode_windowed(to_seq(x.erased(p)), in_code,
                                                            ChannelKind::indel(), 2, 10, lo, hi);
          CHECK(oracle.outcome == OracleOutcome::unique);
          CHECK(oracle.word == to_seq(*decoded));
        }
        CHECK(svt_decode(x, PositionWindow{1, 10}, params) == x);
      }
    }
  }
}

TEST_CASE("windowed insertion repair at n = 32, P = 9") {
  std::mt19937_64 rng(5);
  SvtParams params(32, 9, 4, 0);
  for (int trial = 0; trial < 400; ++trial) {
    BinaryWord msg = BinaryWord::zeros(params.message_length());
    for (size_t i = 0; i < msg.size(); ++i) msg.set(i, static_cast<uint8_t>(rng() & 1));
    BinaryWord x = svt_encode(msg, params);
    size_t p = 1 + static_cast<size_t>(rng() % (x.size() + 1));
    uint8_t b = static_cast<uint8_t>(rng() & 1);
    BinaryWord y = x.inserted(p, b);
    size_t lo = p > 4 ? p - 4 : 1;
    size_t hi = std::min<size_t>(p + 4, y.size());
    auto decoded = svt_decode(y, PositionWindow{lo, hi}, params);
    REQUIRE(decoded.has_value());
    CHECK(*decoded == x);
  }
}

TEST_CASE("substitution at an exactly known position") {
  SvtParams params(10, 5, 2, 1);
  for (uint64_t v = 0; v < 1024; ++v) {
    BinaryWord x = bits_from_index(v, 10);
    if (!svt_member(x, params)) continue;
    for (size_t p = 1; p <= 10; ++p) {
      BinaryWord y = x;
      y.set1(p, static_cast<uint8_t>(1 - x.at1(p)));
      auto decoded = svt_decode(y, PositionWindow{p, p}, params);
      REQUIRE(decoded.has_value());
      CHECK(*decoded == x);
    }
  }
}
