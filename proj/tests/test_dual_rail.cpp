#include <random>

#include <stdexcept>

#include "doctest.h"

#include "dnacodec/channel.hpp"
#include "dnacodec/dual_rail.hpp"

using namespace dnacodec;

namespace {

BinaryWord random_bits(size_t len, std::mt19937_64& rng) {
  BinaryWord w = BinaryWord::zeros(len);
  for (size_t i = 0; i < len; ++i) w.set(i, static_cast<uint8_t>(rng() & 1));
  return w;
}

}  // namespace

TEST_CASE("round trip at n = 64") {
  DualRailParams params(64, 5, 40);
  CHECK(params.message_length() == 2 * (64 - 6 - 1));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    BinaryWord msg = random_bits(params.message_length(), rng);
    DnaWord s = dual_rail_encode(msg, params);
    CHECK(s.size() == 64);
    CHECK(dual_rail_decode(s, params) == msg);
  }
}

TEST_CASE("every single edit decodes back at n = 32") {
  DualRailParams params(32, 0, 17);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    BinaryWord msg = random_bits(params.message_length(), rng);
    DnaWord s = dual_rail_encode(msg, params);
    for (size_t p = 1; p <= s.size(); ++p) {
      CHECK(dual_rail_decode(s.erased(p), params) == msg);
      for (uint8_t nt = 0; nt < 4; ++nt) {
        if (nt != s[p - 1]) {
          DnaWord y = s;
          std::vector<uint8_t> raw = y.data();
          raw[p - 1] = nt;
          CHECK(dual_rail_decode(DnaWord(raw), params) == msg);
        }
        CHECK(dual_rail_decode(s.inserted(p, nt), params) == msg);
      }
    }
    for (uint8_t nt = 0; nt < 4; ++nt)
      CHECK(dual_rail_decode(s.inserted(s.size() + 1, nt), params) == msg);
  }
}

TEST_CASE("redundancy identity") {
  for (size_t n : {8, 16, 100, 1000}) {
    DualRailParams params(n, 0, 0);
    CHECK(2 * n - params.message_length() == 2 * ceil_log2(n) + 2);
  }
}
