#include <random>

#include <stdexcept>

#include "doctest.h"

#include "dnacodec/rll.hpp"

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

TEST_CASE("run limit and round trip, exhaustive at n = 12") {
  RllParams params(12);
  CHECK(params.run_limit() == 7);
  for (uint64_t v = 0; v < (uint64_t{1} << 11); ++v) {
    BinaryWord msg = bits_from_index(v, 11);
    BinaryWord w = rll_encode(msg, params);
    CHECK(w.size() == 12);
    CHECK(max_run(w) <= params.run_limit());
    CHECK(rll_decode(w, params) == msg);
  }
}

TEST_CASE("exhaustive at the smallest supported length and a few more") {
  for (size_t n : {8, 9, 13, 14}) {
    RllParams params(n);
    for (uint64_t v = 0; v < (uint64_t{1} << (n - 1)); ++v) {
      BinaryWord msg = bits_from_index(v, n - 1);
      BinaryWord w = rll_encode(msg, params);
      CHECK(max_run(w) <= params.run_limit());
      CHECK(rll_decode(w, params) == msg);
    }
  }
  CHECK_THROWS_AS(RllParams(7), std::invalid_argument);
}

TEST_CASE("pathological and random messages at n = 256") {
  RllParams params(256);
  std::vector<BinaryWord> messages = {BinaryWord::zeros(255)};
  {
    BinaryWord ones = BinaryWord::zeros(255);
    for (size_t i = 0; i < ones.size(); ++i) ones.set(i, 1);
    messages.push_back(ones);
    BinaryWord blocks = BinaryWord::zeros(255);
    for (size_t i = 0; i < blocks.size(); ++i) blocks.set(i, (i / 20) % 2);
    messages.push_back(blocks);
  }
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    BinaryWord msg = BinaryWord::zeros(255);
    for (size_t i = 0; i < msg.size(); ++i) msg.set(i, static_cast<uint8_t>(rng() & 1));
    messages.push_back(msg);
  }
  for (const BinaryWord& msg : messages) {
    BinaryWord w = rll_encode(msg, params);
    CHECK(max_run(w) <= params.run_limit());
    CHECK(rll_decode(w, params) == msg);
  }
}
