#include <random>

#include <stdexcept>

#include "doctest.h"

#include "dnacodec/channel.hpp"
#include "dnacodec/dna_burst.hpp"
#include "dnacodec/levenshtein.hpp"
#include "dnacodec/svt.hpp"

using namespace dnacodec;

namespace {

BinaryWord random_bits(size_t len, std::mt19937_64& rng) {
  BinaryWord w = BinaryWord::zeros(len);
  for (size_t i = 0; i < len; ++i) w.set(i, static_cast<uint8_t>(rng() & 1));
  return w;
}

}  // namespace

TEST_CASE("array view unrolls column-major and inverts") {
  BinaryWord x = BinaryWord::parse("0110100001");
  std::vector<BinaryWord> rows = array_rows(x, 2);
  CHECK(rows[0].to_string() == "01100");
  CHECK(rows[1].to_string() == "10001");
  CHECK(array_unrows(rows) == x);
  CHECK(array_rows(x, 1)[0] == x);
  CHECK_THROWS_AS(array_rows(x, 3), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryWord w = random_bits(24, rng);
    for (size_t rows_n : {2, 4, 6})
      CHECK(array_unrows(array_rows(w, rows_n)) == w);
  }
}

TEST_CASE("rows of an encode satisfy the row constraints, b = 1, N = 16") {
  DnaBurstParams params(1, 16, 3, 2, 1);
  CHECK(params.message_length() ==
        2 * 16 - ceil_log2(16) - (2 * 1 - 1) * (params.t() + 1) - 2);
  SvtParams svt(16, params.P(), 2, 1);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryWord msg = random_bits(params.message_length(), rng);
    DnaWord s = dna_burst_encode(msg, params);
    CHECK(s.size() == 16);
    std::vector<BinaryWord> rows = array_rows(psi(s), 2);
    CHECK(lev_member(rows[0], 16, 3));
    CHECK(max_run(rows[0]) <= params.r());
    CHECK(svt_member(rows[1], svt));
    CHECK(dna_burst_member(s, params));
    CHECK(dna_burst_decode(s, params) == msg);
  }
}

TEST_CASE("rows of an encode satisfy the row constraints, b = 1, N = 64") {
  DnaBurstParams params(1, 64, 40, 11, 0);
  SvtParams svt(64, params.P(), 11, 0);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    BinaryWord msg = random_bits(params.message_length(), rng);
    DnaWord s = dna_burst_encode(msg, params);
    std::vector<BinaryWord> rows = array_rows(psi(s), 2);
    CHECK(lev_member(rows[0], 64, 40));
    CHECK(max_run(rows[0]) <= params.r());
    CHECK(svt_member(rows[1], svt));
  }
}

TEST_CASE("every burst position corrects, b = 2, N = 16") {
  DnaBurstParams params(2, 16, 5, 7, 0);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    BinaryWord msg = random_bits(params.message_length(), rng);
    DnaWord s = dna_burst_encode(msg, params);
    CHECK(s.size() == 32);
    for (size_t p = 1; p + 1 <= s.size(); ++p)
      CHECK(dna_burst_decode(s.erased(p).erased(p), params) == msg);
    for (size_t p = 1; p <= s.size() + 1; ++p) {
      uint8_t n1 = static_cast<uint8_t>(rng() & 3);
      uint8_t n2 = static_cast<uint8_t>(rng() & 3);
      CHECK(dna_burst_decode(s.inserted(p, n1).inserted(p + 1, n2), params) == msg);
    }
  }
}

TEST_CASE("b = 1 agrees with a direct two-row decode") {
  DnaBurstParams params(1, 32, 9, 3, 1);
  LevParams lev(32, 9);
  SvtParams svt(32, params.P(), 3, 1);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryWord msg = random_bits(params.message_length(), rng);
    DnaWord s = dna_burst_encode(msg, params);
    size_t p = 1 + static_cast<size_t>(rng() % s.size());
    DnaWord y = s.erased(p);
    auto via_burst = dna_burst_decode(y, params);
    REQUIRE(via_burst.has_value());
    CHECK(*via_burst == msg);
    // Direct: both rails see one deletion at the same strand position.
    auto [u, l] = upper_lower(y);
    auto detail = lev_decode_detailed(u, 32, 9);
    REQUIRE(detail.has_value());
    auto lower = svt_decode(
        l, PositionWindow{detail->error_lo > 1 ? detail->error_lo - 1 : 1, detail->error_hi}, svt);
    REQUIRE(lower.has_value());
    std::vector<BinaryWord> rows = {detail->codeword, *lower};
    CHECK(psi_inverse(array_unrows(rows)) == dna_burst_encode(msg, params));
  }
}
