#include <random>
#include <stdexcept>

#include "doctest.h"

#include "dnacodec/channel.hpp"
#include "dnacodec/words.hpp"

using namespace dnacodec;

namespace {

DnaWord dna_from_index(uint64_t v, size_t len) {
  std::vector<uint8_t> nts(len);
  for (size_t i = 0; i < len; ++i) {
    nts[len - 1 - i] = static_cast<uint8_t>(v & 3);
    v >>= 2;
  }
  return DnaWord(std::move(nts));
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

TEST_CASE("two-bit map on the worked strand") {
  CHECK(psi(DnaWord::parse("ACAGTG")).to_string() == "001000110111");
  CHECK(psi(DnaWord()).to_string() == "");
  CHECK(psi(DnaWord::parse("A")).to_string() == "00");
  CHECK(psi_inverse(BinaryWord::parse("0010011111")).to_string() == "ACTGG");
  CHECK(psi_inverse(BinaryWord::parse("00")).to_string() == "A");
  CHECK_THROWS_AS(psi_inverse(BinaryWord::parse("011")), std::invalid_argument);
}

TEST_CASE("two-bit map round trip, exhaustive to length 6") {
  for (size_t len = 0; len <= 6; ++len) {
    uint64_t total = uint64_t{1} << (2 * len);
    for (uint64_t v = 0; v < total; ++v) {
      DnaWord s = dna_from_index(v, len);
      CHECK(psi_inverse(psi(s)) == s);
    }
  }
}

TEST_CASE("two-bit map round trip on long random strands") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 10000; ++trial) {
    size_t len = 7 + static_cast<size_t>(rng() % 250);
    std::vector<uint8_t> nts(len);
    for (auto& v : nts) v = static_cast<uint8_t>(rng() & 3);
    DnaWord s(nts);
    CHECK(psi_inverse(psi(s)) == s);
  }
}

TEST_CASE("upper and lower sequences") {
  auto [u, l] = upper_lower(DnaWord::parse("ACAGTG"));
  CHECK(u.to_string() == "010101");
  CHECK(l.to_string() == "000111");
  auto [u2, l2] = upper_lower(DnaWord::parse("AAAA"));
  CHECK(u2.to_string() == "0000");
  CHECK(l2.to_string() == "0000");
  auto [u3, l3] = upper_lower(DnaWord::parse("GGG"));
  CHECK(u3.to_string() == "111");
  CHECK(l3.to_string() == "111");
}

TEST_CASE("interleave inverts the rail split") {
  CHECK(interleave(BinaryWord::parse("010101"), BinaryWord::parse("000111")).to_string() ==
        "001000110111");
  CHECK(interleave(BinaryWord(), BinaryWord()).to_string() == "");
  CHECK_THROWS_AS(interleave(BinaryWord::parse("01"), BinaryWord::parse("0")),
                  std::invalid_argument);
  for (size_t len = 0; len <= 4; ++len) {
    for (uint64_t uv = 0; uv < (uint64_t{1} << len); ++uv) {
      for (uint64_t lv = 0; lv < (uint64_t{1} << len); ++lv) {
        BinaryWord u = bits_from_index(uv, len);
        BinaryWord l = bits_from_index(lv, len);
        auto [du, dl] = deinterleave(interleave(u, l));
        CHECK(du == u);
        CHECK(dl == l);
      }
    }
  }
  // Rail consistency with the two-bit map.
  for (uint64_t v = 0; v < (uint64_t{1} << 10); ++v) {
    DnaWord s = dna_from_index(v, 5);
    auto [u, l] = upper_lower(s);
    CHECK(interleave(u, l) == psi(s));
  }
}

TEST_CASE("position-weighted syndrome") {
  CHECK(vt_syndrome(BinaryWord::parse("0010101010"), 20) == 4);
  CHECK(vt_syndrome(BinaryWord::zeros(12), 7) == 0);
  CHECK(vt_syndrome(BinaryWord::parse("0111101011"), 20) == 0);  // 2+3+4+5+7+9+10 = 40
}

TEST_CASE("run decomposition") {
  CHECK(run_decompose(BinaryWord::parse("0010110")) == std::vector<size_t>{2, 1, 1, 2, 1});
  CHECK(run_decompose(BinaryWord::parse("0000")) == std::vector<size_t>{4});
  CHECK(run_decompose(BinaryWord::parse("0101")) == std::vector<size_t>{1, 1, 1, 1});
  CHECK_THROWS_AS(run_decompose(BinaryWord()), std::invalid_argument);
}

TEST_CASE("run syndrome of the zero-prefixed word") {
  CHECK(run_syndrome(BinaryWord::parse("0010110")) == 13);
  CHECK(run_syndrome_prefixed(BinaryWord::parse("010110"), 12) == 1);
  CHECK(run_syndrome_prefixed(BinaryWord::zeros(9), 18) == 0);
}

TEST_CASE("adjacent-sum transform") {
  CHECK(phi(BinaryWord::parse("010110")).to_string() == "111010");
  CHECK(phi_inverse(BinaryWord::parse("0110100001")).to_string() == "0010011111");
  CHECK(phi(BinaryWord::zeros(8)) == BinaryWord::zeros(8));
  CHECK_THROWS_AS(phi(BinaryWord()), std::invalid_argument);
}

TEST_CASE("transform links run syndrome to the VT syndrome, exhaustive to length 12") {
  for (size_t len = 1; len <= 12; ++len) {
    for (uint64_t v = 0; v < (uint64_t{1} << len); ++v) {
      BinaryWord x = bits_from_index(v, len);
      CHECK(phi_inverse(phi(x)) == x);
      uint64_t mod = 2 * len;
      uint64_t lhs = run_syndrome_prefixed(x, mod);
      uint64_t rhs = (mod - vt_syndrome(phi(x), mod)) % mod;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("signature of a quaternary word") {
  CHECK(signature(QuaternaryWord::parse("0123")).to_string() == "111");
  CHECK(signature(QuaternaryWord::parse("3210")).to_string() == "000");
  CHECK(signature(QuaternaryWord::parse("2213")).to_string() == "101");
  CHECK_THROWS_AS(signature(QuaternaryWord::parse("2")), std::invalid_argument);
}

TEST_CASE("fixed-width representations") {
  CHECK(to_bits(6, 4).to_string() == "0110");
  CHECK(to_bits(0, 5).to_string() == "00000");
  CHECK(to_bits(20, 5).to_string() == "10100");
  CHECK(from_bits(BinaryWord::parse("10100")) == 20);
  CHECK_THROWS_AS(to_bits(16, 4), std::invalid_argument);
  CHECK(to_quaternary(27, 3).to_string() == "123");
  CHECK(from_quaternary(QuaternaryWord::parse("123")) == 27);
}

TEST_CASE("GC balance equals upper balance, exhaustive to length 5") {
  for (size_t len = 1; len <= 5; ++len) {
    for (uint64_t v = 0; v < (uint64_t{1} << (2 * len)); ++v) {
      DnaWord s = dna_from_index(v, len);
      CHECK(is_gc_balanced(s) == is_balanced(upper_lower(s).first));
    }
  }
}

TEST_CASE("one strand indel is one doubled-position two-burst on the bits") {
  for (size_t len = 1; len <= 4; ++len) {
    for (uint64_t v = 0; v < (uint64_t{1} << (2 * len)); ++v) {
      DnaWord s = dna_from_index(v, len);
      BinaryWord bits = psi(s);
      for (size_t p = 1; p <= len; ++p) {
        BinaryWord expected = bits.erased(2 * p - 1).erased(2 * p - 1);
        CHECK(psi(s.erased(p)) == expected);
      }
      for (size_t p = 1; p <= len + 1; ++p) {
        for (uint8_t nt = 0; nt < 4; ++nt) {
          BinaryWord expected =
              bits.inserted(2 * p - 1, static_cast<uint8_t>(nt >> 1)).inserted(2 * p, nt & 1);
          CHECK(psi(s.inserted(p, nt)) == expected);
        }
      }
    }
  }
}
