#ifndef DNACODEC_CHANNEL_HPP
#define DNACODEC_CHANNEL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dnacodec/words.hpp"

namespace dnacodec {

// Error-ball enumeration, seeded corruption, and brute-force reference
// decoding over raw symbol sequences. A sequence is a vector of symbols in
// [0, q). DNA words use their two-bit values (A=0, T=1, C=2, G=3), so the
// nucleotide model "the first bit flips" reads: substitute s by s' with
// (s >> 1) != (s' >> 1).
using Seq = std::vector<uint8_t>;

struct ChannelKind {
  enum class Type { indel, edit, burst_indel, nucleotide_edit };
  Type type = Type::indel;
  size_t burst = 1;  // used by burst_indel only

  static ChannelKind indel() { return {Type::indel, 1}; }
  static ChannelKind edit() { return {Type::edit, 1}; }
  static ChannelKind burst_indel(size_t b) { return {Type::burst_indel, b}; }
  static ChannelKind nucleotide_edit() { return {Type::nucleotide_edit, 1}; }
  std::string name() const;
  static std::optional<ChannelKind> from_name(const std::string& name);
};

struct CorruptionRecord {
  enum class Op { none, del, ins, sub };
  ChannelKind kind;
  Op op = Op::none;
  size_t pos = 0;              // 1-based; for bursts, the first affected position
  std::vector<uint8_t> symbols;// inserted or substituted-in symbols
  uint64_t seed = 0;
};

// Exact set (deduplicated, sorted) of words reachable under the channel,
// including the word itself where the ball definition includes it.
std::vector<Seq> error_ball(const Seq& w, ChannelKind kind, unsigned q);

// Uniform draw over the non-identity part of the ball; deterministic in seed.
std::pair<Seq, CorruptionRecord> corrupt(const Seq& w, ChannelKind kind, unsigned q, uint64_t seed);

// Applies a record to the original word; reproduces the corrupted word.
Seq replay(const Seq& w, const CorruptionRecord& rec);

struct DisjointnessWitness {
  Seq first, second, common;
};

// Checks pairwise ball disjointness over an enumerated code by hash-join of
// ball elements. Returns the first counterexample found, or nullopt when all
// balls are disjoint.
std::optional<DisjointnessWitness> verify_disjoint(const std::vector<Seq>& code,
                                                   ChannelKind kind, unsigned q);

enum class OracleOutcome { unique, none, ambiguous };

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::none;
  Seq word;                 // valid when outcome == unique
  std::vector<Seq> hits;    // all codeword candidates found
};

// Enumerates every length-n word whose ball contains y and satisfies the
// code predicate. Unique hit -> that word; zero or multiple reported as such.
OracleResult brute_force_decode(const Seq& y, const std::function<bool(const Seq&)>& in_code,
                                ChannelKind kind, unsigned q, size_t n);

// Same, with candidate error positions restricted to [window_lo, window_hi]
// (1-based, inclusive); used as the reference for windowed decoders.
OracleResult brute_force_decode_windowed(const Seq& y, const std::function<bool(const Seq&)>& in_code,
                                         ChannelKind kind, unsigned q, size_t n,
                                         size_t window_lo, size_t window_hi);

// Adapters between typed words and raw sequences.
Seq to_seq(const BinaryWord& w);
Seq to_seq(const QuaternaryWord& w);
Seq to_seq(const DnaWord& w);
BinaryWord seq_to_binary(const Seq& s);
QuaternaryWord seq_to_quaternary(const Seq& s);
DnaWord seq_to_dna(const Seq& s);

}  // namespace dnacodec

#endif
