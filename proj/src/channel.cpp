#include "dnacodec/channel.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace dnacodec {

namespace {

void check_alphabet(const Seq& w, unsigned q, const char* what) {
  for (uint8_t s : w)
    if (s >= q) throw std::invalid_argument(std::string(what) + ": symbol outside alphabet");
}

bool nt_sub_allowed(uint8_t from, uint8_t to) {
  return (from >> 1) != (to >> 1);
}

void add_deletions(const Seq& w, size_t b, std::set<Seq>& out) {
  if (w.size() < b) return;
  for (size_t p = 0; p + b <= w.size(); ++p) {
    Seq y(w.begin(), w.begin() + p);
    y.insert(y.end(), w.begin() + p + b, w.end());
    out.insert(std::move(y));
  }
}

void add_insertions(const Seq& w, size_t b, unsigned q, std::set<Seq>& out) {
  std::vector<uint8_t> block(b, 0);
  while (true) {
    for (size_t p = 0; p <= w.size(); ++p) {
      Seq y(w.begin(), w.begin() + p);
      y.insert(y.end(), block.begin(), block.end());
      y.insert(y.end(), w.begin() + p, w.end());
      out.insert(std::move(y));
    }
    size_t i = b;
    while (i > 0 && block[i - 1] == q - 1) block[--i] = 0;
    if (i == 0) break;
    ++block[i - 1];
  }
}

void add_substitutions(const Seq& w, unsigned q, bool nt_model, std::set<Seq>& out) {
  for (size_t p = 0; p < w.size(); ++p) {
    for (unsigned s = 0; s < q; ++s) {
      if (s == w[p]) continue;
      if (nt_model && !nt_sub_allowed(w[p], static_cast<uint8_t>(s))) continue;
      Seq y = w;
      y[p] = static_cast<uint8_t>(s);
      out.insert(std::move(y));
    }
  }
}

}  // namespace

std::string ChannelKind::name() const {
  switch (type) {
    case Type::indel: return "indel";
    case Type::edit: return "edit";
    case Type::burst_indel: return "burst" + std::to_string(burst);
    case Type::nucleotide_edit: return "nt";
  }
  return "?";
}

std::optional<ChannelKind> ChannelKind::from_name(const std::string& name) {
  if (name == "indel") return indel();
  if (name == "edit") return edit();
  if (name == "nt") return nucleotide_edit();
  if (name.rfind("burst", 0) == 0) {
    size_t b = name.size() > 5 ? std::stoul(name.substr(5)) : 1;
    if (b >= 1) return burst_indel(b);
  }
  return std::nullopt;
}

std::vector<Seq> error_ball(const Seq& w, ChannelKind kind, unsigned q) {
  if (q < 2) throw std::invalid_argument("error_ball: alphabet too small");
  check_alphabet(w, q, "error_ball");
  std::set<Seq> out;
  out.insert(w);
  switch (kind.type) {
    case ChannelKind::Type::indel:
      add_deletions(w, 1, out);
      add_insertions(w, 1, q, out);
      break;
    case ChannelKind::Type::edit:
      add_deletions(w, 1, out);
      add_insertions(w, 1, q, out);
      add_substitutions(w, q, false, out);
      break;
    case ChannelKind::Type::burst_indel:
      if (kind.burst == 0) throw std::invalid_argument("error_ball: burst length must be >= 1");
      add_deletions(w, kind.burst, out);
      add_insertions(w, kind.burst, q, out);
      break;
    case ChannelKind::Type::nucleotide_edit:
      add_deletions(w, 1, out);
      add_insertions(w, 1, q, out);
      add_substitutions(w, q, true, out);
      break;
  }
  return std::vector<Seq>(out.begin(), out.end());
}

std::pair<Seq, CorruptionRecord> corrupt(const Seq& w, ChannelKind kind, unsigned q, uint64_t seed) {
  std::vector<Seq> ball = error_ball(w, kind, q);
  ball.erase(std::remove(ball.begin(), ball.end(), w), ball.end());
  if (ball.empty()) throw std::invalid_argument("corrupt: non-identity ball is empty");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, ball.size() - 1);
  const Seq& y = ball[pick(rng)];

  // Reconstruct the lexicographically first operation producing y.
  CorruptionRecord rec;
  rec.kind = kind;
  rec.seed = seed;
  size_t b = kind.type == ChannelKind::Type::burst_indel ? kind.burst : 1;
  if (y.size() + b == w.size()) {
    rec.op = CorruptionRecord::Op::del;
    for (size_t p = 0; p + b <= w.size(); ++p) {
      Seq cand(w.begin(), w.begin() + p);
      cand.insert(cand.end(), w.begin() + p + b, w.end());
      if (cand == y) {
        rec.pos = p + 1;
        break;
      }
    }
  } else if (y.size() == w.size() + b) {
    rec.op = CorruptionRecord::Op::ins;
    bool found = false;
    for (size_t p = 0; p <= w.size() && !found; ++p) {
      Seq head(w.begin(), w.begin() + p);
      Seq tail(w.begin() + p, w.end());
      // The inserted block is forced once the position is fixed.
      if (!std::equal(head.begin(), head.end(), y.begin())) continue;
      if (!std::equal(tail.rbegin(), tail.rend(), y.rbegin())) continue;
      rec.pos = p + 1;
      rec.symbols.assign(y.begin() + p, y.begin() + p + b);
      found = true;
    }
  } else {
    rec.op = CorruptionRecord::Op::sub;
    for (size_t p = 0; p < w.size(); ++p) {
      if (w[p] != y[p]) {
        rec.pos = p + 1;
        rec.symbols.assign(1, y[p]);
        break;
      }
    }
  }
  return {y, rec};
}

Seq replay(const Seq& w, const CorruptionRecord& rec) {
  size_t b = rec.kind.type == ChannelKind::Type::burst_indel ? rec.kind.burst : 1;
  Seq y = w;
  switch (rec.op) {
    case CorruptionRecord::Op::none:
      break;
    case CorruptionRecord::Op::del:
      if (rec.pos == 0 || rec.pos + b - 1 > w.size()) throw std::invalid_argument("replay: bad position");
      y.erase(y.begin() + (rec.pos - 1), y.begin() + (rec.pos - 1) + b);
      break;
    case CorruptionRecord::Op::ins:
      if (rec.pos == 0 || rec.pos > w.size() + 1) throw std::invalid_argument("replay: bad position");
      y.insert(y.begin() + (rec.pos - 1), rec.symbols.begin(), rec.symbols.end());
      break;
    case CorruptionRecord::Op::sub:
      if (rec.pos == 0 || rec.pos > w.size() || rec.symbols.size() != 1)
        throw std::invalid_argument("replay: bad substitution record");
      y[rec.pos - 1] = rec.symbols[0];
      break;
  }
  return y;
}

std::optional<DisjointnessWitness> verify_disjoint(const std::vector<Seq>& code,
                                                   ChannelKind kind, unsigned q) {
  std::map<Seq, size_t> owner;
  for (size_t i = 0; i < code.size(); ++i) {
    for (const Seq& y : error_ball(code[i], kind, q)) {
      auto [it, fresh] = owner.emplace(y, i);
      if (!fresh && it->second != i && code[it->second] != code[i])
        return DisjointnessWitness{code[it->second], code[i], y};
    }
  }
  return std::nullopt;
}

namespace {

// All length-n words whose channel ball contains y, i.e. the inverse image of
// a single channel action.
std::vector<Seq> inverse_ball(const Seq& y, ChannelKind kind, unsigned q, size_t n) {
  std::set<Seq> cands;
  size_t b = kind.type == ChannelKind::Type::burst_indel ? kind.burst : 1;
  if (y.size() == n) {
    cands.insert(y);
    if (kind.type == ChannelKind::Type::edit) {
      add_substitutions(y, q, false, cands);
    } else if (kind.type == ChannelKind::Type::nucleotide_edit) {
      // x -> y flipped the first bit of one symbol; inverting flips it back,
      // and the companion bit may or may not have changed.
      for (size_t p = 0; p < y.size(); ++p) {
        for (unsigned s = 0; s < q; ++s) {
          if (s == y[p] || !nt_sub_allowed(static_cast<uint8_t>(s), y[p])) continue;
          Seq x = y;
          x[p] = static_cast<uint8_t>(s);
          cands.insert(std::move(x));
        }
      }
    }
  } else if (y.size() + b == n) {
    add_insertions(y, b, q, cands);
  } else if (y.size() == n + b) {
    add_deletions(y, b, cands);
  }
  std::vector<Seq> out;
  for (const Seq& x : cands)
    if (x.size() == n) out.push_back(x);
  return out;
}

OracleResult classify(const std::vector<Seq>& cands, const std::function<bool(const Seq&)>& in_code) {
  OracleResult res;
  for (const Seq& x : cands)
    if (in_code(x)) res.hits.push_back(x);
  if (res.hits.empty()) {
    res.outcome = OracleOutcome::none;
  } else if (res.hits.size() == 1) {
    res.outcome = OracleOutcome::unique;
    res.word = res.hits[0];
  } else {
    res.outcome = OracleOutcome::ambiguous;
  }
  return res;
}

}  // namespace

OracleResult brute_force_decode(const Seq& y, const std::function<bool(const Seq&)>& in_code,
                                ChannelKind kind, unsigned q, size_t n) {
  return classify(inverse_ball(y, kind, q, n), in_code);
}

OracleResult brute_force_decode_windowed(const Seq& y, const std::function<bool(const Seq&)>& in_code,
                                         ChannelKind kind, unsigned q, size_t n,
                                         size_t window_lo, size_t window_hi) {
  std::vector<Seq> cands;
  if (y.size() == n) {
    // Substitution (or nothing) at a position inside the window.
    cands.push_back(y);
    bool nt_model = kind.type == ChannelKind::Type::nucleotide_edit;
    for (size_t p = window_lo; p <= window_hi && p <= y.size(); ++p) {
      for (unsigned s = 0; s < q; ++s) {
        if (s == y[p - 1]) continue;
        if (nt_model && !nt_sub_allowed(static_cast<uint8_t>(s), y[p - 1])) continue;
        Seq x = y;
        x[p - 1] = static_cast<uint8_t>(s);
        cands.push_back(std::move(x));
      }
    }
  } else if (y.size() + 1 == n) {
    for (size_t p = window_lo; p <= window_hi && p <= y.size() + 1; ++p)
      for (unsigned s = 0; s < q; ++s) {
        Seq x = y;
        x.insert(x.begin() + (p - 1), static_cast<uint8_t>(s));
        cands.push_back(std::move(x));
      }
  } else if (y.size() == n + 1) {
    for (size_t p = window_lo; p <= window_hi && p <= y.size(); ++p) {
      Seq x = y;
      x.erase(x.begin() + (p - 1));
      cands.push_back(std::move(x));
    }
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return classify(cands, in_code);
}

Seq to_seq(const BinaryWord& w) { return w.data(); }
Seq to_seq(const QuaternaryWord& w) { return w.data(); }
Seq to_seq(const DnaWord& w) { return w.data(); }
BinaryWord seq_to_binary(const Seq& s) { return BinaryWord(s); }
QuaternaryWord seq_to_quaternary(const Seq& s) { return QuaternaryWord(s); }
DnaWord seq_to_dna(const Seq& s) { return DnaWord(s); }

}  // namespace dnacodec
