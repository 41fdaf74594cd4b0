// Command-line front end: encode, decode, corrupt, verify, and rates over
// record files. One record per line; binary payloads are 0/1 strings (or
// hex:<bitlen>:<hexdigits>), quaternary payloads are digit strings over 0-3,
// strands are ACGT strings. DNA and quaternary schemes emit FASTA-like
// records whose headers carry the scheme parameters, so decoding needs no
// side channel; the binary scheme emits bare 0/1 lines.
//
// Exit codes: 0 all records pass, 1 any record failure, 2 usage or
// parameter error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dnacodec/burst2.hpp"
#include "dnacodec/channel.hpp"
#include "dnacodec/dna_burst.hpp"
#include "dnacodec/dna_indel.hpp"
#include "dnacodec/dual_rail.hpp"
#include "dnacodec/gc_balanced.hpp"
#include "dnacodec/levenshtein.hpp"
#include "dnacodec/nt_edit.hpp"
#include "dnacodec/quat_edit.hpp"
#include "dnacodec/sum_balance.hpp"
#include "dnacodec/words.hpp"

using namespace dnacodec;

namespace {

struct SchemeSpec {
  std::string scheme;
  size_t n = 0;
  uint64_t a = 0, b = 0;
  uint64_t c = 0, d = 0;
  size_t k = 0;      // framed edit encoder window (0 = default)
  size_t burst = 1;  // burst length in nucleotides
};

const std::vector<std::string> kSchemes = {"lev", "indel", "burst", "editA", "editB", "nt", "gc"};

bool is_quaternary_scheme(const std::string& s) { return s == "editB"; }
bool is_binary_scheme(const std::string& s) { return s == "lev"; }

size_t message_length(const SchemeSpec& s) {
  if (s.scheme == "lev") return LevParams(s.n, s.a).message_length();
  if (s.scheme == "indel") return DnaIndelParams(s.n, s.a).message_length();
  if (s.scheme == "burst") {
    if (s.burst == 0 || s.n % s.burst != 0)
      throw std::invalid_argument("burst scheme: --burst must divide --n");
    return DnaBurstParams(s.burst, s.n / s.burst, s.a, s.c, static_cast<uint8_t>(s.d))
        .message_length();
  }
  if (s.scheme == "editA") return DualRailParams(s.n, s.a, s.b).message_length();
  if (s.scheme == "editB") return s.n - 1;  // quaternary symbols
  if (s.scheme == "nt")
    return NtEditParams(s.n, s.a, s.b, static_cast<uint8_t>(s.c)).message_length();
  if (s.scheme == "gc") return GcParams(s.n, s.a).message_length();
  throw std::invalid_argument("unknown scheme " + s.scheme);
}

// Lines starting with '>' begin a FASTA-like record; other nonempty lines
// are bare records.
struct Record {
  size_t index = 0;
  std::string header;  // without the '>'
  std::string body;
};

std::vector<Record> read_records(std::istream& in) {
  std::vector<Record> out;
  std::string line;
  std::optional<Record> open;
  size_t next = 0;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') {
      if (open) out.push_back(*open);
      open = Record{next++, line.substr(1), ""};
    } else if (open) {
      open->body += line;
      out.push_back(*open);
      open.reset();
    } else {
      out.push_back(Record{next++, "", line});
    }
  }
  if (open) out.push_back(*open);
  return out;
}

std::map<std::string, std::string> parse_header(const std::string& header) {
  std::map<std::string, std::string> kv;
  std::istringstream ss(header);
  std::string tok;
  while (ss >> tok) {
    size_t eq = tok.find('=');
    if (eq != std::string::npos) kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

void apply_header(const std::map<std::string, std::string>& kv, SchemeSpec& spec) {
  auto get = [&](const char* key, auto& field) {
    auto it = kv.find(key);
    if (it != kv.end()) field = static_cast<std::decay_t<decltype(field)>>(std::stoull(it->second));
  };
  auto sit = kv.find("scheme");
  if (sit != kv.end()) spec.scheme = sit->second;
  get("n", spec.n);
  get("a", spec.a);
  get("b", spec.b);
  get("c", spec.c);
  get("d", spec.d);
  get("k", spec.k);
  get("burst", spec.burst);
}

std::string header_for(const SchemeSpec& s, size_t idx) {
  std::ostringstream out;
  out << ">" << idx << " scheme=" << s.scheme << " n=" << s.n;
  if (s.scheme == "lev" || s.scheme == "indel" || s.scheme == "gc") out << " a=" << s.a;
  if (s.scheme == "editA" || s.scheme == "nt") out << " a=" << s.a << " b=" << s.b;
  if (s.scheme == "nt") out << " c=" << s.c;
  if (s.scheme == "burst") out << " a=" << s.a << " c=" << s.c << " d=" << s.d << " burst=" << s.burst;
  if (s.scheme == "editB") out << " k=" << (s.k ? s.k : QuatEditEncoderParams::default_k_for(s.n));
  return out.str();
}

// Accepts 0/1 strings or hex:<bitlen>:<hexdigits>.
BinaryWord parse_binary_record(const std::string& body) {
  if (body.rfind("hex:", 0) == 0) {
    size_t second = body.find(':', 4);
    if (second == std::string::npos) throw std::invalid_argument("malformed hex record");
    size_t bits = std::stoull(body.substr(4, second - 4));
    std::string hex = body.substr(second + 1);
    BinaryWord out;
    for (char ch : hex) {
      int v = ch >= '0' && ch <= '9'   ? ch - '0'
              : ch >= 'a' && ch <= 'f' ? ch - 'a' + 10
              : ch >= 'A' && ch <= 'F' ? ch - 'A' + 10
                                       : -1;
      if (v < 0) throw std::invalid_argument("malformed hex digit");
      for (int i = 3; i >= 0; --i) out.push_back(static_cast<uint8_t>((v >> i) & 1));
    }
    if (bits > out.size()) throw std::invalid_argument("hex record shorter than its bit length");
    return out.slice(0, bits);
  }
  return BinaryWord::parse(body);
}

std::string encode_record(const SchemeSpec& s, const std::string& body) {
  if (s.scheme == "lev")
    return lev_encode(parse_binary_record(body), LevParams(s.n, s.a)).to_string();
  if (s.scheme == "indel")
    return dna_indel_encode(parse_binary_record(body), DnaIndelParams(s.n, s.a)).to_string();
  if (s.scheme == "burst")
    return dna_burst_encode(parse_binary_record(body),
                            DnaBurstParams(s.burst, s.n / s.burst, s.a, s.c,
                                           static_cast<uint8_t>(s.d)))
        .to_string();
  if (s.scheme == "editA")
    return dual_rail_encode(parse_binary_record(body), DualRailParams(s.n, s.a, s.b)).to_string();
  if (s.scheme == "editB") {
    auto params = s.k ? QuatEditEncoderParams::make(s.n, s.k) : QuatEditEncoderParams::make(s.n);
    return quat_edit_encode(QuaternaryWord::parse(body), params).to_string();
  }
  if (s.scheme == "nt")
    return nt_edit_encode(parse_binary_record(body),
                          NtEditParams(s.n, s.a, s.b, static_cast<uint8_t>(s.c)))
        .to_string();
  if (s.scheme == "gc")
    return gc_encode(parse_binary_record(body), GcParams(s.n, s.a)).to_string();
  throw std::invalid_argument("unknown scheme " + s.scheme);
}

std::optional<std::string> decode_record(const SchemeSpec& s, const std::string& body) {
  if (s.scheme == "lev") {
    auto m = lev_decode_message(BinaryWord::parse(body), LevParams(s.n, s.a));
    if (!m) return std::nullopt;
    return m->to_string();
  }
  if (s.scheme == "indel") {
    auto m = dna_indel_decode(DnaWord::parse(body), DnaIndelParams(s.n, s.a));
    if (!m) return std::nullopt;
    return m->to_string();
  }
  if (s.scheme == "burst") {
    auto m = dna_burst_decode(DnaWord::parse(body), DnaBurstParams(s.burst, s.n / s.burst, s.a,
                                                                   s.c, static_cast<uint8_t>(s.d)));
    if (!m) return std::nullopt;
    return m->to_string();
  }
  if (s.scheme == "editA") {
    auto m = dual_rail_decode(DnaWord::parse(body), DualRailParams(s.n, s.a, s.b));
    if (!m) return std::nullopt;
    return m->to_string();
  }
  if (s.scheme == "editB") {
    auto params = s.k ? QuatEditEncoderParams::make(s.n, s.k) : QuatEditEncoderParams::make(s.n);
    auto m = quat_edit_decode_frame(QuaternaryWord::parse(body), params);
    if (!m) return std::nullopt;
    return m->to_string();
  }
  if (s.scheme == "nt") {
    auto m = nt_edit_decode(DnaWord::parse(body), NtEditParams(s.n, s.a, s.b,
                                                               static_cast<uint8_t>(s.c)));
    if (!m) return std::nullopt;
    return m->to_string();
  }
  if (s.scheme == "gc") {
    auto m = gc_decode(DnaWord::parse(body), GcParams(s.n, s.a));
    if (!m) return std::nullopt;
    return m->to_string();
  }
  throw std::invalid_argument("unknown scheme " + s.scheme);
}

struct Alphabet {
  unsigned q = 2;
  bool dna = false;
};

Alphabet detect_alphabet(const std::string& body) {
  bool only01 = true, digits = true;
  for (char ch : body) {
    if (ch != '0' && ch != '1') only01 = false;
    if (ch < '0' || ch > '3') digits = false;
  }
  if (only01) return {2, false};
  if (digits) return {4, false};
  return {4, true};
}

Seq parse_by_alphabet(const std::string& body, Alphabet al) {
  if (al.dna) return to_seq(DnaWord::parse(body));
  if (al.q == 4) return to_seq(QuaternaryWord::parse(body));
  return to_seq(BinaryWord::parse(body));
}

std::string render_by_alphabet(const Seq& s, Alphabet al) {
  if (al.dna) return DnaWord(s).to_string();
  if (al.q == 4) return QuaternaryWord(s).to_string();
  return BinaryWord(s).to_string();
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  return file;
}

int run_encode(const SchemeSpec& spec, const std::string& input, const std::string& output) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "cannot open input file " << input << "\n";
    return 2;
  }
  size_t m = message_length(spec);
  std::cerr << "scheme " << spec.scheme << ": message length m=" << m
            << (is_quaternary_scheme(spec.scheme) ? " symbols" : " bits") << "\n";
  std::ofstream file;
  std::ostream& out = open_out(file, output);
  int failures = 0;
  for (const Record& rec : read_records(in)) {
    try {
      std::string coded = encode_record(spec, rec.body);
      if (is_binary_scheme(spec.scheme)) {
        out << coded << "\n";
      } else {
        out << header_for(spec, rec.index) << "\n" << coded << "\n";
      }
    } catch (const std::exception& e) {
      std::cerr << "record " << rec.index << ": " << e.what() << "\n";
      ++failures;
    }
  }
  return failures ? 1 : 0;
}

int run_decode(SchemeSpec spec, const std::string& input, const std::string& output) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "cannot open input file " << input << "\n";
    return 2;
  }
  std::ofstream file;
  std::ostream& out = open_out(file, output);
  int failures = 0;
  for (const Record& rec : read_records(in)) {
    try {
      SchemeSpec local = spec;
      if (!rec.header.empty()) apply_header(parse_header(rec.header), local);
      if (local.scheme.empty()) throw std::invalid_argument("no scheme given");
      auto m = decode_record(local, rec.body);
      if (!m) {
        out << "FAIL record=" << rec.index << " reason=decode-failure\n";
        ++failures;
      } else {
        out << *m << "\n";
      }
    } catch (const std::exception& e) {
      out << "FAIL record=" << rec.index << " reason=" << e.what() << "\n";
      ++failures;
    }
  }
  return failures ? 1 : 0;
}

int run_corrupt(const std::string& kind_name, uint64_t seed, const std::string& input,
                const std::string& output, const std::string& log_path,
                const std::string& replay_path) {
  auto kind = ChannelKind::from_name(kind_name);
  if (!kind) {
    std::cerr << "unknown channel kind " << kind_name << "\n";
    return 2;
  }
  std::ifstream in(input);
  if (!in) {
    std::cerr << "cannot open input file " << input << "\n";
    return 2;
  }
  std::map<size_t, CorruptionRecord> replays;
  if (!replay_path.empty()) {
    std::ifstream rf(replay_path);
    if (!rf) {
      std::cerr << "cannot open replay log " << replay_path << "\n";
      return 2;
    }
    std::string line;
    while (std::getline(rf, line)) {
      std::istringstream ss(line);
      size_t idx;
      std::string kindtok, op, postok, symtok;
      if (!(ss >> idx >> kindtok >> op >> postok >> symtok)) continue;
      CorruptionRecord rec;
      rec.kind = *kind;
      rec.op = op == "del"   ? CorruptionRecord::Op::del
               : op == "ins" ? CorruptionRecord::Op::ins
               : op == "sub" ? CorruptionRecord::Op::sub
                             : CorruptionRecord::Op::none;
      rec.pos = std::stoull(postok.substr(postok.find('=') + 1));
      std::string syms = symtok.substr(symtok.find('=') + 1);
      for (char ch : syms)
        if (ch != '-') rec.symbols.push_back(static_cast<uint8_t>(ch - '0'));
      replays[idx] = rec;
    }
  }

  std::ofstream file;
  std::ostream& out = open_out(file, output);
  std::ofstream log;
  if (!log_path.empty()) {
    log.open(log_path);
    if (!log) {
      std::cerr << "cannot open log file " << log_path << "\n";
      return 2;
    }
  }
  int failures = 0;
  for (const Record& rec : read_records(in)) {
    try {
      Alphabet al = detect_alphabet(rec.body);
      if (kind->type == ChannelKind::Type::nucleotide_edit && !al.dna)
        throw std::invalid_argument("nucleotide channel needs ACGT records");
      Seq w = parse_by_alphabet(rec.body, al);
      Seq y;
      CorruptionRecord crec;
      if (!replay_path.empty()) {
        auto it = replays.find(rec.index);
        if (it == replays.end()) throw std::invalid_argument("no replay entry");
        crec = it->second;
        y = replay(w, crec);
      } else {
        std::tie(y, crec) = corrupt(w, *kind, al.q, seed + rec.index);
      }
      if (!rec.header.empty()) out << ">" << rec.header << "\n";
      out << render_by_alphabet(y, al) << "\n";
      if (log.is_open()) {
        const char* opname = crec.op == CorruptionRecord::Op::del   ? "del"
                             : crec.op == CorruptionRecord::Op::ins ? "ins"
                             : crec.op == CorruptionRecord::Op::sub ? "sub"
                                                                    : "none";
        log << rec.index << " " << kind->name() << " " << opname << " pos=" << crec.pos
            << " sym=";
        if (crec.symbols.empty()) {
          log << "-";
        } else {
          for (uint8_t s : crec.symbols) log << static_cast<char>('0' + s);
        }
        log << "\n";
      }
    } catch (const std::exception& e) {
      std::cerr << "record " << rec.index << ": " << e.what() << "\n";
      ++failures;
    }
  }
  return failures ? 1 : 0;
}

int run_verify(const SchemeSpec& spec, const std::string& kind_name, size_t n_hi,
               uint64_t max_work, const std::string& code_file) {
  auto kind = ChannelKind::from_name(kind_name);
  if (!kind) {
    std::cerr << "unknown channel kind " << kind_name << "\n";
    return 2;
  }
  bool all_pass = true;

  if (!code_file.empty()) {
    std::ifstream in(code_file);
    if (!in) {
      std::cerr << "cannot open code file " << code_file << "\n";
      return 2;
    }
    std::vector<Seq> code;
    Alphabet al{2, false};
    for (const Record& rec : read_records(in)) {
      al = detect_alphabet(rec.body);
      code.push_back(parse_by_alphabet(rec.body, al));
    }
    auto witness = verify_disjoint(code, *kind, al.q);
    if (witness) {
      std::cout << "FAIL disjoint code-file=" << code_file << " kind=" << kind->name()
                << " first=" << render_by_alphabet(witness->first, al)
                << " second=" << render_by_alphabet(witness->second, al)
                << " witness=" << render_by_alphabet(witness->common, al) << "\n";
      all_pass = false;
    } else {
      std::cout << "PASS disjoint code-file=" << code_file << " kind=" << kind->name()
                << " size=" << code.size() << "\n";
    }
    return all_pass ? 0 : 1;
  }

  size_t n_lo = spec.n;
  if (n_hi < n_lo) n_hi = n_lo;
  for (size_t n = n_lo; n <= n_hi; ++n) {
    uint64_t words = 0;
    unsigned q = 2;
    if (spec.scheme == "lev") {
      words = uint64_t{1} << n;
    } else if (spec.scheme == "indel") {
      words = uint64_t{1} << (2 * n);
      q = 4;
    } else {
      std::cerr << "verify supports schemes lev and indel\n";
      return 2;
    }
    uint64_t est = words * (3 * n * q + 1);
    if (est > max_work) {
      std::cerr << "estimated work " << est << " exceeds --max-work " << max_work << "\n";
      return 2;
    }

    // Partition all words into residue classes, then check ball disjointness
    // and decoder-vs-oracle agreement class by class.
    uint64_t classes = spec.scheme == "lev" ? 2 * n : 4 * n;
    bool n_ok = true;
    for (uint64_t a = 0; a < classes && n_ok; ++a) {
      std::vector<Seq> code;
      for (uint64_t v = 0; v < words; ++v) {
        if (spec.scheme == "lev") {
          Seq w(n);
          for (size_t i = 0; i < n; ++i) w[i] = static_cast<uint8_t>((v >> i) & 1);
          if (vt_syndrome(BinaryWord(w), 2 * n) == a) code.push_back(w);
        } else {
          Seq w(n);
          uint64_t tmp = v;
          for (size_t i = 0; i < n; ++i) {
            w[i] = static_cast<uint8_t>(tmp & 3);
            tmp >>= 2;
          }
          if (run_syndrome_prefixed(psi(DnaWord(w)), 4 * n) == a) code.push_back(w);
        }
      }
      auto witness = verify_disjoint(code, *kind, q);
      if (witness) {
        std::cout << "FAIL disjoint scheme=" << spec.scheme << " kind=" << kind->name()
                  << " n=" << n << " a=" << a
                  << " witness=" << render_by_alphabet(witness->common, {q, spec.scheme != "lev"})
                  << "\n";
        n_ok = false;
        break;
      }
      for (const Seq& c : code) {
        for (const Seq& y : error_ball(c, *kind, q)) {
          bool good;
          if (spec.scheme == "lev") {
            auto dec = lev_decode_codeword(BinaryWord(y), n, a);
            good = dec && to_seq(*dec) == c;
          } else {
            auto dec = dna_indel_decode_codeword(DnaWord(y), DnaIndelParams(n, a));
            good = dec && to_seq(*dec) == c;
          }
          if (!good) {
            std::cout << "FAIL decode scheme=" << spec.scheme << " kind=" << kind->name()
                      << " n=" << n << " a=" << a
                      << " received=" << render_by_alphabet(y, {q, spec.scheme != "lev"}) << "\n";
            n_ok = false;
            break;
          }
        }
        if (!n_ok) break;
      }
    }
    if (n_ok) {
      std::cout << "PASS scheme=" << spec.scheme << " kind=" << kind->name() << " n=" << n
                << " (all residues, all balls)\n";
    } else {
      all_pass = false;
    }
  }
  return all_pass ? 0 : 1;
}

int run_rates(const std::string& scheme, const std::vector<size_t>& ns) {
  std::printf("%-8s %6s %10s %12s %8s\n", "scheme", "n", "m", "redundancy", "rate");
  for (size_t n : ns) {
    try {
      size_t m = 0, red = 0;
      double rate = 0;
      if (scheme == "lev") {
        m = LevParams::message_length_for(n);
        red = n - m;
        rate = static_cast<double>(m) / n;
      } else if (scheme == "indel") {
        m = DnaIndelParams::message_length_for(n);
        red = 2 * n - m;
        rate = static_cast<double>(m) / (2 * n);
      } else if (scheme == "editA") {
        m = DualRailParams::message_length_for(n);
        red = 2 * n - m;
        rate = static_cast<double>(m) / (2 * n);
      } else if (scheme == "editB") {
        size_t N = n + ceil_log4(4 * n + 1) + ceil_log4(5 * 4 * (72 * ceil_log2(n))) + 5;
        m = 2 * (n - 1);
        red = QuatEditEncoderParams::redundancy_bits_for(n);
        rate = static_cast<double>(m) / (2 * N);
      } else if (scheme == "nt") {
        m = NtEditParams::message_length_for(n);
        red = 2 * n - m;
        rate = static_cast<double>(m) / (2 * n);
      } else if (scheme == "gc") {
        m = GcParams::message_length_for(n);
        red = 2 * n - m;
        rate = static_cast<double>(m) / (2 * n);
      } else if (scheme == "burst") {
        std::cerr << "rates for the burst scheme need --burst; use encode to size messages\n";
        return 2;
      } else {
        std::cerr << "unknown scheme " << scheme << "\n";
        return 2;
      }
      std::printf("%-8s %6zu %10zu %12zu %8.4f\n", scheme.c_str(), n, m, red, rate);
    } catch (const std::exception& e) {
      std::printf("%-8s %6zu  (%s)\n", scheme.c_str(), n, e.what());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"encoders and decoders for single indel/edit correcting DNA codes"};
  app.require_subcommand(1);

  SchemeSpec spec;
  std::string input, output, kind_name = "indel", log_path, replay_path, code_file;
  uint64_t seed = 0, max_work = 100000000ull;
  size_t n_hi = 0;
  std::vector<size_t> n_list;

  auto add_scheme_flags = [&](CLI::App* cmd, bool need_scheme) {
    auto* opt = cmd->add_option("--scheme", spec.scheme, "one of lev/indel/burst/editA/editB/nt/gc");
    if (need_scheme) opt->required();
    cmd->add_option("--n", spec.n, "code length (nucleotides, or bits for lev)");
    cmd->add_option("--a", spec.a, "first residue");
    cmd->add_option("--b", spec.b, "second residue");
    cmd->add_option("--c", spec.c, "third residue / parity");
    cmd->add_option("--d", spec.d, "fourth residue / parity");
    cmd->add_option("--k", spec.k, "balance window (editB)");
    cmd->add_option("--burst", spec.burst, "burst length in nucleotides");
  };

  auto* enc = app.add_subcommand("encode", "encode message records");
  add_scheme_flags(enc, true);
  enc->add_option("input", input, "message file, one record per line")->required();
  enc->add_option("--out", output, "output file (default stdout)");

  auto* dec = app.add_subcommand("decode", "decode received records");
  add_scheme_flags(dec, false);
  dec->add_option("input", input, "received records (FASTA headers carry parameters)")->required();
  dec->add_option("--out", output, "output file (default stdout)");

  auto* cor = app.add_subcommand("corrupt", "apply one seeded channel error per record");
  cor->add_option("--kind", kind_name, "indel, edit, burst<b>, or nt")->required();
  cor->add_option("--seed", seed, "base seed; record index is added");
  cor->add_option("input", input, "records to corrupt")->required();
  cor->add_option("--out", output, "output file (default stdout)");
  cor->add_option("--log", log_path, "replayable corruption log");
  cor->add_option("--replay", replay_path, "apply a previously written log instead");

  auto* ver = app.add_subcommand("verify", "exhaustive ball disjointness and decode sweeps");
  add_scheme_flags(ver, false);
  ver->add_option("--kind", kind_name, "channel kind")->required();
  ver->add_option("--n-hi", n_hi, "verify a range of lengths up to this");
  ver->add_option("--max-work", max_work, "refuse sweeps larger than this");
  ver->add_option("--code-file", code_file, "verify a raw enumerated code file instead");

  auto* rat = app.add_subcommand("rates", "message lengths and redundancy table");
  rat->add_option("--scheme", spec.scheme, "scheme")->required();
  rat->add_option("--n", n_list, "lengths to tabulate")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (enc->parsed()) return run_encode(spec, input, output);
    if (dec->parsed()) return run_decode(spec, input, output);
    if (cor->parsed()) return run_corrupt(kind_name, seed, input, output, log_path, replay_path);
    if (ver->parsed()) return run_verify(spec, kind_name, n_hi, max_work, code_file);
    if (rat->parsed()) return run_rates(spec.scheme, n_list);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
