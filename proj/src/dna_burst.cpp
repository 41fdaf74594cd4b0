#include "dnacodec/dna_burst.hpp"

#include <stdexcept>

#include "dnacodec/levenshtein.hpp"
#include "dnacodec/rll.hpp"
#include "dnacodec/svt.hpp"

namespace dnacodec {

std::vector<BinaryWord> array_rows(const BinaryWord& x, size_t rows) {
  if (rows == 0 || x.size() % rows != 0)
    throw std::invalid_argument("array_rows: row count must divide the length");
  size_t cols = x.size() / rows;
  std::vector<BinaryWord> out(rows, BinaryWord::zeros(cols));
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < rows; ++i) out[i].set(j, x[j * rows + i]);
  return out;
}

BinaryWord array_unrows(const std::vector<BinaryWord>& rows) {
  if (rows.empty()) throw std::invalid_argument("array_unrows: no rows");
  size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("array_unrows: ragged rows");
  BinaryWord x = BinaryWord::zeros(rows.size() * cols);
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < rows.size(); ++i) x.set(j * rows.size() + i, rows[i][j]);
  return x;
}

DnaBurstParams::DnaBurstParams(size_t b_, size_t N_, uint64_t a_, uint64_t c_, uint8_t d_)
    : b(b_), N(N_), a(a_), c(c_), d(d_) {
  if (b < 1) throw std::invalid_argument("DnaBurstParams: b must be >= 1");
  if (N < 2) throw std::invalid_argument("DnaBurstParams: N must be >= 2");
  if (P() > N) throw std::invalid_argument("DnaBurstParams: requires P = 2*ceil(log N)+4+1 <= N");
  if (a >= 2 * N) throw std::invalid_argument("DnaBurstParams: residue a must be < 2N");
  if (c >= P()) throw std::invalid_argument("DnaBurstParams: residue c must be < P");
  if (row1_message_length() < 8 || svt_message_length() == 0)
    throw std::invalid_argument("DnaBurstParams: N too small for the row encoders");
}

bool dna_burst_member(const DnaWord& s, const DnaBurstParams& params) {
  if (s.size() != params.strand_length())
    throw std::invalid_argument("dna_burst_member: length mismatch");
  std::vector<BinaryWord> rows = array_rows(psi(s), 2 * params.b);
  if (!lev_member(rows[0], params.N, params.a)) return false;
  if (max_run(rows[0]) > params.r()) return false;
  SvtParams svt(params.N, params.P(), params.c, params.d);
  for (size_t i = 1; i < rows.size(); ++i)
    if (!svt_member(rows[i], svt)) return false;
  return true;
}

DnaWord dna_burst_encode(const BinaryWord& msg, const DnaBurstParams& params) {
  if (msg.size() != params.message_length())
    throw std::invalid_argument("dna_burst_encode: bad message length");
  const size_t rows_n = 2 * params.b;
  RllParams rll(params.N - ceil_log2(params.N) - 1);
  LevParams lev(params.N, params.a);
  SvtParams svt(params.N, params.P(), params.c, params.d);

  std::vector<BinaryWord> rows;
  rows.reserve(rows_n);
  size_t off = params.row1_message_length();
  rows.push_back(lev_encode(rll_encode(msg.slice(0, off), rll), lev));
  for (size_t i = 1; i < rows_n; ++i) {
    rows.push_back(svt_encode(msg.slice(off, params.svt_message_length()), svt));
    off += params.svt_message_length();
  }
  return psi_inverse(array_unrows(rows));
}

std::optional<BinaryWord> dna_burst_decode(const DnaWord& s, const DnaBurstParams& params) {
  const size_t rows_n = 2 * params.b;
  const size_t N = params.N;
  RllParams rll(N - ceil_log2(N) - 1);
  LevParams lev(N, params.a);
  SvtParams svt(N, params.P(), params.c, params.d);

  std::vector<BinaryWord> rows;
  if (s.size() == params.strand_length()) {
    DnaWord word = s;
    if (!dna_burst_member(word, params)) return std::nullopt;
    rows = array_rows(psi(word), rows_n);
  } else if (s.size() + params.b == params.strand_length() ||
             s.size() == params.strand_length() + params.b) {
    std::vector<BinaryWord> got = array_rows(psi(s), rows_n);
    auto detail = lev_decode_detailed(got[0], N, params.a);
    if (!detail || detail->error_lo == 0) return std::nullopt;
    // Row 1's indel column is inside [lo, hi]; every other row's column is
    // that column or the one before it.
    PositionWindow window{detail->error_lo > 1 ? detail->error_lo - 1 : 1, detail->error_hi};
    rows.push_back(detail->codeword);
    for (size_t i = 1; i < rows_n; ++i) {
      auto fixed = svt_decode(got[i], window, svt);
      if (!fixed) return std::nullopt;
      rows.push_back(*fixed);
    }
  } else {
    throw std::invalid_argument("dna_burst_decode: received length must be bN-b, bN, or bN+b");
  }

  auto x1 = rll_decode(rows[0].restrict_to(lev.message_positions()), rll);
  if (!x1) return std::nullopt;
  BinaryWord msg = *x1;
  for (size_t i = 1; i < rows_n; ++i)
    msg = msg.concat(rows[i].restrict_to(svt.message_positions()));
  return msg;
}

}  // namespace dnacodec
