#ifndef DNACODEC_KNUTH_HPP
#define DNACODEC_KNUTH_HPP

#include <utility>

#include "dnacodec/words.hpp"

namespace dnacodec {

// Knuth balancing: flip the first k bits so the word becomes balanced. The
// smallest strictly positive balancing index is returned; k = n (flip all)
// always works for an already balanced word, so k in [1, n] exists.
std::pair<BinaryWord, size_t> knuth_balance(const BinaryWord& x);  // |x| even
BinaryWord knuth_unbalance(const BinaryWord& z, size_t k);

}  // namespace dnacodec

#endif
