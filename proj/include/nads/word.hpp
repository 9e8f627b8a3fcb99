#pragma once

// Periodic two-sided binary sequences. A PeriodicWord w of length L denotes
// the sequence x with x[i] = w[i mod L] for all integers i; the stored word
// is always the minimal period, so equality of sequences is string equality.
//
// The metric is d(x, y) = sum over all integers i of e[i] * 2^-|i| where
// e[i] = |x[i] - y[i]|. The mismatch sequence of two periodic points is
// itself periodic with period L = lcm of the two lengths, so the series has
// the closed form
//   d = e[0] + (A + B) / (2^L - 1)
// with A = sum_{r=1..L} e[r mod L] * 2^(L-r) and B the same over e[-r mod L].

#include "nads/rational.hpp"

#include <string>
#include <vector>

namespace nads {

class PeriodicWord {
 public:
  // Validates the word (nonempty, characters '0'/'1') and reduces it to its
  // minimal period. Throws std::invalid_argument otherwise.
  static PeriodicWord from_string(const std::string& w);

  const std::string& word() const { return w_; }
  long long period() const { return static_cast<long long>(w_.size()); }

  char at(long long i) const;

  // The left shift by k: (sigma^k x)[i] = x[i + k].
  PeriodicWord shifted(long long k) const;

  bool operator==(const PeriodicWord& o) const { return w_ == o.w_; }
  bool operator!=(const PeriodicWord& o) const { return w_ != o.w_; }
  // Order by (length, lexicographic); used only for canonical point sets.
  bool operator<(const PeriodicWord& o) const {
    if (w_.size() != o.w_.size()) return w_.size() < o.w_.size();
    return w_ < o.w_;
  }

 private:
  explicit PeriodicWord(std::string w) : w_(std::move(w)) {}
  std::string w_;
};

// Exact distance via the closed form above.
Rat shift_distance(const PeriodicWord& x, const PeriodicWord& y);

// d(sigma^r x, sigma^r y) for r = 0 .. L-1 where L = lcm of the periods.
// The distance of any shifted pair is profile[r mod L].
std::vector<Rat> shift_distance_profile(const PeriodicWord& x, const PeriodicWord& y);

// Truncated sum over |i| <= T together with the tail bound: the exact
// distance lies in [partial, partial + 2^(1-T)]. Used as an independent
// cross-check of the closed form.
std::pair<Rat, Rat> shift_distance_partial(const PeriodicWord& x, const PeriodicWord& y,
                                           long long T);

// All words of minimal period at most p, ordered by (length, lex). Grows as
// 2^p; callers keep p small.
std::vector<PeriodicWord> words_up_to_period(long long p);

}  // namespace nads
