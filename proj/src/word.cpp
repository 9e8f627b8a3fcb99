#include "nads/word.hpp"

#include <numeric>
#include <stdexcept>

namespace nads {

namespace {

long long imod(long long i, long long m) {
  long long r = i % m;
  return r < 0 ? r + m : r;
}

// Smallest divisor d of |w| such that w is d-periodic.
size_t minimal_period(const std::string& w) {
  size_t L = w.size();
  for (size_t d = 1; d < L; ++d) {
    if (L % d != 0) continue;
    bool ok = true;
    for (size_t i = d; i < L && ok; ++i) ok = (w[i] == w[i - d]);
    if (ok) return d;
  }
  return L;
}

}  // namespace

PeriodicWord PeriodicWord::from_string(const std::string& w) {
  if (w.empty()) throw std::invalid_argument("periodic word must be nonempty");
  for (char c : w) {
    if (c != '0' && c != '1') throw std::invalid_argument("periodic word must be over {0,1}");
  }
  return PeriodicWord(w.substr(0, minimal_period(w)));
}

char PeriodicWord::at(long long i) const {
  return w_[static_cast<size_t>(imod(i, period()))];
}

PeriodicWord PeriodicWord::shifted(long long k) const {
  long long L = period();
  std::string out(static_cast<size_t>(L), '0');
  for (long long i = 0; i < L; ++i) out[static_cast<size_t>(i)] = at(i + k);
  // Shifting permutes the letters cyclically, so minimality is preserved and
  // no re-reduction is needed.
  return PeriodicWord(std::move(out));
}

namespace {

// Shared implementation: mismatch vector over one common period L, then the
// geometric series both ways from the anchor r.
Rat distance_from_mismatch(const std::vector<int>& e, long long r) {
  long long L = static_cast<long long>(e.size());
  Int A = 0, B = 0;
  for (long long j = 1; j <= L; ++j) {
    Int w = Int(1) << static_cast<unsigned>(L - j);
    if (e[static_cast<size_t>(imod(r + j, L))]) A += w;
    if (e[static_cast<size_t>(imod(r - j, L))]) B += w;
  }
  Int denom = (Int(1) << static_cast<unsigned>(L)) - 1;
  return Rat(e[static_cast<size_t>(imod(r, L))]) + Rat(A + B, denom);
}

std::vector<int> mismatch_vector(const PeriodicWord& x, const PeriodicWord& y) {
  long long L = std::lcm(x.period(), y.period());
  std::vector<int> e(static_cast<size_t>(L));
  for (long long i = 0; i < L; ++i) e[static_cast<size_t>(i)] = (x.at(i) != y.at(i)) ? 1 : 0;
  return e;
}

}  // namespace

Rat shift_distance(const PeriodicWord& x, const PeriodicWord& y) {
  return distance_from_mismatch(mismatch_vector(x, y), 0);
}

std::vector<Rat> shift_distance_profile(const PeriodicWord& x, const PeriodicWord& y) {
  auto e = mismatch_vector(x, y);
  std::vector<Rat> out;
  out.reserve(e.size());
  for (long long r = 0; r < static_cast<long long>(e.size()); ++r) {
    out.push_back(distance_from_mismatch(e, r));
  }
  return out;
}

std::pair<Rat, Rat> shift_distance_partial(const PeriodicWord& x, const PeriodicWord& y,
                                           long long T) {
  if (T < 1) throw std::invalid_argument("partial sum needs T >= 1");
  Rat s = (x.at(0) != y.at(0)) ? 1 : 0;
  for (long long i = 1; i <= T; ++i) {
    Rat w = pow2(-i);
    if (x.at(i) != y.at(i)) s += w;
    if (x.at(-i) != y.at(-i)) s += w;
  }
  // Tail over |i| > T: each side is at most sum_{i > T} 2^-i = 2^-T.
  return {s, s + pow2(1 - T)};
}

std::vector<PeriodicWord> words_up_to_period(long long p) {
  if (p < 1 || p > 24) throw std::invalid_argument("word period bound out of range");
  std::vector<PeriodicWord> out;
  for (long long L = 1; L <= p; ++L) {
    for (Int m = 0; m < (Int(1) << static_cast<unsigned>(L)); ++m) {
      std::string w(static_cast<size_t>(L), '0');
      // Highest bit first, so counting m upward enumerates words of one
      // length in lexicographic order.
      for (long long i = 0; i < L; ++i) {
        if (bit_test(m, static_cast<unsigned>(L - 1 - i))) w[static_cast<size_t>(i)] = '1';
      }
      auto pw = PeriodicWord::from_string(w);
      if (pw.period() == L) out.push_back(std::move(pw));  // skip non-minimal repeats
    }
  }
  return out;
}

}  // namespace nads
