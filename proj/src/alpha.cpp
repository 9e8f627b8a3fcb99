#include "nads/alpha.hpp"

#include <vector>

namespace nads {

AlphaConfig& alpha_config() {
  static AlphaConfig cfg;
  return cfg;
}

namespace {

// Convergents of alpha = 1/phi are ratios of consecutive Fibonacci numbers,
// F(k)/F(k+1). They alternate around alpha and consecutive ones differ by
// exactly 1/(F(k)*F(k+1)) (Cassini), which gives the enclosure width.
struct ConvergentTable {
  std::vector<Int> fib{1, 1, 2};  // F(1), F(2), ...

  // Smallest j with fib[j]*fib[j+1] >= target, i.e. the first convergent pair
  // whose gap is at most 1/target. Deterministic in the request, so cached
  // extensions from earlier calls never change the answer.
  size_t first_pair_reaching(const Int& target) {
    while (fib[fib.size() - 2] * fib.back() < target)
      fib.push_back(fib[fib.size() - 2] + fib.back());
    size_t lo = 0, hi = fib.size() - 2;
    while (lo < hi) {
      size_t mid = (lo + hi) / 2;
      if (fib[mid] * fib[mid + 1] >= target) hi = mid;
      else lo = mid + 1;
    }
    return lo;
  }
};

ConvergentTable& table() {
  static ConvergentTable t;
  return t;
}

}  // namespace

std::pair<Rat, Rat> alpha_enclosure(long long bits) {
  if (bits < 1) bits = 1;
  auto& t = table();
  size_t j = t.first_pair_reaching(Int(1) << static_cast<unsigned>(bits));
  // j >= 1 because fib[0]*fib[1] = 1 < 2 <= target.
  Rat c1(t.fib[j - 1], t.fib[j]);
  Rat c2(t.fib[j], t.fib[j + 1]);
  return c1 < c2 ? std::make_pair(c1, c2) : std::make_pair(c2, c1);
}

QuadVal QuadVal::scaled(const Rat& r) const {
  // The alpha coefficient must stay an integer. The library only scales
  // rational QuadVals or scales by integers, so this never fires in practice.
  Rat rb = Rat(b) * r;
  if (rat_den(rb) != 1) throw std::logic_error("QuadVal: non-integer alpha coefficient");
  return {a * r, rat_num(rb).convert_to<long long>()};
}

std::pair<Rat, Rat> QuadVal::enclosure(long long bits) const {
  auto [lo, hi] = alpha_enclosure(bits);
  if (b >= 0) return {a + Rat(b) * lo, a + Rat(b) * hi};
  return {a + Rat(b) * hi, a + Rat(b) * lo};
}

int qv_sign(const QuadVal& v) {
  if (v.b == 0) return v.a == 0 ? 0 : (v.a < 0 ? -1 : 1);
  const auto& cfg = alpha_config();
  for (long long bits = cfg.initial_bits; bits <= cfg.max_bits; bits *= 2) {
    auto [lo, hi] = v.enclosure(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw PrecisionError("sign of " + qv_str(v) + " undecided at " +
                       std::to_string(alpha_config().max_bits) + " bits");
}

Int qv_floor(const QuadVal& v) {
  if (v.b == 0) return rat_floor(v.a);
  const auto& cfg = alpha_config();
  for (long long bits = cfg.initial_bits; bits <= cfg.max_bits; bits *= 2) {
    auto [lo, hi] = v.enclosure(bits);
    Int fl = rat_floor(lo), fh = rat_floor(hi);
    if (fl == fh) return fl;
  }
  throw PrecisionError("floor of " + qv_str(v) + " undecided at " +
                       std::to_string(alpha_config().max_bits) + " bits");
}

QuadVal qv_mod1(const QuadVal& v) {
  Int f = qv_floor(v);
  return {v.a - Rat(f), v.b};
}

std::string qv_str(const QuadVal& v) {
  if (v.b == 0) return rat_str(v.a);
  return rat_str(v.a) + (v.b > 0 ? " + " : " - ") + std::to_string(v.b > 0 ? v.b : -v.b) +
         "*alpha";
}

}  // namespace nads
