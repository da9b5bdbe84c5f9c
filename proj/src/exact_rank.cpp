#include "exact_rank.hpp"

#include <cstdlib>
#include <gmpxx.h>

namespace dlg::detail {

namespace {

struct Overflow {};

constexpr std::int64_t kGuard = std::int64_t{1} << 62;

// One Bareiss step in 64 bits; throws Overflow when the exact value would
// leave the guarded range.
inline std::int64_t step64(std::int64_t piv, std::int64_t aij, std::int64_t aik,
                           std::int64_t akj, std::int64_t prev) {
  __int128 num = static_cast<__int128>(piv) * aij -
                 static_cast<__int128>(aik) * akj;
  __int128 q = num / prev;  // divides exactly by Sylvester's identity
  if (q > kGuard || q < -kGuard) throw Overflow{};
  return static_cast<std::int64_t>(q);
}

template <typename T>
long rank_bareiss(std::vector<std::vector<T>> m) {
  const long rows = static_cast<long>(m.size());
  const long cols = rows ? static_cast<long>(m[0].size()) : 0;
  T prev = 1;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long pivot_row = -1;
    for (long i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    std::swap(m[r], m[pivot_row]);
    const T piv = m[r][c];
    for (long i = r + 1; i < rows; ++i) {
      for (long j = c + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          m[i][j] = step64(piv, m[i][j], m[i][c], m[r][j], prev);
        } else {
          m[i][j] = (piv * m[i][j] - m[i][c] * m[r][j]) / prev;
        }
      }
      m[i][c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

}  // namespace

long rank_fraction_free(std::vector<std::vector<std::int64_t>> m) {
  try {
    return rank_bareiss(m);
  } catch (const Overflow&) {
    std::vector<std::vector<mpz_class>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      big[i].assign(m[i].begin(), m[i].end());
    return rank_bareiss(std::move(big));
  }
}

}  // namespace dlg::detail
