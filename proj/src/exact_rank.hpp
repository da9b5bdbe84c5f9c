#pragma once

// Exact matrix rank over the rationals by fraction-free (Bareiss)
// elimination. Fast path in 64-bit with overflow detection, falling back to
// GMP integers when intermediate values grow past the guard.

#include <cstdint>
#include <vector>

namespace dlg::detail {

long rank_fraction_free(std::vector<std::vector<std::int64_t>> m);

}  // namespace dlg::detail
