#include "altsnake/integer.hpp"

namespace altsnake {

Integer binomial(Index n, Index k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer acc = 1;
    for (Index t = 1; t <= k; ++t) {
        acc *= (n - k + t);
        acc /= t;
    }
    return acc;
}

}  // namespace altsnake
