#pragma once

#include <algorithm>
#include <array>

namespace cartanjet {

// Packed storage for symmetric tensor slots. Index tuples are kept sorted
// ascending; the packed offset functions below enumerate them in
// lexicographic order, which fixes the canonical layout used everywhere.

inline int sym2_size(int n) { return n * (n + 1) / 2; }

inline int sym3_size(int n) { return n * (n + 1) * (n + 2) / 6; }

/// Offset of the sorted pair (a,b), 0 <= a <= b < n.
inline int sym2_offset(int n, int a, int b)
{
    if (a > b) std::swap(a, b);
    return a * n - a * (a - 1) / 2 + (b - a);
}

/// Offset of the sorted triple (a,b,c), 0 <= a <= b <= c < n.
inline int sym3_offset(int n, int a, int b, int c)
{
    std::array<int, 3> s{a, b, c};
    std::sort(s.begin(), s.end());
    int off = 0;
    for (int i = 0; i < s[0]; ++i) off += sym2_size(n - i);
    return off + sym2_offset(n - s[0], s[1] - s[0], s[2] - s[0]);
}

} // namespace cartanjet
