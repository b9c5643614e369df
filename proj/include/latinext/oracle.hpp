// oracle.hpp -- brute-force ground truth for tests.
//
// Nothing here calls the matching, flow, shuffle or witness code, so the
// answers are independent of the constructions they are compared with.
// `laminate` is the one exception: it splits an F-square with gap filling.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latinext/core.hpp"
#include "latinext/frequency.hpp"

namespace latinext::oracle {

/// True iff some order-n latin square has `r` in its upper-left corner.
bool brute_complete(const PartialLatinRectangle& r, int n);

/// Number of such squares, counting stops at `limit`.
std::uint64_t count_completions(const PartialLatinRectangle& r, int n,
                                std::uint64_t limit = UINT64_MAX);

/// True iff some F-square of type lambda has `r` in its upper-left corner.
bool brute_freq_complete(const FrequencyRectangle& r, const Partition& lambda, int n);

/// True iff some R x S partial latin rectangle on T symbols with
/// min{RS, RT, ST} entries has `p` in its upper-left corner.
bool brute_saturate(const PartialLatinRectangle& p, int R, int S, int T);

/// Latin squares of order n in lexicographic row-major order; with
/// `reduced` the first row and column are fixed to 1..n.
class EnumerationStream
{
public:
    EnumerationStream(int n, bool reduced);

    std::optional<LatinSquare> next();
    std::uint64_t yielded() const { return _yielded; }

private:
    bool fixed(int pos) const;

    int _n;
    bool _reduced;
    std::vector<int> _cells;
    std::vector<std::uint32_t> _row_used, _col_used;
    int _pos = 0;
    bool _started = false;
    bool _done = false;
    std::uint64_t _yielded = 0;
};

std::uint64_t count_latin_squares(int n, bool reduced);

/// Splits class i of an F-square into lambda_i labels so that the result is
/// an order-n latin square. Class i uses labels sum(lambda[0..i)) + 0.. .
LatinSquare laminate(const FrequencySquare& f);

/// Inverse of `laminate`: maps each label back to its class.
FrequencySquare collapse(const LatinSquare& l, const Partition& lambda);

} // namespace latinext::oracle
