// saturated.hpp -- extending a partial latin rectangle of type (r,s,t) to a
// saturated one of type (R,S,T), i.e. one with min{RS, RT, ST} entries.
//
// For R, S <= T a saturated rectangle is a full R x S array. Such an
// extension exists iff the input extends to some P of type (R,s,t) with
//
//   C1  every row    >= s + t - T entries
//   C2  every column >= R + t - T entries
//   C3  the row deficit sets A_j = {symbols} \ row j admit f,g-representatives:
//       a  each symbol chosen at most S - s times
//       b  each row chooses at most S - s symbols
//       c  row j chooses at least S - T + |A_j| symbols
//       d  at least (S - s)(R + t - T) choices in total.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "latinext/core.hpp"

namespace latinext {

struct SaturationTarget
{
    int R;
    int S;
    int T;

    std::array<int, 3> triple() const { return {R, S, T}; }
    bool operator==(const SaturationTarget&) const = default;
    auto operator<=>(const SaturationTarget&) const = default;
};

/// Throws `PreconditionViolated` unless p fits inside the target and R, S <= T.
void require_target(const PartialLatinRectangle& p, const SaturationTarget& target);

/// A_j = {0..t-1} minus the symbols of row j, ascending.
std::vector<std::vector<int>> row_deficit_sets(const PartialLatinRectangle& p);

struct FGAssignment
{
    std::vector<int> f;                    ///< per symbol: rows choosing it
    std::vector<int> g;                    ///< per row: number of symbols chosen
    std::vector<std::vector<int>> chosen;  ///< per row, ascending, subset of A_j

    /// Builds f and g from per-row chosen sets.
    static FGAssignment from_chosen(int symbols, std::vector<std::vector<int>> chosen);
};

/// Margins for C1, C2, C3a-d. `p` must have target.R rows (else ShapeError).
ConditionReport check_sat_conditions(const PartialLatinRectangle& p, const SaturationTarget& target,
                                     const FGAssignment& fg);

/// An assignment meeting C3a-d for the R-row rectangle `p`, or nullopt.
std::optional<FGAssignment> find_fg(const PartialLatinRectangle& p, const SaturationTarget& target);

/// A type (R,s,t) extension of `p` (rows padded to R) meeting C1-C3, or nullopt.
std::optional<PartialLatinRectangle> find_sat_witness(const PartialLatinRectangle& p,
                                                      const SaturationTarget& target);

/// Full R x S rectangle on T symbols extending `p`, or nullopt. Requires
/// R, S <= T.
std::optional<PartialLatinRectangle> saturate(const PartialLatinRectangle& p,
                                              const SaturationTarget& target);

/// Like `saturate` but for any target containing p: permutes roles so the
/// largest dimension plays the symbol role, saturates, then permutes back.
std::optional<PartialLatinRectangle> saturate_any(const PartialLatinRectangle& p,
                                                  const SaturationTarget& target);

/// Every (R,S,T) with (r,s,t) <= (R,S,T) <= caps admitting a saturated
/// extension, sorted ascending. Targets are scanned on `jobs` threads.
std::vector<SaturationTarget> saturable_types(const PartialLatinRectangle& p,
                                              const SaturationTarget& caps, int jobs = 1);

/// Top-left R x S subarray of a saturated z with r <= s <= t, declared over
/// T symbols. Requires R <= r, S <= s, T >= t.
PartialLatinRectangle monotone_shrink(const PartialLatinRectangle& z, const SaturationTarget& target);

} // namespace latinext
