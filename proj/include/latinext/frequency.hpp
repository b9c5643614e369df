// frequency.hpp -- completing partial frequency rectangles to F-squares.
//
// An F-square of type F(n; l1..lk) is an n x n array in which class i
// occurs exactly li times in every row and column. A partial F-rectangle
// with multiplicities m1..mk (t = sum mi) has each class i at most mi times
// per row and column. It extends to an F-square of type F(n; l) iff some
// extension with the same multiplicities satisfies
//
//   B1  every row    >= s + t - n entries
//   B2  every column >= r + t - n entries
//   B3  class i      >= mi (r + s - n) occurrences
//   B4  at most (rst + (n-r)(n-s)(n-t)) / n entries.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "latinext/core.hpp"

namespace latinext {

class PartitionMismatch : public Error
{
public:
    using Error::Error;
};

/// Nonnegative parts l1..lk with k >= 1.
class Partition
{
public:
    explicit Partition(std::vector<int> parts);

    int size() const { return static_cast<int>(_parts.size()); }
    int operator[](int i) const { return _parts[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return _parts; }
    int total() const { return _total; }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> _parts;
    int _total = 0;
};

/// r x s grid of class indices (0-based, kEmpty for blanks) in which class i
/// appears at most mu[i] times in each row and column.
class FrequencyRectangle
{
public:
    /// Throws `ValidationError` on a class outside 0..k-1 or a line holding
    /// class i more than mu[i] times.
    FrequencyRectangle(Partition mu, Grid<int> cells);

    int rows() const { return _cells.rows(); }
    int cols() const { return _cells.cols(); }
    int classes() const { return _mu.size(); }
    const Partition& mu() const { return _mu; }
    int t() const { return _mu.total(); }
    int at(int r, int c) const { return _cells(r, c); }
    const Grid<int>& cells() const { return _cells; }

    int entry_count() const;
    std::vector<int> class_counts() const;

    bool is_extended_by(const Grid<int>& other) const;
    bool operator==(const FrequencyRectangle&) const = default;

private:
    Partition _mu;
    Grid<int> _cells;
};

/// Full n x n array with class i exactly lambda[i] times per row and column.
class FrequencySquare
{
public:
    /// Throws `ValidationError` if the counts are wrong.
    FrequencySquare(Partition lambda, Grid<int> cells);

    int order() const { return _cells.rows(); }
    const Partition& lambda() const { return _lambda; }
    int at(int r, int c) const { return _cells(r, c); }
    const Grid<int>& cells() const { return _cells; }

private:
    Partition _lambda;
    Grid<int> _cells;
};

/// Checks sum(lambda) == n, matching class counts and mu[i] <= lambda[i].
void require_compatible(const FrequencyRectangle& r, const Partition& lambda, int n);

ConditionReport check_freq_conditions(const FrequencyRectangle& r, const Partition& lambda, int n);

std::optional<FrequencyRectangle> find_freq_witness(const FrequencyRectangle& r,
                                                    const Partition& lambda, int n);

std::optional<FrequencySquare> complete_frequency(const FrequencyRectangle& r,
                                                  const Partition& lambda, int n);

/// Decides completability exactly: tries `complete_frequency` with the
/// rectangle's own mu, then with mu raised to lambda. With mu = lambda the
/// conditions reduce to a full r x s extension holding class i at least
/// lambda_i (r + s - n) times, which every completion restricts to.
std::optional<FrequencySquare> complete_frequency_relaxed(const FrequencyRectangle& r,
                                                          const Partition& lambda, int n);

/// Completes an r x n array whose rows are full F-rows of type lambda and
/// whose columns hold class i at most lambda[i] times.
FrequencySquare complete_freq_band(const Grid<int>& band, const Partition& lambda);

// ----------------------------------------------------------------------------
// Split labels
// ----------------------------------------------------------------------------

/// Copy `copy` (0-based, < mu[cls]) of class `cls`.
struct SplitLabel
{
    int cls;
    int copy;
    bool operator==(const SplitLabel&) const = default;
};

/// Dense integer code of a split label: sum(mu[0..cls)) + copy.
int encode_label(const Partition& mu, SplitLabel label);
SplitLabel decode_label(const Partition& mu, int code);

/// Reading left to right, top to bottom, the j-th occurrence (0-based) of
/// class i becomes copy j mod mu[i]. Returns encoded labels.
Grid<int> split_classes(const Grid<int>& classes, const Partition& mu);
Grid<int> merge_labels(const Grid<int>& labels, const Partition& mu);

// ----------------------------------------------------------------------------
// Text form
// ----------------------------------------------------------------------------
//
//     r s k
//     mu_1 .. mu_k
//     lambda_1 .. lambda_k
//     <r rows of s tokens: class in 1..k or ".">

struct FrequencyInput
{
    FrequencyRectangle rect;
    Partition lambda;
};

FrequencyInput parse_frequency(std::string_view text);
std::string serialize(const FrequencyRectangle& r, const Partition& lambda);
std::string serialize(const FrequencySquare& f);

nlohmann::json to_json(const FrequencyRectangle& r);
nlohmann::json to_json(const FrequencySquare& f);

} // namespace latinext
