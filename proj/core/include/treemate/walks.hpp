#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "treemate/bigint.hpp"

namespace treemate {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One lattice step. Small steps have both coordinates in {-1,0,1};
/// straight steps have exactly one zero coordinate, oblique steps none.
struct Step {
    int dx = 0;
    int dy = 0;
    auto operator<=>(const Step&) const = default;

    bool is_small() const { return dx >= -1 && dx <= 1 && dy >= -1 && dy <= 1; }
    bool is_straight() const { return (dx == 0) != (dy == 0); }
    bool is_oblique() const { return dx != 0 && dy != 0; }
    int reach() const { return (dx < 0 ? -dx : dx) + (dy < 0 ? -dy : dy); }
};

struct Point {
    long long x = 0;
    long long y = 0;
    auto operator<=>(const Point&) const = default;
    Point operator+(const Step& s) const { return {x + s.dx, y + s.dy}; }
};

/// A named, ordered step set. Declared step order fixes enumeration order.
/// Families with unbounded step sets ("lukasiewicz", "kmsw") must be
/// materialized with a reach bound on |dx|+|dy|.
class StepAlphabet : public std::enable_shared_from_this<StepAlphabet> {
public:
    static std::shared_ptr<const StepAlphabet> family(const std::string& name, int reach_bound = 0);
    static std::shared_ptr<const StepAlphabet> custom(std::string name,
                                                      std::vector<Step> steps,
                                                      std::string letters = {},
                                                      std::vector<std::string> forbidden_patterns = {});
    static std::vector<std::string> family_names();

    const std::string& name() const { return name_; }
    std::span<const Step> steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool has_letters() const { return !letters_.empty(); }
    const std::string& letters() const { return letters_; }

    std::optional<int> index_of(const Step& s) const;
    std::optional<int> index_of_letter(char c) const;
    char letter_at(int index) const { return letters_.at(static_cast<std::size_t>(index)); }
    const Step& step_at(int index) const { return steps_.at(static_cast<std::size_t>(index)); }

    /// Forbidden two-letter patterns, checked on the letter sequence.
    const std::vector<std::string>& forbidden_patterns() const { return forbidden_; }
    bool pair_allowed(int prev_index, int next_index) const;
    bool admits_zero_step() const;

    std::shared_ptr<const StepAlphabet> reflected() const;

private:
    friend struct AlphabetBuilder;
    StepAlphabet() = default;
    void set(std::string name, std::vector<Step> steps, std::string letters,
             std::vector<std::string> forbidden);

    std::string name_;
    std::vector<Step> steps_;
    std::string letters_;                // empty, or one letter per step
    std::vector<std::string> forbidden_; // two-letter strings, sorted
    mutable std::weak_ptr<const StepAlphabet> reflected_cache_;
};

using AlphabetRef = std::shared_ptr<const StepAlphabet>;

struct Walk {
    AlphabetRef alphabet;
    Point start{0, 0};
    std::vector<Step> steps;

    std::size_t size() const { return steps.size(); }
    Point end() const;
    /// start plus all prefix positions; length size()+1
    std::vector<Point> positions() const;
    std::string letter_word() const; // requires alphabet letters
    auto operator<=>(const Walk&) const = default;
};

/// True iff every intermediate and final position has x >= 0 and y >= 0.
bool is_confined(const Walk& w);

/// All confined walks of the given length from start to end, respecting the
/// alphabet's forbidden patterns, in lexicographic step order (declared
/// alphabet order). Deterministic; empty result is valid.
std::vector<Walk> enumerate_walks(const AlphabetRef& alphabet, int length, Point start, Point end);

/// Same output as enumerate_walks, produced by partitioning on the first
/// step and merging in declared order.
std::vector<Walk> enumerate_walks_parallel(const AlphabetRef& alphabet, int length, Point start, Point end);

/// Exact count by dynamic programming over positions (and last letter when
/// the alphabet carries forbidden patterns). Agrees with enumerate_walks.
BigInt count_walks(const AlphabetRef& alphabet, int length, Point start, Point end);

/// Reflection across the diagonal x = y: swaps the step coordinates and the
/// start point coordinates. An involution; preserves confinement.
Walk reflect_diagonal(const Walk& w);

/// Unit-step expansion of a general step: |dx| horizontal unit steps then
/// |dy| vertical unit steps. The face a mated (i,j)-step bounds has
/// |i|+|j|+2 sides.
std::vector<Step> expand_step(const Step& s);

/// Walk text: either a letter word ("aabbccbac") or semicolon-separated
/// tokens "(1,0);(0,1);(-1,1)", with an optional " @ (x,y)" start suffix.
Walk parse_walk_text(const std::string& line, const AlphabetRef& alphabet);
std::string format_walk_text(const Walk& w);

} // namespace treemate
