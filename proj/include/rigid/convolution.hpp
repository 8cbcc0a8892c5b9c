#pragma once
#include <optional>
#include <string>
#include <vector>

#include "rigid/local_data.hpp"

namespace rigid {

// Middle convolution with the Kummer sheaf of chi, acting on local Jordan
// data.  Output rank is
//   n' = sum over finite s of (n - e_1(s, trivial)) - e_1(infinity, chi^-1).
// Throws math_error "invalid-character" for trivial chi, "degenerate-
// convolution" when n' <= 0, and "internal-consistency" when a transported
// e-sequence is not weakly decreasing (the input was not genuine local data).
// The input must validate and have at least two finite points.
FormalLocalSystem mc(const FormalLocalSystem& f, const Character& chi);

// Middle tensor with a rank-one twist: shifts the character keys at each
// finite point by the twist's character there (missing labels act trivially)
// and at infinity by the product of all twist characters.  Partitions and
// rank are unchanged.
FormalLocalSystem mt(const FormalLocalSystem& f, const RankOneSystem& l);

// true iff mc(mc(f, chi), chi^-1) == f
bool mc_involution_check(const FormalLocalSystem& f, const Character& chi);

struct ReductionStep {
    // twist characters per finite point (inverses of the dominant characters)
    std::vector<std::pair<std::string, Character>> twist;
    // convolution character; absent when the loop stopped after the twist
    std::optional<Character> chi;
    int rank_after = 0;
};

struct ReductionTrace {
    int start_rank = 0;
    std::vector<ReductionStep> steps;
    // "rigid-reducible"                  -- reached rank one
    // "irreducible-rigid-unreachable"    -- no step strictly decreases rank
    // "no-nontrivial-character-at-infinity" -- no convolution direction exists
    // "degenerate-convolution: ..."      -- mc failed mid-trace
    std::string outcome;
    FormalLocalSystem final_system;

    std::vector<int> ranks() const; // start rank followed by each rank_after
};

// Greedy reduction: at each step twist so the dominant character (largest
// block count, ties broken by smallest character) at every finite point
// becomes trivial, then convolve with the inverse of the nontrivial character
// at infinity with the largest block count (same tie-break), which maximizes
// the rank drop.  Stops at rank one or when no strict decrease is possible.
ReductionTrace katz_reduce(const FormalLocalSystem& f);

std::string to_json(const ReductionTrace& t);

} // namespace rigid
