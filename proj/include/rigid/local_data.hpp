#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigid/chars.hpp"

namespace rigid {

// Jordan block lengths, weakly decreasing, all >= 1.
using Partition = std::vector<int>;

// e_j = number of blocks of length >= j, for j = 1..max block.
std::vector<int> e_sequence(const Partition& p);

// Inverse of e_sequence.  Accepts trailing zeros.  A non-monotone sequence
// (some multiplicity e_j - e_{j+1} negative) throws math_error
// "internal-consistency", since it cannot come from a partition.
Partition partition_from_e(const std::vector<int>& e);

// The Jordan data of a local system at one singular point: for each
// eigencharacter, the partition of its generalized eigenspace into blocks.
struct LocalMonodromy {
    std::map<Character, Partition> parts;

    bool operator==(const LocalMonodromy& o) const { return parts == o.parts; }

    int degree() const;
    // number of blocks at rho with length >= i (0 if rho absent)
    int e(const Character& rho, int i) const;
    // sum over characters of (total block length) * character, in Q/Z
    Character det() const;
    // all blocks of length 1 at the trivial character
    bool is_identity() const;
    std::string str() const;
};

LocalMonodromy make_monodromy(std::vector<std::pair<Character, Partition>> entries);

// sum over characters and i of e_i^2; the dimension of the centralizer of the
// class in GL_degree
long long centralizer_dim_gl(const LocalMonodromy& m);

enum class Provenance { ConstructedByAlgorithm, UserSupplied };

// A twist datum: one character per finite point.  Its character at infinity
// is the product of the finite ones.  As actual rank-one local systems these
// need a nontrivial entry somewhere; the all-trivial datum is still accepted
// here because it acts as the identity twist.
struct RankOneSystem {
    std::vector<std::pair<std::string, Character>> finite_chars;

    Character infinity_char() const;
    RankOneSystem dual() const;
};

// Local Jordan data at d >= 2 labeled finite points and at infinity, with
// equal degrees (the rank) and the determinant identity
//   sum over finite points of det == det at infinity  (in Q/Z).
// The rigidity/Euler formulas below carry their usual meaning only when the
// data comes from an irreducible middle extension; the provenance flag
// records whether it was produced by the construction pipeline, nothing more.
struct FormalLocalSystem {
    std::vector<std::pair<std::string, LocalMonodromy>> finite_points;
    LocalMonodromy at_infinity;
    Provenance provenance = Provenance::UserSupplied;

    int rank() const;
    const LocalMonodromy* find(const std::string& label) const;
    int e(const std::string& label, const Character& rho, int i) const;
    int e_at_infinity(const Character& rho, int i) const;

    // (1 - #finite points) * rank^2 + sum of GL centralizer dimensions;
    // equals 2 exactly for cohomologically rigid irreducible systems
    long long rigidity_index() const;
    // (1 - #finite points) * rank + sum of e_1(s, trivial); <= 0 is a
    // necessary condition for irreducibility
    long long euler_characteristic() const;

    // every violated invariant, with the offending point; empty means ok
    std::vector<std::string> violations() const;
    // throws validation_error listing the violations, if any
    void validate() const;

    // label-insensitive to ordering, provenance ignored
    bool operator==(const FormalLocalSystem& o) const;
};

FormalLocalSystem rank_one(const Character& c1, const Character& c2);

std::string to_json(const FormalLocalSystem& f);
FormalLocalSystem system_from_json(const std::string& text);

} // namespace rigid
