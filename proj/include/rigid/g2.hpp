#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rigid/convolution.hpp"
#include "rigid/local_data.hpp"

namespace rigid {

// One row of the catalog of degree-7 conjugacy classes whose semisimple part
// and unipotent part can appear as local monodromy with G2-monodromy group.
// template_id encodes the eigenvalue/block template: "~" marks the inverse
// character, a "-" prefix the quadratic twist, "Jn" a Jordan block of length
// n, "En" n singleton blocks, "e"/"i" a character of order exactly 3/4, and
// "x","y" free character parameters subject to the row's conditions.
struct CatalogRow {
    std::string template_id;
    std::vector<std::string> param_names; // empty, {"e"}, {"i"}, {"x"} or {"x","y"}
    std::string conditions;               // human-readable parameter conditions
    int dim_c_g2;                         // centralizer dimension in G2
    int dim_c_gl7;                        // centralizer dimension in GL7
    // nullopt when the parameters violate the row conditions or the template
    // degenerates (character collisions changing the block structure)
    std::optional<LocalMonodromy> (*instantiate)(const std::vector<Character>&);
};

const std::vector<CatalogRow>& g2_catalog();

struct G2ClassInfo {
    std::string template_id;
    std::vector<std::pair<std::string, Character>> parameters;
    int dim_c_g2 = 0;
    int dim_c_gl7 = 0;
};

// Matches a degree-7 class against the catalog, trying parameter values drawn
// from the characters of m and their inverses, smallest witness first.
// Returns nullopt when no row matches.  Throws validation_error when
// degree != 7 and math_error if two distinct rows claim the same class.
std::optional<G2ClassInfo> recognize(const LocalMonodromy& m);

// The twists and convolution characters of the rank-7 construction tower:
// H_0 = L(f[0]) and H_i = mt(mc(H_{i-1}, rho[i-1]), f[i]).
struct ConstructionRecipe {
    std::array<RankOneSystem, 7> f;   // f[0]..f[6] seed and per-step twists
    std::array<Character, 6> rho;     // rho[0]..rho[5] convolution characters
};

ConstructionRecipe construction_recipe(const Character& phi, const Character& eta);

// Throws math_error "condition violated: ..." naming every product among
// phi, eta, phi*eta, phi*eta^2, eta*phi^2, phi*etabar that equals the
// quadratic character.
void check_construction_conditions(const Character& phi, const Character& eta);

// Runs the six convolution-and-twist steps and returns the tower H_0..H_6
// (7 systems, ranks 1..7).  Every intermediate is validated.
std::vector<FormalLocalSystem> construct_h(const Character& phi, const Character& eta);

// Finite local monodromies of H_6, the same for every parameter choice:
// -E4 + E3 at alpha1 and a 3+2+2 unipotent at alpha2.
const LocalMonodromy& tower_alpha1();
const LocalMonodromy& tower_alpha2();

// Predicted infinity monodromy of H_6, decided from (phi, eta) alone.
// case_tag 1: both trivial, single length-7 unipotent block.
// case_tag 2: phi = eta of order 3, two J3 blocks and a fixed line.
// case_tag 3: paired J2 blocks plus x^2, x^-2 and a fixed line; reached by
//             phi = eta (variant ""), eta = phi^-2 ("eta=phibar^2") and
//             phi = eta^-2 ("phi=etabar^2").
// case_tag 4: paired J2 blocks plus a J3 at the trivial character; reached by
//             phi = eta^-1 (variant ""), phi trivial ("phi-trivial") and eta
//             trivial ("eta-trivial").
// case_tag 5: seven pairwise distinct eigenvalues 1, phi, eta, phi*eta and
//             inverses.
// Degenerate parameters (one of the six products equal to the quadratic
// character) throw math_error "no-rigid-system-exists: ...".
struct InfinityCase {
    int case_tag = 0;
    std::string variant;
    LocalMonodromy at_infinity;
};

InfinityCase infinity_case(const Character& phi, const Character& eta);

// Reversal of the construction: mt by the dual twist, then mc by the inverse
// convolution character, six times.  ok means every step succeeded, the final
// rank is 1 and the final system is exactly L(f[0]) of the recipe; otherwise
// contradiction holds the first failure ("step i: ..." counts steps from the
// top, i = 6..1).
struct Descent {
    bool ok = false;
    std::vector<int> ranks;      // rank 7, then the rank after each convolution
    std::string contradiction;   // empty when ok
};

Descent invert_construction(const FormalLocalSystem& h,
                            const Character& phi, const Character& eta);

// All multisets {d1 >= d2 >= d3} of GL7 centralizer dimensions from the
// catalog summing to 7^2 + 2, in descending lexicographic order.
std::vector<std::array<int, 3>> classify_profiles();

// One unordered triple of concrete catalog classes examined by the search.
struct ClassifiedTriple {
    std::array<int, 3> profile;            // GL7 dims, descending
    std::array<G2ClassInfo, 3> classes;    // sorted by descending GL7 dim
    std::array<LocalMonodromy, 3> monodromies;
    std::string status;                    // "survives" or "excluded:<rule>"
};

struct ClassificationReport {
    int bound = 0;
    std::vector<std::array<int, 3>> profiles;
    std::vector<ClassifiedTriple> triples;
};

// Enumerates all catalog classes with parameters of order dividing bound,
// forms the unordered triples whose GL7 centralizer dimensions sum to 51 and
// filters them in stages:
//   excluded:twist-order-2   a quadratic simultaneous twist forces a section
//   excluded:adjoint         rigidity in the adjoint exceeds dim G2
//   excluded:twist-order-4   a twist of order <= 4 forces a section
//   excluded:twist-order-N   some higher-order twist forces a section
//   excluded:descent         no parameter pair descends the candidate cleanly
// Everything else survives; at bound 24 the survivors are exactly the classes
// the construction tower realizes at infinity.
ClassificationReport classify_rigid_g2(int bound);

std::string to_json(const ClassificationReport& r);

// Smallest lcm order of a simultaneous twist (t1, t2, t1*t2) making the
// twisted Euler characteristic positive, over all arrangements of the three
// classes; nullopt when no such twist exists.  Twist candidates are built
// from the inverse characters appearing in the classes.
std::optional<long long> twist_kill_order(const LocalMonodromy& m1,
                                          const LocalMonodromy& m2,
                                          const LocalMonodromy& m3);

// true iff the total block length per character is constant on Galois orbits,
// which makes the trace of the class rational.
bool trace_rational_at_infinity(const LocalMonodromy& m);

// The rational trace as an integer (sum over orbits of multiplicity times the
// Moebius value of the orbit's order); nullopt when the trace is irrational.
std::optional<long long> rational_infinity_trace(const LocalMonodromy& m);

// All pairs (phi, eta) with orders <= max_order that satisfy the construction
// conditions and whose predicted infinity class has rational trace; sorted.
std::vector<std::pair<Character, Character>> enumerate_rational_pairs(int max_order);

} // namespace rigid
