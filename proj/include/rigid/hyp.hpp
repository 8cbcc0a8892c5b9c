#pragma once
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigid/errors.hpp"

namespace rigid {

// One factor (X_a - t_i) or (X_{k+1} - X_k) of the Kummer cover, as rendered
// polynomial text plus its exponent.
struct HypFactor {
    std::string poly;
    int exp = 0;

    bool operator==(const HypFactor& o) const {
        return poly == o.poly && exp == o.exp;
    }
};

// Exponent data of the hypersurface family
//   Y^N = prod_a (X_a - T_1)^e(a,1) (X_a - T_2)^e(a,2)
//         * prod_k (X_{k+1} - X_k)^f(k)
// in seven variables X_1..X_7 over the two-parameter base (T_1, T_2).  All
// exponents are normalized mod N into [0, N); exponent 0 means the factor is
// absent.
struct HypEquation {
    int N = 2;
    int n1 = 0, n2 = 0;                       // reduced mod N
    std::array<std::array<int, 2>, 7> e{};    // e[a-1][i-1] for X_a - T_i
    std::array<int, 6> f{};                   // f[k-1] for X_{k+1} - X_k
    std::optional<std::pair<long long, long long>> specialization;
};

// Fills the exponent tables:
//   e(a,1) = N/2 for odd a, 0 for even a
//   e(1,2) = N/2+n1+n2, e(2,2) = e(6,2) = N/2-n1, e(4,2) = N/2+n1-n2,
//   e(3,2) = e(5,2) = e(7,2) = 0
//   f(1..6) = N/2-n1-2n2, N/2+n1+2n2, N/2-n1-n2, N/2+n1+n2, N/2-n1, N/2+n1
// all reduced mod N.  N must be even and positive (math_error otherwise).
HypEquation hyp_equation(long long N, long long n1, long long n2);

// The specialized equation at T_1 = t1, T_2 = t2 with X_7 kept symbolic.
struct RenderedEquation {
    int N = 2;
    long long t1 = 0, t2 = 1;
    std::string text;                      // "Y^N = factor*factor*..."
    std::vector<HypFactor> factors;        // difference factors, then T1, then T2
    std::vector<std::string> constraints;  // X_a != t_i, consecutive distinct, Y != 0
};

// Substitutes (t1, t2); factor order is the six differences X_{k+1}-X_k, then
// the T1 factors for a = 1..7, then the T2 factors.  Zero exponents are
// omitted.  t1 == t2 collapses the cover and throws math_error.
RenderedEquation specialize_and_render(const HypEquation& h, long long t1, long long t2);

// "Y^N = ..." from a factor list; used both by the renderer and to round-trip
// the JSON form back to text.
std::string equation_text(int N, const std::vector<HypFactor>& factors);

std::string to_json(const HypEquation& h);
std::string to_json(const RenderedEquation& r);
std::vector<HypFactor> factors_from_json(const std::string& text);

} // namespace rigid
