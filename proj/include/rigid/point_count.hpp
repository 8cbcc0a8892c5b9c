#pragma once
#include <string>
#include <vector>

#include "rigid/errors.hpp"

namespace rigid {

// Point count of one specialized fiber
//   Y^2 = (x2-x1)(x3-x2)(x4-x3)(x5-x4)(x6-x5)(t-x6) * x1 x3 x5 t
//         * (x1-1)(x2-1)(x4-1)(x6-1)      over F_q, x7 = t,
// with x_a in F_q \ {0,1} and consecutive coordinates distinct (t != x6).
// The right side never vanishes on the domain, so every admissible tuple
// contributes 1 + chi2(f) points and hyp_count = domain_size + s_value.
struct CharacterSumReport {
    long long q = 0;
    long long t = 0;
    long long domain_size = 0;
    long long s_value = 0;    // sum over the domain of the quadratic character of f
    long long hyp_count = 0;
    double wall_time = 0.0;   // seconds spent enumerating
    int threads = 1;
    std::string method;       // "char-sum", "direct" or "both"
};

// method "char-sum" evaluates chi2 through a precomputed Euler-criterion
// table; "direct" counts (y, x) solutions of y^2 = f(x, t) by brute force;
// "both" runs the two and requires hyp_count agreement.  q must be an odd
// prime and t in {2..q-1}.  Work is split across threads by slicing the x1
// range; sums are reduced in slice order and overflow-checked, so reports are
// identical for every thread count except for wall_time.
CharacterSumReport count_fiber(long long q, long long t,
                               const std::string& method = "both",
                               int threads = 1);

// count_fiber over every t in {2..q-1} for each q, ordered by (q, t).
std::vector<CharacterSumReport> sweep(const std::vector<long long>& qs,
                                      int threads = 1,
                                      const std::string& method = "both");

std::string to_json(const CharacterSumReport& r);

} // namespace rigid
