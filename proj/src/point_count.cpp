#include "rigid/point_count.hpp"

#include <chrono>
#include <exception>
#include <thread>
#include <utility>

#include <json.hpp>

namespace rigid {

namespace {

bool is_odd_prime(long long q) {
    if (q < 3 || q % 2 == 0) return false;
    for (long long d = 3; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

void validate_q(long long q) {
    if (!is_odd_prime(q))
        throw validation_error("q must be an odd prime > 2, got " + std::to_string(q));
}

long long pow_mod(long long b, long long e, long long m) {
    long long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

void checked_add(long long& acc, long long v) {
    if (__builtin_add_overflow(acc, v, &acc))
        throw math_error("internal-consistency: accumulator overflow");
}

struct Tallies {
    long long domain = 0;
    long long s = 0;       // sum of chi2(f)
    long long direct = 0;  // number of (y, x) solutions over the slice
};

// full nested scan over one slice of the outermost coordinate; partial
// products are carried down the nesting so each level multiplies in only the
// factors that mention its variable
void scan_slice(long long q, long long t, long long x1_lo, long long x1_hi,
                bool want_s, bool want_direct, const std::vector<int>& chi,
                Tallies& out) {
    for (long long x1 = x1_lo; x1 < x1_hi; ++x1) {
        long long p1 = x1 * (x1 - 1) % q;
        for (long long x2 = 2; x2 < q; ++x2) {
            if (x2 == x1) continue;
            long long p2 = p1 * ((x2 - x1 + q) % q) % q * (x2 - 1) % q;
            for (long long x3 = 2; x3 < q; ++x3) {
                if (x3 == x2) continue;
                long long p3 = p2 * ((x3 - x2 + q) % q) % q * x3 % q;
                for (long long x4 = 2; x4 < q; ++x4) {
                    if (x4 == x3) continue;
                    long long p4 = p3 * ((x4 - x3 + q) % q) % q * (x4 - 1) % q;
                    for (long long x5 = 2; x5 < q; ++x5) {
                        if (x5 == x4) continue;
                        long long p5 = p4 * ((x5 - x4 + q) % q) % q * x5 % q;
                        for (long long x6 = 2; x6 < q; ++x6) {
                            if (x6 == x5 || x6 == t) continue;
                            long long f = p5 * ((x6 - x5 + q) % q) % q *
                                          (x6 - 1) % q *
                                          ((t - x6 + q) % q) % q * t % q;
                            checked_add(out.domain, 1);
                            if (want_s) checked_add(out.s, chi[f]);
                            if (want_direct) {
                                long long sols = 0;
                                for (long long y = 0; y < q; ++y)
                                    if (y * y % q == f) ++sols;
                                checked_add(out.direct, sols);
                            }
                        }
                    }
                }
            }
        }
    }
}

} // namespace

CharacterSumReport count_fiber(long long q, long long t,
                               const std::string& method, int threads) {
    validate_q(q);
    if (t < 2 || t > q - 1)
        throw validation_error("t must lie in {2..q-1}, got " + std::to_string(t));
    bool want_s = method == "char-sum" || method == "both";
    bool want_direct = method == "direct" || method == "both";
    if (!want_s && !want_direct)
        throw validation_error("unknown method '" + method +
                               "' (expected char-sum, direct or both)");
    if (threads < 1)
        throw validation_error("thread count must be positive, got " +
                               std::to_string(threads));

    std::vector<int> chi;
    if (want_s) {
        chi.assign(q, 0);
        for (long long v = 1; v < q; ++v)
            chi[v] = pow_mod(v, (q - 1) / 2, q) == 1 ? 1 : -1;
    }

    auto start = std::chrono::steady_clock::now();
    long long span = q - 2; // x1 ranges over {2..q-1}
    std::vector<Tallies> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) {
        long long lo = 2 + span * i / threads;
        long long hi = 2 + span * (i + 1) / threads;
        pool.emplace_back([&, i, lo, hi]() {
            try {
                scan_slice(q, t, lo, hi, want_s, want_direct, chi, parts[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Tallies total;
    for (const auto& p : parts) {
        checked_add(total.domain, p.domain);
        checked_add(total.s, p.s);
        checked_add(total.direct, p.direct);
    }
    auto stop = std::chrono::steady_clock::now();

    CharacterSumReport r;
    r.q = q;
    r.t = t;
    r.domain_size = total.domain;
    r.s_value = want_s ? total.s : total.direct - total.domain;
    r.hyp_count = r.domain_size + r.s_value;
    if (want_s && want_direct && total.direct != r.hyp_count)
        throw math_error("internal-consistency: direct count " +
                         std::to_string(total.direct) +
                         " != domain_size + s_value = " +
                         std::to_string(r.hyp_count) + " at q=" +
                         std::to_string(q) + ", t=" + std::to_string(t));
    r.wall_time = std::chrono::duration<double>(stop - start).count();
    r.threads = threads;
    r.method = method;
    return r;
}

std::vector<CharacterSumReport> sweep(const std::vector<long long>& qs,
                                      int threads, const std::string& method) {
    std::vector<CharacterSumReport> out;
    for (long long q : qs) {
        validate_q(q);
        for (long long t = 2; t <= q - 1; ++t)
            out.push_back(count_fiber(q, t, method, threads));
    }
    return out;
}

std::string to_json(const CharacterSumReport& r) {
    nlohmann::json j;
    j["q"] = r.q;
    j["t"] = r.t;
    j["domain_size"] = r.domain_size;
    j["s_value"] = r.s_value;
    j["hyp_count"] = r.hyp_count;
    j["wall_time"] = r.wall_time;
    j["threads"] = r.threads;
    j["method"] = r.method;
    return j.dump(2);
}

} // namespace rigid
