#include "rigid/chars.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace rigid {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw validation_error("character arithmetic overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw validation_error("character arithmetic overflow");
    return r;
}

} // namespace

Character::Character(long long num, long long den) {
    if (den == 0) throw validation_error("character with zero denominator");
    if (den < 0) { den = -den; num = -num; }
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

bool Character::operator<(const Character& o) const {
    // cross-multiply in 128 bits; denominators are arbitrary machine ints
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string Character::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Character mul(const Character& a, const Character& b) {
    long long n = checked_add(checked_mul(a.num(), b.den()), checked_mul(b.num(), a.den()));
    return Character(n, checked_mul(a.den(), b.den()));
}

Character inv(const Character& a) {
    return Character(a.den() - a.num(), a.den());
}

Character pow(const Character& a, long long k) {
    long long r = k % a.den();
    if (r < 0) r += a.den();
    return Character(checked_mul(r, a.num()), a.den());
}

long long order(const Character& a) { return a.den(); }

bool is_trivial(const Character& a) { return a.num() == 0; }

std::vector<Character> galois_orbit(const Character& a) {
    std::vector<Character> out;
    long long q = a.den();
    for (long long k = 1; k <= q; ++k)
        if (std::gcd(k, q) == 1) out.push_back(pow(a, k));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Character parse_character(const std::string& s) {
    auto bad = [&] { throw validation_error("cannot parse character '" + s + "' (expected \"p/q\")"); };
    if (s.empty()) bad();
    size_t pos = 0;
    bool neg = s[0] == '-';
    if (neg) pos = 1;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) bad();
    long long p = 0, q = 1;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        if (__builtin_mul_overflow(p, 10LL, &p) || __builtin_add_overflow(p, (long long)(s[pos] - '0'), &p)) bad();
        ++pos;
    }
    if (pos < s.size()) {
        if (s[pos] != '/') bad();
        ++pos;
        if (pos >= s.size()) bad();
        q = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            if (__builtin_mul_overflow(q, 10LL, &q) || __builtin_add_overflow(q, (long long)(s[pos] - '0'), &q)) bad();
            ++pos;
        }
        if (pos != s.size() || q == 0) bad();
    }
    return Character(neg ? -p : p, q);
}

} // namespace rigid
