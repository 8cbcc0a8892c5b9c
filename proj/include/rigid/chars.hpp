#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "rigid/errors.hpp"

namespace rigid {

// A tame character, i.e. an element of Q/Z written as a reduced fraction
// num/den with 0 <= num < den.  The character sends a chosen generator of the
// tame inertia group to exp(2*pi*i*num/den), so its order equals den.  The
// group law is written multiplicatively in the API (mul/inv/pow) even though
// the underlying arithmetic is addition of fractions mod 1.
class Character {
public:
    Character() : num_(0), den_(1) {}
    Character(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool operator==(const Character& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Character& o) const { return !(*this == o); }
    bool operator<(const Character& o) const;

    std::string str() const; // "p/q"

private:
    long long num_, den_;
};

inline Character trivial_char() { return Character(0, 1); }
inline Character quadratic_char() { return Character(1, 2); }

Character mul(const Character& a, const Character& b);
Character inv(const Character& a);
Character pow(const Character& a, long long k);
long long order(const Character& a);
bool is_trivial(const Character& a);

// {pow(a,k) : gcd(k, order(a)) = 1}, sorted ascending.
std::vector<Character> galois_orbit(const Character& a);

// Parses "p/q" (also bare integers "p" as p/1).  Throws validation_error on
// anything else.
Character parse_character(const std::string& s);

} // namespace rigid
