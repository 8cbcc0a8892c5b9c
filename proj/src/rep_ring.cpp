#include "rigid/rep_ring.hpp"

#include <sstream>

#include "rigid/g2.hpp"

namespace rigid {

long long RepRingElement::dim() const {
    long long d = 0;
    for (const auto& [key, v] : terms) d += key.second * v;
    return d;
}

bool RepRingElement::is_actual() const {
    for (const auto& [key, v] : terms)
        if (v < 0) return false;
    return true;
}

std::string RepRingElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, v] : terms) {
        if (!first) os << " + ";
        first = false;
        os << v << "*(" << key.first.str() << ",[" << key.second << "])";
    }
    return os.str();
}

RepRingElement from_local_monodromy(const LocalMonodromy& m) {
    RepRingElement a;
    for (const auto& [c, p] : m.parts)
        for (int b : p) a.terms[{c, b}] += 1;
    return a;
}

RepRingElement add(const RepRingElement& a, const RepRingElement& b, long long scale) {
    RepRingElement out = a;
    for (const auto& [key, v] : b.terms) {
        long long& dst = out.terms[key];
        dst += scale * v;
        if (dst == 0) out.terms.erase(key);
    }
    return out;
}

RepRingElement tensor(const RepRingElement& a, const RepRingElement& b) {
    RepRingElement out;
    for (const auto& [ka, va] : a.terms)
        for (const auto& [kb, vb] : b.terms) {
            Character c = mul(ka.first, kb.first);
            int n1 = ka.second, n2 = kb.second;
            // Clebsch-Gordan: [n1] (x) [n2] = sum of [n1+n2-1-2k]
            for (int k = 0; k < std::min(n1, n2); ++k) {
                auto key = std::make_pair(c, n1 + n2 - 1 - 2 * k);
                long long& dst = out.terms[key];
                dst += va * vb;
                if (dst == 0) out.terms.erase(key);
            }
        }
    return out;
}

RepRingElement dual(const RepRingElement& a) {
    RepRingElement out;
    for (const auto& [key, v] : a.terms)
        out.terms[{inv(key.first), key.second}] = v;
    return out;
}

namespace {

// decompose a symmetric Laurent polynomial (exponent -> coefficient) into
// SL2 irreducible characters by peeling the top exponent
std::map<int, long long> laurent_decompose(std::map<int, long long> poly) {
    std::map<int, long long> out;
    for (auto it = poly.rbegin(); it != poly.rend();) {
        int d = it->first;
        long long c = it->second;
        if (c == 0) { poly.erase(std::next(it).base()); it = poly.rbegin(); continue; }
        out[d + 1] += c;
        for (int e = d; e >= -d; e -= 2) poly[e] -= c;
        it = poly.rbegin();
        while (it != poly.rend() && it->second == 0) {
            poly.erase(std::next(it).base());
            it = poly.rbegin();
        }
    }
    return out;
}

RepRingElement divide_exact(const RepRingElement& a, long long d) {
    RepRingElement out;
    for (const auto& [key, v] : a.terms) {
        if (v % d != 0)
            throw math_error("internal-consistency: non-integral division in exterior power");
        out.terms[key] = v / d;
    }
    return out;
}

void require_actual(const RepRingElement& a, const char* op) {
    if (!a.is_actual())
        throw math_error(std::string(op) + " refuses virtual elements (negative coefficients)");
}

} // namespace

RepRingElement adams(const RepRingElement& a, long long k) {
    RepRingElement out;
    for (const auto& [key, v] : a.terms) {
        const auto& [c, n] = key;
        std::map<int, long long> poly;
        for (int j = 0; j < n; ++j) poly[static_cast<int>(k) * (n - 1 - 2 * j)] += 1;
        for (const auto& [m, cm] : laurent_decompose(std::move(poly))) {
            auto dst = std::make_pair(pow(c, k), m);
            long long& slot = out.terms[dst];
            slot += v * cm;
            if (slot == 0) out.terms.erase(dst);
        }
    }
    return out;
}

RepRingElement lambda2(const RepRingElement& a) {
    require_actual(a, "lambda2");
    return divide_exact(add(tensor(a, a), adams(a, 2), -1), 2);
}

RepRingElement lambda3(const RepRingElement& a) {
    require_actual(a, "lambda3");
    RepRingElement t = tensor(tensor(a, a), a);
    t = add(t, tensor(a, adams(a, 2)), -3);
    t = add(t, adams(a, 3), 2);
    return divide_exact(t, 6);
}

long long inertia_invariant_dim(const RepRingElement& a) {
    require_actual(a, "inertia_invariant_dim");
    long long d = 0;
    for (const auto& [key, v] : a.terms)
        if (is_trivial(key.first)) d += v;
    return d;
}

long long g2_centralizer_dim(const LocalMonodromy& m) {
    if (m.degree() != 7)
        throw validation_error("g2_centralizer_dim needs a degree-7 class");
    if (!recognize(m))
        throw math_error("g2_centralizer_dim: class is not in the G2 catalog");
    RepRingElement a = from_local_monodromy(m);
    return inertia_invariant_dim(lambda2(a)) - inertia_invariant_dim(a);
}

} // namespace rigid
