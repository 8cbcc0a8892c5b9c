#include "rigid/hyp.hpp"

#include <json.hpp>

namespace rigid {

namespace {

std::string var_minus(int a, long long t) {
    std::string x = "X" + std::to_string(a);
    if (t == 0) return x;
    if (t > 0) return x + "-" + std::to_string(t);
    return x + "+" + std::to_string(-t);
}

} // namespace

HypEquation hyp_equation(long long N, long long n1, long long n2) {
    if (N <= 0 || N % 2 != 0)
        throw math_error("Kummer exponent tables need a positive even N, got " +
                         std::to_string(N));
    auto md = [N](long long v) { return static_cast<int>(((v % N) + N) % N); };
    HypEquation h;
    h.N = static_cast<int>(N);
    h.n1 = md(n1);
    h.n2 = md(n2);
    long long half = N / 2;
    for (int a = 1; a <= 7; ++a) {
        h.e[a - 1][0] = (a % 2 == 1) ? md(half) : 0;
        h.e[a - 1][1] = 0;
    }
    h.e[0][1] = md(half + n1 + n2);
    h.e[1][1] = md(half - n1);
    h.e[3][1] = md(half + n1 - n2);
    h.e[5][1] = md(half - n1);
    h.f[0] = md(half - n1 - 2 * n2);
    h.f[1] = md(half + n1 + 2 * n2);
    h.f[2] = md(half - n1 - n2);
    h.f[3] = md(half + n1 + n2);
    h.f[4] = md(half - n1);
    h.f[5] = md(half + n1);
    return h;
}

std::string equation_text(int N, const std::vector<HypFactor>& factors) {
    std::string s = "Y^" + std::to_string(N) + " = ";
    if (factors.empty()) return s + "1";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "*";
        const HypFactor& fac = factors[i];
        bool composite = fac.poly.find_first_of("+-") != std::string::npos;
        s += composite ? "(" + fac.poly + ")" : fac.poly;
        if (fac.exp != 1) s += "^" + std::to_string(fac.exp);
    }
    return s;
}

RenderedEquation specialize_and_render(const HypEquation& h, long long t1, long long t2) {
    if (t1 == t2)
        throw math_error("specialization needs t1 != t2, got t1 = t2 = " +
                         std::to_string(t1));
    RenderedEquation r;
    r.N = h.N;
    r.t1 = t1;
    r.t2 = t2;
    for (int k = 1; k <= 6; ++k)
        if (h.f[k - 1] != 0)
            r.factors.push_back(
                {"X" + std::to_string(k + 1) + "-X" + std::to_string(k), h.f[k - 1]});
    for (int a = 1; a <= 7; ++a)
        if (h.e[a - 1][0] != 0) r.factors.push_back({var_minus(a, t1), h.e[a - 1][0]});
    for (int a = 1; a <= 7; ++a)
        if (h.e[a - 1][1] != 0) r.factors.push_back({var_minus(a, t2), h.e[a - 1][1]});
    r.text = equation_text(h.N, r.factors);
    for (int a = 1; a <= 7; ++a) {
        r.constraints.push_back("X" + std::to_string(a) + " != " + std::to_string(t1));
        r.constraints.push_back("X" + std::to_string(a) + " != " + std::to_string(t2));
    }
    for (int k = 1; k <= 6; ++k)
        r.constraints.push_back("X" + std::to_string(k + 1) + " != X" + std::to_string(k));
    r.constraints.push_back("Y != 0");
    return r;
}

std::string to_json(const HypEquation& h) {
    nlohmann::json j;
    j["N"] = h.N;
    j["n1"] = h.n1;
    j["n2"] = h.n2;
    nlohmann::json e = nlohmann::json::array();
    for (int a = 0; a < 7; ++a) e.push_back({h.e[a][0], h.e[a][1]});
    j["e"] = e;
    j["f"] = h.f;
    if (h.specialization)
        j["specialization"] = {h.specialization->first, h.specialization->second};
    return j.dump(2);
}

std::string to_json(const RenderedEquation& r) {
    nlohmann::json j;
    j["N"] = r.N;
    j["t1"] = r.t1;
    j["t2"] = r.t2;
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : r.factors) fs.push_back({{"poly", f.poly}, {"exp", f.exp}});
    j["factors"] = fs;
    j["constraints"] = r.constraints;
    j["text"] = r.text;
    return j.dump(2);
}

std::vector<HypFactor> factors_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw validation_error(std::string("invalid JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
        throw validation_error("invalid equation JSON: missing \"factors\" array");
    std::vector<HypFactor> out;
    for (const auto& jf : j["factors"]) {
        if (!jf.is_object() || !jf.contains("poly") || !jf.contains("exp") ||
            !jf["poly"].is_string() || !jf["exp"].is_number_integer())
            throw validation_error(
                "invalid equation JSON: factors need string \"poly\" and integer \"exp\"");
        out.push_back({jf["poly"].get<std::string>(), jf["exp"].get<int>()});
    }
    return out;
}

} // namespace rigid
