#include "rigid/local_data.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace rigid {

std::vector<int> e_sequence(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> e(p.front(), 0);
    for (int b : p)
        for (int j = 0; j < b; ++j) ++e[j];
    return e;
}

Partition partition_from_e(const std::vector<int>& e) {
    std::vector<int> es(e);
    while (!es.empty() && es.back() == 0) es.pop_back();
    Partition out;
    for (size_t m = 1; m <= es.size(); ++m) {
        int nxt = m < es.size() ? es[m] : 0;
        int mult = es[m - 1] - nxt;
        if (mult < 0)
            throw math_error("internal-consistency: non-monotone e-sequence");
        out.insert(out.end(), mult, static_cast<int>(m));
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

int LocalMonodromy::degree() const {
    int d = 0;
    for (const auto& [c, p] : parts)
        for (int b : p) d += b;
    return d;
}

int LocalMonodromy::e(const Character& rho, int i) const {
    auto it = parts.find(rho);
    if (it == parts.end()) return 0;
    int cnt = 0;
    for (int b : it->second)
        if (b >= i) ++cnt;
    return cnt;
}

Character LocalMonodromy::det() const {
    Character d = trivial_char();
    for (const auto& [c, p] : parts) {
        int len = 0;
        for (int b : p) len += b;
        d = mul(d, pow(c, len));
    }
    return d;
}

bool LocalMonodromy::is_identity() const {
    if (parts.size() != 1) return false;
    auto it = parts.begin();
    if (!is_trivial(it->first)) return false;
    for (int b : it->second)
        if (b != 1) return false;
    return true;
}

std::string LocalMonodromy::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, p] : parts) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << ":[";
        for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
        os << "]";
    }
    if (first) os << "(empty)";
    return os.str();
}

LocalMonodromy make_monodromy(std::vector<std::pair<Character, Partition>> entries) {
    LocalMonodromy m;
    for (auto& [c, p] : entries) {
        auto& dst = m.parts[c];
        dst.insert(dst.end(), p.begin(), p.end());
    }
    for (auto& [c, p] : m.parts) std::sort(p.rbegin(), p.rend());
    return m;
}

long long centralizer_dim_gl(const LocalMonodromy& m) {
    long long s = 0;
    for (const auto& [c, p] : m.parts)
        for (int e : e_sequence(p)) s += static_cast<long long>(e) * e;
    return s;
}

Character RankOneSystem::infinity_char() const {
    Character c = trivial_char();
    for (const auto& [label, ch] : finite_chars) c = mul(c, ch);
    return c;
}

RankOneSystem RankOneSystem::dual() const {
    RankOneSystem d;
    for (const auto& [label, ch] : finite_chars) d.finite_chars.emplace_back(label, inv(ch));
    return d;
}

int FormalLocalSystem::rank() const {
    if (finite_points.empty())
        throw validation_error("system has no finite points");
    return finite_points.front().second.degree();
}

const LocalMonodromy* FormalLocalSystem::find(const std::string& label) const {
    for (const auto& [l, m] : finite_points)
        if (l == label) return &m;
    return nullptr;
}

int FormalLocalSystem::e(const std::string& label, const Character& rho, int i) const {
    const LocalMonodromy* m = find(label);
    if (!m) throw validation_error("no finite point labeled '" + label + "'");
    return m->e(rho, i);
}

int FormalLocalSystem::e_at_infinity(const Character& rho, int i) const {
    return at_infinity.e(rho, i);
}

long long FormalLocalSystem::rigidity_index() const {
    long long n = rank();
    long long s = (1 - static_cast<long long>(finite_points.size())) * n * n;
    for (const auto& [l, m] : finite_points) s += centralizer_dim_gl(m);
    return s + centralizer_dim_gl(at_infinity);
}

long long FormalLocalSystem::euler_characteristic() const {
    long long n = rank();
    long long s = (1 - static_cast<long long>(finite_points.size())) * n;
    for (const auto& [l, m] : finite_points) s += m.e(trivial_char(), 1);
    return s + at_infinity.e(trivial_char(), 1);
}

std::vector<std::string> FormalLocalSystem::violations() const {
    std::vector<std::string> errs;
    if (finite_points.size() < 2)
        errs.push_back("fewer than two finite singular points");
    auto check_parts = [&errs](const LocalMonodromy& m, const std::string& where) {
        for (const auto& [c, p] : m.parts) {
            if (p.empty())
                errs.push_back(where + ": empty partition at character " + c.str());
            for (size_t i = 0; i < p.size(); ++i) {
                if (p[i] < 1)
                    errs.push_back(where + ": nonpositive block at character " + c.str());
                if (i && p[i] > p[i - 1])
                    errs.push_back(where + ": blocks not weakly decreasing at character " + c.str());
            }
        }
        if (m.degree() == 0) errs.push_back(where + ": degree zero");
    };
    int r = finite_points.empty() ? 0 : finite_points.front().second.degree();
    for (const auto& [l, m] : finite_points) {
        check_parts(m, l);
        if (m.degree() != r)
            errs.push_back(l + ": degree " + std::to_string(m.degree()) +
                           " differs from rank " + std::to_string(r));
        if (m.is_identity())
            errs.push_back(l + ": identity local monodromy at a finite point");
    }
    check_parts(at_infinity, "infinity");
    if (at_infinity.degree() != r)
        errs.push_back("infinity: degree " + std::to_string(at_infinity.degree()) +
                       " differs from rank " + std::to_string(r));
    Character d = trivial_char();
    for (const auto& [l, m] : finite_points) d = mul(d, m.det());
    if (d != at_infinity.det())
        errs.push_back("determinant mismatch: finite product " + d.str() +
                       " vs infinity " + at_infinity.det().str());
    return errs;
}

void FormalLocalSystem::validate() const {
    auto errs = violations();
    if (errs.empty()) return;
    std::string msg = "invalid local system:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw validation_error(msg);
}

bool FormalLocalSystem::operator==(const FormalLocalSystem& o) const {
    if (at_infinity != o.at_infinity) return false;
    if (finite_points.size() != o.finite_points.size()) return false;
    auto key = [](const FormalLocalSystem& f) {
        std::map<std::string, const LocalMonodromy*> k;
        for (const auto& [l, m] : f.finite_points) k[l] = &m;
        return k;
    };
    auto a = key(*this), b = key(o);
    if (a.size() != b.size()) return false;
    for (auto ita = a.begin(), itb = b.begin(); ita != a.end(); ++ita, ++itb)
        if (ita->first != itb->first || !(*ita->second == *itb->second)) return false;
    return true;
}

FormalLocalSystem rank_one(const Character& c1, const Character& c2) {
    FormalLocalSystem f;
    f.finite_points.push_back({"alpha1", make_monodromy({{c1, {1}}})});
    f.finite_points.push_back({"alpha2", make_monodromy({{c2, {1}}})});
    f.at_infinity = make_monodromy({{mul(c1, c2), {1}}});
    return f;
}

namespace {

nlohmann::json monodromy_to_json(const LocalMonodromy& m) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& [c, p] : m.parts)
        parts.push_back({{"char", c.str()}, {"blocks", p}});
    return {{"parts", parts}};
}

LocalMonodromy monodromy_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.contains("parts") || !j["parts"].is_array())
        throw validation_error(where + ": missing \"parts\" array");
    LocalMonodromy m;
    for (const auto& entry : j["parts"]) {
        if (!entry.contains("char") || !entry.contains("blocks"))
            throw validation_error(where + ": part needs \"char\" and \"blocks\"");
        Character c = parse_character(entry["char"].get<std::string>());
        Partition p;
        for (const auto& b : entry["blocks"]) {
            if (!b.is_number_integer())
                throw validation_error(where + ": non-integer block length");
            p.push_back(b.get<int>());
        }
        std::sort(p.rbegin(), p.rend());
        if (m.parts.count(c))
            throw validation_error(where + ": duplicate character " + c.str());
        m.parts[c] = std::move(p);
    }
    return m;
}

} // namespace

std::string to_json(const FormalLocalSystem& f) {
    nlohmann::json j;
    j["finite_points"] = nlohmann::json::array();
    for (const auto& [l, m] : f.finite_points) {
        nlohmann::json pt = monodromy_to_json(m);
        pt["label"] = l;
        j["finite_points"].push_back(pt);
    }
    j["infinity"] = monodromy_to_json(f.at_infinity);
    j["provenance"] = f.provenance == Provenance::ConstructedByAlgorithm
                          ? "constructed-by-algorithm"
                          : "user-supplied";
    return j.dump(2);
}

FormalLocalSystem system_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw validation_error(std::string("JSON parse error: ") + ex.what());
    }
    if (!j.contains("finite_points") || !j["finite_points"].is_array())
        throw validation_error("missing \"finite_points\" array");
    if (!j.contains("infinity"))
        throw validation_error("missing \"infinity\" object");
    FormalLocalSystem f;
    int idx = 0;
    for (const auto& pt : j["finite_points"]) {
        ++idx;
        std::string label = pt.contains("label") ? pt["label"].get<std::string>()
                                                 : "alpha" + std::to_string(idx);
        f.finite_points.push_back({label, monodromy_from_json(pt, label)});
    }
    f.at_infinity = monodromy_from_json(j["infinity"], "infinity");
    if (j.contains("provenance") && j["provenance"] == "constructed-by-algorithm")
        f.provenance = Provenance::ConstructedByAlgorithm;
    return f;
}

} // namespace rigid
