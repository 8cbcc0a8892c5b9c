// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "case_tables.hpp"
#include "rigid/convolution.hpp"
#include "rigid/g2.hpp"
#include "rigid/hyp.hpp"
#include "rigid/point_count.hpp"
#include "rigid/rep_ring.hpp"

using namespace rigid;

namespace {

int g_failures = 0;

void report(int n, bool ok, const std::string& label) {
    std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", label.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

using ClassKey = std::map<Character, Partition>;

// ---- criterion 1: the construction reproduces the golden local data tables

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    int mismatches = 0, towers = 0;
    for (const auto& [tag, phi, eta] : golden::parameter_choices()) {
        std::vector<FormalLocalSystem> tower = construct_h(phi, eta);
        golden::Table want = golden::case_table(tag, phi, eta);
        for (int i = 0; i < 7; ++i) {
            if (!(tower[i].finite_points[0].second == want[i].a1)) ++mismatches;
            if (!(tower[i].finite_points[1].second == want[i].a2)) ++mismatches;
            if (!(tower[i].at_infinity == want[i].inf)) ++mismatches;
        }
        ++towers;
    }
    double dt = seconds_since(t0);
    bool ok = mismatches == 0 && towers == 13 && dt < 1.0;
    report(1, ok,
           "construction towers match the five case tables (13 parameter choices, " +
               fmt_seconds(dt) + ")");
}

// ---- criterion 2: rigidity index 2 and ranks 1..7 along every tower

void criterion2() {
    bool ok = true;
    for (const auto& [tag, phi, eta] : golden::parameter_choices()) {
        std::vector<FormalLocalSystem> tower = construct_h(phi, eta);
        if (tower.size() != 7) ok = false;
        for (size_t i = 0; i < tower.size(); ++i) {
            if (tower[i].rank() != static_cast<int>(i) + 1) ok = false;
            if (tower[i].rigidity_index() != 2) ok = false;
        }
    }
    report(2, ok, "rigidity index 2 and ranks 1..7 on every tower level");
}

// ---- criterion 3: convolution involution and composition laws

void criterion3() {
    bool ok = true;
    const Character half(1, 2), third(1, 3);
    for (const auto& [tag, phi, eta] : golden::parameter_choices()) {
        for (const auto& h : construct_h(phi, eta)) {
            if (!mc_involution_check(h, half)) ok = false;
            if (!mc_involution_check(h, third)) ok = false;
            if (!(mc(mc(h, half), third) == mc(h, mul(half, third)))) ok = false;
            if (!(mc(mc(h, third), third) == mc(h, mul(third, third)))) ok = false;
        }
    }

    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> den(1, 9), lvl(0, 6);
    auto rand_char = [&]() {
        long long q = den(rng);
        return Character(std::uniform_int_distribution<long long>(0, q - 1)(rng), q);
    };
    int done = 0;
    while (done < 500) {
        Character phi = rand_char(), eta = rand_char();
        std::vector<FormalLocalSystem> tower;
        try {
            tower = construct_h(phi, eta);
        } catch (const math_error&) {
            continue;
        }
        const FormalLocalSystem& h = tower[lvl(rng)];
        Character chi = rand_char(), rho = rand_char();
        if (is_trivial(chi) || is_trivial(rho) || is_trivial(mul(chi, rho))) continue;
        if (!mc_involution_check(h, chi)) ok = false;
        if (!(mc(mc(h, chi), rho) == mc(h, mul(chi, rho)))) ok = false;
        ++done;
    }
    report(3, ok,
           "mc(mc(F,chi),chibar) = F and mc(mc(F,chi),rho) = mc(F,chi*rho) on all "
           "tower levels plus 500 randomized systems");
}

// ---- criterion 4: third exterior power invariants of the unipotent endpoint

void criterion4() {
    FormalLocalSystem h6 = construct_h(Character(0, 1), Character(0, 1)).back();
    long long d1 = inertia_invariant_dim(
        lambda3(from_local_monodromy(h6.finite_points[0].second)));
    long long d2 = inertia_invariant_dim(
        lambda3(from_local_monodromy(h6.finite_points[1].second)));
    long long di = inertia_invariant_dim(lambda3(from_local_monodromy(h6.at_infinity)));
    bool ok = d1 == 19 && d2 == 13 && di == 5 && (-35 + d1 + d2 + di == 2);
    std::ostringstream label;
    label << "Lambda^3 inertia invariants (" << d1 << "," << d2 << "," << di
          << ") with -35+" << d1 << "+" << d2 << "+" << di << " = 2";
    report(4, ok, label.str());
}

// ---- criterion 5: every catalog row round-trips through recognize

void criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& row : g2_catalog()) {
        std::vector<Character> params;
        if (row.param_names == std::vector<std::string>{"e"})
            params = {Character(1, 3)};
        else if (row.param_names == std::vector<std::string>{"i"})
            params = {Character(1, 4)};
        else if (row.param_names.size() == 2)
            params = {Character(1, 7), Character(2, 7)};
        else if (row.param_names.size() == 1)
            params = {Character(1, 5)};
        auto m = row.instantiate(params);
        if (!m) {
            ok = false;
            continue;
        }
        auto info = recognize(*m);
        if (!info || info->template_id != row.template_id) ok = false;
        try {
            if (g2_centralizer_dim(*m) != row.dim_c_g2) ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
        if (centralizer_dim_gl(*m) != row.dim_c_gl7) ok = false;
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 1.0;
    report(5, ok,
           "all 20 catalog classes recognized with matching G2/GL7 centralizer "
           "dimensions (" +
               fmt_seconds(dt) + ")");
}

// ---- criterion 6: the order-24 classification with staged exclusions

void criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream why;

    if (classify_profiles() !=
        std::vector<std::array<int, 3>>{{29, 13, 9},
                                        {29, 11, 11},
                                        {25, 19, 7},
                                        {25, 17, 9},
                                        {25, 13, 13},
                                        {19, 19, 13},
                                        {17, 17, 17}}) {
        ok = false;
        why << " profile table wrong;";
    }

    ClassificationReport rep = classify_rigid_g2(24);

    std::map<std::array<int, 3>, std::map<std::string, int>> tally;
    for (const auto& t : rep.triples) tally[t.profile][t.status]++;
    const std::map<std::array<int, 3>, std::map<std::string, int>> want_tally = {
        {{29, 13, 9}, {{"excluded:twist-order-2", 7}}},
        {{29, 11, 11}, {{"excluded:twist-order-2", 1}, {"excluded:adjoint", 65}}},
        {{25, 19, 7},
         {{"excluded:adjoint", 54}, {"survives", 48}, {"excluded:descent", 6}}},
        {{25, 17, 9}, {{"excluded:twist-order-2", 91}}},
        {{25, 13, 13}, {{"excluded:twist-order-4", 1}}},
        {{19, 19, 13}, {{"excluded:adjoint", 3}}},
        {{17, 17, 17}, {{"excluded:twist-order-2", 455}}},
    };
    if (tally != want_tally) {
        ok = false;
        why << " per-profile status tallies differ;";
    }
    if (rep.triples.size() != 731) {
        ok = false;
        why << " triple count " << rep.triples.size() << " != 731;";
    }

    // survivors must be exactly the infinity classes the tower realizes with
    // parameters of order dividing 24
    std::set<ClassKey> expected;
    for (int a = 0; a < 24; ++a)
        for (int b = 0; b < 24; ++b) {
            try {
                expected.insert(
                    infinity_case(Character(a, 24), Character(b, 24)).at_infinity.parts);
            } catch (const math_error&) {
            }
        }
    std::set<ClassKey> got;
    std::set<ClassKey> rejected;
    for (const auto& t : rep.triples) {
        if (t.status == "survives") got.insert(t.monodromies[2].parts);
        if (t.status == "excluded:descent") rejected.insert(t.monodromies[2].parts);
    }
    if (expected.size() != 48 || got != expected) {
        ok = false;
        why << " survivors (" << got.size() << ") differ from the " << expected.size()
            << " realizable infinity classes;";
    }

    auto singles = [](std::vector<Character> cs) {
        std::vector<std::pair<Character, Partition>> entries;
        for (const auto& c : cs) entries.push_back({c, {1}});
        return make_monodromy(entries).parts;
    };
    auto frac = [](long long p, long long q) { return Character(p, q); };
    std::set<ClassKey> want_rejected = {
        make_monodromy({{frac(1, 6), {2}},
                        {frac(5, 6), {2}},
                        {frac(1, 3), {1}},
                        {frac(2, 3), {1}},
                        {frac(0, 1), {1}}})
            .parts,
        make_monodromy({{frac(1, 4), {2}}, {frac(3, 4), {2}}, {frac(0, 1), {3}}}).parts,
        singles({frac(0, 1), frac(1, 24), frac(5, 12), frac(11, 24), frac(23, 24),
                 frac(7, 12), frac(13, 24)}),
        singles({frac(0, 1), frac(1, 12), frac(5, 24), frac(7, 24), frac(11, 12),
                 frac(19, 24), frac(17, 24)}),
        singles({frac(0, 1), frac(1, 12), frac(1, 3), frac(5, 12), frac(11, 12),
                 frac(2, 3), frac(7, 12)}),
        singles({frac(0, 1), frac(1, 8), frac(1, 4), frac(3, 8), frac(7, 8),
                 frac(3, 4), frac(5, 8)}),
    };
    if (rejected != want_rejected) {
        ok = false;
        why << " descent-rejected classes differ;";
    }

    double dt = seconds_since(t0);
    ok = ok && dt < 300.0;
    report(6, ok,
           "order-24 classification: 731 triples, staged exclusions, 48 survivors "
           "matching the realizable infinity classes, 6 descent rejections (" +
               fmt_seconds(dt) + ")" + why.str());
}

// ---- criterion 7: rational trace pairs up to order 14

void criterion7() {
    std::map<std::pair<Character, Character>, long long> want;
    auto c = [](long long p, long long q) { return Character(p, q); };
    want[{c(0, 1), c(0, 1)}] = 7;
    for (auto [a, b] : std::initializer_list<std::pair<int, int>>{{1, 1}, {2, 2}})
        want[{c(a, 3), c(b, 3)}] = -2;
    for (auto [a, b] : std::initializer_list<std::pair<int, int>>{{1, 2}, {2, 1}})
        want[{c(a, 3), c(b, 3)}] = 1;
    for (int k : {1, 2}) {
        want[{c(0, 1), c(k, 3)}] = 1;
        want[{c(k, 3), c(0, 1)}] = 1;
    }
    for (int k : {1, 5}) {
        want[{c(0, 1), c(k, 6)}] = 5;
        want[{c(k, 6), c(0, 1)}] = 5;
    }
    want[{c(1, 6), c(5, 6)}] = 5;
    want[{c(5, 6), c(1, 6)}] = 5;
    for (auto [a, b] : std::initializer_list<std::pair<int, int>>{
             {1, 2}, {2, 1}, {1, 4}, {4, 1}, {2, 4}, {4, 2},
             {3, 5}, {5, 3}, {3, 6}, {6, 3}, {5, 6}, {6, 5}})
        want[{c(a, 7), c(b, 7)}] = 0;

    std::map<std::pair<Character, Character>, long long> got;
    bool ok = true;
    for (const auto& [phi, eta] : enumerate_rational_pairs(14)) {
        auto tr = rational_infinity_trace(infinity_case(phi, eta).at_infinity);
        if (!tr) {
            ok = false;
            break;
        }
        got[{phi, eta}] = *tr;
    }
    ok = ok && got == want;
    report(7, ok,
           "the 27 rational-trace parameter pairs of order <= 14 with their "
           "integer traces");
}

// ---- criterion 8: the specialized double cover equation

void criterion8() {
    RenderedEquation r = specialize_and_render(hyp_equation(2, 0, 0), 0, 1);
    const std::vector<HypFactor> want = {
        {"X2-X1", 1}, {"X3-X2", 1}, {"X4-X3", 1}, {"X5-X4", 1},
        {"X6-X5", 1}, {"X7-X6", 1},
        {"X1", 1}, {"X3", 1}, {"X5", 1}, {"X7", 1},
        {"X1-1", 1}, {"X2-1", 1}, {"X4-1", 1}, {"X6-1", 1}};
    bool ok = r.factors == want &&
              r.text ==
                  "Y^2 = (X2-X1)*(X3-X2)*(X4-X3)*(X5-X4)*(X6-X5)*(X7-X6)"
                  "*X1*X3*X5*X7*(X1-1)*(X2-1)*(X4-1)*(X6-1)";
    report(8, ok, "double cover equation at (t1,t2) = (0,1), factor for factor");
}

// ---- criterion 9: point counts over small prime fields

void criterion9() {
    bool ok = true;
    std::ostringstream why;

    std::vector<CharacterSumReport> q3 = sweep({3}, 1, "both");
    for (const auto& r : q3)
        if (r.domain_size != 0 || r.s_value != 0 || r.hyp_count != 0) ok = false;

    auto t0 = std::chrono::steady_clock::now();
    std::vector<CharacterSumReport> single = sweep({5, 7, 11}, 1, "both");
    double dt = seconds_since(t0);
    for (const auto& r : single) {
        if (r.hyp_count != r.domain_size + r.s_value) ok = false;
        long long a = r.s_value < 0 ? -r.s_value : r.s_value;
        if (a > r.domain_size) ok = false;
    }
    auto find = [&](long long q, long long t) -> const CharacterSumReport& {
        for (const auto& r : single)
            if (r.q == q && r.t == t) return r;
        throw math_error("missing sweep entry");
    };
    if (find(5, 2).s_value != -16 || find(7, 5).s_value != 92 ||
        find(11, 10).s_value != 248) {
        ok = false;
        why << " tabulated values differ;";
    }
    if (dt >= 60.0) {
        ok = false;
        why << " single-thread sweep too slow;";
    }

    std::vector<CharacterSumReport> eight = sweep({5, 7, 11}, 8, "both");
    if (eight.size() != single.size()) {
        ok = false;
    } else {
        for (size_t i = 0; i < single.size(); ++i) {
            if (single[i].q != eight[i].q || single[i].t != eight[i].t ||
                single[i].domain_size != eight[i].domain_size ||
                single[i].s_value != eight[i].s_value ||
                single[i].hyp_count != eight[i].hyp_count) {
                ok = false;
                why << " thread count changed a result;";
                break;
            }
        }
    }
    report(9, ok,
           "fiber counts over F_3, F_5, F_7, F_11: char-sum equals direct count, "
           "empty at q=3, 8 threads bit-identical (" +
               fmt_seconds(dt) + " single-threaded)" + why.str());
}

// ---- criterion 10: the README states what is out of scope

void criterion10() {
#ifndef REPO_ROOT
#define REPO_ROOT "."
#endif
    std::ifstream in(std::string(REPO_ROOT) + "/README.md");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string readme = ss.str();
    auto has = [&](const char* s) { return readme.find(s) != std::string::npos; };
    bool ok = in.good() || !readme.empty();
    ok = ok && has("Zariski density") && has("motivic Galois") && has("Galois image") &&
         has("out of scope") && has("prox");
    report(10, ok,
           "README names the Zariski density / motivic Galois / Galois image "
           "statements as out of scope and the computed checks as proxies");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("acceptance: %d/10 criteria pass\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
