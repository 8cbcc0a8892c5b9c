#include "rigid/convolution.hpp"

#include <algorithm>

#include <json.hpp>

namespace rigid {

namespace {

int max_block(const LocalMonodromy& m) {
    int mb = 0;
    for (const auto& [c, p] : m.parts)
        if (!p.empty()) mb = std::max(mb, p.front());
    return mb;
}

LocalMonodromy from_e_table(const std::map<Character, std::vector<int>>& table) {
    LocalMonodromy out;
    for (const auto& [c, es] : table) {
        Partition p = partition_from_e(es);
        if (!p.empty()) out.parts[c] = std::move(p);
    }
    return out;
}

} // namespace

FormalLocalSystem mc(const FormalLocalSystem& f, const Character& chi) {
    if (is_trivial(chi))
        throw math_error("invalid-character: middle convolution needs a nontrivial character");
    f.validate();
    if (f.finite_points.size() < 2)
        throw validation_error("middle convolution needs at least two finite points");

    const Character one = trivial_char();
    const Character chibar = inv(chi);
    const int n = f.rank();

    long long np = 0;
    for (const auto& [l, m] : f.finite_points) np += n - m.e(one, 1);
    np -= f.at_infinity.e(chibar, 1);
    if (np <= 0)
        throw math_error("degenerate-convolution: output rank " + std::to_string(np));

    auto out_finite = [&](const LocalMonodromy& m) {
        int K = max_block(m) + 2;
        std::map<Character, std::vector<int>> table;
        // tau = rho*chi outside {1, chi}: e-sequence carried over from rho
        for (const auto& [rho, p] : m.parts) {
            Character tau = mul(rho, chi);
            if (is_trivial(rho) || is_trivial(tau)) continue;
            std::vector<int> es(K);
            for (int i = 1; i <= K; ++i) es[i - 1] = m.e(rho, i);
            table[tau] = std::move(es);
        }
        // trivial output character: e_1 = n' - n + e_1(in, 1),
        // e_{i+1} = e_i(in, chi^-1)
        std::vector<int> tr(K, 0);
        tr[0] = static_cast<int>(np) - n + m.e(one, 1);
        for (int i = 1; i < K; ++i) tr[i] = m.e(chibar, i);
        table[one] = std::move(tr);
        // chi output: e_i = e_{i+1}(in, 1)
        std::vector<int> ce(K, 0);
        for (int i = 1; i <= K; ++i) ce[i - 1] = m.e(one, i + 1);
        table[chi] = std::move(ce);
        return from_e_table(table);
    };

    auto out_infinity = [&](const LocalMonodromy& m) {
        int K = max_block(m) + 2;
        std::map<Character, std::vector<int>> table;
        for (const auto& [rho, p] : m.parts) {
            Character tau = mul(rho, chi);
            if (is_trivial(rho) || is_trivial(tau)) continue;
            std::vector<int> es(K);
            for (int i = 1; i <= K; ++i) es[i - 1] = m.e(rho, i);
            table[tau] = std::move(es);
        }
        // chi output: e_1 = sum(n - e_1(s,1)) - n, e_{i+1} = e_i(in, 1)
        std::vector<int> ce(K, 0);
        long long drop = -n;
        for (const auto& [l, fm] : f.finite_points) drop += n - fm.e(one, 1);
        ce[0] = static_cast<int>(drop);
        for (int i = 1; i < K; ++i) ce[i] = m.e(one, i);
        table[chi] = std::move(ce);
        // trivial output: e_i = e_{i+1}(in, chi^-1)
        std::vector<int> tr(K, 0);
        for (int i = 1; i <= K; ++i) tr[i - 1] = m.e(chibar, i + 1);
        table[one] = std::move(tr);
        return from_e_table(table);
    };

    FormalLocalSystem g;
    g.provenance = Provenance::ConstructedByAlgorithm;
    for (const auto& [l, m] : f.finite_points)
        g.finite_points.push_back({l, out_finite(m)});
    g.at_infinity = out_infinity(f.at_infinity);

    for (const auto& [l, m] : g.finite_points)
        if (m.degree() != np)
            throw math_error("internal-consistency: output degree mismatch at " + l);
    if (g.at_infinity.degree() != np)
        throw math_error("internal-consistency: output degree mismatch at infinity");
    return g;
}

FormalLocalSystem mt(const FormalLocalSystem& f, const RankOneSystem& l) {
    for (const auto& [label, c] : l.finite_chars)
        if (!f.find(label))
            throw validation_error("twist names unknown finite point '" + label + "'");
    FormalLocalSystem g;
    g.provenance = Provenance::ConstructedByAlgorithm;
    for (const auto& [label, m] : f.finite_points) {
        Character shift = trivial_char();
        for (const auto& [tl, tc] : l.finite_chars)
            if (tl == label) shift = mul(shift, tc);
        LocalMonodromy out;
        for (const auto& [c, p] : m.parts) out.parts[mul(c, shift)] = p;
        g.finite_points.push_back({label, std::move(out)});
    }
    Character sinf = l.infinity_char();
    for (const auto& [c, p] : f.at_infinity.parts)
        g.at_infinity.parts[mul(c, sinf)] = p;
    return g;
}

bool mc_involution_check(const FormalLocalSystem& f, const Character& chi) {
    return mc(mc(f, chi), inv(chi)) == f;
}

std::vector<int> ReductionTrace::ranks() const {
    std::vector<int> r{start_rank};
    for (const auto& s : steps) r.push_back(s.rank_after);
    return r;
}

ReductionTrace katz_reduce(const FormalLocalSystem& f) {
    f.validate();
    ReductionTrace trace;
    trace.start_rank = f.rank();
    FormalLocalSystem h = f;

    auto dominant = [](const LocalMonodromy& m) {
        // largest block count; ties go to the smallest character
        Character best = trivial_char();
        int bestE = -1;
        for (const auto& [c, p] : m.parts) {
            int e1 = static_cast<int>(p.size());
            if (e1 > bestE) { best = c; bestE = e1; }
        }
        return best;
    };

    for (int guard = 0; guard < 200; ++guard) {
        if (h.rank() == 1) {
            trace.outcome = "rigid-reducible";
            trace.final_system = h;
            return trace;
        }
        ReductionStep step;
        RankOneSystem tw;
        bool nontrivial_twist = false;
        for (const auto& [l, m] : h.finite_points) {
            Character t = inv(dominant(m));
            step.twist.emplace_back(l, t);
            tw.finite_chars.emplace_back(l, t);
            if (!is_trivial(t)) nontrivial_twist = true;
        }
        FormalLocalSystem h2 = nontrivial_twist ? mt(h, tw) : h;

        // convolution direction: nontrivial character at infinity with the
        // most blocks (maximal rank drop)
        std::optional<Character> rho;
        int bestE = -1;
        for (const auto& [c, p] : h2.at_infinity.parts) {
            if (is_trivial(c)) continue;
            int e1 = static_cast<int>(p.size());
            if (e1 > bestE) { rho = c; bestE = e1; }
        }
        if (!rho) {
            if (nontrivial_twist) {
                step.rank_after = h2.rank();
                trace.steps.push_back(std::move(step));
            }
            trace.outcome = "no-nontrivial-character-at-infinity";
            trace.final_system = h2;
            return trace;
        }
        Character chi = inv(*rho);
        FormalLocalSystem g;
        try {
            g = mc(h2, chi);
        } catch (const math_error& ex) {
            if (nontrivial_twist) {
                step.rank_after = h2.rank();
                trace.steps.push_back(std::move(step));
            }
            trace.outcome = ex.what();
            trace.final_system = h2;
            return trace;
        }
        if (g.rank() >= h2.rank()) {
            if (nontrivial_twist) {
                step.rank_after = h2.rank();
                trace.steps.push_back(std::move(step));
            }
            trace.outcome = "irreducible-rigid-unreachable";
            trace.final_system = h2;
            return trace;
        }
        step.chi = chi;
        step.rank_after = g.rank();
        trace.steps.push_back(std::move(step));
        if (auto errs = g.violations(); !errs.empty()) {
            trace.outcome = "invalid-intermediate: " + errs.front();
            trace.final_system = g;
            return trace;
        }
        h = g;
    }
    trace.outcome = "step-limit";
    trace.final_system = h;
    return trace;
}

std::string to_json(const ReductionTrace& t) {
    nlohmann::json j;
    j["start_rank"] = t.start_rank;
    j["outcome"] = t.outcome;
    j["steps"] = nlohmann::json::array();
    for (const auto& s : t.steps) {
        nlohmann::json js;
        js["twist"] = nlohmann::json::object();
        for (const auto& [l, c] : s.twist) js["twist"][l] = c.str();
        if (s.chi) js["chi"] = s.chi->str();
        js["rank_after"] = s.rank_after;
        j["steps"].push_back(js);
    }
    j["final"] = nlohmann::json::parse(to_json(t.final_system));
    return j.dump(2);
}

} // namespace rigid
