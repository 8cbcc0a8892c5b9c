#include "rigid/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigid/chars.hpp"
#include "rigid/convolution.hpp"
#include "rigid/g2.hpp"
#include "rigid/hyp.hpp"
#include "rigid/local_data.hpp"
#include "rigid/point_count.hpp"
#include "rigid/rep_ring.hpp"

namespace rigid {

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw validation_error("cannot open input file '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

void print_system(std::ostream& out, const FormalLocalSystem& f) {
    for (const auto& [label, m] : f.finite_points)
        out << label << ": " << m.str() << "\n";
    out << "infinity: " << f.at_infinity.str() << "\n";
    out << "rank " << f.rank() << ", rigidity index " << f.rigidity_index() << "\n";
}

std::string class_label(const G2ClassInfo& c) {
    std::string s = c.template_id;
    for (const auto& [name, v] : c.parameters) s += " " + name + "=" + v.str();
    return s;
}

void run_construct(std::ostream& out, const std::string& phi_s,
                   const std::string& eta_s, bool table, bool json, bool verify) {
    Character phi = parse_character(phi_s), eta = parse_character(eta_s);
    std::vector<FormalLocalSystem> tower = construct_h(phi, eta);
    InfinityCase ic = infinity_case(phi, eta);

    if (verify) {
        for (size_t i = 0; i < tower.size(); ++i) {
            if (tower[i].rigidity_index() != 2)
                throw math_error("verification failed: H" + std::to_string(i) +
                                 " has rigidity index " +
                                 std::to_string(tower[i].rigidity_index()));
            if (tower[i].euler_characteristic() > 0)
                throw math_error("verification failed: H" + std::to_string(i) +
                                 " has positive Euler characteristic");
        }
        if (!(tower.back().at_infinity == ic.at_infinity))
            throw math_error(
                "verification failed: tower infinity differs from the predicted case");
        const FormalLocalSystem& h6 = tower.back();
        const std::pair<const char*, const LocalMonodromy*> spots[] = {
            {"alpha1", &h6.finite_points[0].second},
            {"alpha2", &h6.finite_points[1].second},
            {"infinity", &h6.at_infinity},
        };
        for (const auto& [where, m] : spots)
            if (!recognize(*m))
                throw math_error(std::string("verification failed: class at ") +
                                 where + " is not in the catalog");
    }

    if (json) {
        nlohmann::json j;
        j["phi"] = phi.str();
        j["eta"] = eta.str();
        j["case"] = ic.case_tag;
        if (!ic.variant.empty()) j["variant"] = ic.variant;
        j["tower"] = nlohmann::json::array();
        for (const auto& h : tower) j["tower"].push_back(nlohmann::json::parse(to_json(h)));
        if (verify) j["verified"] = true;
        out << j.dump(2) << "\n";
        return;
    }
    if (table) {
        out << "    alpha1 | alpha2 | infinity\n";
        for (size_t i = 0; i < tower.size(); ++i)
            out << "H" << i << "  " << tower[i].finite_points[0].second.str()
                << " | " << tower[i].finite_points[1].second.str() << " | "
                << tower[i].at_infinity.str() << "\n";
        if (verify) out << "verified: rigidity, Euler, catalog and infinity case\n";
        return;
    }
    out << "phi = " << phi.str() << ", eta = " << eta.str() << ", infinity case "
        << ic.case_tag;
    if (!ic.variant.empty()) out << " (" << ic.variant << ")";
    out << "\n";
    for (size_t i = 0; i < tower.size(); ++i)
        out << "H" << i << ": rank " << tower[i].rank() << ", rig "
            << tower[i].rigidity_index() << "\n";
    out << "H6 at infinity: " << tower.back().at_infinity.str() << "\n";
    if (verify) out << "verified: rigidity, Euler, catalog and infinity case\n";
}

void run_classify(std::ostream& out, int bound, bool json) {
    ClassificationReport rep = classify_rigid_g2(bound);
    if (json) {
        out << to_json(rep) << "\n";
        return;
    }
    std::map<std::array<int, 3>, std::map<std::string, int>> tally;
    for (const auto& t : rep.triples) tally[t.profile][t.status]++;
    out << "bound " << rep.bound << ": " << rep.triples.size() << " triples over "
        << rep.profiles.size() << " profiles\n";
    for (const auto& prof : rep.profiles) {
        out << "profile (" << prof[0] << "," << prof[1] << "," << prof[2] << "):";
        bool first = true;
        for (const auto& [status, n] : tally[prof]) {
            out << (first ? " " : ", ") << status << " " << n;
            first = false;
        }
        out << "\n";
    }
    for (const auto& t : rep.triples)
        if (t.status == "survives")
            out << "survivor (" << t.profile[0] << "," << t.profile[1] << ","
                << t.profile[2] << "): [" << class_label(t.classes[0]) << "] ["
                << class_label(t.classes[1]) << "] [" << class_label(t.classes[2])
                << "]\n";
}

void run_count_one(std::ostream& out, const CharacterSumReport& r, bool json,
                   bool* first_json) {
    if (json) {
        if (first_json) out << (*first_json ? "[" : ",") << "\n";
        out << to_json(r);
        if (first_json)
            *first_json = false;
        else
            out << "\n";
        return;
    }
    out << "q=" << r.q << " t=" << r.t << ": domain " << r.domain_size << ", S "
        << r.s_value << ", count " << r.hyp_count << " (" << r.method << ", "
        << r.threads << " threads, " << r.wall_time << "s)\n";
    double q3 = static_cast<double>(r.q) * r.q * r.q;
    out << "  |S|/q^3 = " << (r.s_value < 0 ? -r.s_value : r.s_value) / q3
        << " (informational)\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with tame rigid local systems on the "
                 "punctured projective line"};
    app.require_subcommand(1);

    // construct
    std::string c_phi, c_eta;
    bool c_table = false, c_json = false, c_verify = false;
    auto* c = app.add_subcommand(
        "construct", "build the rank 1..7 tower of rigid systems from (phi, eta)");
    c->add_option("--phi", c_phi, "character phi as p/q")->required();
    c->add_option("--eta", c_eta, "character eta as p/q")->required();
    c->add_flag("--table", c_table, "print the 7-row local data table");
    c->add_flag("--json", c_json, "machine-readable output");
    c->add_flag("--verify", c_verify,
                "check rigidity, Euler, determinant and catalog membership");
    c->callback([&]() { run_construct(out, c_phi, c_eta, c_table, c_json, c_verify); });

    // mc
    std::string mc_input = "-", mc_chi;
    bool mc_json = false;
    auto* cmc = app.add_subcommand("mc", "middle convolution of a system (JSON input)");
    cmc->add_option("--input", mc_input, "input file or - for stdin");
    cmc->add_option("--chi", mc_chi, "convolution character as p/q")->required();
    cmc->add_flag("--json", mc_json, "machine-readable output");
    cmc->callback([&]() {
        FormalLocalSystem f = system_from_json(read_input(mc_input));
        FormalLocalSystem g = mc(f, parse_character(mc_chi));
        if (mc_json)
            out << to_json(g) << "\n";
        else
            print_system(out, g);
    });

    // mt
    std::string mt_input = "-", mt_twist;
    bool mt_json = false;
    auto* cmt = app.add_subcommand("mt", "middle tensor by a rank-one twist");
    cmt->add_option("--input", mt_input, "input file or - for stdin");
    cmt->add_option("--twist", mt_twist,
                    "comma-separated characters, one per finite point")
        ->required();
    cmt->add_flag("--json", mt_json, "machine-readable output");
    cmt->callback([&]() {
        FormalLocalSystem f = system_from_json(read_input(mt_input));
        f.validate();
        std::vector<std::string> parts = split(mt_twist, ',');
        if (parts.size() != f.finite_points.size())
            throw validation_error(
                "twist needs one character per finite point (got " +
                std::to_string(parts.size()) + ", system has " +
                std::to_string(f.finite_points.size()) + ")");
        RankOneSystem tw;
        for (size_t i = 0; i < parts.size(); ++i)
            tw.finite_chars.push_back(
                {f.finite_points[i].first, parse_character(parts[i])});
        FormalLocalSystem g = mt(f, tw);
        if (mt_json)
            out << to_json(g) << "\n";
        else
            print_system(out, g);
    });

    // reduce
    std::string red_input = "-";
    bool red_json = false;
    auto* cred = app.add_subcommand(
        "reduce", "greedy twist-and-convolve reduction toward rank one");
    cred->add_option("--input", red_input, "input file or - for stdin");
    cred->add_flag("--json", red_json, "machine-readable output");
    cred->callback([&]() {
        FormalLocalSystem f = system_from_json(read_input(red_input));
        f.validate();
        ReductionTrace tr = katz_reduce(f);
        if (red_json) {
            out << to_json(tr) << "\n";
        } else {
            out << "ranks";
            for (int r : tr.ranks()) out << " " << r;
            out << "\noutcome: " << tr.outcome << "\n";
        }
    });

    // rigidity
    std::string rig_input = "-";
    bool rig_json = false;
    auto* crig = app.add_subcommand(
        "rigidity", "rank, rigidity index and Euler characteristic of a system");
    crig->add_option("--input", rig_input, "input file or - for stdin");
    crig->add_flag("--json", rig_json, "machine-readable output");
    crig->callback([&]() {
        FormalLocalSystem f = system_from_json(read_input(rig_input));
        f.validate();
        if (rig_json) {
            nlohmann::json j;
            j["rank"] = f.rank();
            j["rigidity_index"] = f.rigidity_index();
            j["euler_characteristic"] = f.euler_characteristic();
            j["rigid"] = f.rigidity_index() == 2;
            out << j.dump(2) << "\n";
        } else {
            out << "rank " << f.rank() << "\nrigidity index " << f.rigidity_index()
                << (f.rigidity_index() == 2 ? " (rigid)" : "")
                << "\neuler characteristic " << f.euler_characteristic() << "\n";
        }
    });

    // classify
    int bound = 24;
    bool cls_json = false;
    auto* ccls = app.add_subcommand(
        "classify", "enumerate candidate local data triples and filter them");
    ccls->add_option("--bound", bound, "character order bound (default 24)");
    ccls->add_flag("--json", cls_json, "machine-readable output");
    ccls->callback([&]() { run_classify(out, bound, cls_json); });

    // hyp
    long long hN = 0, hn1 = 0, hn2 = 0;
    std::string hspec;
    bool hyp_json = false;
    auto* chyp = app.add_subcommand(
        "hyp", "Kummer hypersurface exponent tables and specialized equation");
    chyp->add_option("--N", hN, "Kummer degree (positive even)")->required();
    chyp->add_option("--n1", hn1, "table parameter n1");
    chyp->add_option("--n2", hn2, "table parameter n2");
    chyp->add_option("--specialize", hspec, "fiber parameters t1,t2");
    chyp->add_flag("--json", hyp_json, "machine-readable output");
    chyp->callback([&]() {
        HypEquation h = hyp_equation(hN, hn1, hn2);
        if (hspec.empty()) {
            if (hyp_json) {
                out << to_json(h) << "\n";
            } else {
                out << "N = " << h.N << ", n1 = " << h.n1 << ", n2 = " << h.n2 << "\n";
                for (int a = 1; a <= 7; ++a)
                    out << "e(" << a << ",1) = " << h.e[a - 1][0] << "  e(" << a
                        << ",2) = " << h.e[a - 1][1] << "\n";
                for (int k = 1; k <= 6; ++k)
                    out << "f(" << k << ") = " << h.f[k - 1] << "\n";
            }
            return;
        }
        std::vector<std::string> parts = split(hspec, ',');
        long long t1 = 0, t2 = 0;
        try {
            if (parts.size() != 2) throw std::invalid_argument("count");
            size_t u1 = 0, u2 = 0;
            t1 = std::stoll(parts[0], &u1);
            t2 = std::stoll(parts[1], &u2);
            if (u1 != parts[0].size() || u2 != parts[1].size())
                throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw validation_error("--specialize expects two integers t1,t2, got '" +
                                   hspec + "'");
        }
        h.specialization = {t1, t2};
        RenderedEquation r = specialize_and_render(h, t1, t2);
        if (hyp_json) {
            out << to_json(r) << "\n";
        } else {
            out << r.text << "\n";
            for (const auto& cst : r.constraints) out << cst << "\n";
        }
    });

    // count
    long long cq = 0, ct = -1;
    std::string method = "both";
    int threads = 1;
    bool cnt_json = false;
    auto* ccnt = app.add_subcommand(
        "count", "count points on specialized fibers over a prime field");
    ccnt->add_option("--q", cq, "odd prime field size")->required();
    ccnt->add_option("--t", ct, "fiber value in {2..q-1}; omit to sweep all");
    ccnt->add_option("--method", method, "char-sum, direct or both (default both)");
    ccnt->add_option("--threads", threads, "worker threads (default 1)");
    ccnt->add_flag("--json", cnt_json, "machine-readable output");
    ccnt->callback([&]() {
        if (ct >= 0) {
            CharacterSumReport r = count_fiber(cq, ct, method, threads);
            run_count_one(out, r, cnt_json, nullptr);
            if (cnt_json) out << "\n";
            return;
        }
        std::vector<CharacterSumReport> rs = sweep({cq}, threads, method);
        bool first = true;
        for (const auto& r : rs) run_count_one(out, r, cnt_json, &first);
        if (cnt_json) out << (first ? "[]" : "\n]") << "\n";
    });

    // rational
    int max_order = 14;
    std::string rat_input;
    bool rat_json = false;
    auto* crat = app.add_subcommand(
        "rational", "parameter pairs with rational trace at infinity");
    crat->add_option("--max-order", max_order, "order bound for phi, eta (default 14)");
    crat->add_option("--input", rat_input,
                     "test one system's infinity class instead (file or -)");
    crat->add_flag("--json", rat_json, "machine-readable output");
    crat->callback([&]() {
        if (!rat_input.empty()) {
            FormalLocalSystem f = system_from_json(read_input(rat_input));
            auto tr = rational_infinity_trace(f.at_infinity);
            if (rat_json) {
                nlohmann::json j;
                j["rational"] = tr.has_value();
                if (tr)
                    j["trace"] = *tr;
                else
                    j["trace"] = nullptr;
                out << j.dump(2) << "\n";
            } else if (tr) {
                out << "rational: yes, trace " << *tr << "\n";
            } else {
                out << "rational: no\n";
            }
            return;
        }
        auto pairs = enumerate_rational_pairs(max_order);
        if (rat_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [phi, eta] : pairs) {
                nlohmann::json j;
                j["phi"] = phi.str();
                j["eta"] = eta.str();
                auto tr = rational_infinity_trace(infinity_case(phi, eta).at_infinity);
                j["trace"] = *tr;
                arr.push_back(j);
            }
            out << arr.dump(2) << "\n";
        } else {
            for (const auto& [phi, eta] : pairs) {
                auto tr = rational_infinity_trace(infinity_case(phi, eta).at_infinity);
                out << phi.str() << " " << eta.str() << " trace " << *tr << "\n";
            }
            out << pairs.size() << " pairs with orders <= " << max_order << "\n";
        }
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("rigidcli");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const math_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace rigid
