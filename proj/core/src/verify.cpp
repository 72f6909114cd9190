#include "k3lattice/verify.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "k3lattice/discform.hpp"
#include "k3lattice/k3reps.hpp"
#include "k3lattice/normal_forms.hpp"

namespace k3l {

namespace {

std::string case_location(CaseId c) {
    switch (c) {
        case CaseId::c2i: return "Thm 2.1(3)";
        case CaseId::c2ii: return "Thm 2.1(4)";
        case CaseId::c2iii: return "Thm 2.1(5)";
        case CaseId::c2iv: return "Thm 2.1(6)";
        case CaseId::c2v: return "Thm 2.1(7)";
        case CaseId::c2vi: return "Thm 2.1(8)";
    }
    return "";
}

std::string histogram_str(const std::map<int, std::size_t>& h) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [w, n] : h) {
        if (!first) out << ", ";
        out << w << ":" << n;
        first = false;
    }
    out << "}";
    return out.str();
}

std::string multisets_str(const std::vector<std::vector<int>>& ms) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out << ' ';
        out << '[';
        for (std::size_t j = 0; j < ms[i].size(); ++j) {
            if (j) out << ',';
            out << ms[i][j];
        }
        out << ']';
    }
    return out.str();
}

std::string factors_str(const std::vector<Int>& fs) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out << ',';
        out << fs[i].get_str();
    }
    out << ')';
    return out.str();
}

struct Runner {
    Report report;
    void add(std::string name, std::string location, std::string expected, std::string actual) {
        CheckResult r;
        r.name = std::move(name);
        r.location = std::move(location);
        r.pass = expected == actual;
        r.expected = std::move(expected);
        r.actual = std::move(actual);
        (r.pass ? report.passed : report.failed) += 1;
        report.checks.push_back(std::move(r));
    }
    void add_bool(std::string name, std::string location, bool ok) {
        add(std::move(name), std::move(location), "true", ok ? "true" : "false");
    }
};

}  // namespace

Fixtures Fixtures::builtin() {
    Fixtures f;
    for (CaseId c : all_cases()) {
        f.gram.emplace(c, reference_gram(c));
        f.gram_inv.emplace(c, reference_gram_inverse(c));
    }
    return f;
}

Fixtures Fixtures::load(const std::string& dir) {
    Fixtures f = builtin();
    int idx = 1;
    for (CaseId c : all_cases()) {
        for (bool inv : {false, true}) {
            std::string path =
                dir + "/M" + std::to_string(idx) + (inv ? "_inv" : "") + ".txt";
            std::ifstream in(path);
            if (!in) continue;
            std::stringstream buf;
            buf << in.rdbuf();
            (inv ? f.gram_inv : f.gram)[c] = matrix_from_text(buf.str());
        }
        ++idx;
    }
    return f;
}

Report run_verify_all(const Fixtures& fixtures) {
    Runner r;
    r.report.version = kVersion;

    // codes
    GolayCode bin = GolayCode::binary();
    GolayCode tern = GolayCode::ternary();
    r.add("binary code weights", "Sect. 2 (24A1)", "{0:1, 8:759, 12:2576, 16:759, 24:1}",
          histogram_str(bin.weight_histogram()));
    r.add_bool("binary Steiner S(5,8,24)", "Sect. 2", bin.verify_steiner(5, 8));
    r.add("ternary code weights", "Sect. 2 (12A2)", "{0:1, 6:264, 9:440, 12:24}",
          histogram_str(tern.weight_histogram()));
    r.add_bool("ternary Steiner S(5,6,12)", "Sect. 2", tern.verify_steiner(5, 6));

    // lattices
    NiemeierLattice n24 = NiemeierLattice::build(RootSystem::A1x24);
    NiemeierLattice n12 = NiemeierLattice::build(RootSystem::A2x12);
    r.add("N(24A1) unimodular", "(2.0)", "1", abs(n24.basis_gram_det()).str());
    r.add("N(12A2) unimodular", "(2.0)", "1", abs(n12.basis_gram_det()).str());

    // case enumeration
    r.add("orbit enumeration 24A1", "Thm 2.1(2)",
          "[1,1,1,1,5,15] [1,1,1,1,10,10] [1,1,1,5,6,10] [1,1,5,5,6,6]",
          multisets_str(orbit_size_multisets(RootSystem::A1x24, default_orbit_parts())));
    r.add("orbit enumeration 12A2", "Thm 2.1(2)", "[1,1,1,1,10,10] [1,1,5,5,6,6]",
          multisets_str(orbit_size_multisets(RootSystem::A2x12, default_orbit_parts())));

    // Gram and inverse matches
    for (CaseId c : all_cases()) {
        const NiemeierLattice& n = case_root_system(c) == RootSystem::A1x24 ? n24 : n12;
        OrbitLabeling lab = build_labeling(c, n.glue());
        CaseBasis basis = build_basis(lab, n);
        align_to_reference(basis, n);
        ExactMatrix g = gram(basis, n);
        r.add_bool("gram " + to_string(c), case_location(c), g == fixtures.gram.at(c));
        r.add_bool("inverse " + to_string(c), case_location(c),
                   inverse(g) == fixtures.gram_inv.at(c));
    }

    // discriminant groups and pairings
    const std::map<CaseId, std::string> factor_strings = {
        {CaseId::c2i, "(30,30)"},   {CaseId::c2ii, "(10,30)"}, {CaseId::c2iii, "(10,30)"},
        {CaseId::c2iv, "(20,20)"},  {CaseId::c2v, "(20,60)"},  {CaseId::c2vi, "(2,2,20,60)"}};
    for (CaseId c : all_cases()) {
        DiscGroup g = disc_group(fixtures.gram.at(c));
        r.add("disc group " + to_string(c), case_location(c), factor_strings.at(c),
              factors_str(g.factors));
        r.add_bool("disc pairing " + to_string(c), case_location(c),
                   verify_case_pairings(c, fixtures.gram.at(c)));
    }

    // basis-change isomorphisms
    r.add_bool("basis change 2ii", "Thm 2.1(9)",
               verify_iso_2_9_with(CaseId::c2ii, fixtures.gram.at(CaseId::c2ii), 2, 7, 1, 0));
    r.add_bool("basis change 2iii", "Thm 2.1(9)",
               verify_iso_2_9_with(CaseId::c2iii, fixtures.gram.at(CaseId::c2iii), 1, 7, 1, -4));

    // determinant list
    {
        std::ostringstream actual;
        bool first = true;
        for (CaseId c : all_cases()) {
            if (!first) actual << ", ";
            actual << abs(determinant(fixtures.gram.at(c))).str();
            first = false;
        }
        r.add("Remark D(3) orders", "Remark D(3)", "900, 300, 300, 400, 1200, 4800", actual.str());
    }

    // character module
    {
        bool ortho = true;
        try {
            a5_character_table();
        } catch (const std::exception&) {
            ortho = false;
        }
        r.add_bool("A5 character orthogonality", "Lemma 1.6(2)", ortho);

        auto sols = solve_picard_decomposition();
        std::ostringstream actual;
        for (const auto& s : sols) actual << "(" << s[0] << "," << s[1] << "," << s[2] << "," << s[3] << ")";
        r.add("Picard decomposition", "Lemma 1.6", "(0,0,2,2)", actual.str());

        LefschetzSummary sum = lefschetz_sum_check();
        std::ostringstream actual2;
        actual2 << sum.total.get_str() << "; ranks (" << sum.rank_k3_invariant << ", "
                << sum.rank_picard_invariant << ")";
        r.add("Lefschetz fixed point sum", "Lemma 1.2(2)", "360; ranks (4, 2)", actual2.str());

        auto branches = solve_zeta3_twist();
        std::ostringstream actual3;
        for (const auto& b : branches)
            actual3 << "(" << b.exponents[0] << "," << b.exponents[1] << "," << b.exponents[2] << ","
                    << b.exponents[3] << ")->" << b.chi_top << " ";
        r.add("twist branches", "Lemma 3.2", "(1,2,0,0)->9 (1,2,1,2)->-6 ", actual3.str());

        bool profiles = fixed_locus_profile(-6) == std::make_pair(-3, 0) &&
                        fixed_locus_profile(9) == std::make_pair(2, 5) &&
                        fixed_locus_profile(3) == std::make_pair(0, 3);
        for (int n = -3; n <= 6 && profiles; ++n)
            profiles = fixed_locus_profile(3 * (1 + n)) == std::make_pair(n, n + 3);
        r.add_bool("fixed locus profiles", "Lemma 1.4(1)", profiles);
    }

    // exclusions
    {
        auto a4 = exclude_root_system(RootSystem::A4x6);
        r.add("exclusion 6A4", "Sect. 2 proof", "stabilizer order 20 < 60",
              a4.admissible ? "admissible" : a4.reason);
        auto d4 = exclude_root_system(RootSystem::D4x6);
        r.add("exclusion 6D4", "Sect. 2 proof", "8 orbits != 6",
              d4.admissible ? "admissible" : d4.reason);
    }

    return r.report;
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << r.version << "\n";
    for (const auto& c : r.checks)
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (expected " << c.expected
            << ", got " << c.actual << ")  [" << c.location << "]\n";
    out << r.passed << " passed, " << r.failed << " failed\n";
    return out.str();
}

std::string render_json(const Report& r) {
    nlohmann::json j;
    j["version"] = r.version;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name},
                               {"paper", c.location},
                               {"expected", c.expected},
                               {"actual", c.actual},
                               {"pass", c.pass}});
    j["summary"] = {{"passed", r.passed}, {"failed", r.failed}};
    return j.dump(2) + "\n";
}

}  // namespace k3l
