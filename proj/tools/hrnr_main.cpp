// hrnr command line: numerical ranges, Kippenhahn polynomials and the
// three-way equivalence check for complex matrices.
//
// Exit codes: 0 success / true verdict, 1 false verdict, 2 input error,
// 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hrnr/errors.hpp"
#include "hrnr/io.hpp"
#include "hrnr/kippenhahn.hpp"
#include "hrnr/ranges.hpp"
#include "hrnr/structure.hpp"
#include "hrnr/svg.hpp"
#include "hrnr/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        hrnr::write_text_file(out_path, text + "\n");
}

std::vector<int> parse_ranks(const std::string& csv, int n) {
    std::vector<int> ranks;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw hrnr::InputError("--ranks: empty item in list");
        std::size_t pos = 0;
        int k = 0;
        try {
            k = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw hrnr::InputError("--ranks: not an integer: " + tok);
        }
        if (pos != tok.size()) throw hrnr::InputError("--ranks: not an integer: " + tok);
        if (k < 1 || k > n) throw hrnr::InputError("--ranks: rank out of [1, n]");
        ranks.push_back(k);
    }
    if (ranks.empty()) throw hrnr::InputError("--ranks: empty list");
    return ranks;
}

struct Options {
    std::string path_a, path_b, out, report, point_text, ranks_csv;
    int k = 1;
    int grid = hrnr::kDefaultGrid;
    double tol = 0.0;
    bool exact = false;
    bool curve = false;
    bool vsets = false;
};

int run(CLI::App& app, int argc, char** argv, int& exit_code) {
    Options o;

    CLI::App* cmd_kip = app.add_subcommand("kippenhahn", "Kippenhahn polynomial coefficients");
    cmd_kip->add_option("matrix", o.path_a, "matrix JSON file")->required();
    cmd_kip->add_flag("--exact", o.exact, "use the exact cofactor expansion (n <= 8)");
    cmd_kip->add_option("--out", o.out, "write JSON here instead of stdout");

    CLI::App* cmd_range = app.add_subcommand("range", "rank-k numerical range polygon");
    cmd_range->add_option("matrix", o.path_a)->required();
    cmd_range->add_option("-k", o.k, "rank index")->required();
    cmd_range->add_option("--grid", o.grid, "angle grid size (default 1024)");
    cmd_range->add_option("--tol", o.tol, "geometric tolerance override");
    cmd_range->add_option("--out", o.out);

    CLI::App* cmd_member = app.add_subcommand("member", "membership test for a point");
    cmd_member->add_option("matrix", o.path_a)->required();
    cmd_member->add_option("-k", o.k)->required();
    cmd_member->add_option("--point", o.point_text, "complex point \"x+yi\"")->required();
    cmd_member->add_option("--grid", o.grid);
    cmd_member->add_option("--tol", o.tol);

    CLI::App* cmd_factors = app.add_subcommand("factors", "real linear factors of p_A");
    cmd_factors->add_option("matrix", o.path_a)->required();

    CLI::App* cmd_vsets = app.add_subcommand("vsets", "V_l partition of the factor points");
    cmd_vsets->add_option("matrix", o.path_a)->required();
    cmd_vsets->add_option("--grid", o.grid);

    CLI::App* cmd_normal = app.add_subcommand("normal", "normality test");
    cmd_normal->add_option("matrix", o.path_a)->required();

    CLI::App* cmd_compare = app.add_subcommand("compare", "three-way equivalence check");
    cmd_compare->add_option("matrix_a", o.path_a)->required();
    cmd_compare->add_option("matrix_b", o.path_b)->required();
    cmd_compare->add_option("--grid", o.grid);
    cmd_compare->add_option("--tol", o.tol);
    cmd_compare->add_option("--report", o.report, "write the report JSON here");

    CLI::App* cmd_equiv2 = app.add_subcommand("equiv2", "special-class unitary equivalence");
    cmd_equiv2->add_option("matrix_a", o.path_a)->required();
    cmd_equiv2->add_option("matrix_b", o.path_b)->required();

    CLI::App* cmd_plot = app.add_subcommand("plot", "SVG figure of nested ranges");
    cmd_plot->add_option("matrix", o.path_a)->required();
    cmd_plot->add_option("--ranks", o.ranks_csv, "comma-separated rank list")->required();
    cmd_plot->add_option("--grid", o.grid);
    cmd_plot->add_flag("--curve", o.curve, "overlay the boundary generating curve");
    cmd_plot->add_flag("--vsets", o.vsets, "overlay V-set markers");
    cmd_plot->add_option("--out", o.out, "output SVG path")->required();

    app.require_subcommand(1);
    app.parse(argc, argv);

    if (o.grid < 16) throw hrnr::InputError("--grid: must be at least 16");
    if (cmd_kip->parsed()) {
        const hrnr::ComplexMatrix a = hrnr::read_matrix(o.path_a);
        const hrnr::TrivariatePoly p =
            o.exact ? hrnr::kippenhahn_poly_exact(a) : hrnr::kippenhahn_poly(a);
        emit(hrnr::poly_to_json_text(p), o.out);
        exit_code = kExitOk;
    } else if (cmd_range->parsed()) {
        const hrnr::ComplexMatrix a = hrnr::read_matrix(o.path_a);
        const hrnr::ConvexRegion r = hrnr::rank_k_range(a, o.k, o.grid, o.tol);
        emit(hrnr::region_to_json_text(r), o.out);
        exit_code = kExitOk;
    } else if (cmd_member->parsed()) {
        const hrnr::ComplexMatrix a = hrnr::read_matrix(o.path_a);
        const hrnr::cplx pt = hrnr::parse_complex_point(o.point_text);
        const hrnr::MembershipResult m = hrnr::membership(a, o.k, pt, o.grid, o.tol);
        emit(hrnr::membership_to_json_text(m), "");
        exit_code = m.verdict == hrnr::Membership::outside ? kExitFalse : kExitOk;
    } else if (cmd_factors->parsed()) {
        const hrnr::ComplexMatrix a = hrnr::read_matrix(o.path_a);
        emit(hrnr::factors_to_json_text(hrnr::real_linear_factors(a)), "");
        exit_code = kExitOk;
    } else if (cmd_vsets->parsed()) {
        const hrnr::ComplexMatrix a = hrnr::read_matrix(o.path_a);
        emit(hrnr::vsets_to_json_text(hrnr::v_sets(a, o.grid)), "");
        exit_code = kExitOk;
    } else if (cmd_normal->parsed()) {
        const hrnr::ComplexMatrix a = hrnr::read_matrix(o.path_a);
        const bool normal = hrnr::normality_test(a);
        emit(normal ? "{\"normal\":true}" : "{\"normal\":false}", "");
        exit_code = normal ? kExitOk : kExitFalse;
    } else if (cmd_compare->parsed()) {
        const hrnr::ComplexMatrix a = hrnr::read_matrix(o.path_a);
        const hrnr::ComplexMatrix b = hrnr::read_matrix(o.path_b);
        const hrnr::EquivalenceReport rep = hrnr::theorem1_check(a, b, o.grid, o.tol);
        const std::string text = hrnr::report_to_json_text(rep);
        emit(text, "");
        if (!o.report.empty()) hrnr::write_text_file(o.report, text + "\n");
        if (!rep.consistent) {
            std::cerr << "compare: INCONSISTENT verdicts (the three conditions must agree); "
                         "residual dump: "
                      << text << "\n";
            exit_code = kExitNumerical;
        } else {
            exit_code = rep.cond_a ? kExitOk : kExitFalse;
        }
    } else if (cmd_equiv2->parsed()) {
        const hrnr::ComplexMatrix a = hrnr::read_matrix(o.path_a);
        const hrnr::ComplexMatrix b = hrnr::read_matrix(o.path_b);
        const hrnr::Corollary2Verdict v = hrnr::corollary2_check(a, b);
        emit(std::string("{\"verdict\":\"") + hrnr::to_string(v) + "\"}", "");
        if (v == hrnr::Corollary2Verdict::unitarily_equivalent)
            exit_code = kExitOk;
        else if (v == hrnr::Corollary2Verdict::not_equivalent)
            exit_code = kExitFalse;
        else
            exit_code = kExitInput;  // outside the special classes
    } else if (cmd_plot->parsed()) {
        const hrnr::ComplexMatrix a = hrnr::read_matrix(o.path_a);
        const int n = int(a.dim());
        const std::vector<int> ranks = parse_ranks(o.ranks_csv, n);
        const double tol = hrnr::geo_tolerance(hrnr::frobenius_norm(a));
        const hrnr::detail::ProfileTable table = hrnr::detail::build_profile_table(a, o.grid);

        std::vector<hrnr::RankRegion> regions;
        for (int k : ranks) {
            hrnr::detail::RegionBuild rb =
                hrnr::detail::build_region(table.alpha[std::size_t(k - 1)], table.thetas, tol);
            if (rb.region.classification == hrnr::RegionKind::empty) continue;
            regions.push_back({k, std::move(rb.region), std::move(rb.corner_points)});
        }
        std::vector<hrnr::CurveSample> curve;
        if (o.curve)
            for (int k = 1; k <= n; ++k) {
                auto part = hrnr::boundary_curve_points(a, k, o.grid);
                curve.insert(curve.end(), part.begin(), part.end());
            }
        std::vector<hrnr::VMarker> markers;
        if (o.vsets) {
            const hrnr::VSets vs = hrnr::v_sets(a, o.grid);
            for (std::size_t l = 0; l < vs.sets.size(); ++l)
                for (const hrnr::cplx& p : vs.sets[l]) markers.push_back({int(l + 1), p});
        }
        hrnr::write_text_file(o.out, hrnr::render_svg(regions, curve, markers));
        exit_code = kExitOk;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"higher-rank numerical ranges and Kippenhahn polynomials"};
    app.set_version_flag("--version", std::string(hrnr::kVersion));

    int exit_code = kExitOk;
    try {
        run(app, argc, argv, exit_code);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return kExitInput;
    } catch (const hrnr::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const hrnr::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return exit_code;
}
