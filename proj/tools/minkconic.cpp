// minkconic: trace metric conics, rasterize degenerate loci, run the claim
// suites and the s.i.p. checks from the command line.
//
// Exit codes: 0 success, 1 a selected claim failed, 2 invalid input or
// numerical failure.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minkconic/minkconic.hpp"

namespace {

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
    } else {
        mink::write_file(path, text);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

mink::LinearMap2 parse_matrix(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 4) throw mink::InvalidInput("--matrix expects a,b,c,d");
    double v[4];
    for (int i = 0; i < 4; ++i) {
        std::size_t used = 0;
        try {
            v[i] = std::stod(parts[i], &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != parts[i].size() || used == 0) throw mink::InvalidInput("--matrix: bad number '" + parts[i] + "'");
    }
    return {v[0], v[1], v[2], v[3]};
}

std::string summary_line(std::size_t i, const mink::SpecTrace& t) {
    std::size_t pts = 0;
    for (const auto& c : t.report.curves) pts += c.points.size();
    std::ostringstream os;
    os << "spec " << i << " " << mink::kind_name(t.spec) << ": " << mink::to_string(t.report.degeneracy) << ", "
       << t.report.curves.size() << " curve(s), " << pts << " point(s), " << t.report.segments.size()
       << " segment(s)";
    if (t.report.region) os << ", region " << t.report.region->nx << "x" << t.report.region->ny;
    os << "\n";
    return os.str();
}

mink::RegionGrid scene_grid(const mink::Scene& scene, std::size_t idx, int res) {
    if (idx >= scene.specs.size()) throw mink::InvalidInput("--spec " + std::to_string(idx) + " out of range");
    if (res < 2 || res > 8192) throw mink::InvalidInput("--resolution must be in [2, 8192]");
    return mink::region_grid(scene.ball, scene.specs[idx], scene.bbox, res, res);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metric conics in Minkowski planes"};
    app.require_subcommand(1);

    std::string scene_path, csv_out, svg_out;
    auto* trace = app.add_subcommand("trace", "trace every spec of a scene");
    trace->add_option("--scene", scene_path, "scene JSON")->required();
    trace->add_option("--csv", csv_out, "curve CSV output");
    trace->add_option("--svg", svg_out, "SVG output");

    std::string claims = "all", ball_desc = "lp:2", json_out;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "run claim suites");
    verify->add_option("--claims", claims, "comma list of claim ids, or 'all'");
    verify->add_option("--ball", ball_desc, "lp:<p>, lp:inf, regular:<n>, octagon:<seed>, polygon:x,y;...");
    verify->add_option("--seed", seed, "seed for the random configurations");
    verify->add_option("--json", json_out, "report output (stdout when omitted)");

    int resolution = 256;
    std::size_t spec_idx = 0;
    std::string pgm_out;
    auto* grid = app.add_subcommand("grid", "rasterize one spec of a scene");
    grid->add_option("--scene", scene_path, "scene JSON")->required();
    grid->add_option("--resolution", resolution, "cells per axis");
    grid->add_option("--pgm", pgm_out, "PGM output (stdout when omitted)");
    grid->add_option("--spec", spec_idx, "spec index");

    double p = 2.0;
    std::string matrix = "1,0,0,1";
    auto* sipc = app.add_subcommand("sip", "semi-inner product checks for a 2x2 map on l_p");
    sipc->add_option("--p", p, "exponent, 1 < p < inf")->required();
    sipc->add_option("--matrix", matrix, "row-major a,b,c,d")->required();
    sipc->add_option("--json", json_out, "output (stdout when omitted)");

    auto* cex = app.add_subcommand("counterexample", "reproduce the l_inf counterexample");
    cex->add_option("--json", json_out, "output (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*trace) {
            const mink::Scene scene = mink::load_scene(scene_path);
            const auto traces = mink::trace_scene(scene);
            for (std::size_t i = 0; i < traces.size(); ++i) std::cout << summary_line(i, traces[i]);
            std::vector<mink::OutputSpec> outs = scene.outputs;
            if (!csv_out.empty()) outs.push_back({"csv", csv_out});
            if (!svg_out.empty()) outs.push_back({"svg", svg_out});
            for (const auto& o : outs) {
                if (o.format == "csv") emit(o.path, mink::curves_to_csv(traces));
                if (o.format == "svg") emit(o.path, mink::emit_svg(scene, traces));
                if (o.format == "pgm") {
                    if (scene.specs.empty()) throw mink::InvalidInput("pgm output needs at least one spec");
                    emit(o.path, mink::grid_to_pgm(scene_grid(scene, 0, 256)));
                }
            }
            return 0;
        }
        if (*verify) {
            const mink::UnitBall B = mink::parse_ball_descriptor(ball_desc);
            std::vector<std::string> ids;
            if (claims == "all") {
                for (const auto& id : mink::claim_ids()) {
                    if (id == "counterexample" && !B.is_lp_infinity()) continue;
                    ids.push_back(id);
                }
            } else {
                ids = split(claims, ',');
                if (ids.empty()) throw mink::InvalidInput("--claims is empty");
                for (const auto& id : ids) {
                    const auto& known = mink::claim_ids();
                    if (std::find(known.begin(), known.end(), id) == known.end()) {
                        throw mink::InvalidInput("unknown claim '" + id + "'");
                    }
                }
            }
            std::vector<mink::ClaimReport> reports;
            bool ok = true;
            for (const auto& id : ids) {
                for (auto& r : mink::run_claim(id, B, seed)) {
                    ok = ok && r.pass;
                    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.ball << "]\n";
                    reports.push_back(std::move(r));
                }
            }
            emit(json_out, mink::reports_to_json(reports).dump(2) + "\n");
            return ok ? 0 : 1;
        }
        if (*grid) {
            const mink::Scene scene = mink::load_scene(scene_path);
            emit(pgm_out, mink::grid_to_pgm(scene_grid(scene, spec_idx, resolution)));
            return 0;
        }
        if (*sipc) {
            const auto s = mink::summarize_sip(p, parse_matrix(matrix));
            emit(json_out, mink::sip_to_json(s).dump(2) + "\n");
            return 0;
        }
        if (*cex) {
            const mink::ClaimReport r = mink::reproduce_linf_counterexample();
            std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << "\n";
            emit(json_out, mink::report_to_json(r).dump(2) + "\n");
            return r.pass ? 0 : 1;
        }
    } catch (const mink::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mink::NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
