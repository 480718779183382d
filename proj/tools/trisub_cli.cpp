#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trisub/error.hpp"
#include "trisub/format.hpp"
#include "trisub/render.hpp"
#include "trisub/shape.hpp"
#include "trisub/subdivision.hpp"
#include "trisub/symbolic.hpp"
#include "trisub/verify.hpp"

namespace {

using namespace trisub;

constexpr int kExitDomain = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitUsage = 64;

EdgeLengths to_edges(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }
AngleShape to_angles(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

nlohmann::json angles_json(const AngleShape& s) { return nlohmann::json::array({s.A, s.B, s.C}); }

void emit(const nlohmann::json& j) { std::cout << dump_json(j) << '\n'; }

CLI::Option* triple_option(CLI::App* app, const std::string& name, std::vector<double>& out, const std::string& what) {
    return app->add_option(name, out, what)->delimiter(',')->expected(3);
}

nlohmann::json witness_json(const std::optional<symbolic::Prop31Witness>& w) {
    if (!w) return nullptr;
    std::string sigma;
    for (Letter l : w->sigma) sigma += to_char(l);
    return {{"prefix_len", w->prefix_len},
            {"sigma", sigma},
            {"zeta", w->zeta},
            {"form_s", w->form_s},
            {"form_t", w->form_t}};
}

std::string sweep_csv(const symbolic::SymbolSequence& seq, std::size_t grid, double defect) {
    if (!(defect > 0) || !(defect < std::numbers::pi)) {
        throw DomainError("sweep defect must lie in (0, pi)");
    }
    const double scale = (std::numbers::pi - defect) / std::numbers::pi;
    std::string out = "A0,B0,C0,Alim,Blim,Clim\n";
    for (const AngleShape& t : verify::euclidean_grid(grid)) {
        const AngleShape start{t.A * scale, t.B * scale, t.C * scale};
        const auto lim = subdivision::limit_shape(seq, shape_from_angles(start));
        out += format_real(start.A) + ',' + format_real(start.B) + ',' + format_real(start.C) + ',' +
               format_real(lim.angles.A) + ',' + format_real(lim.angles.B) + ',' + format_real(lim.angles.C) + '\n';
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Midpoint subdivision of hyperbolic triangles: shapes, orbits, limits and checks."};
    app.name("trisub");
    app.require_subcommand(1);

    std::vector<double> edges;
    std::vector<double> angles;
    std::string word;
    std::string seq_text;
    double tol = 1e-13;
    bool exact = false;
    std::size_t depth = 40;
    std::string s_text;
    std::string t_text;
    std::size_t horizon = symbolic::kDefaultHorizon;
    std::string suite;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::size_t grid = 5;
    double defect = 0.3;
    std::string model = "klein";
    std::optional<std::size_t> render_depth;
    std::optional<std::string> render_word;
    std::string out_path;
    std::size_t sampling = 32;

    auto* shape_cmd = app.add_subcommand("shape", "Shape record from edges or angles (JSON)");
    auto* shape_edges = triple_option(shape_cmd, "--edges", edges, "edge lengths a,b,c");
    auto* shape_angles = triple_option(shape_cmd, "--angles", angles, "angles A,B,C");
    shape_edges->excludes(shape_angles);
    shape_cmd->require_option(1);

    auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a word of maps (CSV)");
    triple_option(orbit_cmd, "--edges", edges, "edge lengths a,b,c")->required();
    orbit_cmd->add_option("--word", word, "letters over A,B,C,M")->required();

    auto* limit_cmd = app.add_subcommand("limit", "Euclidean limit shape along a sequence (JSON)");
    triple_option(limit_cmd, "--edges", edges, "edge lengths a,b,c")->required();
    limit_cmd->add_option("--seq", seq_text, "PREFIX|CYCLE")->required();
    limit_cmd->add_option("--tol", tol, "area and step tolerance");

    auto* address_cmd = app.add_subcommand("address", "Barycentric address of a sequence (JSON)");
    address_cmd->add_option("--seq", seq_text, "PREFIX|CYCLE")->required();
    address_cmd->add_flag("--exact", exact, "exact rational address");
    address_cmd->add_option("--depth", depth, "truncation depth of the approximation");

    auto* equiv_cmd = app.add_subcommand("equiv", "Whether two sequences share an address (JSON)");
    equiv_cmd->add_option("--s", s_text, "PREFIX|CYCLE")->required();
    equiv_cmd->add_option("--t", t_text, "PREFIX|CYCLE")->required();
    equiv_cmd->add_option("--horizon", horizon, "search horizon of the two-address forms");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite (JSON report)");
    std::vector<std::string> suite_choices = verify::suite_names();
    suite_choices.push_back("all");
    verify_cmd->add_option("--suite", suite, "suite name or all")->required()->check(CLI::IsMember(suite_choices));
    verify_cmd->add_option("--seed", seed, "sampling seed");
    verify_cmd->add_option("--samples", samples, "number of samples");

    auto* sweep_cmd = app.add_subcommand("sweep", "Limit shapes over a grid of hyperbolic starts (CSV)");
    sweep_cmd->add_option("--seq", seq_text, "PREFIX|CYCLE")->required();
    sweep_cmd->add_option("--grid", grid, "grid size per axis")->check(CLI::Range(2, 1000));
    sweep_cmd->add_option("--defect", defect, "angle defect of the start slice");

    auto* render_cmd = app.add_subcommand("render", "SVG of nested subdivision cells");
    triple_option(render_cmd, "--edges", edges, "edge lengths a,b,c")->required();
    auto* depth_opt = render_cmd->add_option("--depth", render_depth, "subdivision depth (at most 8)");
    auto* word_opt = render_cmd->add_option("--word", render_word, "letters over A,B,C,M");
    depth_opt->excludes(word_opt);
    render_cmd->add_option("--model", model, "disk model")->check(CLI::IsMember({"klein", "poincare"}));
    render_cmd->add_option("-o,--output", out_path, "output SVG path")->required();
    render_cmd->add_option("--sampling", sampling, "points per edge in the poincare model");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (shape_cmd->parsed()) {
            const ShapeRecord r = edges.empty() ? shape_from_angles(to_angles(angles)) : shape_from_edges(to_edges(edges));
            std::cout << to_json(r) << '\n';
        } else if (orbit_cmd->parsed()) {
            std::cout << subdivision::to_csv(subdivision::orbit(parse_word(word), shape_from_edges(to_edges(edges))));
        } else if (limit_cmd->parsed()) {
            subdivision::LimitOptions opts;
            opts.tol = tol;
            const auto seq = symbolic::parse_seq(seq_text);
            const auto r = subdivision::limit_shape(seq, shape_from_edges(to_edges(edges)), opts);
            emit({{"angles", angles_json(r.angles)}, {"iterations", r.iterations}, {"residual", r.residual}});
        } else if (address_cmd->parsed()) {
            const auto seq = symbolic::parse_seq(seq_text);
            if (exact) {
                const auto b = symbolic::address_exact(seq);
                emit({{"exact", true},
                      {"bary",
                       {symbolic::to_fraction_string(b.u), symbolic::to_fraction_string(b.v),
                        symbolic::to_fraction_string(b.w)}}});
            } else {
                const auto b = symbolic::address_approx(seq, depth);
                emit({{"exact", false},
                      {"bary", {b.point[0], b.point[1], b.point[2]}},
                      {"depth", depth},
                      {"error_bound", b.error_bound}});
            }
        } else if (equiv_cmd->parsed()) {
            const auto s = symbolic::parse_seq(s_text);
            const auto t = symbolic::parse_seq(t_text);
            emit({{"equivalent", symbolic::equivalent(s, t)},
                  {"prop31_form", witness_json(symbolic::match_prop31(s, t, horizon))}});
        } else if (verify_cmd->parsed()) {
            std::vector<std::string> names{suite};
            if (suite == "all") names = verify::suite_names();
            bool ok = true;
            nlohmann::json reports = nlohmann::json::array();
            for (const auto& name : names) {
                const auto r = verify::run_named(name, seed, samples);
                ok = ok && (r.pass || !r.asserting);
                reports.push_back(verify::to_json(r));
            }
            emit(suite == "all" ? reports : reports[0]);
            return ok ? 0 : kExitVerifyFailed;
        } else if (sweep_cmd->parsed()) {
            std::cout << sweep_csv(symbolic::parse_seq(seq_text), grid, defect);
        } else if (render_cmd->parsed()) {
            render::RenderSpec spec;
            spec.model = model == "poincare" ? plane_model::DiskModel::poincare : plane_model::DiskModel::klein;
            if (render_word) spec.word = parse_word(*render_word);
            spec.depth = render_depth.value_or(0);
            spec.sampling = sampling;
            const std::string svg = render::render_svg(spec, to_edges(edges));
            std::ofstream f(out_path, std::ios::binary);
            if (!f || !(f << svg)) {
                std::cerr << "error: cannot write " << out_path << '\n';
                return kExitDomain;
            }
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ConvergenceFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
