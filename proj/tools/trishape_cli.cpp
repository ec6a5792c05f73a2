#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "trishape/error.hpp"
#include "trishape/geodesics.hpp"
#include "trishape/pipeline.hpp"
#include "trishape/sites_io.hpp"
#include "trishape/svg.hpp"

namespace fs = std::filesystem;
using namespace trishape;

namespace {

struct Inputs {
    std::optional<fs::path> sites, image, mask, config, out, svg;
    std::optional<double> bend, sigma;
    std::optional<int> samples, orientations;
    std::optional<std::string> p;
};

void add_input_options(CLI::App* cmd, Inputs& in) {
    cmd->add_option("--sites", in.sites, "Sites file (CSV x,y or JSON [[x,y],...])");
    cmd->add_option("--image", in.image, "PGM image; sites come from corner detection when --sites is absent");
    cmd->add_option("--config", in.config, "key = value config file");
    cmd->add_option("--bend", in.bend, "Curvilinear bend toward the face centroid, in [0, 1)");
    cmd->add_option("--sigma", in.sigma, "Open-triangle relaxation distance");
    cmd->add_option("--samples", in.samples, "Samples per curved edge");
    cmd->add_option("--orientations", in.orientations, "Caliper orientations for mask diameters");
    cmd->add_option("--p", in.p, "p-norm exponent, a number >= 1 or inf");
}

PipelineConfig resolve_config(const Inputs& in) {
    PipelineConfig cfg;
    if (in.config) cfg = run_stage("load-config", [&] { return load_config(*in.config); });
    if (in.bend) cfg.bend = *in.bend;
    if (in.sigma) cfg.sigma = *in.sigma;
    if (in.samples) cfg.edge_samples = *in.samples;
    if (in.orientations) cfg.orientations = *in.orientations;
    if (in.p) cfg.p_norm = run_stage("config", [&] { return parse_p_norm(*in.p); });
    run_stage("config", [&] { cfg.validate(); });
    return cfg;
}

void emit(const std::optional<fs::path>& out, const std::string& text, const char* stage) {
    if (!out) {
        std::cout << text;
        return;
    }
    run_stage(stage, [&] { save_text(*out, text); });
}

Approximation approximation_for(const Inputs& in, const PipelineConfig& cfg) {
    const std::vector<Point2> sites = acquire_sites(in.sites, in.image, cfg);
    return build_approximation(sites, cfg);
}

void write_svg(const Approximation& approx, const FeaturesReport& features, bool curvilinear, const fs::path& path,
               const PipelineConfig& cfg) {
    run_stage("render", [&] {
        SvgOptions options;
        options.curve_samples = cfg.edge_samples;
        const auto& geodesic = curvilinear ? features.curv.diameter_path : features.rect.diameter_path;
        render_svg(approx.rect, approx.dec, curvilinear ? &approx.curv : nullptr, geodesic, path, options);
    });
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return 2;
        case ErrorKind::DegenerateInput: return 3;
        case ErrorKind::DisconnectedGraph: return 4;
        default: return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spoke-complex triangulations of planar shapes and their curvilinear refinements"};
    app.require_subcommand(1);

    Inputs in;
    bool curvilinear = false;
    std::optional<fs::path> graph;
    std::optional<int> source;
    std::string format = "csv";

    auto* tri = app.add_subcommand("triangulate", "Sites to rectilinear and curvilinear triangulation JSON");
    add_input_options(tri, in);
    tri->add_option("--out", in.out, "JSON output path (stdout when absent)");
    tri->add_option("--svg", in.svg, "Also render the rectilinear triangulation");

    auto* feat = app.add_subcommand("features", "Shape features of both triangulations and, with --mask, the mask");
    add_input_options(feat, in);
    feat->add_option("--mask", in.mask, "Binary PGM mask (nonzero is foreground)");
    feat->add_option("--out", in.out, "JSON output path (stdout when absent)");

    auto* cmp = app.add_subcommand("compare", "rd vectors of both triangulations against a mask");
    add_input_options(cmp, in);
    cmp->add_option("--mask", in.mask, "Binary PGM mask (nonzero is foreground)")->required();
    cmp->add_option("--out", in.out, "JSON output path (stdout when absent)");
    cmp->add_option("--svg", in.svg, "Also render the triangulation with its geodesic diameter");
    cmp->add_flag("--curvilinear", curvilinear, "Render the curvilinear triangulation");

    auto* ren = app.add_subcommand("render", "SVG of the spoke decomposition with the geodesic diameter");
    add_input_options(ren, in);
    ren->add_option("--svg,--out", in.svg, "SVG output path")->required();
    ren->add_flag("--curvilinear", curvilinear, "Draw edges as quadratic curves");

    auto* dij = app.add_subcommand("dijkstra", "Weighted graph CSV (u,v,w; 1-based) to distance matrix");
    dij->add_option("--graph", graph, "Graph CSV")->required();
    dij->add_option("--source", source, "1-based source vertex for the json report")->check(CLI::PositiveNumber);
    dij->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    dij->add_option("--out", in.out, "Output path (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dij->parsed()) {
            const WeightedGraph g = run_stage("load-graph", [&] { return parse_graph_csv(read_text(*graph)); });
            const DistanceMatrix d = run_stage("dijkstra", [&] { return distance_matrix(g); });
            const Diameter dia = run_stage("diameter", [&] { return graph_diameter(d); });
            if (format == "csv") {
                emit(in.out, to_csv(d), "write-output");
                return 0;
            }
            const int s = source.value_or(1) - 1;
            if (s >= d.size()) {
                throw Error(ErrorKind::InvalidArgument, "source vertex out of range").with_stage("dijkstra");
            }
            nlohmann::json matrix = nlohmann::json::array();
            for (int i = 0; i < d.size(); ++i) {
                const auto row = d.row(i);
                matrix.push_back(std::vector<double>(row.begin(), row.end()));
            }
            const auto src_row = d.row(s);
            const nlohmann::json j = {{"source", s + 1},
                                      {"d", std::vector<double>(src_row.begin(), src_row.end())},
                                      {"matrix", std::move(matrix)},
                                      {"gdia", dia.value},
                                      {"gdia_pair", {dia.u + 1, dia.v + 1}}};
            emit(in.out, dump_json(j), "write-output");
            return 0;
        }

        const PipelineConfig cfg = resolve_config(in);
        const Approximation approx = approximation_for(in, cfg);

        if (tri->parsed()) {
            emit(in.out, dump_json(triangulate_report(approx, cfg)), "write-output");
            if (in.svg) {
                run_stage("render", [&] { render_svg(approx.rect, approx.dec, nullptr, {}, *in.svg); });
            }
        } else if (feat->parsed()) {
            std::optional<BinaryMask> mask;
            if (in.mask) mask = run_stage("load-mask", [&] { return load_mask(*in.mask); });
            const FeaturesReport r = compute_features(approx, mask ? &*mask : nullptr, cfg);
            emit(in.out, dump_json(r.to_json()), "write-output");
        } else if (cmp->parsed()) {
            const BinaryMask mask = run_stage("load-mask", [&] { return load_mask(*in.mask); });
            const CompareReport r = run_compare(approx, mask, cfg);
            emit(in.out, dump_json(r.to_json()), "write-output");
            if (in.svg) write_svg(approx, r.features, curvilinear, *in.svg, cfg);
        } else if (ren->parsed()) {
            const FeaturesReport r = compute_features(approx, nullptr, cfg);
            write_svg(approx, r, curvilinear, *in.svg, cfg);
        }
    } catch (const Error& e) {
        std::cerr << "trishape: " << (e.stage().empty() ? e.with_stage("cli") : e).what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "trishape: internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
