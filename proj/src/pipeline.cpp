#include "trishape/pipeline.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "trishape/corners.hpp"
#include "trishape/proximity.hpp"
#include "trishape/sites_io.hpp"

namespace trishape {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    T v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::string format(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

nlohmann::json points_json(std::span<const Point2> pts) {
    nlohmann::json j = nlohmann::json::array();
    for (const Point2& p : pts) j.push_back({p.x, p.y});
    return j;
}

}  // namespace

void PipelineConfig::validate() const {
    const auto bad = [](const std::string& what) { fail(ErrorKind::InvalidArgument, "config: " + what); };
    if (sigma && !(*sigma >= 0.0 && std::isfinite(*sigma))) bad("sigma must be a finite value >= 0");
    if (!(bend >= 0.0 && bend < 1.0)) bad("bend must lie in [0, 1)");
    if (!(mid_weight > 0.0 && std::isfinite(mid_weight))) bad("mid_weight must be positive");
    if (edge_samples < 2) bad("edge_samples must be >= 2");
    if (orientations < 1) bad("orientations must be >= 1");
    if (keep_components < 1) bad("keep_components must be >= 1");
    if (!(min_pixels >= 0.0 && min_pixels <= 1.0)) bad("min_pixels must lie in [0, 1]");
    if (!(p_norm >= 1.0)) bad("p_norm must be >= 1 or inf");
    if (chain_cap < 1) bad("chain_cap must be >= 1");
    if (max_sites < 3) bad("max_sites must be >= 3");
}

double parse_p_norm(std::string_view text) {
    text = trim(text);
    if (text == "inf" || text == "Inf" || text == "INF") return std::numeric_limits<double>::infinity();
    const auto v = parse_number<double>(text);
    if (!v || !(*v >= 1.0) || !std::isfinite(*v)) {
        fail(ErrorKind::InvalidArgument, "p must be a number >= 1 or inf, got '" + std::string(text) + "'");
    }
    return *v;
}

PipelineConfig parse_config(std::string_view text, PipelineConfig cfg) {
    int line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = "config line " + std::to_string(line_no) + ": ";
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) fail(ErrorKind::ParseError, where + "expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));

        const auto real = [&]() {
            const auto v = parse_number<double>(value);
            if (!v) fail(ErrorKind::ParseError, where + "'" + key + "' needs a number");
            return *v;
        };
        const auto count = [&]() {
            const auto v = parse_number<long long>(value);
            if (!v || *v < 0 || *v > std::numeric_limits<int>::max()) {
                fail(ErrorKind::ParseError, where + "'" + key + "' needs a non-negative integer");
            }
            return static_cast<int>(*v);
        };

        if (key == "sigma") {
            if (value == "auto") cfg.sigma.reset();
            else cfg.sigma = real();
        } else if (key == "bend") {
            cfg.bend = real();
        } else if (key == "mid_weight") {
            cfg.mid_weight = real();
        } else if (key == "edge_samples") {
            cfg.edge_samples = count();
        } else if (key == "orientations") {
            cfg.orientations = count();
        } else if (key == "keep_components") {
            cfg.keep_components = count();
        } else if (key == "min_pixels") {
            cfg.min_pixels = real();
        } else if (key == "p_norm") {
            if (value == "inf") cfg.p_norm = std::numeric_limits<double>::infinity();
            else cfg.p_norm = real();
        } else if (key == "chain_cap") {
            cfg.chain_cap = static_cast<std::size_t>(count());
        } else if (key == "max_sites") {
            cfg.max_sites = count();
        } else {
            fail(ErrorKind::ParseError, where + "unknown key '" + key + "'");
        }
    }
    return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base) {
    return parse_config(read_text(path), base);
}

std::string to_config_text(const PipelineConfig& cfg) {
    std::string out;
    out += "sigma = " + (cfg.sigma ? format(*cfg.sigma) : std::string("auto")) + "\n";
    out += "bend = " + format(cfg.bend) + "\n";
    out += "mid_weight = " + format(cfg.mid_weight) + "\n";
    out += "edge_samples = " + std::to_string(cfg.edge_samples) + "\n";
    out += "orientations = " + std::to_string(cfg.orientations) + "\n";
    out += "keep_components = " + std::to_string(cfg.keep_components) + "\n";
    out += "min_pixels = " + format(cfg.min_pixels) + "\n";
    out += "p_norm = " + (std::isinf(cfg.p_norm) ? std::string("inf") : format(cfg.p_norm)) + "\n";
    out += "chain_cap = " + std::to_string(cfg.chain_cap) + "\n";
    out += "max_sites = " + std::to_string(cfg.max_sites) + "\n";
    return out;
}

std::vector<Point2> acquire_sites(const std::optional<std::filesystem::path>& sites_path,
                                  const std::optional<std::filesystem::path>& image_path, const PipelineConfig& cfg) {
    if (sites_path) return run_stage("load-sites", [&] { return load_sites(*sites_path); });
    if (!image_path) fail(ErrorKind::InvalidArgument, "either a sites file or an image is required");
    const GrayImage img = run_stage("load-image", [&] { return load_pgm(*image_path); });
    return run_stage("detect-sites", [&] { return detect_sites(img, cfg.max_sites); });
}

Approximation build_approximation(std::span<const Point2> sites, const PipelineConfig& cfg) {
    run_stage("config", [&] { cfg.validate(); });
    Triangulation rect = run_stage("triangulate", [&] { return delaunay_triangulate(sites); });
    SpokeDecomposition dec = run_stage("decompose", [&] { return decompose(rect); });
    CurvTriangulation curv =
        run_stage("curvilinearize", [&] { return curvilinearize(rect, dec, cfg.bend, cfg.mid_weight); });
    return {std::move(rect), std::move(dec), std::move(curv)};
}

nlohmann::json triangulate_report(const Approximation& approx, const PipelineConfig& cfg) {
    return run_stage("report", [&] {
        const Triangulation& t = approx.rect;
        nlohmann::json j;
        j["sites"] = points_json(t.sites());
        nlohmann::json faces = nlohmann::json::array();
        for (const Triangle& f : t.faces()) faces.push_back({f.a, f.b, f.c});
        j["faces"] = std::move(faces);
        j["decomposition"] = to_json(t, approx.dec);

        const ChainEnumeration chains = spoke_chains(t, approx.dec, cfg.chain_cap);
        nlohmann::json cj = nlohmann::json::array();
        for (const SpokeChain& c : chains.chains) cj.push_back(c.faces);
        j["chains"] = {{"count", chains.chains.size()}, {"truncated", chains.truncated}, {"chains", std::move(cj)}};

        const double sigma = cfg.sigma.value_or(default_sigma(t));
        nlohmann::json prox = nlohmann::json::array();
        for (const auto& [k, faces_k] : approx.dec.complexes) {
            const auto next = approx.dec.complexes.find(k + 1);
            if (next == approx.dec.complexes.end()) continue;
            prox.push_back({{"k", k},
                            {"near", near(t, faces_k, next->second)},
                            {"strongly_near", strongly_near(t, faces_k, next->second, sigma)}});
        }
        j["proximity"] = {{"sigma", sigma}, {"consecutive_complexes", std::move(prox)}};

        nlohmann::json curv = to_json(approx.curv);
        curv["bend"] = cfg.bend;
        curv["mid_weight"] = cfg.mid_weight;
        j["curvilinear"] = std::move(curv);
        return j;
    });
}

nlohmann::json FeaturesReport::to_json() const {
    nlohmann::json j;
    j["rect"] = trishape::to_json(rect.features);
    j["curv"] = trishape::to_json(curv.features);
    j["orig"] = orig ? trishape::to_json(*orig) : nlohmann::json(nullptr);
    j["rect_diameter_path"] = rect.diameter_path;
    j["curv_diameter_path"] = curv.diameter_path;
    return j;
}

FeaturesReport compute_features(const Approximation& approx, const BinaryMask* mask, const PipelineConfig& cfg) {
    run_stage("config", [&] { cfg.validate(); });
    FeaturesReport r;
    r.rect = run_stage("features-rect", [&] { return triangulation_features(approx.rect); });
    r.curv = run_stage("features-curv", [&] { return triangulation_features(approx.curv, cfg.edge_samples); });
    if (mask) {
        r.orig = run_stage("features-mask", [&] {
            return image_features(*mask, cfg.orientations, cfg.keep_components, cfg.min_pixels);
        });
    }
    return r;
}

nlohmann::json CompareReport::to_json() const {
    nlohmann::json j;
    j["features"] = features.to_json();
    j["rd"] = {{"rect", trishape::to_json(rd_rect)}, {"curv", trishape::to_json(rd_curv)}};
    j["rd_diff"] = trishape::to_json(rd_diff);
    j["pnorm"] = {{"p", std::isinf(p) ? nlohmann::json("inf") : nlohmann::json(p)}, {"value", pnorm}};
    return j;
}

CompareReport run_compare(const Approximation& approx, const BinaryMask& mask, const PipelineConfig& cfg) {
    CompareReport r;
    r.features = compute_features(approx, &mask, cfg);
    run_stage("compare", [&] {
        r.rd_rect = relative_difference(r.features.rect.features, *r.features.orig);
        r.rd_curv = relative_difference(r.features.curv.features, *r.features.orig);
        r.rd_diff = rd_difference(r.rd_rect, r.rd_curv);
        r.p = cfg.p_norm;
        r.pnorm = rd_pnorm(r.rd_rect, r.rd_curv, cfg.p_norm);
    });
    return r;
}

CompareReport run_compare(std::span<const Point2> sites, const BinaryMask& mask, const PipelineConfig& cfg) {
    return run_compare(build_approximation(sites, cfg), mask, cfg);
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace trishape
