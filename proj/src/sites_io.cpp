#include "trishape/sites_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>

#include <json.hpp>

#include "trishape/error.hpp"

namespace trishape {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool parse_double(std::string_view s, double& out) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::vector<Point2> parse_sites_csv(std::string_view text) {
    std::vector<Point2> sites;
    int line_no = 0;
    bool seen_data = false;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        const std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const std::size_t comma = line.find(',');
        Point2 p;
        const bool ok = comma != std::string_view::npos && parse_double(line.substr(0, comma), p.x) &&
                        parse_double(line.substr(comma + 1), p.y);
        if (!ok) {
            if (!seen_data) {
                seen_data = true;  // header
                continue;
            }
            fail(ErrorKind::ParseError, "sites CSV line " + std::to_string(line_no) + ": expected x,y");
        }
        if (!is_finite(p)) fail(ErrorKind::ParseError, "sites CSV line " + std::to_string(line_no) + ": non-finite");
        seen_data = true;
        sites.push_back(p);
    }
    return sites;
}

std::vector<Point2> parse_sites_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, std::string("sites JSON: ") + e.what());
    }
    if (!j.is_array()) fail(ErrorKind::ParseError, "sites JSON must be an array of [x, y] pairs");
    std::vector<Point2> sites;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            fail(ErrorKind::ParseError, "sites JSON entry " + std::to_string(i) + " is not an [x, y] pair");
        }
        sites.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    return sites;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) fail(ErrorKind::IoError, "cannot open " + path.string());
    return std::string((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
}

void save_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) fail(ErrorKind::IoError, "cannot write " + path.string());
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file) fail(ErrorKind::IoError, "write failed for " + path.string());
}

std::vector<Point2> load_sites(const std::filesystem::path& path) {
    const std::string text = read_text(path);
    if (path.extension() == ".json") return parse_sites_json(text);
    return parse_sites_csv(text);
}

std::string sites_to_csv(std::span<const Point2> sites) {
    std::string out = "x,y\n";
    for (const Point2& p : sites) out += format_double(p.x) + "," + format_double(p.y) + "\n";
    return out;
}

}  // namespace trishape
