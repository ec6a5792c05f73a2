#include "trishape/image.hpp"

#include <cctype>
#include <fstream>
#include <iterator>

#include "trishape/error.hpp"

namespace trishape {

GrayImage::GrayImage(int w, int h, std::uint8_t fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

BinaryMask::BinaryMask(int w, int h) : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

std::size_t BinaryMask::count() const {
    std::size_t n = 0;
    for (auto b : bits) n += b != 0;
    return n;
}

namespace {

// Netpbm header tokenizer; comments run from '#' to end of line.
class PgmReader {
public:
    explicit PgmReader(std::string_view bytes) : bytes_(bytes) {}

    std::size_t offset() const { return pos_; }

    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::ParseError, "PGM: " + what + " at byte offset " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    long read_uint(const char* what) {
        skip_space();
        if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            error(std::string("expected ") + what);
        }
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 1'000'000'000L) error(std::string(what) + " too large");
            ++pos_;
        }
        return value;
    }

    char magic() {
        if (bytes_.size() < 2 || bytes_[0] != 'P' || (bytes_[1] != '2' && bytes_[1] != '5')) {
            error("expected P2 or P5 magic");
        }
        pos_ = 2;
        return bytes_[1];
    }

    // Exactly one whitespace byte separates maxval from binary data.
    void single_space() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            error("expected whitespace before pixel data");
        }
        ++pos_;
    }

    std::string_view rest() const { return bytes_.substr(pos_); }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage parse_pgm(std::string_view bytes) {
    PgmReader in(bytes);
    const char kind = in.magic();
    const long width = in.read_uint("width");
    const long height = in.read_uint("height");
    const long maxval = in.read_uint("maxval");
    if (width <= 0 || height <= 0) in.error("image dimensions must be positive");
    if (maxval <= 0 || maxval > 255) in.error("maxval must be in 1..255");

    GrayImage image(static_cast<int>(width), static_cast<int>(height));
    const std::size_t count = image.pixels.size();
    if (kind == '5') {
        in.single_space();
        const std::string_view data = in.rest();
        if (data.size() < count) {
            fail(ErrorKind::ParseError, "PGM: truncated payload at byte offset " +
                                            std::to_string(in.offset() + data.size()) + ": expected " +
                                            std::to_string(count) + " bytes, missing " +
                                            std::to_string(count - data.size()) + " bytes");
        }
        for (std::size_t i = 0; i < count; ++i) {
            const auto v = static_cast<std::uint8_t>(data[i]);
            if (v > maxval) in.error("pixel value exceeds maxval");
            image.pixels[i] = v;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const long v = in.read_uint("pixel value");
            if (v > maxval) in.error("pixel value exceeds maxval");
            image.pixels[i] = static_cast<std::uint8_t>(v);
        }
    }
    return image;
}

GrayImage load_pgm(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) fail(ErrorKind::IoError, "cannot open " + path.string());
    const std::string bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    return parse_pgm(bytes);
}

BinaryMask mask_from_image(const GrayImage& image) {
    BinaryMask mask(image.width, image.height);
    for (std::size_t i = 0; i < image.pixels.size(); ++i) mask.bits[i] = image.pixels[i] != 0;
    return mask;
}

BinaryMask load_mask(const std::filesystem::path& path) { return mask_from_image(load_pgm(path)); }

std::string encode_pgm(const GrayImage& image) {
    std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    out.append(image.pixels.begin(), image.pixels.end());
    return out;
}

void save_pgm(const GrayImage& image, const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) fail(ErrorKind::IoError, "cannot write " + path.string());
    const std::string bytes = encode_pgm(image);
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!file) fail(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace trishape
