#include "trishape/error.hpp"

namespace trishape {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::SingularWeight: return "SingularWeight";
        case ErrorKind::ProjectiveDegenerate: return "ProjectiveDegenerate";
        case ErrorKind::OutOfBounds: return "OutOfBounds";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& stage, const std::string& detail) {
    std::string out;
    if (!stage.empty()) out += "[" + stage + "] ";
    out += std::string(to_string(kind)) + ": " + detail;
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(compose(kind, {}, message)), kind_(kind), detail_(message) {}

Error Error::with_stage(std::string stage) const {
    Error copy(kind_, detail_);
    static_cast<std::runtime_error&>(copy) = std::runtime_error(compose(kind_, stage, detail_));
    copy.stage_ = std::move(stage);
    return copy;
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace trishape
