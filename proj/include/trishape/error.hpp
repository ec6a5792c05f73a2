#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trishape {

enum class ErrorKind {
    DegenerateInput,
    InvalidArgument,
    OutOfDomain,
    SingularWeight,
    ProjectiveDegenerate,
    OutOfBounds,
    ParseError,
    IoError,
    DisconnectedGraph,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library. The kind selects the CLI exit code;
// the stage is filled in by the pipeline when an error crosses a stage boundary.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& stage() const noexcept { return stage_; }
    const std::string& detail() const noexcept { return detail_; }

    // Returns a copy labeled with the pipeline stage that failed.
    Error with_stage(std::string stage) const;

private:
    ErrorKind kind_;
    std::string detail_;
    std::string stage_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace trishape
