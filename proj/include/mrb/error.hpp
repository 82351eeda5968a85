#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mrb {

enum class ErrorKind {
    ShapeMismatch,
    ParseError,
    CompositionNonzero,
    LabelSetMismatch,
    UnknownLabel,
    InputNotRotaBaxter,
    NotCentral,
    AybeFails,
    NotSkewSymmetric,
    MultiLabelNotSupported,
    MrrbaFails,
    MdaFails,
    NotMdaMorphism,
    ContextMismatch,
    NotMaurerCartan,
    DegreeOutOfRange,
    NotAdjoint,
    PositionOutOfRange,
    DeformationInvalid,
    NotCocycle,
    DegreeMismatch,
    InputFails,
    UnknownTarget,
    UnknownChecker,
    ConstructionFailed,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace mrb
