#pragma once

#include <stdexcept>
#include <string>

namespace oscm {

enum class ErrorCode {
    InvalidArgument,
    OccupiedSlot,
    SlotOutOfRange,
    NoFreeSlot,
    SameSlot,
    Unclassifiable,
    NegativeAvoidable,
    DegreeOverflow,
    ArrowLengthMismatch,
    SizeLimit,
    Protocol,
    Infeasible,
    ReplayMismatch,
    Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (and tests) can tell error paths apart without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace oscm
