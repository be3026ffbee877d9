#pragma once

#include <stdexcept>
#include <string>

namespace ktlift {

enum class ErrKind {
    InvalidRank,
    MixedParity,
    InvalidParams,
    OutsideStableCombinatorics,
    DegreeOutOfRange,
    NotDominant,
    NotInPattern,
    CutoffTooSmall,
};

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

inline const char* err_kind_name(ErrKind k) {
    switch (k) {
    case ErrKind::InvalidRank: return "InvalidRank";
    case ErrKind::MixedParity: return "MixedParity";
    case ErrKind::InvalidParams: return "InvalidParams";
    case ErrKind::OutsideStableCombinatorics: return "OutsideStableCombinatorics";
    case ErrKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrKind::NotDominant: return "NotDominant";
    case ErrKind::NotInPattern: return "NotInPattern";
    case ErrKind::CutoffTooSmall: return "CutoffTooSmall";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
    throw Error(kind, std::string(err_kind_name(kind)) + ": " + msg);
}

} // namespace ktlift
