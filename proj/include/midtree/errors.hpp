#pragma once

#include <stdexcept>
#include <string>

namespace midtree {

enum class Err {
    InvalidInput,
    Disjointness,
    GenericTie,
    Range,
    ClauseArity,
    DuplicateVariable,
    Disconnected,
    CapExceeded,
    Nonnegativity,
    UnalignedEdge,
    Parse,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::InvalidInput: return "INVALID_INPUT";
        case Err::Disjointness: return "DISJOINTNESS";
        case Err::GenericTie: return "GENERIC_TIE";
        case Err::Range: return "RANGE";
        case Err::ClauseArity: return "CLAUSE_ARITY";
        case Err::DuplicateVariable: return "DUPLICATE_VARIABLE";
        case Err::Disconnected: return "DISCONNECTED";
        case Err::CapExceeded: return "CAP_EXCEEDED";
        case Err::Nonnegativity: return "NONNEGATIVITY";
        case Err::UnalignedEdge: return "UNALIGNED_EDGE";
        case Err::Parse: return "PARSE";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

} // namespace midtree
