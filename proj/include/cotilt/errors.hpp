#pragma once

#include <stdexcept>
#include <string>

namespace cotilt {

enum class Errc {
    NonAdmissible,
    InfiniteDimensional,
    CharNotZero,
    SplitFailure,
    Inconclusive,
    CapExceeded,
    AcyclicityUnavailable,
    HypothesisViolated,
    NotDReflexive,
    MixedModule,
    Inapplicable,
    SyntaxError,
    SemanticError,
    UnknownExample,
    InvalidArgument,
};

inline const char* errc_name(Errc e)
{
    switch (e) {
    case Errc::NonAdmissible: return "NonAdmissible";
    case Errc::InfiniteDimensional: return "InfiniteDimensional";
    case Errc::CharNotZero: return "CharNotZero";
    case Errc::SplitFailure: return "SplitFailure";
    case Errc::Inconclusive: return "Inconclusive";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::AcyclicityUnavailable: return "AcyclicityUnavailable";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotDReflexive: return "NotDReflexive";
    case Errc::MixedModule: return "MixedModule";
    case Errc::Inapplicable: return "Inapplicable";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SemanticError: return "SemanticError";
    case Errc::UnknownExample: return "UnknownExample";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cotilt
