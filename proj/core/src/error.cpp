#include "leibcheck/error.hpp"

namespace leibcheck {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DenominatorDividesP: return "DenominatorDividesP";
        case Errc::AmbientMismatch: return "AmbientMismatch";
        case Errc::Singular: return "Singular";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::HypothesisViolation: return "HypothesisViolation";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::DuplicateName: return "DuplicateName";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::ConstraintViolated: return "ConstraintViolated";
        case Errc::NoAdmissiblePoint: return "NoAdmissiblePoint";
        case Errc::BadPrime: return "BadPrime";
        case Errc::UnknownEntry: return "UnknownEntry";
    }
    return "Unknown";
}

}  // namespace leibcheck
