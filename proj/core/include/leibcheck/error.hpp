#pragma once

#include <stdexcept>
#include <string>

namespace leibcheck {

enum class Errc {
    DivisionByZero,
    FieldMismatch,
    DenominatorDividesP,
    AmbientMismatch,
    Singular,
    DimensionMismatch,
    HypothesisViolation,
    SyntaxError,
    DuplicateName,
    IndexOutOfRange,
    ConstraintViolated,
    NoAdmissiblePoint,
    BadPrime,
    UnknownEntry,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace leibcheck
