#pragma once

#include <stdexcept>
#include <string>

namespace matsuo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& m) : Error(m) {}
};
struct MixedFieldVariant : Error {
    MixedFieldVariant() : Error("mixed scalar field variants") {}
};
struct PoleAtValue : Error {
    using Error::Error;
};
struct NotInvolution : Error {
    using Error::Error;
};
struct Not3Transposition : Error {
    using Error::Error;
};
struct SizeLimitExceeded : Error {
    using Error::Error;
};
struct NotClosed : Error {
    using Error::Error;
};
struct IrrationalSpectrum : Error {
    using Error::Error;
};
struct DegenerateAlpha : Error {
    using Error::Error;
};
struct ChargeUnset : Error {
    ChargeUnset() : Error("bilinear form requested but no charge is set") {}
};
struct NotIdempotent : Error {
    using Error::Error;
};
struct IncompleteSpectrum : Error {
    using Error::Error;
};
struct NotDiagonalisable : Error {
    using Error::Error;
};
struct NotAnAutomorphism : Error {
    using Error::Error;
};
struct DepthExceeded : Error {
    using Error::Error;
};

} // namespace matsuo
