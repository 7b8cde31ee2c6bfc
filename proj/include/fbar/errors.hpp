#pragma once

#include <stdexcept>
#include <string>

namespace fbar {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- bit sequence / layer errors -----------------------------------------

class LengthNotByteAligned : public Error {
public:
    using Error::Error;
};

// layer23_channels shares the byte-alignment precondition with to_bytes.
using NotByteAligned = LengthNotByteAligned;

class OddLength : public Error {
public:
    using Error::Error;
};

class PositionOutOfRange : public Error {
public:
    using Error::Error;
};

class DominanceViolated : public Error {
public:
    using Error::Error;
};

class SidebandMismatch : public Error {
public:
    using Error::Error;
};

class NotMixedPair : public Error {
public:
    using Error::Error;
};

// --- container errors ------------------------------------------------------

class BadMagic : public Error {
public:
    using Error::Error;
};

class UnsupportedVersion : public Error {
public:
    using Error::Error;
};

// Any state where the payload provably cannot reproduce bytes matching the
// stored checksum. Single-bit corruption anywhere in the payload lands here.
class ChecksumMismatch : public Error {
public:
    using Error::Error;
};

// Missing bytes relative to the sizes the header or sideband framing demand.
// A truncated container is indistinguishable from corruption once the byte
// count is wrong, so this is a refinement of ChecksumMismatch.
class TruncatedPayload : public ChecksumMismatch {
public:
    using ChecksumMismatch::ChecksumMismatch;
};

// --- analysis errors ---------------------------------------------------------

class ZeroCompressedSize : public Error {
public:
    using Error::Error;
};

class ZeroOriginalSize : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

} // namespace fbar
