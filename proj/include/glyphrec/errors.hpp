#ifndef GLYPHREC_ERRORS_HPP
#define GLYPHREC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glyphrec {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller passed an argument outside the documented domain.
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// An operation that needs at least one on-pixel got a blank image.
class EmptyGlyphError : public Error {
public:
    using Error::Error;
};

// Malformed input file (PNM, manifest, model). Carries the byte offset
// where parsing stopped when it is known, SIZE_MAX otherwise.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t byte_offset = SIZE_MAX)
        : Error(what), byte_offset_(byte_offset) {}
    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// File content does not match the checksum recorded in the manifest.
class ChecksumError : public Error {
public:
    using Error::Error;
};

// A versioned document with a format version this build does not read.
class VersionMismatchError : public Error {
public:
    using Error::Error;
};

// Corpus-level failure: empty corpus, unsplittable class, bad sample set.
class CorpusError : public Error {
public:
    using Error::Error;
};

// Classifier training could not produce a model.
class TrainingError : public Error {
public:
    using Error::Error;
};

} // namespace glyphrec

#endif
