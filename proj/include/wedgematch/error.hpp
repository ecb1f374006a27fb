#pragma once

#include <stdexcept>
#include <string>

namespace wedgematch {

// Malformed text: unknown characters, bad punctuation, unparseable numbers.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input that does not describe a valid object
// (duplicate vertex, wedge violation, bound violation, ...).
class InvalidObject : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested enumeration size exceeds the configured cap.
class CapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace wedgematch
