#pragma once

#include <stdexcept>
#include <string>

namespace skelbetti {

// Base class for every error this library throws on contract violations.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A ground-set element or subset is outside {1,...,n}.
class InvalidGroundSet : public Error {
public:
    using Error::Error;
};

// Construction of a complex with no faces at all was attempted.
class VoidComplexRejected : public Error {
public:
    using Error::Error;
};

// Skeleton index outside [-1, dim].
class SkeletonRangeError : public Error {
public:
    using Error::Error;
};

// Modulus is not a prime (or not in the supported range).
class NotPrime : public Error {
public:
    using Error::Error;
};

// Input exceeds the enumeration cap of an exact-arithmetic routine.
class TooLarge : public Error {
public:
    using Error::Error;
};

// Candidate basis family has mixed cardinalities.
class NotEquicardinal : public Error {
public:
    using Error::Error;
};

// Candidate basis family fails independence augmentation.
class NotAMatroid : public Error {
public:
    using Error::Error;
};

// Truncation index outside [0, r(M)].
class TruncationRange : public Error {
public:
    using Error::Error;
};

// Elongation index outside [0, n - r(M)].
class ElongationRange : public Error {
public:
    using Error::Error;
};

// A table fed to a closed-form transfer is not the Betti table of any
// complex with the stated parameters (negative or misplaced entries).
class InconsistentTable : public Error {
public:
    using Error::Error;
};

// Internal invariant violation: a matroid Betti table came out different
// over two finite fields.
class FieldDependenceBug : public Error {
public:
    using Error::Error;
};

// Malformed input file; message carries the line number.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace skelbetti
