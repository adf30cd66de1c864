#pragma once

#include <stdexcept>
#include <string>

namespace kmk {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotGCM : Error {
    explicit NotGCM(const std::string& msg) : Error("not a GCM: " + msg) {}
};

struct NotSymmetrizable : Error {
    explicit NotSymmetrizable(const std::string& msg) : Error("not symmetrizable: " + msg) {}
};

struct UnsupportedType : Error {
    explicit UnsupportedType(const std::string& msg) : Error("unsupported type: " + msg) {}
};

struct NotInTitsCone : Error {
    explicit NotInTitsCone(const std::string& msg) : Error("not in Tits cone: " + msg) {}
};

struct InfiniteStabilizer : Error {
    explicit InfiniteStabilizer(const std::string& msg) : Error("infinite stabilizer: " + msg) {}
};

struct HeightBoundExceeded : Error {
    explicit HeightBoundExceeded(const std::string& msg) : Error("height bound exceeded: " + msg) {}
};

struct NotDominant : Error {
    explicit NotDominant(const std::string& msg) : Error("not dominant: " + msg) {}
};

struct NotRegularDominant : Error {
    explicit NotRegularDominant(const std::string& msg) : Error("not regular dominant: " + msg) {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& msg) : Error("zero denominator: " + msg) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg) : Error("not invertible: " + msg) {}
};

struct AnchorNotLatticeCompatible : Error {
    explicit AnchorNotLatticeCompatible(const std::string& msg)
        : Error("anchor not lattice compatible: " + msg) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error("precondition violated: " + msg) {}
};

struct BallTooLarge : Error {
    explicit BallTooLarge(const std::string& msg) : Error("Weyl ball too large: " + msg) {}
};

struct ResourceGuard : Error {
    explicit ResourceGuard(const std::string& msg) : Error("resource guard: " + msg) {}
};

} // namespace kmk
