#pragma once

#include <stdexcept>
#include <string>

namespace postnikov {

// All library failures carry a stable machine-readable kind. The CLI prints
// the kind on stderr and maps it onto its exit-code contract.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct BoundsViolation : Error {
    explicit BoundsViolation(const std::string& w) : Error("BoundsViolation", w) {}
};
struct NotBijective : Error {
    explicit NotBijective(const std::string& w) : Error("NotBijective", w) {}
};
struct NonIntegralK : Error {
    explicit NonIntegralK(const std::string& w) : Error("NonIntegralK", w) {}
};
struct NotALollipop : Error {
    explicit NotALollipop(const std::string& w) : Error("NotALollipop", w) {}
};
struct BoundExceeded : Error {
    explicit BoundExceeded(const std::string& w) : Error("BoundExceeded", w) {}
};
struct FrozenVertex : Error {
    explicit FrozenVertex(const std::string& w) : Error("FrozenVertex", w) {}
};
struct AlreadyFrozen : Error {
    explicit AlreadyFrozen(const std::string& w) : Error("AlreadyFrozen", w) {}
};
struct NoSuchVertex : Error {
    explicit NoSuchVertex(const std::string& w) : Error("NoSuchVertex", w) {}
};
struct NoSuchArrow : Error {
    explicit NoSuchArrow(const std::string& w) : Error("NoSuchArrow", w) {}
};
struct MalformedRotationSystem : Error {
    explicit MalformedRotationSystem(const std::string& w) : Error("MalformedRotationSystem", w) {}
};
struct InconsistentLift : Error {
    explicit InconsistentLift(const std::string& w) : Error("InconsistentLift", w) {}
};
struct NotSquareMovable : Error {
    explicit NotSquareMovable(const std::string& w) : Error("NotSquareMovable", w) {}
};
struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& w) : Error("HypothesisViolated", w) {}
};
struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& w) : Error("LimitExceeded", w) {}
};
struct InexactDivision : Error {
    explicit InexactDivision(const std::string& w) : Error("InexactDivision", w) {}
};
struct BadInput : Error {
    explicit BadInput(const std::string& w) : Error("BadInput", w) {}
};

// Internal consistency failure: indicates a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error("InternalError", w) {}
};

#define POSTNIKOV_CHECK(cond, msg) \
    do { if (!(cond)) throw ::postnikov::InternalError(msg); } while (0)

}  // namespace postnikov
