#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

// Base for all engine errors. `code()` is stable and machine-readable;
// the CLI prints it on the diagnostic stream.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string& what = "values live in different ambients")
        : Error("AmbientMismatch", what) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what = "operand sizes differ")
        : Error("SizeMismatch", what) {}
};

struct RankMismatch : Error {
    explicit RankMismatch(const std::string& what = "wrong rank for this detector")
        : Error("RankMismatch", what) {}
    RankMismatch(int got, int want)
        : Error("RankMismatch", "rank " + std::to_string(got) + " where " +
                                    std::to_string(want) + " is required") {}
};

// M is not i-finite: no m <= m_max satisfies the Cartan-entry condition.
struct NotIFinite : Error {
    NotIFinite(int i_, int j_)
        : Error("NotIFinite",
                "no Cartan entry within bound at (" + std::to_string(i_ + 1) + "," +
                    std::to_string(j_ + 1) + ")"),
          i(i_), j(j_) {}
    int i;
    int j;
};

// No reflection-lemma case applies, or two applicable cases disagree.
// Unreachable for i-finite diagrams; kept as a loud tripwire.
struct CaseGap : Error {
    explicit CaseGap(const std::string& what) : Error("CaseGap", what) {}
};

struct InvalidCartan : Error {
    explicit InvalidCartan(const std::string& what) : Error("InvalidCartan", what) {}
};

struct PointBudgetExceeded : Error {
    explicit PointBudgetExceeded(int budget)
        : Error("PointBudgetExceeded",
                "reflection closure exceeds " + std::to_string(budget) + " points") {}
};

// Signals an infinite root system (Weyl-groupoid closure does not stabilize).
struct RootBudgetExceeded : Error {
    explicit RootBudgetExceeded(int budget)
        : Error("RootBudgetExceeded",
                "root closure exceeds " + std::to_string(budget) + " roots per point") {}
};

struct AdmitsAllReflectionsFailure : Error {
    AdmitsAllReflectionsFailure(int point_, int i_)
        : Error("AdmitsAllReflectionsFailure",
                "point " + std::to_string(point_) + " is not " + std::to_string(i_ + 1) +
                    "-finite; the seed does not admit all reflections"),
          point(point_), i(i_) {}
    int point;
    int i;
};

struct BadParameter : Error {
    explicit BadParameter(const std::string& what) : Error("BadParameter", what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

} // namespace nichols
