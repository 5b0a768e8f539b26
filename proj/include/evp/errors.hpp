#ifndef EVP_ERRORS_HPP
#define EVP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace evp {

// Error taxonomy. The CLI maps these onto its exit-code contract:
//   ValidationError -> 2, NumericalError -> 3, IoError -> 4.
enum class NumericalErrorKind {
    BranchDegenerate,
    NonFiniteResult,
    PoleProximity,
    DivergentCompensator,
    QuadratureNotConverged,
    NegativePrice,
};

inline const char* to_string(NumericalErrorKind k) {
    switch (k) {
        case NumericalErrorKind::BranchDegenerate: return "BranchDegenerate";
        case NumericalErrorKind::NonFiniteResult: return "NonFiniteResult";
        case NumericalErrorKind::PoleProximity: return "PoleProximity";
        case NumericalErrorKind::DivergentCompensator: return "DivergentCompensator";
        case NumericalErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
        case NumericalErrorKind::NegativePrice: return "NegativePrice";
    }
    return "UnknownNumericalError";
}

// One entry per violated invariant; `code` is a stable machine-readable name
// (e.g. "KouEtaPlusOutOfRange"), `message` names the offending field and value.
struct ValidationIssue {
    std::string code;
    std::string message;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<ValidationIssue> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

private:
    static std::string join(const std::vector<ValidationIssue>& issues) {
        std::string out = "validation failed:";
        for (const auto& i : issues) out += " [" + i.code + "] " + i.message + ";";
        return out;
    }
    std::vector<ValidationIssue> issues_;
};

class NumericalError : public std::runtime_error {
public:
    NumericalError(NumericalErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    NumericalErrorKind kind() const noexcept { return kind_; }

private:
    NumericalErrorKind kind_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace evp

#endif
