#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcso {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unknown state/event identifier, or an argument outside its declared domain.
// Never used for an undefined transition, which is a normal "absent" result.
class DomainError : public Error {
public:
    using Error::Error;
};

enum class ViolationKind {
    BadName,
    DuplicateState,
    DuplicateEvent,
    UnknownState,
    UnknownEvent,
    ObservableNotInAlphabet,
    Nondeterministic,
    MissingTransition,
    AlphabetMismatch,
    MemberNotInSystem,
    MissingMembers,
    DuplicateMembers,
};

inline const char* to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::BadName: return "bad-name";
    case ViolationKind::DuplicateState: return "duplicate-state";
    case ViolationKind::DuplicateEvent: return "duplicate-event";
    case ViolationKind::UnknownState: return "unknown-state";
    case ViolationKind::UnknownEvent: return "unknown-event";
    case ViolationKind::ObservableNotInAlphabet: return "observable-not-in-alphabet";
    case ViolationKind::Nondeterministic: return "nondeterministic";
    case ViolationKind::MissingTransition: return "missing-transition";
    case ViolationKind::AlphabetMismatch: return "alphabet-mismatch";
    case ViolationKind::MemberNotInSystem: return "member-not-in-system";
    case ViolationKind::MissingMembers: return "missing-members";
    case ViolationKind::DuplicateMembers: return "duplicate-members";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    bool contains(ViolationKind kind) const
    {
        for (const auto& v : violations)
            if (v.kind == kind)
                return true;
        return false;
    }

    void add(ViolationKind kind, std::string message)
    {
        violations.push_back({kind, std::move(message)});
    }

    std::string summary() const
    {
        std::string out;
        for (const auto& v : violations) {
            if (!out.empty())
                out += '\n';
            out += to_string(v.kind);
            out += ": ";
            out += v.message;
        }
        return out;
    }
};

class ValidationError : public Error {
public:
    explicit ValidationError(ValidationReport report)
        : Error(report.summary()), report_(std::move(report))
    {
    }

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

// A secret model with no successor for some (state, event) pair.
class CompletenessError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ResourceLimitError : public Error {
public:
    ResourceLimitError(std::size_t nodes_built, std::size_t limit)
        : Error("node limit of " + std::to_string(limit) + " exceeded after building "
                + std::to_string(nodes_built) + " nodes"),
          nodes_built_(nodes_built), limit_(limit)
    {
    }

    std::size_t nodes_built() const noexcept { return nodes_built_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t nodes_built_;
    std::size_t limit_;
};

} // namespace gcso
