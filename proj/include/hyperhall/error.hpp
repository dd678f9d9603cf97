#ifndef HYPERHALL_ERROR_HPP
#define HYPERHALL_ERROR_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperhall
{

enum class ErrorKind
{
    // table shape / hypergroup axioms
    MalformedTable,
    EmptyProduct,
    AssocViolation,
    NoNeutral,
    NoInverse,
    // subset algebra
    ParentMismatch,
    EmptyInput,
    NotSubset,
    NotClosed,
    NotHomomorphism,
    Overflow,
    // schemes and groups
    NotPartition,
    IdentityViolation,
    StarViolation,
    RegularityViolation,
    NotAGroup,
    InvalidPrimeSet,
    // Hall engine
    NotSolvable,
    NotPiValenced,
    NotSolvableGroup,
    NotHall,
    NotClosedPiSubset,
    NoConjugatorFound,
    // files and catalogue
    SyntaxError,
    LabelGap,
    NotSquare,
    NetworkUnavailable,
    UnrecognizedCatalogueFormat,
    ChecksumMismatch,
    // an invariant guaranteed by a theorem failed: always a bug
    InternalInconsistency,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::EmptyProduct: return "EmptyProduct";
    case ErrorKind::AssocViolation: return "AssocViolation";
    case ErrorKind::NoNeutral: return "NoNeutral";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotSubset: return "NotSubset";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotPartition: return "NotPartition";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::StarViolation: return "StarViolation";
    case ErrorKind::RegularityViolation: return "RegularityViolation";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::InvalidPrimeSet: return "InvalidPrimeSet";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::NotPiValenced: return "NotPiValenced";
    case ErrorKind::NotSolvableGroup: return "NotSolvableGroup";
    case ErrorKind::NotHall: return "NotHall";
    case ErrorKind::NotClosedPiSubset: return "NotClosedPiSubset";
    case ErrorKind::NoConjugatorFound: return "NoConjugatorFound";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::LabelGap: return "LabelGap";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NetworkUnavailable: return "NetworkUnavailable";
    case ErrorKind::UnrecognizedCatalogueFormat: return "UnrecognizedCatalogueFormat";
    case ErrorKind::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

/// Every failure raised by the library. `witness()` carries the indices that
/// exhibit the failure (e.g. the triple (p,q,r) of an associativity violation),
/// in the order documented at the throw site.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, std::string message, std::vector<int> witness = {})
      : std::runtime_error(compose(kind, message)),
        kind_(kind),
        witness_(std::move(witness))
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<int> &witness() const noexcept { return witness_; }

private:
    static std::string compose(ErrorKind kind, const std::string &message)
    {
        std::ostringstream os;
        os << to_string(kind) << ": " << message;
        return os.str();
    }

    ErrorKind kind_;
    std::vector<int> witness_;
};

namespace detail
{

[[noreturn]] inline void internal_failure(const char *what, const char *file, int line)
{
    std::ostringstream os;
    os << what << " (" << file << ":" << line << ")";
    throw Error(ErrorKind::InternalInconsistency, os.str());
}

} // namespace detail

} // namespace hyperhall

// Checks a theorem-backed invariant. Enabled in debug builds and whenever
// HYPERHALL_CHECK_INVARIANTS is defined (the test suites define it).
#if !defined(NDEBUG) || defined(HYPERHALL_CHECK_INVARIANTS)
#define HYPERHALL_INVARIANT(cond, what)                                                            \
    do {                                                                                           \
        if (!(cond))                                                                               \
            ::hyperhall::detail::internal_failure(what, __FILE__, __LINE__);                       \
    } while (false)
#define HYPERHALL_INVARIANTS_ENABLED 1
#else
#define HYPERHALL_INVARIANT(cond, what)                                                            \
    do {                                                                                           \
    } while (false)
#define HYPERHALL_INVARIANTS_ENABLED 0
#endif

// Always-on variant for checks the engine reports on in release builds too.
#define HYPERHALL_REQUIRE(cond, what)                                                              \
    do {                                                                                           \
        if (!(cond))                                                                               \
            ::hyperhall::detail::internal_failure(what, __FILE__, __LINE__);                       \
    } while (false)

#endif // HYPERHALL_ERROR_HPP
