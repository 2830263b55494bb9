#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "itop/document.hpp"

namespace itop {

/// The objects a statement quantifies over. An instance picks one value per axis.
enum class Axis {
    Topology,  // every topology on X
    Ideal,     // every ideal on X
    IdealB,    // a second ideal (serialised as `family I2`)
    SubsetA,   // `set A`
    SubsetB,   // `set B`
    FamilyJ,   // every family of subsets (`family J`)
    FamilyK,   // `family K`
    Codomain,  // a target space (Y, σ) with |Y| <= |X| and a map f: X -> Y (`map f -> Y`)
};

std::string_view to_string(Axis axis) noexcept;

enum class SearchMode { Exhaustive, Sampled };
enum class SearchStatus { Verified, Counterexample, Exhausted };

std::string_view to_string(SearchMode mode) noexcept;
std::string_view to_string(SearchStatus status) noexcept;
std::optional<SearchMode> parse_search_mode(std::string_view text) noexcept;

struct TheoremInfo {
    std::string id;
    std::string statement;
    std::vector<Axis> axes;
    /// False for statements with no finite instance; run_theorem refuses them.
    bool in_scope = true;
    std::string note;
};

struct PredicateInfo {
    std::string name;
    std::string description;
    std::vector<Axis> axes;
};

const std::vector<TheoremInfo>& theorem_catalogue();
const std::vector<PredicateInfo>& predicate_catalogue();

class UnknownTheorem : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class OutOfScope : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SearchOptions {
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t seed = 0;
    /// Draws per run when sampling (also the fallback when an exhaustive domain is too large).
    std::uint64_t samples = 20000;
    /// Worker threads; 0 means "read ITOP_WORKERS, default 1".
    unsigned workers = 0;
};

struct SearchOutcome {
    std::string id;
    SearchStatus status = SearchStatus::Exhausted;
    int bound = 0;
    /// The mode actually used; exhaustive runs over huge domains fall back to sampling.
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t seed = 0;
    /// Instances examined, counting up to and including a counterexample.
    std::uint64_t instances = 0;
    /// Size of the full instance domain (saturates at UINT64_MAX).
    std::uint64_t domain_size = 0;
    /// Which sub-claim failed, e.g. "(d) (A∪B)♯ = A♯ ∪ B♯".
    std::optional<std::string> failure;
    /// Counterexample as a space document (see document.hpp).
    std::optional<std::string> counterexample;
    std::chrono::nanoseconds elapsed{0};

    /// `id=T15 status=verified instances=1856 seed=0 mode=exhaustive bound=3`
    std::string summary_line() const;
    /// Everything except `elapsed` unless asked for.
    std::string to_json(bool include_timing = false) const;

    /// Equality ignores `elapsed`, so replayed runs compare equal.
    friend bool operator==(const SearchOutcome& a, const SearchOutcome& b);
};

/// Checks a registered statement on every instance over a ground set of exactly `bound` elements
/// (exhaustive: bound <= 4; sampled: bound <= 5).
/// Throws UnknownTheorem, OutOfScope, or CapExceeded.
SearchOutcome run_theorem(std::string_view id, int bound, const SearchOptions& options = {});

/// Looks for an instance where `antecedent` holds and `consequent` fails. The whole domain is
/// scanned when it has at most `budget` instances, otherwise `budget` instances are drawn with
/// `seed`. Returns Counterexample or Exhausted. Throws std::invalid_argument for unknown or
/// incompatible predicates and CapExceeded for bound > 5.
SearchOutcome falsify(std::string_view antecedent, std::string_view consequent, int bound,
                      std::uint64_t budget = 5'000'000, std::uint64_t seed = 0, unsigned workers = 0);

/// Re-checks a statement on the instance a document describes; returns the failed sub-claim or nullopt.
std::optional<std::string> replay_theorem(std::string_view id, const SpaceDocument& doc);
/// True when the document's instance satisfies `antecedent` and violates `consequent`.
bool replay_implication(std::string_view antecedent, std::string_view consequent, const SpaceDocument& doc);

/// Worker count from ITOP_WORKERS (default 1).
unsigned default_workers();

}  // namespace itop
