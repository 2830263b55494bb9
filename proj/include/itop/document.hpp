#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itop/continuity.hpp"

namespace itop {

// Text format for ideal spaces. One declaration per line, `#` starts a comment,
// sets are written `{a c}` and `{}` is the empty set:
//
//   elements: a b c
//   topology: {} {a c} {a b c}        # or: topology basis: {a c}
//   ideal: {} {a} {b} {a b}           # or: ideal generated: {a b}
//   set Q: {a c}
//   family J: {a} {a c}
//   space Y elements: 0 1
//   space Y topology: {} {0} {0 1}    # or: space Y topology basis: {0}
//   map f -> Y: a:0 b:0 c:1           # `-> self` maps into the main space
//
// Printing is canonical: families ascending by mask, labels in declaration order,
// bindings in declaration order.

struct Position {
    int line = 0;
    int column = 0;
    friend bool operator==(const Position&, const Position&) = default;
};

struct Diagnostic {
    Position where;
    std::string code;
    std::string message;

    /// "line:col: code: message"
    std::string format() const;
};

enum class TopologyForm { Explicit, Basis };
enum class IdealForm { Explicit, Generated };

struct DeclaredTopology {
    TopologyForm form;
    /// The explicit family, or the basis it was generated from.
    SetFamily given;
    Topology resolved;
    friend bool operator==(const DeclaredTopology&, const DeclaredTopology&) = default;
};

struct NamedSet {
    std::string name;
    Subset value;
    friend bool operator==(const NamedSet&, const NamedSet&) = default;
};

struct NamedFamily {
    std::string name;
    SetFamily value;
    friend bool operator==(const NamedFamily&, const NamedFamily&) = default;
};

struct CodomainSpace {
    std::string name;
    GroundSet ground;
    DeclaredTopology topology;
    friend bool operator==(const CodomainSpace&, const CodomainSpace&) = default;
};

inline constexpr std::string_view kSelfSpace = "self";

struct NamedMap {
    std::string name;
    /// A declared space name or kSelfSpace.
    std::string codomain;
    FiniteMap map;
    friend bool operator==(const NamedMap&, const NamedMap&) = default;
};

class SpaceDocument {
public:
    SpaceDocument(GroundSet ground, DeclaredTopology topology, IdealForm ideal_form, Ideal ideal);

    const GroundSet& ground() const noexcept { return ground_; }
    const DeclaredTopology& topology() const noexcept { return topology_; }
    IdealForm ideal_form() const noexcept { return ideal_form_; }
    const Ideal& ideal() const noexcept { return ideal_; }
    IdealSpace space() const { return IdealSpace(topology_.resolved, ideal_); }

    std::vector<NamedSet> sets;
    std::vector<NamedFamily> families;
    std::vector<CodomainSpace> spaces;
    std::vector<NamedMap> maps;

    const NamedSet* find_set(std::string_view name) const;
    const NamedFamily* find_family(std::string_view name) const;
    const CodomainSpace* find_space(std::string_view name) const;
    const NamedMap* find_map(std::string_view name) const;
    /// Ground set and topology a map lands in.
    const GroundSet& codomain_ground(const NamedMap& m) const;
    const Topology& codomain_topology(const NamedMap& m) const;

    friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;

private:
    GroundSet ground_;
    DeclaredTopology topology_;
    IdealForm ideal_form_;
    Ideal ideal_;
};

struct ParseResult {
    std::optional<SpaceDocument> document;
    std::vector<Diagnostic> diagnostics;
    bool ok() const noexcept { return document.has_value(); }
};

/// Never throws on malformed input; problems come back as diagnostics.
ParseResult parse_space(std::string_view text);

/// Canonical text; parse_space(print_space(d)) reproduces d.
std::string print_space(const SpaceDocument& doc);

// Lexer shared with the command-line expression syntax.

enum class TokenKind { Word, LBrace, RBrace, Colon, Arrow };

struct Token {
    TokenKind kind;
    std::string text;
    Position where;
};

/// Tokenises one line (comments already stripped or not; `#` ends the line).
std::vector<Token> tokenize_line(std::string_view line, int line_number);

/// Result of reading a `{...}` set or a run of sets starting at `pos`.
struct SetParse {
    std::optional<Subset> value;
    std::optional<Diagnostic> error;
};
struct FamilyParse {
    std::optional<SetFamily> value;
    std::optional<Diagnostic> error;
};

SetParse read_set(const GroundSet& ground, const std::vector<Token>& tokens, std::size_t& pos);
/// Reads sets until the end of the token list.
FamilyParse read_family(const GroundSet& ground, const std::vector<Token>& tokens, std::size_t& pos);

}  // namespace itop
