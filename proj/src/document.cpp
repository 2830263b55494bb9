#include "itop/document.hpp"

#include <algorithm>
#include <set>

namespace itop {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }
bool is_special(char c) { return c == '{' || c == '}' || c == ':' || c == '#'; }

Diagnostic diag(Position p, std::string code, std::string message) {
    return Diagnostic{p, std::move(code), std::move(message)};
}

Position end_of(const std::vector<Token>& tokens, Position fallback) {
    if (tokens.empty()) return fallback;
    const auto& t = tokens.back();
    return Position{t.where.line, t.where.column + static_cast<int>(t.text.size())};
}

std::string describe_token(const Token& t) {
    switch (t.kind) {
        case TokenKind::Word: return "'" + t.text + "'";
        case TokenKind::LBrace: return "'{'";
        case TokenKind::RBrace: return "'}'";
        case TokenKind::Colon: return "':'";
        case TokenKind::Arrow: return "'->'";
    }
    return "token";
}

bool is_word(const std::vector<Token>& tokens, std::size_t pos, std::string_view text = {}) {
    return pos < tokens.size() && tokens[pos].kind == TokenKind::Word && (text.empty() || tokens[pos].text == text);
}

bool is_kind(const std::vector<Token>& tokens, std::size_t pos, TokenKind kind) {
    return pos < tokens.size() && tokens[pos].kind == kind;
}

struct Line {
    int number;
    std::vector<Token> tokens;
};

// Declarations gathered before resolution, so sections may appear in any order.
struct Pending {
    std::optional<GroundSet> ground;
    const Line* elements_line = nullptr;
    const Line* topology_line = nullptr;
    const Line* ideal_line = nullptr;
    std::vector<const Line*> bindings;  // set, family, space topology, map
    struct SpaceHead {
        std::string name;
        const Line* elements_line = nullptr;
        const Line* topology_line = nullptr;
        std::optional<GroundSet> ground;
    };
    std::vector<SpaceHead> spaces;

    SpaceHead* space(std::string_view name) {
        auto it = std::find_if(spaces.begin(), spaces.end(), [&](const SpaceHead& s) { return s.name == name; });
        return it == spaces.end() ? nullptr : &*it;
    }
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParseResult run();

private:
    void split_lines();
    void classify(const Line& line);
    std::optional<GroundSet> read_elements(const Line& line, std::size_t pos);
    std::optional<DeclaredTopology> read_topology(const GroundSet& ground, const Line& line, std::size_t pos,
                                                  const char* what);
    void resolve_binding(const Line& line, SpaceDocument& doc);
    bool expect(const Line& line, std::size_t pos, TokenKind kind, const char* what);
    bool expect_end(const Line& line, std::size_t pos);
    bool claim_name(const Token& t);

    std::string_view text_;
    std::vector<Line> lines_;
    std::vector<Diagnostic> diags_;
    Pending pending_;
    std::set<std::string> names_;
};

void Parser::split_lines() {
    int number = 1;
    std::size_t start = 0;
    while (start <= text_.size()) {
        auto nl = text_.find('\n', start);
        if (nl == std::string_view::npos) nl = text_.size();
        auto tokens = tokenize_line(text_.substr(start, nl - start), number);
        if (!tokens.empty()) lines_.push_back(Line{number, std::move(tokens)});
        start = nl + 1;
        ++number;
    }
}

bool Parser::expect(const Line& line, std::size_t pos, TokenKind kind, const char* what) {
    if (is_kind(line.tokens, pos, kind)) return true;
    if (pos < line.tokens.size())
        diags_.push_back(diag(line.tokens[pos].where, "Syntax",
                              std::string("expected ") + what + ", found " + describe_token(line.tokens[pos])));
    else
        diags_.push_back(diag(end_of(line.tokens, {line.number, 1}), "Syntax",
                              std::string("expected ") + what + " before end of line"));
    return false;
}

bool Parser::expect_end(const Line& line, std::size_t pos) {
    if (pos >= line.tokens.size()) return true;
    diags_.push_back(diag(line.tokens[pos].where, "Syntax", "unexpected " + describe_token(line.tokens[pos])));
    return false;
}

bool Parser::claim_name(const Token& t) {
    if (t.text == kSelfSpace) {
        diags_.push_back(diag(t.where, "ReservedName", "'self' is reserved"));
        return false;
    }
    if (!names_.insert(t.text).second) {
        diags_.push_back(diag(t.where, "DuplicateName", "name '" + t.text + "' is already bound"));
        return false;
    }
    return true;
}

void Parser::classify(const Line& line) {
    const auto& tk = line.tokens;
    const Token& head = tk.front();
    if (head.kind != TokenKind::Word) {
        diags_.push_back(diag(head.where, "Syntax", "expected a declaration keyword, found " + describe_token(head)));
        return;
    }
    auto once = [&](const Line*& slot) {
        if (slot) {
            diags_.push_back(diag(head.where, "DuplicateSection",
                                  "'" + head.text + "' already declared on line " + std::to_string(slot->number)));
            return;
        }
        slot = &line;
    };
    if (head.text == "elements") {
        once(pending_.elements_line);
    } else if (head.text == "topology") {
        once(pending_.topology_line);
    } else if (head.text == "ideal") {
        once(pending_.ideal_line);
    } else if (head.text == "set" || head.text == "family" || head.text == "map") {
        pending_.bindings.push_back(&line);
    } else if (head.text == "space") {
        if (!is_word(tk, 1)) {
            expect(line, 1, TokenKind::Word, "a space name");
            return;
        }
        if (!is_word(tk, 2, "elements") && !is_word(tk, 2, "topology")) {
            if (tk.size() > 2)
                diags_.push_back(diag(tk[2].where, "Syntax", "expected 'elements' or 'topology' after the space name"));
            else
                diags_.push_back(diag(end_of(tk, {line.number, 1}), "Syntax", "expected 'elements' or 'topology'"));
            return;
        }
        auto* s = pending_.space(tk[1].text);
        if (!s) {
            pending_.spaces.push_back(Pending::SpaceHead{tk[1].text, nullptr, nullptr, std::nullopt});
            s = &pending_.spaces.back();
        }
        const Line*& slot = tk[2].text == "elements" ? s->elements_line : s->topology_line;
        if (slot) {
            diags_.push_back(diag(tk[2].where, "DuplicateSection",
                                  "space '" + tk[1].text + "' " + tk[2].text + " already declared on line " +
                                      std::to_string(slot->number)));
            return;
        }
        slot = &line;
    } else {
        diags_.push_back(diag(head.where, "Syntax", "unknown declaration '" + head.text + "'"));
    }
}

std::optional<GroundSet> Parser::read_elements(const Line& line, std::size_t pos) {
    if (!expect(line, pos, TokenKind::Colon, "':'")) return std::nullopt;
    ++pos;
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (; pos < line.tokens.size(); ++pos) {
        const auto& t = line.tokens[pos];
        if (t.kind != TokenKind::Word) {
            diags_.push_back(diag(t.where, "Syntax", "expected an element label, found " + describe_token(t)));
            return std::nullopt;
        }
        if (!seen.insert(t.text).second) {
            diags_.push_back(diag(t.where, "DuplicateElement", "element '" + t.text + "' listed twice"));
            return std::nullopt;
        }
        names.push_back(t.text);
    }
    if (names.empty()) {
        diags_.push_back(diag(line.tokens.front().where, "EmptyGround", "the ground set must have at least one element"));
        return std::nullopt;
    }
    if (names.size() > static_cast<std::size_t>(kMaxGroundSize)) {
        diags_.push_back(diag(line.tokens.front().where, "TooManyElements",
                              std::to_string(names.size()) + " elements; at most " + std::to_string(kMaxGroundSize) +
                                  " are supported"));
        return std::nullopt;
    }
    return GroundSet(std::move(names));
}

std::optional<DeclaredTopology> Parser::read_topology(const GroundSet& ground, const Line& line, std::size_t pos,
                                                      const char* what) {
    TopologyForm form = TopologyForm::Explicit;
    if (is_word(line.tokens, pos, "basis")) {
        form = TopologyForm::Basis;
        ++pos;
    }
    if (!expect(line, pos, TokenKind::Colon, "':'")) return std::nullopt;
    ++pos;
    auto fam = read_family(ground, line.tokens, pos);
    if (fam.error) {
        diags_.push_back(*fam.error);
        return std::nullopt;
    }
    if (form == TopologyForm::Basis) return DeclaredTopology{form, *fam.value, generate_topology(*fam.value)};
    if (auto v = find_topology_violation(*fam.value)) {
        diags_.push_back(diag(line.tokens.front().where, "AxiomViolation",
                              std::string(what) + " is not a topology: " + v->describe(ground)));
        return std::nullopt;
    }
    return DeclaredTopology{form, *fam.value, Topology(*fam.value)};
}

void Parser::resolve_binding(const Line& line, SpaceDocument& doc) {
    const auto& tk = line.tokens;
    const std::string& kind = tk.front().text;
    if (!expect(line, 1, TokenKind::Word, "a name")) return;
    const Token& name = tk[1];

    if (kind == "set") {
        if (!expect(line, 2, TokenKind::Colon, "':'")) return;
        std::size_t pos = 3;
        auto s = read_set(doc.ground(), tk, pos);
        if (s.error) {
            diags_.push_back(*s.error);
            return;
        }
        if (!expect_end(line, pos) || !claim_name(name)) return;
        doc.sets.push_back(NamedSet{name.text, *s.value});
    } else if (kind == "family") {
        if (!expect(line, 2, TokenKind::Colon, "':'")) return;
        std::size_t pos = 3;
        auto f = read_family(doc.ground(), tk, pos);
        if (f.error) {
            diags_.push_back(*f.error);
            return;
        }
        if (!claim_name(name)) return;
        doc.families.push_back(NamedFamily{name.text, *f.value});
    } else if (kind == "map") {
        if (!expect(line, 2, TokenKind::Arrow, "'->'") || !expect(line, 3, TokenKind::Word, "a codomain name") ||
            !expect(line, 4, TokenKind::Colon, "':'"))
            return;
        const Token& target = tk[3];
        const GroundSet* codomain = nullptr;
        if (target.text == kSelfSpace) {
            codomain = &doc.ground();
        } else if (const auto* sp = doc.find_space(target.text)) {
            codomain = &sp->ground;
        } else {
            diags_.push_back(diag(target.where, "UnknownSpace", "no space named '" + target.text + "'"));
            return;
        }
        std::vector<int> image(static_cast<std::size_t>(doc.ground().size()), -1);
        std::size_t pos = 5;
        while (pos < tk.size()) {
            if (!expect(line, pos, TokenKind::Word, "a domain label") ||
                !expect(line, pos + 1, TokenKind::Colon, "':'") ||
                !expect(line, pos + 2, TokenKind::Word, "a codomain label"))
                return;
            auto x = doc.ground().index_of(tk[pos].text);
            if (!x) {
                diags_.push_back(diag(tk[pos].where, "UnknownLabel", "'" + tk[pos].text + "' is not an element"));
                return;
            }
            auto y = codomain->index_of(tk[pos + 2].text);
            if (!y) {
                diags_.push_back(diag(tk[pos + 2].where, "UnknownLabel",
                                      "'" + tk[pos + 2].text + "' is not an element of '" + target.text + "'"));
                return;
            }
            auto& slot = image[static_cast<std::size_t>(*x)];
            if (slot != -1) {
                diags_.push_back(diag(tk[pos].where, "DuplicateMapping", "'" + tk[pos].text + "' is mapped twice"));
                return;
            }
            slot = *y;
            pos += 3;
        }
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (image[i] == -1) {
                diags_.push_back(diag(name.where, "MapIncomplete",
                                      "map '" + name.text + "' leaves '" + doc.ground().name(static_cast<int>(i)) +
                                          "' unmapped"));
                return;
            }
        }
        if (!claim_name(name)) return;
        doc.maps.push_back(NamedMap{name.text, target.text, FiniteMap(codomain->size(), std::move(image))});
    }
}

ParseResult Parser::run() {
    split_lines();
    for (const auto& line : lines_) classify(line);

    const Position top{1, 1};
    if (!pending_.elements_line) diags_.push_back(diag(top, "MissingSection", "no 'elements' declaration"));
    if (!pending_.topology_line) diags_.push_back(diag(top, "MissingSection", "no 'topology' declaration"));
    if (!pending_.ideal_line) diags_.push_back(diag(top, "MissingSection", "no 'ideal' declaration"));
    if (!diags_.empty()) return ParseResult{std::nullopt, std::move(diags_)};

    auto ground = read_elements(*pending_.elements_line, 1);
    if (!ground) return ParseResult{std::nullopt, std::move(diags_)};

    auto topology = read_topology(*ground, *pending_.topology_line, 1, "topology");

    std::optional<Ideal> ideal;
    IdealForm ideal_form = IdealForm::Explicit;
    {
        const Line& line = *pending_.ideal_line;
        std::size_t pos = 1;
        if (is_word(line.tokens, pos, "generated")) {
            ideal_form = IdealForm::Generated;
            ++pos;
        }
        if (expect(line, pos, TokenKind::Colon, "':'")) {
            ++pos;
            if (ideal_form == IdealForm::Generated) {
                auto s = read_set(*ground, line.tokens, pos);
                if (s.error)
                    diags_.push_back(*s.error);
                else if (expect_end(line, pos))
                    ideal = ideal_generated(ground->size(), *s.value);
            } else {
                auto f = read_family(*ground, line.tokens, pos);
                if (f.error)
                    diags_.push_back(*f.error);
                else if (auto v = find_ideal_violation(*f.value))
                    diags_.push_back(diag(line.tokens.front().where, "AxiomViolation",
                                          "ideal is not an ideal: " + v->describe(*ground)));
                else
                    ideal = Ideal(*f.value);
            }
        }
    }
    if (!topology || !ideal) return ParseResult{std::nullopt, std::move(diags_)};

    SpaceDocument doc(*ground, std::move(*topology), ideal_form, std::move(*ideal));

    for (auto& sp : pending_.spaces) {
        const Token& name = (sp.elements_line ? sp.elements_line : sp.topology_line)->tokens[1];
        if (!sp.elements_line || !sp.topology_line) {
            diags_.push_back(diag(name.where, "MissingSection",
                                  "space '" + sp.name + "' needs both 'elements' and 'topology'"));
            continue;
        }
        auto g = read_elements(*sp.elements_line, 3);
        if (!g) continue;
        auto t = read_topology(*g, *sp.topology_line, 3, ("space '" + sp.name + "' topology").c_str());
        if (!t || !claim_name(name)) continue;
        doc.spaces.push_back(CodomainSpace{sp.name, std::move(*g), std::move(*t)});
    }

    for (const Line* line : pending_.bindings) resolve_binding(*line, doc);

    if (!diags_.empty()) return ParseResult{std::nullopt, std::move(diags_)};
    return ParseResult{std::move(doc), {}};
}

std::string declared_topology_line(const std::string& prefix, const GroundSet& g, const DeclaredTopology& t) {
    std::string out = prefix + (t.form == TopologyForm::Basis ? " basis:" : ":");
    if (!t.given.empty()) out += " " + format_family(g, t.given);
    return out + "\n";
}

}  // namespace

std::string Diagnostic::format() const {
    return std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + code + ": " + message;
}

std::vector<Token> tokenize_line(std::string_view line, int line_number) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        const Position p{line_number, static_cast<int>(i) + 1};
        if (is_blank(c)) {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '{') {
            out.push_back(Token{TokenKind::LBrace, "{", p});
            ++i;
        } else if (c == '}') {
            out.push_back(Token{TokenKind::RBrace, "}", p});
            ++i;
        } else if (c == ':') {
            out.push_back(Token{TokenKind::Colon, ":", p});
            ++i;
        } else {
            std::size_t j = i;
            while (j < line.size() && !is_blank(line[j]) && !is_special(line[j])) ++j;
            std::string word(line.substr(i, j - i));
            out.push_back(Token{word == "->" ? TokenKind::Arrow : TokenKind::Word, std::move(word), p});
            i = j;
        }
    }
    return out;
}

SetParse read_set(const GroundSet& ground, const std::vector<Token>& tokens, std::size_t& pos) {
    if (!is_kind(tokens, pos, TokenKind::LBrace)) {
        if (pos < tokens.size())
            return {std::nullopt, diag(tokens[pos].where, "Syntax", "expected '{', found " + describe_token(tokens[pos]))};
        return {std::nullopt, diag(end_of(tokens, {0, 0}), "Syntax", "expected a set before end of line")};
    }
    ++pos;
    Subset s;
    while (pos < tokens.size() && tokens[pos].kind == TokenKind::Word) {
        auto idx = ground.index_of(tokens[pos].text);
        if (!idx)
            return {std::nullopt, diag(tokens[pos].where, "UnknownLabel", "'" + tokens[pos].text + "' is not an element")};
        s = s.with(*idx);
        ++pos;
    }
    if (!is_kind(tokens, pos, TokenKind::RBrace)) {
        if (pos < tokens.size())
            return {std::nullopt, diag(tokens[pos].where, "Syntax", "expected '}', found " + describe_token(tokens[pos]))};
        return {std::nullopt, diag(end_of(tokens, {0, 0}), "Syntax", "unterminated set")};
    }
    ++pos;
    return {s, std::nullopt};
}

FamilyParse read_family(const GroundSet& ground, const std::vector<Token>& tokens, std::size_t& pos) {
    std::vector<Subset> members;
    while (pos < tokens.size()) {
        auto s = read_set(ground, tokens, pos);
        if (s.error) return {std::nullopt, s.error};
        members.push_back(*s.value);
    }
    return {SetFamily(ground.size(), std::move(members)), std::nullopt};
}

SpaceDocument::SpaceDocument(GroundSet ground, DeclaredTopology topology, IdealForm ideal_form, Ideal ideal)
    : ground_(std::move(ground)), topology_(std::move(topology)), ideal_form_(ideal_form), ideal_(std::move(ideal)) {
    if (topology_.resolved.width() != ground_.size() || ideal_.width() != ground_.size())
        throw std::invalid_argument("document parts are over different ground sets");
}

const NamedSet* SpaceDocument::find_set(std::string_view name) const {
    auto it = std::find_if(sets.begin(), sets.end(), [&](const auto& s) { return s.name == name; });
    return it == sets.end() ? nullptr : &*it;
}

const NamedFamily* SpaceDocument::find_family(std::string_view name) const {
    auto it = std::find_if(families.begin(), families.end(), [&](const auto& s) { return s.name == name; });
    return it == families.end() ? nullptr : &*it;
}

const CodomainSpace* SpaceDocument::find_space(std::string_view name) const {
    auto it = std::find_if(spaces.begin(), spaces.end(), [&](const auto& s) { return s.name == name; });
    return it == spaces.end() ? nullptr : &*it;
}

const NamedMap* SpaceDocument::find_map(std::string_view name) const {
    auto it = std::find_if(maps.begin(), maps.end(), [&](const auto& s) { return s.name == name; });
    return it == maps.end() ? nullptr : &*it;
}

const GroundSet& SpaceDocument::codomain_ground(const NamedMap& m) const {
    if (m.codomain == kSelfSpace) return ground_;
    if (const auto* sp = find_space(m.codomain)) return sp->ground;
    throw std::out_of_range("unknown codomain '" + m.codomain + "'");
}

const Topology& SpaceDocument::codomain_topology(const NamedMap& m) const {
    if (m.codomain == kSelfSpace) return topology_.resolved;
    if (const auto* sp = find_space(m.codomain)) return sp->topology.resolved;
    throw std::out_of_range("unknown codomain '" + m.codomain + "'");
}

ParseResult parse_space(std::string_view text) { return Parser(text).run(); }

std::string print_space(const SpaceDocument& doc) {
    const auto& g = doc.ground();
    std::string out = "elements:";
    for (const auto& n : g.names()) out += " " + n;
    out += "\n";
    out += declared_topology_line("topology", g, doc.topology());
    if (doc.ideal_form() == IdealForm::Generated)
        out += "ideal generated: " + g.format(doc.ideal().generator()) + "\n";
    else
        out += "ideal: " + format_family(g, doc.ideal().family()) + "\n";
    for (const auto& s : doc.sets) out += "set " + s.name + ": " + g.format(s.value) + "\n";
    for (const auto& f : doc.families) {
        out += "family " + f.name + ":";
        if (!f.value.empty()) out += " " + format_family(g, f.value);
        out += "\n";
    }
    for (const auto& sp : doc.spaces) {
        out += "space " + sp.name + " elements:";
        for (const auto& n : sp.ground.names()) out += " " + n;
        out += "\n";
        out += declared_topology_line("space " + sp.name + " topology", sp.ground, sp.topology);
    }
    for (const auto& m : doc.maps) {
        const auto& cg = doc.codomain_ground(m);
        out += "map " + m.name + " -> " + m.codomain + ":";
        for (int x = 0; x < m.map.domain_size(); ++x) out += " " + g.name(x) + ":" + cg.name(m.map(x));
        out += "\n";
    }
    return out;
}

}  // namespace itop
