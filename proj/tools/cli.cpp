#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "itop/theorems.hpp"

namespace itop::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SpaceDocument load(const std::string& path, std::ostream& err) {
    auto result = parse_space(read_text(path));
    for (const auto& d : result.diagnostics) err << path << ":" << d.format() << "\n";
    if (!result.ok()) throw UsageError(path + ": not a valid space document");
    return std::move(*result.document);
}

std::string join(const std::vector<std::string>& words) {
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

[[noreturn]] void expression_error(const Diagnostic& d) { throw UsageError("expression:" + d.format()); }

[[noreturn]] void expression_error(Position where, const std::string& code, const std::string& message) {
    expression_error(Diagnostic{where, code, message});
}

Position end_position(const std::vector<Token>& tokens) {
    const auto& last = tokens.back();
    return {1, last.where.column + static_cast<int>(last.text.size())};
}

/// The operand after the operator: a named set or a `{...}` literal.
Subset set_operand(const SpaceDocument& doc, const std::vector<Token>& tokens) {
    if (tokens.size() < 2) expression_error(end_position(tokens), "Syntax", "expected a set name or literal");
    std::size_t pos = 1;
    Subset value;
    if (tokens[1].kind == TokenKind::Word) {
        const auto* s = doc.find_set(tokens[1].text);
        if (!s) expression_error(tokens[1].where, "UnknownName", "no set named '" + tokens[1].text + "'");
        value = s->value;
        pos = 2;
    } else {
        auto parsed = read_set(doc.ground(), tokens, pos);
        if (parsed.error) expression_error(*parsed.error);
        value = *parsed.value;
    }
    if (pos < tokens.size()) expression_error(tokens[pos].where, "Syntax", "unexpected '" + tokens[pos].text + "'");
    return value;
}

/// A named family or a run of `{...}` literals.
SetFamily family_operand(const SpaceDocument& doc, const std::vector<Token>& tokens) {
    if (tokens.size() < 2) expression_error(end_position(tokens), "Syntax", "expected a family name or literal sets");
    if (tokens[1].kind == TokenKind::Word) {
        const auto* f = doc.find_family(tokens[1].text);
        if (!f) expression_error(tokens[1].where, "UnknownName", "no family named '" + tokens[1].text + "'");
        if (tokens.size() > 2) expression_error(tokens[2].where, "Syntax", "unexpected '" + tokens[2].text + "'");
        return f->value;
    }
    std::size_t pos = 1;
    auto parsed = read_family(doc.ground(), tokens, pos);
    if (parsed.error) expression_error(*parsed.error);
    return *parsed.value;
}

void no_operand(const std::vector<Token>& tokens) {
    if (tokens.size() > 1) expression_error(tokens[1].where, "Syntax", "'" + tokens[0].text + "' takes no operand");
}

void print_classification(const SpaceDocument& doc, std::ostream& out) {
    const auto& g = doc.ground();
    const IdealSpace space = doc.space();
    const Ideal& ideal = space.ideal();
    const bool full = ideal.generator() == Subset::full(g.size());
    const bool trivial = ideal.generator().empty();

    out << is_proper(ideal).describe(g) << "\n";
    if (!full) {
        out << is_maximal_ideal(ideal).describe(g) << "\n";
        if (!trivial) out << is_minimal_ideal(ideal).describe(g) << "\n";
    }
    out << is_faithful(ideal.family()).describe(g) << "\n";
    out << is_hayashi_samuel(space).describe(g) << "\n";
    out << is_t0(space.topology()).describe(g) << "\n";
    out << is_hausdorff(space.topology()).describe(g) << "\n";
    out << is_connected(space.topology()).describe(g) << "\n";
    for (const auto& s : doc.sets) out << is_dense(s.value, space.topology()).describe(g) << " set " << s.name << "\n";
}

int cmd_compute(const std::string& file, const std::vector<std::string>& expr, std::ostream& out, std::ostream& err) {
    const SpaceDocument doc = load(file, err);
    const auto tokens = tokenize_line(join(expr), 1);
    if (tokens.empty()) throw UsageError("expression is empty");
    if (tokens[0].kind != TokenKind::Word) expression_error(tokens[0].where, "Syntax", "expected an operator");

    const std::string& op = tokens[0].text;
    const GroundSet& g = doc.ground();
    const IdealSpace space = doc.space();
    using SetOp = Subset (*)(Subset, const IdealSpace&);
    static const std::vector<std::pair<std::string_view, SetOp>> set_ops = {
        {"star", [](Subset a, const IdealSpace& s) { return local_function(a, s); }},
        {"sharp", sharp_function},
        {"psi", psi},
        {"psi_sharp", psi_sharp},
        {"cl_star", cl_star},
        {"cl_sharp", cl_sharp},
        {"closure", [](Subset a, const IdealSpace& s) { return closure(a, s.topology()); }},
        {"interior", [](Subset a, const IdealSpace& s) { return interior(a, s.topology()); }},
    };
    for (const auto& [name, fn] : set_ops) {
        if (op == name) {
            out << g.format(fn(set_operand(doc, tokens), space)) << "\n";
            return kExitOk;
        }
    }
    if (op == "tau_star" || op == "tau_sharp") {
        no_operand(tokens);
        out << format_family(g, (op == "tau_star" ? tau_star(space) : tau_sharp(space)).family()) << "\n";
    } else if (op == "ann") {
        no_operand(tokens);
        out << format_family(g, annihilator(space.ideal()).family()) << "\n";
    } else if (op == "quot") {
        out << format_family(g, ideal_quotient(space.ideal(), family_operand(doc, tokens)).family()) << "\n";
    } else if (op == "classify") {
        no_operand(tokens);
        print_classification(doc, out);
    } else {
        expression_error(tokens[0].where, "UnknownOperator", "unknown operator '" + op + "'");
    }
    return kExitOk;
}

void print_outcome(const SearchOutcome& o, bool json, bool timing, std::ostream& out) {
    if (json) {
        out << o.to_json(timing) << "\n";
        return;
    }
    out << o.summary_line();
    if (timing) out << " elapsed_ms=" << std::chrono::duration<double, std::milli>(o.elapsed).count();
    out << "\n";
    if (o.status == SearchStatus::Counterexample) {
        out << "# failed: " << *o.failure << "\n";
        out << *o.counterexample;
    }
}

std::optional<std::pair<std::string, std::string>> split_implication(const std::string& target) {
    const auto at = target.find("=>");
    if (at == std::string::npos) return std::nullopt;
    return std::pair{target.substr(0, at), target.substr(at + 2)};
}

int cmd_replay(const std::string& file, const std::string& target, std::ostream& out, std::ostream& err) {
    const SpaceDocument doc = load(file, err);
    if (auto parts = split_implication(target)) {
        const bool hit = replay_implication(parts->first, parts->second, doc);
        out << "replay " << target << ": " << (hit ? "counterexample" : "no counterexample") << "\n";
        return hit ? kExitCounterexample : kExitOk;
    }
    const auto failure = replay_theorem(target, doc);
    out << "replay " << target << ": " << (failure ? "fails: " + *failure : std::string("holds")) << "\n";
    return failure ? kExitCounterexample : kExitOk;
}

int cmd_enumerate(int n, const std::string& kind, bool count_only, bool allow_five, std::ostream& out) {
    if (kind == "topologies") {
        const auto all = enumerate_topologies(n, EnumerationOptions{.allow_five = allow_five});
        if (count_only) {
            out << all.size() << "\n";
        } else {
            const auto g = GroundSet::letters(n);
            for (const auto& t : all) out << format_family(g, t.family()) << "\n";
        }
    } else {
        if (n < 1 || n > kMaxGroundSize) throw UsageError("ideals: n must be between 1 and 16");
        if (count_only) {
            out << (std::uint64_t{1} << n) << "\n";
        } else {
            const auto g = GroundSet::letters(n);
            for_each_ideal(n, [&](const Ideal& i) { out << "generated " << g.format(i.generator()) << "\n"; });
        }
    }
    return kExitOk;
}

void list_catalogue(const std::string& kind, std::ostream& out) {
    auto axes = [](const std::vector<Axis>& list) {
        std::string s;
        for (auto a : list) s += (s.empty() ? "" : ",") + std::string(to_string(a));
        return s.empty() ? std::string("-") : s;
    };
    if (kind == "theorems") {
        for (const auto& t : theorem_catalogue()) {
            out << t.id << "\t" << axes(t.axes) << "\t" << t.statement << "\n";
            if (!t.note.empty()) out << "\t\tnote: " << t.note << "\n";
        }
    } else {
        for (const auto& p : predicate_catalogue()) out << p.name << "\t" << axes(p.axes) << "\t" << p.description << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite ideal topological spaces: operators, theorem checks and counterexample search", "itop"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> expr;
    auto* compute = app.add_subcommand("compute", "Evaluate an operator on a space file");
    compute->add_option("file", file, "Space document ('-' for stdin)")->required();
    compute->add_option("expr", expr, "star|sharp|psi|psi_sharp|cl_star|cl_sharp|closure|interior A, tau_star, "
                                      "tau_sharp, ann, quot J, classify")
        ->required();

    int bound = 0;
    std::string mode_text = "exhaustive";
    std::uint64_t seed = 0;
    std::uint64_t samples = 20000;
    std::uint64_t budget = 5'000'000;
    bool json = false;
    bool timing = false;
    std::vector<std::string> ids;
    auto* verify = app.add_subcommand("verify", "Check registered theorems on every space of the given size");
    verify->add_option("--bound", bound, "Ground set size")->required();
    verify->add_option("--mode", mode_text, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--seed", seed, "Sampling seed");
    verify->add_option("--samples", samples, "Draws per theorem when sampling")->check(CLI::PositiveNumber);
    verify->add_flag("--json", json, "One JSON object per theorem");
    verify->add_flag("--timing", timing, "Report wall time");
    verify->add_option("ids", ids, "Theorem ids (default: all in scope)");

    std::string antecedent, consequent;
    auto* falsify_cmd = app.add_subcommand("falsify", "Search for an instance where ANTE holds and CONS fails");
    falsify_cmd->add_option("ante", antecedent, "Antecedent predicate")->required();
    falsify_cmd->add_option("cons", consequent, "Consequent predicate")->required();
    falsify_cmd->add_option("--bound", bound, "Ground set size")->required();
    falsify_cmd->add_option("--budget", budget, "Instances to examine at most")->check(CLI::PositiveNumber);
    falsify_cmd->add_option("--seed", seed, "Sampling seed");
    falsify_cmd->add_flag("--json", json, "Print the outcome as JSON");
    falsify_cmd->add_flag("--timing", timing, "Report wall time");

    int n = 0;
    std::string kind;
    bool count_only = false;
    bool allow_five = false;
    auto* enumerate = app.add_subcommand("enumerate", "List all topologies or ideals on n points");
    enumerate->add_option("n", n, "Ground set size")->required();
    enumerate->add_option("kind", kind, "topologies or ideals")
        ->required()
        ->check(CLI::IsMember({"topologies", "ideals"}));
    enumerate->add_flag("--count", count_only, "Print only the count");
    enumerate->add_flag("--allow-five", allow_five, "Permit n = 5 topologies");

    auto* format = app.add_subcommand("format", "Print a space document in canonical form");
    format->add_option("file", file, "Space document ('-' for stdin)")->required();

    std::string target;
    auto* replay = app.add_subcommand("replay", "Re-check a theorem id or ANTE=>CONS on a document");
    replay->add_option("file", file, "Space document ('-' for stdin)")->required();
    replay->add_option("target", target, "Theorem id or ANTE=>CONS")->required();

    std::string list_kind;
    auto* list = app.add_subcommand("list", "Show the theorem or predicate catalogue");
    list->add_option("kind", list_kind, "theorems or predicates")
        ->required()
        ->check(CLI::IsMember({"theorems", "predicates"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*compute) return cmd_compute(file, expr, out, err);
        if (*verify) {
            SearchOptions options;
            options.mode = *parse_search_mode(mode_text);
            options.seed = seed;
            options.samples = samples;
            if (ids.empty())
                for (const auto& t : theorem_catalogue())
                    if (t.in_scope) ids.push_back(t.id);
            int code = kExitOk;
            for (const auto& id : ids) {
                const auto outcome = run_theorem(id, bound, options);
                print_outcome(outcome, json, timing, out);
                if (outcome.status == SearchStatus::Counterexample) code = kExitCounterexample;
            }
            return code;
        }
        if (*falsify_cmd) {
            const auto outcome = falsify(antecedent, consequent, bound, budget, seed);
            print_outcome(outcome, json, timing, out);
            return outcome.status == SearchStatus::Counterexample ? kExitCounterexample : kExitOk;
        }
        if (*enumerate) return cmd_enumerate(n, kind, count_only, allow_five, out);
        if (*format) {
            out << print_space(load(file, err));
            return kExitOk;
        }
        if (*replay) return cmd_replay(file, target, out, err);
        if (*list) {
            list_catalogue(list_kind, out);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace itop::cli
